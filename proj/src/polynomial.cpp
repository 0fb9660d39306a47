#include "hofd/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hofd/error.hpp"

namespace hofd {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::InvalidDimension, "polynomials live in different variable counts");
  }
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t n, const Rational& c) {
  MultiPoly p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n, std::size_t i) {
  Exponent e(n, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) {
    throw Error(ErrorKind::InvalidDimension, "exponent length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_vars(n_, other.n_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_vars(n_, other.n_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a.n_, b.n_);
  MultiPoly out(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::permuted(const Permutation& w) const {
  require_same_vars(n_, w.size());
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) out.add_term(weyl_act<int>(w, e), c);
  return out;
}

MultiPoly MultiPoly::swapped(std::size_t i, std::size_t j) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    std::swap(s.at(i), s.at(j));
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

MultiPoly MultiPoly::theta(std::size_t i) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    if (e.at(i) != 0) out.terms_.emplace(e, c * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::times_variable(std::size_t i, int power) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    s.at(i) += power;
    if (s[i] < 0) throw Error(ErrorKind::Internal, "negative exponent after shift");
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

MultiPoly MultiPoly::divide_by_difference(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) {
    throw Error(ErrorKind::InvalidArgument, "divide_by_difference needs two distinct variables");
  }
  // Synthetic division in z_i with coefficients in the remaining variables:
  // a term c z^e with e_i > 0 contributes c z^{e - e_i} to the quotient and
  // c z^{e - e_i + e_j} back into the dividend; the z_i-degree strictly drops.
  std::map<Exponent, Rational> work = terms_;
  MultiPoly quotient(n_);
  while (true) {
    auto it = std::find_if(work.begin(), work.end(),
                           [i](const auto& kv) { return kv.first[i] > 0; });
    if (it == work.end()) break;
    // Pick the term of largest z_i-degree so every term is processed once.
    for (auto jt = it; jt != work.end(); ++jt)
      if (jt->first[i] > it->first[i]) it = jt;
    Exponent e = it->first;
    const Rational c = it->second;
    work.erase(it);
    e[i] -= 1;
    quotient.add_term(e, c);
    e[j] += 1;
    auto [kt, inserted] = work.try_emplace(e, c);
    if (!inserted) {
      kt->second += c;
      if (kt->second == 0) work.erase(kt);
    }
  }
  if (!work.empty()) {
    throw Error(ErrorKind::Internal,
                "polynomial is not divisible by (z_" + std::to_string(i) + " - z_" +
                    std::to_string(j) + ")");
  }
  return quotient;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly out = constant(n_, 1);
  for (int t = 0; t < e; ++t) out = out * *this;
  return out;
}

bool MultiPoly::is_symmetric() const {
  for (std::size_t i = 0; i + 1 < n_; ++i)
    if (!(swapped(i, i + 1) == *this)) return false;
  return true;
}

double MultiPoly::evaluate(std::span<const double> z) const {
  require_same_vars(n_, z.size());
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] != 0) t *= std::pow(z[i], e[i]);
    s += t;
  }
  return s;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> z) const {
  require_same_vars(n_, z.size());
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] != 0) t *= std::pow(z[i], e[i]);
    s += t;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str();
    for (std::size_t i = 0; i < n_; ++i) {
      if (it->first[i] == 1) os << "*z" << i;
      if (it->first[i] > 1) os << "*z" << i << "^" << it->first[i];
    }
  }
  return os.str();
}

SymPoly SymPoly::from_multi(const MultiPoly& f) {
  if (!f.is_symmetric()) throw Error(ErrorKind::Symmetry, "polynomial is not symmetric");
  const int degree = std::max(0, f.total_degree());
  SymPoly out(f.nvars(), degree);
  for (const auto& [e, c] : f.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) != degree) {
      throw Error(ErrorKind::InvalidArgument, "polynomial is not homogeneous");
    }
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.set(Partition(e), c);
  }
  return out;
}

MultiPoly SymPoly::to_multi() const {
  MultiPoly out(n_);
  for (const auto& [lambda, c] : coeffs_) out += monomial_sym(lambda, static_cast<int>(n_)) * c;
  return out;
}

Rational SymPoly::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::set(const Partition& lambda, const Rational& c) {
  if (c == 0) {
    coeffs_.erase(lambda);
  } else {
    coeffs_[lambda] = c;
  }
}

std::string SymPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str() << "*m(";
    for (std::size_t i = 0; i < it->first.length(); ++i) os << (i ? "," : "") << it->first.part(i);
    os << ")";
  }
  return os.str();
}

MultiPoly monomial_sym(const Partition& lambda, int n) {
  Exponent e = lambda.padded(static_cast<std::size_t>(n));
  std::sort(e.begin(), e.end());
  MultiPoly out(static_cast<std::size_t>(n));
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Exponent> exponents_up_to(std::size_t n, int max_degree) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == n) {
      out.push_back(e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    e[pos] = 0;
  };
  recurse(recurse, 0, max_degree);
  return out;
}

}  // namespace hofd
