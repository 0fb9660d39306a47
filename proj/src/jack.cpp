#include "hofd/jack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hofd/lauricella.hpp"

namespace hofd {

namespace {

std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.part(i));
  return s + ")";
}

}  // namespace

MultiPoly apply_Lk(const MultiPoly& f, const Rational& k) {
  if (!f.is_symmetric()) throw Error(ErrorKind::Symmetry, "L(k) is applied to symmetric polynomials only");
  const std::size_t n = f.nvars();
  MultiPoly out(n);
  std::vector<MultiPoly> th;
  for (std::size_t i = 0; i < n; ++i) {
    th.push_back(f.theta(i));
    out += th[i].theta(i);
  }
  if (k == 0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const MultiPoly q = (th[i] - th[j]).divide_by_difference(i, j);
      out += (q.times_variable(i) + q.times_variable(j)) * k;
    }
  }
  return out;
}

Rational jack_eigenvalue(const Partition& lambda, int n, const Rational& k) {
  if (static_cast<int>(lambda.length()) > n) {
    throw Error(ErrorKind::InvalidArgument, "partition has more than n parts");
  }
  Rational h = 0;
  for (int i = 1; i <= n; ++i) {
    const int l = lambda.part(i - 1);
    h += Rational(l) * (Rational(l) + k * (n + 1 - 2 * i));
  }
  return h;
}

SymPoly jack_polynomial(const Partition& lambda, int n, const Rational& k) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "need at least one variable");
  if (static_cast<int>(lambda.length()) > n) {
    throw Error(ErrorKind::InvalidArgument, "partition has more than n parts");
  }
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "Jack polynomials are built for k > 0");
  const int d = lambda.weight();
  std::vector<Partition> below;
  for (const auto& mu : partitions_of(d, n))
    if (dominance_leq(mu, lambda)) below.push_back(mu);

  // Column mu of the L(k) matrix in the monomial basis.
  std::map<Partition, SymPoly> columns;
  for (const auto& mu : below) {
    SymPoly col = SymPoly::from_multi(apply_Lk(monomial_sym(mu, n), k));
    if (col.coefficient(mu) != jack_eigenvalue(mu, n, k)) {
      throw Error(ErrorKind::Internal, "L(k) diagonal entry differs from h(mu)");
    }
    columns.emplace(mu, std::move(col));
  }

  const Rational h_lambda = jack_eigenvalue(lambda, n, k);
  SymPoly out(static_cast<std::size_t>(n), d);
  out.set(lambda, 1);
  // `below` is lexicographically decreasing, so every mu > nu is already done.
  for (const auto& nu : below) {
    if (nu == lambda) continue;
    Rational rhs = 0;
    for (const auto& [mu, v] : out.coeffs()) {
      if (mu == nu) continue;
      rhs += v * columns.at(mu).coefficient(nu);
    }
    const Rational gap = h_lambda - jack_eigenvalue(nu, n, k);
    if (gap == 0) {
      throw Error(ErrorKind::DegenerateParameter, "h(lambda) = h(mu) for lambda = " +
                                                      partition_string(lambda) + ", mu = " +
                                                      partition_string(nu) + " at k = " +
                                                      to_string(k));
    }
    out.set(nu, rhs / gap);
  }
  return out;
}

double ho_jacobi_eval(const Partition& lambda, int n, const Rational& k, const ChamberPoint& z) {
  if (static_cast<int>(z.size()) != n) {
    throw Error(ErrorKind::InvalidDimension, "point has the wrong number of coordinates");
  }
  return jack_polynomial(lambda, n, k).to_multi().evaluate(z.coords());
}

double ho_jacobi_eval(const Weight& mu, const Partition& lambda, int n, const Rational& k,
                      const ChamberPoint& z) {
  const Weight expected = pi_map(lambda, n);
  if (mu.size() != expected.size()) {
    throw Error(ErrorKind::InvalidDimension, "weight has the wrong length");
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (std::abs(mu[i] - expected[i]) > 1e-12) {
      throw Error(ErrorKind::InvalidArgument, "weight is not pi(lambda)");
    }
  }
  return ho_jacobi_eval(lambda, n, k, z);
}

namespace {

void require_theorem31_args(int p, int q, int n, const Rational& k) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "need n >= 2");
  if (q < 0 || p < q) throw Error(ErrorKind::InvalidArgument, "need p >= q >= 0");
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "need k > 0");
}

}  // namespace

MultiPoly theorem31_y_form(int p, int q, int n, const Rational& k) {
  require_theorem31_args(p, q, n, k);
  const int nu = p - q;
  const std::vector<Rational> betas(n - 1, k);
  const MultiPoly fd = fd_polynomial(nu, betas, Rational(q - p) - k + 1);
  MultiPoly out(n);
  for (const auto& [a, c] : fd.terms()) {
    Exponent e(n);
    int total = 0;
    for (int i = 0; i + 1 < n; ++i) {
      e[i] = q + a[i];
      total += a[i];
    }
    e[n - 1] = p - total;
    out.add_term(e, c);
  }
  return out;
}

MultiPoly theorem31_x_form(int p, int q, int n, const Rational& k) {
  require_theorem31_args(p, q, n, k);
  const int nu = p - q;
  const std::vector<Rational> betas(n - 1, k);
  const MultiPoly fd = fd_polynomial(nu, betas, k * n);
  // (z_n - z_i)^a for a <= nu.
  std::vector<std::vector<MultiPoly>> diff_pow(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const MultiPoly d = MultiPoly::variable(n, n - 1) - MultiPoly::variable(n, i);
    diff_pow[i].push_back(MultiPoly::constant(n, 1));
    for (int a = 1; a <= nu; ++a) diff_pow[i].push_back(diff_pow[i].back() * d);
  }
  MultiPoly out(n);
  for (const auto& [a, c] : fd.terms()) {
    int total = 0;
    MultiPoly term = MultiPoly::constant(n, c);
    for (int i = 0; i + 1 < n; ++i) {
      term = term * diff_pow[i][a[i]];
      total += a[i];
    }
    Exponent shift(n, q);
    shift[n - 1] = p - total;
    out += term * MultiPoly::monomial(shift);
  }
  return out * (pochhammer(k * n, nu) / pochhammer(k, nu));
}

std::size_t count_mismatches(const MultiPoly& a, const MultiPoly& b) {
  std::size_t bad = 0;
  for (const auto& [e, c] : a.terms())
    if (b.coefficient(e) != c) ++bad;
  for (const auto& [e, c] : b.terms())
    if (a.coefficient(e) == 0) ++bad;
  return bad;
}

Theorem31Report theorem31_check(int p, int q, int n, const Rational& k) {
  require_theorem31_args(p, q, n, k);
  Theorem31Report r;
  r.p = p;
  r.q = q;
  r.n = n;
  r.k = k;
  std::vector<int> parts(n, q);
  parts[0] = p;
  r.jack = jack_polynomial(Partition(parts), n, k);
  const MultiPoly jack = r.jack.to_multi();
  r.mismatches_x = count_mismatches(theorem31_x_form(p, q, n, k), jack);
  r.mismatches_y = count_mismatches(theorem31_y_form(p, q, n, k), jack);
  return r;
}

std::string Theorem31Report::summary() const {
  std::ostringstream os;
  os << "p=" << p << " q=" << q << " n=" << n << " k=" << to_string(k)
     << " x-form mismatches=" << mismatches_x << " y-form mismatches=" << mismatches_y;
  return os.str();
}

}  // namespace hofd
