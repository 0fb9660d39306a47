#include "hofd/dunkl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hofd/jack.hpp"

namespace hofd {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

void require_index(std::size_t i, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "need n >= 2");
  if (i >= static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidArgument, "operator index out of range");
  }
}

Rational rho_entry(std::size_t i, int n, const Rational& k) {
  return k * make_rational(2 * static_cast<long>(i) - (n - 1), 2);
}

}  // namespace

void CheckReport::record(bool good, const std::string& what) {
  ++checked;
  if (good) return;
  ++mismatches;
  if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  mismatches += other.mismatches;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxListedFailures) failures.push_back(f);
}

MultiPoly dunkl_T(std::size_t i, const MultiPoly& f, const Rational& k, int n) {
  require_index(i, n);
  if (f.nvars() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidDimension, "polynomial has the wrong number of variables");
  }
  MultiPoly out = f.theta(i) + f * rho_entry(i, n, k);
  if (k == 0) return out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    if (j == i) continue;
    const MultiPoly diff = f - f.swapped(i, j);
    if (diff.is_zero()) continue;
    const MultiPoly q = diff.divide_by_difference(i, j);
    out += q.times_variable(j < i ? j : i) * k;
  }
  return out;
}

CheckReport commutator_check(std::size_t i, std::size_t j, const std::vector<MultiPoly>& polys,
                             const Rational& k, int n) {
  CheckReport r;
  r.name = "[T_" + std::to_string(i) + ", T_" + std::to_string(j) + "] = 0";
  for (const auto& f : polys) {
    const MultiPoly a = dunkl_T(i, dunkl_T(j, f, k, n), k, n);
    const MultiPoly b = dunkl_T(j, dunkl_T(i, f, k, n), k, n);
    r.record(a == b, f.to_string());
  }
  return r;
}

CheckReport hecke_relation_check(std::size_t i, const std::vector<MultiPoly>& polys,
                                 const Rational& k, int n) {
  require_index(i + 1, n);
  CheckReport r;
  r.name = "Hecke relations at s_" + std::to_string(i);
  for (const auto& f : polys) {
    const MultiPoly lhs =
        dunkl_T(i, f, k, n).swapped(i, i + 1) - dunkl_T(i + 1, f.swapped(i, i + 1), k, n);
    r.record(lhs == f * Rational(-k), "s_i T_i - T_{i+1} s_i on " + f.to_string());
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      if (j == i || j == i + 1) continue;
      const MultiPoly a = dunkl_T(j, f, k, n).swapped(i, i + 1);
      const MultiPoly b = dunkl_T(j, f.swapped(i, i + 1), k, n);
      r.record(a == b, "s_i T_" + std::to_string(j) + " on " + f.to_string());
    }
  }
  return r;
}

MultiPoly Tp_apply(const MultiPoly& p, const MultiPoly& f, const Rational& k, int n) {
  if (p.nvars() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidDimension, "symbol polynomial needs n variables");
  }
  MultiPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly forward = f, backward = f;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int r = 0; r < e[i]; ++r) forward = dunkl_T(i, forward, k, n);
    for (std::size_t i = e.size(); i-- > 0;)
      for (int r = 0; r < e[i]; ++r) backward = dunkl_T(i, backward, k, n);
    if (!(forward == backward)) {
      throw Error(ErrorKind::Internal, "Dunkl operators failed to commute");
    }
    out += forward * c;
  }
  return out;
}

MultiPoly delta_ij_apply(std::size_t i, std::size_t j, const MultiPoly& f, const Rational& nu,
                         const Rational& k, int n) {
  require_index(j, n);
  if (i >= j) throw Error(ErrorKind::InvalidArgument, "delta_ij needs i < j");
  if (!(f.swapped(i, j) == f)) {
    throw Error(ErrorKind::Symmetry, "Delta_ij is applied to polynomials symmetric in z_i, z_j");
  }
  const MultiPoly ti = f.theta(i), tj = f.theta(j);
  MultiPoly out = ti.theta(j);
  const MultiPoly q = (ti - tj).divide_by_difference(i, j);
  out -= (q.times_variable(i) + q.times_variable(j)) * (k / 2);
  out += (ti + tj) * (nu / n + k / 2);
  out += f * (nu * (nu + k * n) / (n * n));
  return out;
}

MultiPoly p_ij_symbol(std::size_t i, std::size_t j, const Rational& nu, const Rational& k, int n) {
  require_index(j, n);
  const MultiPoly xi = MultiPoly::variable(n, i) +
                       MultiPoly::constant(n, -rho_entry(i, n, k) + nu / n);
  const MultiPoly xj = MultiPoly::variable(n, j) +
                       MultiPoly::constant(n, -rho_entry(j, n, k) + k + nu / n);
  return xi * xj;
}

CheckReport prop41_check(std::size_t i, std::size_t j, const Rational& nu, const Rational& k,
                         int n, const std::vector<MultiPoly>& sym_polys) {
  CheckReport r;
  r.name = "D_{p_" + std::to_string(i) + std::to_string(j) + "} = Delta_ij + nu(nu+nk)/n^2";
  const MultiPoly p = p_ij_symbol(i, j, nu, k, n);
  for (const auto& f : sym_polys) {
    r.record(Tp_apply(p, f, k, n) == delta_ij_apply(i, j, f, nu, k, n), f.to_string());
  }
  return r;
}

CheckReport elementary_operator_check(const Rational& k, int n,
                                      const std::vector<MultiPoly>& sym_polys) {
  CheckReport r;
  r.name = "D_{e1}, D_{e2}, D_{p2}";
  MultiPoly e1(n), e2(n), p2(n);
  for (int i = 0; i < n; ++i) {
    e1 += MultiPoly::variable(n, i);
    p2 += MultiPoly::variable(n, i).pow(2);
    for (int j = i + 1; j < n; ++j) e2 += MultiPoly::variable(n, i) * MultiPoly::variable(n, j);
  }
  Rational rho_sq = 0;
  for (int i = 0; i < n; ++i) rho_sq += rho_entry(i, n, k) * rho_entry(i, n, k);
  const Rational binom3 = make_rational((n + 1) * n * (n - 1), 6);
  for (const auto& f : sym_polys) {
    MultiPoly euler(n);
    for (int i = 0; i < n; ++i) euler += f.theta(i);
    r.record(Tp_apply(e1, f, k, n) == euler, "e1 on " + f.to_string());

    MultiPoly casimir(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const MultiPoly ti = f.theta(i), tj = f.theta(j);
        casimir += ti.theta(j);
        const MultiPoly q = (ti - tj).divide_by_difference(i, j);
        casimir -= (q.times_variable(i) + q.times_variable(j)) * (k / 2);
      }
    }
    casimir -= f * (k * k / 4 * binom3);
    r.record(Tp_apply(e2, f, k, n) == casimir, "e2 on " + f.to_string());

    r.record(Tp_apply(p2, f, k, n) == apply_Lk(f, k) + f * rho_sq, "p2 on " + f.to_string());
  }
  return r;
}

void GroupPolyElement::add(const Permutation& w, const MultiPoly& f) {
  if (w.size() != static_cast<std::size_t>(n_) || f.nvars() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::InvalidDimension, "group element and polynomial sizes differ");
  }
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (!inserted) it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly GroupPolyElement::apply(const MultiPoly& g) const {
  MultiPoly out(n_);
  for (const auto& [w, f] : terms_) out += f * g.permuted(w);
  return out;
}

MultiPoly GroupPolyElement::symmetric_part() const {
  MultiPoly out(n_);
  for (const auto& [w, f] : terms_) out += f;
  return out;
}

std::vector<Weight> indicial_solutions(Complex nu, Complex k, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "need n >= 2");
  for (int j = 1; j < n; ++j) {
    if (std::abs(nu + static_cast<double>(j) * k) <= 1e-9) {
      throw Error(ErrorKind::DegenerateExponent,
                  "nu = -" + std::to_string(j) + "k makes the exponents collide");
    }
  }
  const Weight r = rho(n, k);
  const Complex shift = nu / static_cast<double>(n);
  // a_i = mu_i - rho_i + nu/n takes the values 0, -k or one free value; sum a = nu.
  std::vector<Weight> out;
  std::vector<int> pattern(n, 0);  // 0 -> 0, 1 -> -k, 2 -> free
  const int total = static_cast<int>(std::pow(3, n));
  for (int code = 0; code < total; ++code) {
    int c = code, frees = 0;
    for (int i = 0; i < n; ++i) {
      pattern[i] = c % 3;
      c /= 3;
      frees += pattern[i] == 2;
    }
    if (frees > 1) continue;
    std::vector<Complex> a(n);
    Complex fixed = 0.0;
    for (int i = 0; i < n; ++i) {
      a[i] = pattern[i] == 1 ? -k : Complex(0.0);
      if (pattern[i] != 2) fixed += a[i];
    }
    if (frees == 1) {
      for (int i = 0; i < n; ++i)
        if (pattern[i] == 2) a[i] = nu - fixed;
    } else if (std::abs(fixed - nu) > 1e-9) {
      continue;
    }
    bool solves = true;
    for (int i = 0; i < n && solves; ++i)
      for (int j = i + 1; j < n && solves; ++j)
        solves = std::abs(a[i] * (a[j] + k)) <= 1e-9 * (1.0 + std::abs(k) + std::abs(nu));
    if (!solves) continue;
    std::vector<Complex> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = a[i] + r[i] - shift;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Weight& w) {
      for (int i = 0; i < n; ++i)
        if (std::abs(w[i] - mu[i]) > 1e-9) return false;
      return true;
    });
    if (!seen) out.emplace_back(std::move(mu), 1e-9);
  }
  return out;
}

std::vector<MultiPoly> monomial_basis(int n, int d) {
  std::vector<MultiPoly> out;
  for (auto& e : exponents_up_to(static_cast<std::size_t>(n), d))
    out.push_back(MultiPoly::monomial(std::move(e)));
  return out;
}

std::vector<MultiPoly> symmetric_basis(int n, int d) {
  std::vector<MultiPoly> out;
  for (int w = 0; w <= d; ++w)
    for (const auto& p : partitions_of(w, n)) out.push_back(monomial_sym(p, n));
  return out;
}

}  // namespace hofd
