#pragma once

// Trigonometric Dunkl (Cherednik) operators acting on exact polynomials,
// the degenerate affine Hecke relations they satisfy, and the operators
// D_p through their restriction to symmetric polynomials.

#include <map>
#include <string>
#include <vector>

#include "hofd/polynomial.hpp"
#include "hofd/rational.hpp"
#include "hofd/rootsys.hpp"

namespace hofd {

/// T_i f = theta_i f + k sum_{j>i} z_i (f - s_ij f)/(z_i - z_j)
///       + k sum_{j<i} z_j (f - s_ij f)/(z_i - z_j) + rho(k)_i f, i 0-based.
MultiPoly dunkl_T(std::size_t i, const MultiPoly& f, const Rational& k, int n);

/// Outcome of an exact identity check over a family of test polynomials.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;  // first few offending inputs

  bool ok() const { return mismatches == 0; }
  void record(bool good, const std::string& what);
  void merge(const CheckReport& other);
};

/// T_i T_j f = T_j T_i f for every f.
CheckReport commutator_check(std::size_t i, std::size_t j, const std::vector<MultiPoly>& polys,
                             const Rational& k, int n);

/// s_i T_i f - T_{i+1} s_i f = -k f and s_i T_j f = T_j s_i f (j != i, i+1),
/// with s_i the exchange of z_i and z_{i+1}.
CheckReport hecke_relation_check(std::size_t i, const std::vector<MultiPoly>& polys,
                                 const Rational& k, int n);

/// p(T_0, ..., T_{n-1}) f for p a polynomial in n commuting symbols. Each
/// monomial is applied in both index orders and the results compared;
/// Internal if they differ.
MultiPoly Tp_apply(const MultiPoly& p, const MultiPoly& f, const Rational& k, int n);

/// Delta_ij f + nu(nu + nk)/n^2 f, exactly, for f symmetric in z_i, z_j.
MultiPoly delta_ij_apply(std::size_t i, std::size_t j, const MultiPoly& f, const Rational& nu,
                         const Rational& k, int n);

/// p_ij(x) = (x_i - rho_i + nu/n)(x_j - rho_j + k + nu/n) as a polynomial in
/// n symbols.
MultiPoly p_ij_symbol(std::size_t i, std::size_t j, const Rational& nu, const Rational& k, int n);

/// T_{p_ij} f = (Delta_ij + nu(nu + nk)/n^2) f on symmetric f.
CheckReport prop41_check(std::size_t i, std::size_t j, const Rational& nu, const Rational& k,
                         int n, const std::vector<MultiPoly>& sym_polys);

/// D_{e_1}, D_{e_2} and D_{x_1^2+...+x_n^2} on symmetric polynomials against
/// sum theta_i, the Casimir-type operator minus (k^2/4) C(n+1, 3), and
/// L(k) + (rho, rho).
CheckReport elementary_operator_check(const Rational& k, int n,
                                      const std::vector<MultiPoly>& sym_polys);

/// An element sum_w f_w w of the smash product of polynomials with S_n.
class GroupPolyElement {
 public:
  explicit GroupPolyElement(int n) : n_(n) {}

  void add(const Permutation& w, const MultiPoly& f);
  const std::map<Permutation, MultiPoly>& terms() const noexcept { return terms_; }
  /// sum_w f_w (w g).
  MultiPoly apply(const MultiPoly& g) const;
  /// sum_w f_w, the multiplication operator seen by symmetric g.
  MultiPoly symmetric_part() const;

 private:
  int n_;
  std::map<Permutation, MultiPoly> terms_;
};

/// Common solutions mu of (mu_i - rho_i + nu/n)(mu_j - rho_j + k + nu/n) = 0
/// for all i < j, with sum mu = 0. DegenerateExponent when nu is within 1e-9
/// of one of -k, ..., -(n-1)k.
std::vector<Weight> indicial_solutions(Complex nu, Complex k, int n);

/// All monomials z^e of total degree <= d in n variables.
std::vector<MultiPoly> monomial_basis(int n, int d);
/// m_lambda for all partitions with |lambda| <= d and at most n parts.
std::vector<MultiPoly> symmetric_basis(int n, int d);

}  // namespace hofd
