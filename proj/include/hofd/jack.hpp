#pragma once

// Exact symmetric-function side: L(k) on polynomials, Jack polynomials
// P_lambda^{(1/k)} from the triangular eigen-system, and the terminating
// F_D expressions for P_{(p,q,...,q)}.

#include <string>

#include "hofd/hoseries.hpp"
#include "hofd/polynomial.hpp"
#include "hofd/rational.hpp"
#include "hofd/rootsys.hpp"

namespace hofd {

/// sum_i theta_i^2 f + k sum_{i<j} (z_i+z_j)/(z_i-z_j) (theta_i - theta_j) f,
/// exactly. Throws Symmetry for a non-symmetric f.
MultiPoly apply_Lk(const MultiPoly& f, const Rational& k);

/// h(lambda) = sum_i lambda_i (lambda_i + k(n + 1 - 2i)), i counted from 1.
Rational jack_eigenvalue(const Partition& lambda, int n, const Rational& k);

/// P = m_lambda + sum_{mu < lambda} v_{lambda mu} m_mu with L(k) P = h(lambda) P.
/// Throws DegenerateParameter if h(mu) = h(lambda) for some mu < lambda and
/// InvalidArgument for k <= 0 or more than n parts.
SymPoly jack_polynomial(const Partition& lambda, int n, const Rational& k);

/// P(pi(lambda), k; z) for z in A, i.e. the Jack polynomial evaluated at z.
double ho_jacobi_eval(const Partition& lambda, int n, const Rational& k, const ChamberPoint& z);
/// Same, with the spectral weight given explicitly; InvalidArgument unless
/// mu = pi(lambda).
double ho_jacobi_eval(const Weight& mu, const Partition& lambda, int n, const Rational& k,
                      const ChamberPoint& z);

/// prod_{i<n} z_i^q z_n^p F_D(q-p, k, ..., k, q-p-k+1; z_1/z_n, ..., z_{n-1}/z_n).
MultiPoly theorem31_y_form(int p, int q, int n, const Rational& k);
/// (nk)_{p-q}/(k)_{p-q} prod_{i<n} z_i^q z_n^p F_D(q-p, k, ..., k, nk; 1 - z_i/z_n).
MultiPoly theorem31_x_form(int p, int q, int n, const Rational& k);

struct Theorem31Report {
  int p = 0, q = 0, n = 0;
  Rational k;
  SymPoly jack{0, 0};
  /// Monomials whose coefficient differs from the Jack polynomial.
  std::size_t mismatches_x = 0;
  std::size_t mismatches_y = 0;
  bool ok() const { return mismatches_x == 0 && mismatches_y == 0; }
  std::string summary() const;
};

/// Expands both F_D forms exactly and compares them with P_{(p,q,...,q)}.
/// InvalidArgument unless p >= q >= 0, n >= 2 and k > 0.
Theorem31Report theorem31_check(int p, int q, int n, const Rational& k);

/// Number of exponents whose coefficients differ between a and b.
std::size_t count_mismatches(const MultiPoly& a, const MultiPoly& b);

}  // namespace hofd
