#pragma once

// Lauricella F_D and its one- and two-variable relatives (Gauss 2F1,
// Appell F1), the Horn G2 double series, the differential system E_D and the
// last-variable transformation formula.
//
// Numeric series are templated on the real type: double is the public
// default, long double is used where finite-difference residuals need the
// extra digits.

#include <complex>
#include <span>
#include <vector>

#include "hofd/numerics.hpp"
#include "hofd/polynomial.hpp"
#include "hofd/rational.hpp"

namespace hofd {

template <class Real>
struct SeriesParamsT {
  std::complex<Real> alpha;
  std::vector<std::complex<Real>> betas;
  std::complex<Real> gamma;
};
using SeriesParams = SeriesParamsT<double>;

/// A summed series together with its truncation diagnostics.
template <class Real>
struct SeriesValueT {
  std::complex<Real> value{};
  int degree = 0;       // last total degree included
  double tail = 0.0;    // magnitude of the last two degree blocks
  bool terminating = false;
};
using SeriesValue = SeriesValueT<double>;

/// If alpha is (within 1e-12) a nonpositive integer -nu, returns nu; else -1.
int terminating_degree(Complex alpha);

/// F_D summed by total-degree blocks. Stops once the last two blocks (in
/// absolute-term magnitude) fall below abs_tol + rel_tol * |partial sum|.
/// A terminating alpha = -nu sums exactly through degree nu for any y.
/// Errors: Domain for a non-terminating call with some |y_i| >= 1, Pole for
/// gamma at a nonpositive integer that the series reaches, NonConvergence
/// past max_terms blocks.
template <class Real>
SeriesValueT<Real> fd_series_eval(const SeriesParamsT<Real>& p,
                                  std::span<const std::complex<Real>> y,
                                  const Tolerance& tol = {});

Complex fd_series(const SeriesParams& p, std::span<const Complex> y, const Tolerance& tol = {});

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x, const Tolerance& tol = {});

Complex appell_f1(Complex alpha, Complex beta1, Complex beta2, Complex gamma, Complex x,
                  Complex y, const Tolerance& tol = {});

/// G2(a, a', b, b'; x, y) = sum (a)_m (a')_n (b)_{n-m} (b')_{m-n} x^m y^n / (m! n!),
/// with negative-index shifted factorials Gamma(b+j)/Gamma(b). Summed by
/// total degree m + n with the same stopping rule as fd_series_eval.
SeriesValue horn_g2_eval(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p,
                         Complex x, Complex y, const Tolerance& tol = {});
Complex horn_g2(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p, Complex x,
                Complex y, const Tolerance& tol = {});

/// Residuals of the E_D system for F at the real point y, by central
/// differences of step h: first the m(m-1)/2 equations
///   y_i (theta_i + b_i) theta_j F - y_j (theta_j + b_j) theta_i F   (i < j),
/// then the m equations
///   theta_i (sum theta + gamma - 1) F - y_i (theta_i + b_i)(sum theta + alpha) F.
template <class Real>
std::vector<std::complex<Real>> ed_residual(const SeriesParamsT<Real>& p,
                                            const ScalarField<Real>& F,
                                            std::span<const Real> y, Real h);

/// Result of the last-variable transformation:
///   F_D(p; x) = prefactor * F_D(params; args).
struct FdTransform {
  SeriesParams params;
  std::vector<Complex> args;
  Complex prefactor;
};

/// params = (alpha, b_1, ..., b_{m-1}, gamma - b_1 - ... - b_m, gamma),
/// args = ((x_m - x_1)/(x_m - 1), ..., (x_m - x_{m-1})/(x_m - 1), x_m/(x_m - 1)),
/// prefactor = (1 - x_m)^{-alpha}. Domain error if x_m = 1.
FdTransform fd_transform_last(const SeriesParams& p, std::span<const Complex> x);

/// The argument map of fd_transform_last over any field.
template <class S>
std::vector<S> transform_last_arguments(std::span<const S> x) {
  const std::size_t m = x.size();
  const S last = x[m - 1];
  const S denom = last - S(1);
  if (denom == S(0)) throw Error(ErrorKind::Domain, "transformation needs x_m != 1");
  std::vector<S> out(m);
  for (std::size_t i = 0; i + 1 < m; ++i) out[i] = (last - x[i]) / denom;
  out[m - 1] = last / denom;
  return out;
}

/// The parameter map of fd_transform_last: replaces b_m by gamma - sum b.
template <class S>
std::vector<S> transform_last_betas(std::span<const S> betas, const S& gamma) {
  std::vector<S> out(betas.begin(), betas.end());
  S total = S(0);
  for (const auto& b : betas) total += b;
  out.back() = gamma - total;
  return out;
}

/// Exact terminating F_D(-nu, betas, gamma; x) as a polynomial in the
/// m = betas.size() variables x_0, ..., x_{m-1}. Throws Pole if (gamma)_d
/// vanishes for some d <= nu.
MultiPoly fd_polynomial(int nu, std::span<const Rational> betas, const Rational& gamma);

/// Exact value of the terminating F_D at a rational point.
Rational fd_series_exact(int nu, std::span<const Rational> betas, const Rational& gamma,
                         std::span<const Rational> y);

}  // namespace hofd
