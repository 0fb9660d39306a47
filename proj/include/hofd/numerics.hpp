#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hofd/error.hpp"
#include "hofd/rational.hpp"

namespace hofd {

using Complex = std::complex<double>;

/// Truncation policy shared by every series in the library.
struct Tolerance {
  double abs_tol = 1e-15;
  double rel_tol = 1e-15;
  int max_terms = 20000;

  /// Throws InvalidArgument unless abs_tol > 0, rel_tol > 0, max_terms >= 1.
  void validate() const;
};

/// Distance from x to the nearest point of {0, -1, -2, ...}.
double distance_to_nonpositive_integer(Complex x);
bool near_nonpositive_integer(Complex x, double tol);
bool near_integer(Complex x, double tol);

/// Principal log Gamma. Lanczos (g = 7, 9 terms) for Re x >= 1/2 and the
/// reflection formula below. Throws Pole within 1e-12 of {0, -1, ...}.
Complex ln_gamma(Complex x);
Complex gamma(Complex x);
/// 1/Gamma(x); entire, exactly zero at the poles of Gamma.
Complex rgamma(Complex x);

/// Shifted factorial. For m >= 0 a direct product, so (-n)_m vanishes exactly
/// for m > n. For m < 0, Gamma(a+m)/Gamma(a) = 1/((a-1)...(a+m)); Pole if a
/// factor vanishes.
Complex pochhammer(Complex a, int m);
Rational pochhammer(const Rational& a, int m);

template <class T>
T pochhammer_product(const T& a, int m) {
  T p(1);
  for (int j = 0; j < m; ++j) p *= a + T(j);
  return p;
}

/// Gamma(a)/Gamma(b) through log Gamma; real for real arguments (the sign of
/// Gamma on the negative axis is carried by the imaginary part of the logs).
Complex gamma_ratio(Complex a, Complex b);

/// A scalar field on (a subset of) R^n_{>0}.
template <class Real>
using ScalarField = std::function<std::complex<Real>(std::span<const Real>)>;

/// Default finite-difference step for coordinate value x.
template <class Real>
Real default_fd_step(Real x) {
  return Real(1e-5) * std::max(Real(1), std::abs(x));
}

/// Central-difference estimate of theta_i f = z_i df/dz_i. `h` <= 0 selects
/// the default step. The step actually used is the representable difference
/// between the two stencil coordinates.
template <class Real>
std::complex<Real> theta_apply_fd(const ScalarField<Real>& f, std::span<const Real> z,
                                  std::size_t i, Real h = Real(0)) {
  if (!(z[i] > Real(0))) {
    throw Error(ErrorKind::Domain, "theta_apply_fd needs a positive coordinate");
  }
  if (h <= Real(0)) h = default_fd_step(z[i]);
  std::vector<Real> zp(z.begin(), z.end()), zm(z.begin(), z.end());
  zp[i] = z[i] + h;
  zm[i] = z[i] - h;
  const Real span = zp[i] - zm[i];
  return z[i] * (f(zp) - f(zm)) / span;
}

/// theta_i theta_j f by nesting the central difference (i may equal j).
template <class Real>
std::complex<Real> theta2_apply_fd(const ScalarField<Real>& f, std::span<const Real> z,
                                   std::size_t i, std::size_t j, Real h = Real(0)) {
  ScalarField<Real> inner = [&f, j, h](std::span<const Real> p) {
    return theta_apply_fd<Real>(f, p, j, h);
  };
  return theta_apply_fd<Real>(inner, z, i, h);
}

}  // namespace hofd
