#include "hofd/numerics.hpp"

#include <array>
#include <numbers>
#include <string>

namespace hofd {

namespace {

constexpr double kPoleTol = 1e-12;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex ln_gamma_right(Complex x) {
  // Valid for Re x >= 1/2.
  const Complex z = x - 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

void require_off_pole(Complex x, const char* what) {
  if (distance_to_nonpositive_integer(x) <= kPoleTol) {
    throw Error(ErrorKind::Pole, std::string(what) + ": argument (" +
                                     std::to_string(x.real()) + ", " +
                                     std::to_string(x.imag()) +
                                     ") is at a pole of Gamma");
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "tolerance needs abs_tol > 0, rel_tol > 0 and max_terms >= 1");
  }
}

double distance_to_nonpositive_integer(Complex x) {
  const double nearest = std::min(0.0, std::round(x.real()));
  return std::hypot(x.real() - nearest, x.imag());
}

bool near_nonpositive_integer(Complex x, double tol) {
  return distance_to_nonpositive_integer(x) <= tol;
}

bool near_integer(Complex x, double tol) {
  return std::hypot(x.real() - std::round(x.real()), x.imag()) <= tol;
}

Complex ln_gamma(Complex x) {
  require_off_pole(x, "ln_gamma");
  if (x.real() >= 0.5) return ln_gamma_right(x);
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * x)) -
         ln_gamma_right(1.0 - x);
}

Complex gamma(Complex x) {
  const Complex g = std::exp(ln_gamma(x));
  return x.imag() == 0.0 ? Complex(g.real(), 0.0) : g;
}

Complex rgamma(Complex x) {
  if (x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::floor(x.real())) return 0.0;
  Complex r;
  if (x.real() >= 0.5) {
    r = std::exp(-ln_gamma_right(x));
  } else {
    r = std::sin(std::numbers::pi * x) / std::numbers::pi * std::exp(ln_gamma_right(1.0 - x));
  }
  return x.imag() == 0.0 ? Complex(r.real(), 0.0) : r;
}

Complex pochhammer(Complex a, int m) {
  if (m >= 0) return pochhammer_product(a, m);
  Complex denom = 1.0;
  for (int j = 1; j <= -m; ++j) {
    const Complex factor = a - static_cast<double>(j);
    if (std::abs(factor) <= kPoleTol) {
      throw Error(ErrorKind::Pole, "pochhammer: Gamma(a+m) is at a pole for m = " +
                                       std::to_string(m));
    }
    denom *= factor;
  }
  return 1.0 / denom;
}

Rational pochhammer(const Rational& a, int m) {
  if (m >= 0) return pochhammer_product(a, m);
  Rational denom = 1;
  for (int j = 1; j <= -m; ++j) {
    const Rational factor = a - j;
    if (factor == 0) {
      throw Error(ErrorKind::Pole, "pochhammer: Gamma(a+m) is at a pole for m = " +
                                       std::to_string(m));
    }
    denom *= factor;
  }
  return 1 / denom;
}

Complex gamma_ratio(Complex a, Complex b) {
  require_off_pole(a, "gamma_ratio numerator");
  require_off_pole(b, "gamma_ratio denominator");
  const Complex r = std::exp(ln_gamma(a) - ln_gamma(b));
  if (a.imag() == 0.0 && b.imag() == 0.0) return {r.real(), 0.0};
  return r;
}

}  // namespace hofd
