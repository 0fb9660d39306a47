#include "hofd/lauricella.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hofd {

namespace {

constexpr double kGammaPoleTol = 1e-10;

template <class Real>
Complex to_complex(const std::complex<Real>& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

template <class Real>
void check_gamma(const std::complex<Real>& gamma, int nu) {
  const Complex g = to_complex(gamma);
  if (nu < 0) {
    if (near_nonpositive_integer(g, kGammaPoleTol)) {
      throw Error(ErrorKind::Pole, "series parameter gamma is a nonpositive integer");
    }
    return;
  }
  for (int j = 0; j < nu; ++j) {
    if (std::abs(g + static_cast<double>(j)) <= kGammaPoleTol) {
      throw Error(ErrorKind::Pole,
                  "terminating series reaches (gamma)_d = 0 at d = " + std::to_string(j + 1));
    }
  }
}

bool converged(double mag, double prev_mag, double sum_abs, const Tolerance& tol) {
  return mag + prev_mag <= tol.abs_tol + tol.rel_tol * sum_abs;
}

}  // namespace

int terminating_degree(Complex alpha) {
  if (std::abs(alpha.imag()) > 1e-12) return -1;
  const double r = std::round(alpha.real());
  if (r > 0.0 || std::abs(alpha.real() - r) > 1e-12) return -1;
  return static_cast<int>(-r);
}

template <class Real>
SeriesValueT<Real> fd_series_eval(const SeriesParamsT<Real>& p,
                                  std::span<const std::complex<Real>> y,
                                  const Tolerance& tol) {
  using C = std::complex<Real>;
  tol.validate();
  const std::size_t m = p.betas.size();
  if (y.size() != m) {
    throw Error(ErrorKind::InvalidDimension, "F_D needs one argument per beta");
  }
  const int nu = terminating_degree(to_complex(p.alpha));
  if (nu < 0) {
    for (const auto& yi : y) {
      if (!(std::abs(yi) < Real(1))) {
        throw Error(ErrorKind::Domain,
                    "non-terminating F_D needs every |y_i| < 1 (got " +
                        std::to_string(static_cast<double>(std::abs(yi))) + ")");
      }
    }
  }
  check_gamma(p.gamma, nu);

  SeriesValueT<Real> out;
  out.terminating = nu >= 0;
  out.value = C(1);
  if (m == 0 || nu == 0) return out;

  // coef[i][d] = (b_i)_d y_i^d / d!, prefix[j][d] = degree-d part of the
  // product of the first j+1 of those series.
  std::vector<std::vector<C>> coef(m, std::vector<C>{C(1)});
  std::vector<std::vector<Real>> coef_abs(m, std::vector<Real>{Real(1)});
  std::vector<std::vector<C>> prefix(m, std::vector<C>{C(1)});
  std::vector<std::vector<Real>> prefix_abs(m, std::vector<Real>{Real(1)});

  C ratio(1);  // (alpha)_d / (gamma)_d
  double prev_mag = 1.0;
  for (int d = 1;; ++d) {
    if (nu >= 0 && d > nu) break;
    if (d > tol.max_terms) {
      throw Error(ErrorKind::NonConvergence,
                  "F_D did not converge within " + std::to_string(tol.max_terms) + " degrees");
    }
    const Real dd = static_cast<Real>(d);
    for (std::size_t i = 0; i < m; ++i) {
      const C next = coef[i].back() * (p.betas[i] + (dd - Real(1))) * y[i] / dd;
      coef[i].push_back(next);
      coef_abs[i].push_back(std::abs(next));
    }
    prefix[0].push_back(coef[0].back());
    prefix_abs[0].push_back(coef_abs[0].back());
    for (std::size_t j = 1; j < m; ++j) {
      C s(0);
      Real sa(0);
      for (int t = 0; t <= d; ++t) {
        s += prefix[j - 1][t] * coef[j][d - t];
        sa += prefix_abs[j - 1][t] * coef_abs[j][d - t];
      }
      prefix[j].push_back(s);
      prefix_abs[j].push_back(sa);
    }
    ratio *= (p.alpha + (dd - Real(1))) / (p.gamma + (dd - Real(1)));
    const C block = ratio * prefix[m - 1][d];
    const double mag = static_cast<double>(std::abs(ratio) * prefix_abs[m - 1][d]);
    out.value += block;
    out.degree = d;
    out.tail = mag + prev_mag;
    if (nu < 0 && converged(mag, prev_mag, static_cast<double>(std::abs(out.value)), tol)) break;
    prev_mag = mag;
  }
  if (out.terminating) out.tail = 0.0;
  return out;
}

template SeriesValueT<double> fd_series_eval(const SeriesParamsT<double>&,
                                             std::span<const std::complex<double>>,
                                             const Tolerance&);
template SeriesValueT<long double> fd_series_eval(const SeriesParamsT<long double>&,
                                                  std::span<const std::complex<long double>>,
                                                  const Tolerance&);

Complex fd_series(const SeriesParams& p, std::span<const Complex> y, const Tolerance& tol) {
  return fd_series_eval(p, y, tol).value;
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex x, const Tolerance& tol) {
  const SeriesParams p{a, {b}, c};
  const Complex y[] = {x};
  return fd_series(p, y, tol);
}

Complex appell_f1(Complex alpha, Complex beta1, Complex beta2, Complex gamma, Complex x,
                  Complex y, const Tolerance& tol) {
  const SeriesParams p{alpha, {beta1, beta2}, gamma};
  const Complex args[] = {x, y};
  return fd_series(p, args, tol);
}

SeriesValue horn_g2_eval(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p,
                         Complex x, Complex y, const Tolerance& tol) {
  tol.validate();
  if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0)) {
    throw Error(ErrorKind::Domain, "G2 is evaluated only for |x| < 1 and |y| < 1");
  }
  // along_x[m] = (alpha)_m x^m / m!, along_y[n] = (alpha')_n y^n / n!,
  // mixed_pos[j] = (beta)_j (beta')_{-j}, mixed_neg[j] = (beta)_{-j} (beta')_j.
  // Keeping the mixed products together avoids overflow of (beta)_j alone.
  std::vector<Complex> along_x{1.0}, along_y{1.0}, mixed_pos{1.0}, mixed_neg{1.0};
  auto mixed = [&](int j) -> const Complex& {
    return j >= 0 ? mixed_pos[j] : mixed_neg[-j];
  };
  auto divide_checked = [](Complex num, Complex den) {
    if (std::abs(den) <= 1e-12) {
      throw Error(ErrorKind::Pole, "G2 shifted factorial hits a pole of Gamma");
    }
    return num / den;
  };

  SeriesValue out;
  out.value = 1.0;
  double prev_mag = 1.0;
  for (int d = 1;; ++d) {
    if (d > tol.max_terms) {
      throw Error(ErrorKind::NonConvergence,
                  "G2 did not converge within " + std::to_string(tol.max_terms) + " degrees");
    }
    const double dd = d;
    along_x.push_back(along_x.back() * (alpha + (dd - 1.0)) * x / dd);
    along_y.push_back(along_y.back() * (alpha_p + (dd - 1.0)) * y / dd);
    mixed_pos.push_back(divide_checked(mixed_pos.back() * (beta + (dd - 1.0)), beta_p - dd));
    mixed_neg.push_back(divide_checked(mixed_neg.back() * (beta_p + (dd - 1.0)), beta - dd));
    Complex block = 0.0;
    double mag = 0.0;
    for (int mx = 0; mx <= d; ++mx) {
      const int ny = d - mx;
      const Complex term = along_x[mx] * along_y[ny] * mixed(ny - mx);
      block += term;
      mag += std::abs(term);
    }
    out.value += block;
    out.degree = d;
    out.tail = mag + prev_mag;
    if (converged(mag, prev_mag, std::abs(out.value), tol)) break;
    prev_mag = mag;
  }
  return out;
}

Complex horn_g2(Complex alpha, Complex alpha_p, Complex beta, Complex beta_p, Complex x,
                Complex y, const Tolerance& tol) {
  return horn_g2_eval(alpha, alpha_p, beta, beta_p, x, y, tol).value;
}

template <class Real>
std::vector<std::complex<Real>> ed_residual(const SeriesParamsT<Real>& p,
                                            const ScalarField<Real>& F,
                                            std::span<const Real> y, Real h) {
  using C = std::complex<Real>;
  const std::size_t m = p.betas.size();
  if (y.size() != m) throw Error(ErrorKind::InvalidDimension, "E_D point has the wrong size");
  const C f = F(y);
  std::vector<C> d1(m);
  for (std::size_t i = 0; i < m; ++i) d1[i] = theta_apply_fd<Real>(F, y, i, h);
  std::vector<std::vector<C>> d2(m, std::vector<C>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      d2[i][j] = theta2_apply_fd<Real>(F, y, i, j, h);
      d2[j][i] = d2[i][j];
    }
  }
  std::vector<C> res;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      res.push_back(y[i] * (d2[i][j] + p.betas[i] * d1[j]) -
                    y[j] * (d2[j][i] + p.betas[j] * d1[i]));
    }
  }
  C sum_d1(0);
  for (const auto& v : d1) sum_d1 += v;
  for (std::size_t i = 0; i < m; ++i) {
    C sum_d2(0);
    for (std::size_t l = 0; l < m; ++l) sum_d2 += d2[i][l];
    const C lhs = sum_d2 + (p.gamma - Real(1)) * d1[i];
    const C rhs = y[i] * (sum_d2 + p.alpha * d1[i] + p.betas[i] * sum_d1 +
                          p.betas[i] * p.alpha * f);
    res.push_back(lhs - rhs);
  }
  return res;
}

template std::vector<std::complex<double>> ed_residual(const SeriesParamsT<double>&,
                                                       const ScalarField<double>&,
                                                       std::span<const double>, double);
template std::vector<std::complex<long double>> ed_residual(
    const SeriesParamsT<long double>&, const ScalarField<long double>&,
    std::span<const long double>, long double);

FdTransform fd_transform_last(const SeriesParams& p, std::span<const Complex> x) {
  const std::size_t m = p.betas.size();
  if (m == 0 || x.size() != m) {
    throw Error(ErrorKind::InvalidDimension, "transformation needs m >= 1 matching arguments");
  }
  if (std::abs(x[m - 1] - 1.0) <= 1e-14) {
    throw Error(ErrorKind::Domain, "transformation is singular at x_m = 1");
  }
  FdTransform out;
  out.params.alpha = p.alpha;
  out.params.gamma = p.gamma;
  out.params.betas = transform_last_betas<Complex>(p.betas, p.gamma);
  out.args = transform_last_arguments<Complex>(x);
  out.prefactor = std::pow(1.0 - x[m - 1], -p.alpha);
  return out;
}

MultiPoly fd_polynomial(int nu, std::span<const Rational> betas, const Rational& gamma) {
  if (nu < 0) throw Error(ErrorKind::InvalidArgument, "fd_polynomial needs nu >= 0");
  const std::size_t m = betas.size();
  for (int j = 0; j < nu; ++j) {
    if (gamma + j == 0) {
      throw Error(ErrorKind::Pole,
                  "terminating series reaches (gamma)_d = 0 at d = " + std::to_string(j + 1));
    }
  }
  MultiPoly out(m);
  for (const auto& e : exponents_up_to(m, nu)) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    Rational c = pochhammer(Rational(-nu), d) / pochhammer(gamma, d);
    for (std::size_t i = 0; i < m; ++i) {
      c *= pochhammer(betas[i], e[i]) / pochhammer(Rational(1), e[i]);
    }
    out.add_term(e, c);
  }
  return out;
}

Rational fd_series_exact(int nu, std::span<const Rational> betas, const Rational& gamma,
                         std::span<const Rational> y) {
  const MultiPoly poly = fd_polynomial(nu, betas, gamma);
  if (y.size() != betas.size()) {
    throw Error(ErrorKind::InvalidDimension, "F_D needs one argument per beta");
  }
  Rational s = 0;
  for (const auto& [e, c] : poly.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int r = 0; r < e[i]; ++r) t *= y[i];
    s += t;
  }
  return s;
}

}  // namespace hofd
