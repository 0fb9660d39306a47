#include <doctest.h>

#include <random>

#include "hofd/lauricella.hpp"
#include "support.hpp"

using namespace hofd;
using hofd::test::rel_err;

TEST_SUITE_BEGIN("lauricella");

TEST_CASE("fd series basics") {
  const SeriesParams p{0.3, {0.2, 0.4, -0.7}, 1.1};
  const std::vector<Complex> zero(3, 0.0);
  CHECK(fd_series(p, zero) == Complex(1.0));

  const double k = 0.45, x = 0.37;
  const std::vector<Complex> y1{x};
  CHECK(rel_err(fd_series({-1.0, {k}, 2 * k}, y1), 1.0 - x / 2) < 1e-15);

  const std::vector<Complex> one_nonzero{0.0, 0.6, 0.0};
  CHECK(rel_err(fd_series(p, one_nonzero), gauss_2f1(0.3, 0.4, 1.1, 0.6)) < 1e-13);

  const std::vector<Complex> outside{0.2, 1.2, 0.1};
  CHECK_THROWS_AS(fd_series(p, outside), Error);
  CHECK_THROWS_AS(fd_series({0.3, {0.2}, -2.0}, y1), Error);
}

TEST_CASE("fd series is symmetric in the (beta, y) pairs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.6, 0.6), b(0.1, 1.5);
  for (int t = 0; t < 20; ++t) {
    const Complex a = b(rng), g = b(rng) + 1.0;
    std::vector<Complex> betas{b(rng), b(rng), b(rng)}, y{u(rng), u(rng), u(rng)};
    const Complex v = fd_series({a, betas, g}, y);
    std::swap(betas[0], betas[2]);
    std::swap(y[0], y[2]);
    CHECK(rel_err(fd_series({a, betas, g}, y), v) < 1e-12);
  }
}

TEST_CASE("terminating fd series") {
  // terminates for any y, including far outside the unit polydisc
  const std::vector<Complex> far{3.0, -5.0};
  const Complex v = fd_series({-1.0, {0.5, 0.25}, 2.0}, far);
  CHECK(rel_err(v, 1.0 - (0.5 * 3.0 + 0.25 * -5.0) / 2.0) < 1e-15);

  const std::vector<Rational> betas{make_rational(1, 2), make_rational(2, 3)};
  const MultiPoly poly = fd_polynomial(3, betas, make_rational(5, 4));
  CHECK(poly.total_degree() == 3);
  for (const auto& [e, c] : poly.terms()) CHECK(e[0] + e[1] <= 3);
  const std::vector<Rational> y{make_rational(1, 3), make_rational(-2, 5)};
  const std::vector<double> yd{1.0 / 3, -0.4};
  CHECK(std::abs(Rational(fd_series_exact(3, betas, make_rational(5, 4), y)).get_d() -
                 poly.evaluate(yd)) < 1e-14);
}

TEST_CASE("gauss 2F1") {
  CHECK(gauss_2f1(0.1, 0.2, 0.3, 0.0) == Complex(1.0));
  CHECK(rel_err(gauss_2f1(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0)) < 1e-14);
  // Jacobi-function form of the n = 2 degenerate F: nu = 1 gives cosh t
  const double k = 0.7, t = 0.8, s = std::sinh(t / 2);
  CHECK(rel_err(gauss_2f1(-1.0, 1.0 + 2 * k, k + 0.5, -s * s), std::cosh(t)) < 1e-14);
}

TEST_CASE("appell F1") {
  CHECK(appell_f1(0.3, 0.5, 0.7, 1.3, 0.0, 0.0) == Complex(1.0));
  CHECK(rel_err(appell_f1(0.3, 0.5, 0.7, 1.3, 0.3, 0.3), gauss_2f1(0.3, 1.2, 1.3, 0.3)) < 1e-13);
  const double x = 0.4, y = -0.3;
  CHECK(rel_err(appell_f1(-1.0, 0.5, 0.7, 1.3, x, y), 1.0 - (0.5 * x + 0.7 * y) / 1.3) < 1e-15);
}

TEST_CASE("horn G2") {
  CHECK(horn_g2(0.3, 0.4, 0.5, 0.6, 0.0, 0.0) == Complex(1.0));
  // first-order coefficients: x carries (b)_{-1} (b')_1, y carries (b)_1 (b')_{-1}
  const double a = 0.3, ap = 0.4, b = 0.5, bp = 0.6, h = 1e-6;
  const Complex dx = (horn_g2(a, ap, b, bp, h, 0.0) - horn_g2(a, ap, b, bp, -h, 0.0)) / (2 * h);
  const Complex dy = (horn_g2(a, ap, b, bp, 0.0, h) - horn_g2(a, ap, b, bp, 0.0, -h)) / (2 * h);
  CHECK(std::abs(dx - a * bp / (b - 1)) < 1e-8);
  CHECK(std::abs(dy - ap * b / (bp - 1)) < 1e-8);
  const auto r = horn_g2_eval(a, ap, b, bp, -0.2, -0.5);
  CHECK(r.tail < 1e-13);
}

TEST_CASE("E_D residuals") {
  const SeriesParamsT<double> p{0.35, {0.6, -0.45}, 1.7};
  const std::vector<double> y{0.2, 0.3};
  ScalarField<double> F = [&](std::span<const double> q) {
    std::vector<Complex> yc(q.begin(), q.end());
    return fd_series(p, yc);
  };
  for (const auto& r : ed_residual<double>(p, F, y, 1e-5))
    CHECK(std::abs(r) < 1e-6 * (1 + std::abs(F(y))));

  ScalarField<double> one = [](std::span<const double>) { return std::complex<double>(1.0); };
  const auto res = ed_residual<double>(p, one, y, 1e-5);
  REQUIRE(res.size() == 3);
  CHECK(res[0] == Complex(0.0));
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(res[1 + i] - -y[i] * p.betas[i] * p.alpha) < 1e-12);
}

TEST_CASE("last-variable transformation") {
  const SeriesParams p1{0.3, {0.8}, 1.4};
  const std::vector<Complex> zero{0.0};
  const auto t0 = fd_transform_last(p1, zero);
  CHECK(t0.prefactor == Complex(1.0));
  CHECK(t0.args[0] == Complex(0.0));

  // Pfaff
  const std::vector<Complex> x{0.4};
  const auto t = fd_transform_last(p1, x);
  CHECK(rel_err(t.prefactor * fd_series(t.params, t.args), gauss_2f1(0.3, 0.8, 1.4, 0.4)) <
        1e-13);
  CHECK(rel_err(t.params.betas[0], 1.4 - 0.8) < 1e-15);

  const SeriesParams p2{0.45, {0.3, -0.6}, 1.9};
  // at (0.2, 0.5) the last new argument is -1, on the boundary of the series
  const std::vector<Complex> x2{0.2, 0.35};
  const auto t2 = fd_transform_last(p2, x2);
  CHECK(rel_err(t2.prefactor * fd_series(t2.params, t2.args), fd_series(p2, x2)) < 1e-10);

  // the argument and parameter maps are involutions
  const std::vector<Rational> xr{make_rational(1, 5), make_rational(-3, 7), make_rational(2, 9)};
  const auto once = transform_last_arguments<Rational>(xr);
  const auto twice = transform_last_arguments<Rational>(once);
  for (std::size_t i = 0; i < xr.size(); ++i) CHECK(twice[i] == xr[i]);
  const std::vector<Rational> br{make_rational(1, 2), make_rational(1, 3), make_rational(5, 4)};
  const Rational g = make_rational(7, 3);
  const auto b2 = transform_last_betas<Rational>(transform_last_betas<Rational>(br, g), g);
  for (std::size_t i = 0; i < br.size(); ++i) CHECK(b2[i] == br[i]);

  const std::vector<Complex> bad{0.2, 1.0};
  CHECK_THROWS_AS(fd_transform_last(p2, bad), Error);
}

TEST_SUITE_END();
