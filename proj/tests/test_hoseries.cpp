#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hofd/hoseries.hpp"
#include "support.hpp"

using namespace hofd;
using hofd::test::rel_err;

namespace {

ChamberPoint aplus(std::vector<double> z) {
  return ChamberPoint::normalized(std::move(z), ChamberPoint::Region::APlus);
}

}  // namespace

TEST_SUITE_BEGIN("hoseries");

TEST_CASE("chamber points") {
  CHECK_THROWS_AS(ChamberPoint({2.0, 1.0}, ChamberPoint::Region::APlus), Error);
  CHECK_THROWS_AS(ChamberPoint({0.5, 1.0}, ChamberPoint::Region::A), Error);
  CHECK_NOTHROW(ChamberPoint({2.0, 0.5}, ChamberPoint::Region::A));
  const auto z = aplus({1.0, 2.0, 8.0});
  CHECK(std::abs(z[0] * z[1] * z[2] - 1.0) < 1e-14);
  CHECK(std::abs(z.max_ratio() - 0.5) < 1e-14);
}

TEST_CASE("harish-chandra coefficients, n = 2") {
  const Rational nu = make_rational(2, 7), k = make_rational(5, 3);
  const auto exact = hc_coefficients_exact(degenerate_lambda_exact(2, nu, k), k, 6);
  CHECK(exact.block(0)[0] == 1);
  for (int h = 1; h <= 6; ++h) {
    const Rational want = pochhammer(Rational(-nu), h) * pochhammer(k, h) /
                          (pochhammer(Rational(1 - nu - k), h) * pochhammer(Rational(1), h));
    CHECK(exact.block(h)[0] == want);
  }

  // Phi(lambda(nu, k)) = y^{-nu/2} 2F1(-nu, k, 1 - nu - k; y), y = z_1 / z_2
  const double nd = 0.43, kd = 0.71;
  const auto table = hc_coefficients(degenerate_lambda(2, nd, kd), kd, 60);
  for (double y : {0.1, 0.3, 0.5}) {
    const auto z = aplus({y, 1.0});
    const Complex want = std::pow(y, -nd / 2) * gauss_2f1(-nd, kd, 1 - nd - kd, y);
    CHECK(rel_err(hc_series_eval(table, z).value, want) < 1e-13);
  }
}

TEST_CASE("harish-chandra series edge cases") {
  const Weight lam({-0.3, 0.1, 0.2});
  const auto z = aplus({0.2, 0.5, 1.0});
  Complex monomial = 1.0;
  for (int i = 0; i < 3; ++i) monomial *= std::pow(z[i], lam[i]);

  // k = 0: flat Laplacian, Phi = z^lambda
  const auto flat = hc_coefficients(lam, 0.0, 8);
  CHECK(rel_err(hc_series_eval(flat, z).value, monomial) < 1e-14);

  // height 0 truncation is the leading monomial z^{lambda - rho}
  const double k = 0.6;
  const auto lead = hc_coefficients(lam, k, 0);
  const Weight r = rho(3, k);
  Complex want = 1.0;
  for (int i = 0; i < 3; ++i) want *= std::pow(z[i], lam[i] - r[i]);
  CHECK(rel_err(hc_series_eval(lead, z).value, want) < 1e-14);

  CHECK(hc_coefficients(lam, k, 3).coefficient(LatticeVector({0, 0, 0})) == Complex(1.0));
  CHECK_THROWS_AS(hc_coefficients(lam, k, 3).coefficient(LatticeVector({-4, 0, 4})), Error);
  CHECK_THROWS_AS(hc_series_eval(lead, ChamberPoint({1.0, 1.0, 1.0}, ChamberPoint::Region::A)),
                  Error);
}

TEST_CASE("resonance is reported") {
  // (mu, mu) = 2 (lambda, mu) for mu = e_2 - e_1
  try {
    hc_coefficients(Weight({-0.5, 0.5}), 0.3, 4);
    FAIL("expected a resonance error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resonance);
    CHECK(std::string(e.what()).find("(-1,1)") != std::string::npos);
  }
  // nu + 3k = 3 puts lambda(nu, k) on the hyperplane of (-2, 1, 1)
  CHECK_THROWS_AS(hc_coefficients(degenerate_lambda(3, 1.8, 0.4), 0.4, 4), Error);
}

TEST_CASE("truncation residual decays with the height") {
  const double k = 0.45;
  const auto z = aplus({0.25, 0.5, 1.0});
  HcCoeffTable t = hc_coefficients(degenerate_lambda(3, 0.77, k), k, 8);
  const double r8 = std::abs(hc_truncation_residual(t, z));
  t.extend(12);
  const double r12 = std::abs(hc_truncation_residual(t, z));
  t.extend(16);
  const double r16 = std::abs(hc_truncation_residual(t, z));
  CHECK(r12 < r8);
  CHECK(r16 < r12);
  CHECK(std::pow(r16 / r8, 1.0 / 8) <= 0.6);
}

TEST_CASE("adaptive series agrees with a fixed table") {
  const double k = 0.8;
  const Weight lam = degenerate_lambda(3, 0.61, k);
  const auto z = aplus({0.3, 0.55, 1.0});
  const auto fixed = hc_coefficients(lam, k, 120);
  HarishChandraSeries phi(lam, k);
  const auto v = phi.evaluate(z);
  CHECK(rel_err(v.value, hc_series_eval(fixed, z).value) < 1e-12);
  CHECK(v.height <= phi.table_height());
  CHECK(phi.min_denominator() > 0.0);

  HcPolicy dbl;
  dbl.precision = HcPrecision::Double;
  HarishChandraSeries phid(lam, k, dbl);
  CHECK(rel_err(phid.evaluate(z).value, v.value) < 1e-11);

  CHECK_THROWS_AS(phi.evaluate(aplus({0.95, 0.97, 1.0})), Error);
}

TEST_CASE("c-functions") {
  const Weight lam({-0.4, 0.15, 0.25});
  CHECK(rel_err(c_tilde(lam, 0.0), 1.0) < 1e-15);
  const double k = 0.55;
  const Complex want_rho = std::tgamma(k) / std::tgamma(2 * k) * std::tgamma(k) / std::tgamma(3 * k);
  CHECK(rel_err(c_tilde(rho(3, k), k), want_rho) < 1e-13);
  const double s = 0.37;
  CHECK(rel_err(c_tilde(Weight({-s, s}), k), std::tgamma(2 * s) / std::tgamma(2 * s + k)) < 1e-13);

  CHECK(rel_err(c_func(rho(4, k), k), 1.0) < 1e-13);
  for (int n = 2; n <= 4; ++n) {
    const double nu = 0.83;
    const Complex want = std::tgamma(n * k) * std::tgamma(nu + k) /
                         (std::tgamma(k) * std::tgamma(nu + n * k));
    CHECK(rel_err(c_func(degenerate_lambda(n, nu, k), k), want) < 1e-12);
    for (int v = 0; v <= 3; ++v)
      CHECK(rel_err(c_func(degenerate_lambda_quad(n, v, k), k),
                    pochhammer(Complex(k), v) / pochhammer(Complex(n * k), v)) < 1e-12);
  }
  CHECK_THROWS_AS(c_tilde(Weight({0.5, -0.5}), k), Error);
  CHECK_THROWS_AS(c_func(rho(2, -0.5), -0.5), Error);
}

TEST_CASE("c vanishes off the minimal coset representatives") {
  for (int n = 2; n <= 4; ++n) {
    const double nu = 0.71, k = 0.93;
    const QuadWeight lam = degenerate_lambda_quad(n, nu, k);
    const auto reps = min_coset_reps(n);
    for (const auto& w : all_permutations(n)) {
      const auto wl = weyl_act<ComplexQuad>(w, lam);
      const Complex c = c_func(QuadWeight(wl.begin(), wl.end()), k);
      if (std::find(reps.begin(), reps.end(), w) != reps.end()) {
        CHECK(std::abs(c) > 0.0);
      } else {
        // zero up to the binary128 rounding of lambda
        CHECK(std::abs(c) < 1e-30);
      }
    }
  }
}

TEST_CASE("singular set") {
  CHECK(singular_set_contains(-0.5, 2));
  CHECK_FALSE(singular_set_contains(-1.0, 4));
  for (int n = 2; n <= 8; ++n) CHECK_FALSE(singular_set_contains(0.5, n));
  CHECK(singular_set_contains(-1.0 / 3, 3));
  CHECK_FALSE(singular_set_contains(-1.0 / 3, 2));
}

TEST_CASE("degenerate F") {
  CHECK(rel_err(ho_F_degenerate(3, 0.7, 0.4, ChamberPoint({1.0, 1.0, 1.0}, ChamberPoint::Region::A)),
                1.0) < 1e-15);
  for (double t : {0.1, 0.4, 1.3}) {
    const ChamberPoint z({std::exp(-t), std::exp(t)}, ChamberPoint::Region::APlus);
    CHECK(rel_err(ho_F_degenerate(2, 1.0, 0.5, z), std::cosh(t)) < 1e-14);
  }
  // symmetric in z
  const std::vector<double> base{0.4, 0.9, 1.0 / 0.36};
  const Complex v = ho_F_degenerate(3, 0.66, 0.8, ChamberPoint(base, ChamberPoint::Region::A, 1e-9));
  std::vector<int> perm{0, 1, 2};
  do {
    std::vector<double> zp(3);
    for (int i = 0; i < 3; ++i) zp[i] = base[perm[i]];
    const ChamberPoint zz(zp, ChamberPoint::Region::A, 1e-9);
    CHECK(rel_err(ho_F_degenerate(3, 0.66, 0.8, zz), v) < 1e-10);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("connection formula matches the degenerate formula") {
  const auto z = aplus({0.55, 0.75, 1.0});
  const double nu = 1.37, k = 0.62;
  CHECK(rel_err(ho_F_connection(degenerate_lambda(3, nu, k), k, z),
                ho_F_degenerate(3, nu, k, z)) < 1e-8);

  // near the identity the ratio passes the default bound and the height runs long
  const std::vector<ChamberPoint> near{aplus({0.95 * 0.95, 0.95, 1.0})};
  ConnectionOptions opts;
  opts.policy.ratio_bound = 0.96;
  opts.policy.max_height = 1500;
  const auto vals = ho_F_connection_batch(degenerate_lambda(3, nu, k), k, near, opts);
  CHECK(rel_err(vals[0].value, ho_F_degenerate(3, nu, k, near[0])) < 1e-8);

  // generic lambda: Weyl-invariant under permuting z back into A_+
  const Weight lam({-0.71, 0.13, 0.58});
  const std::vector<double> zs{0.4, 0.8, 1.0 / 0.32};
  const Complex ref = ho_F_connection(lam, k, ChamberPoint(zs, ChamberPoint::Region::APlus, 1e-9));
  std::vector<double> shuffled{zs[2], zs[0], zs[1]};
  std::sort(shuffled.begin(), shuffled.end());
  CHECK(rel_err(ho_F_connection(lam, k, ChamberPoint(shuffled, ChamberPoint::Region::APlus, 1e-9)),
                ref) < 1e-14);

  CHECK_THROWS_AS(ho_F_connection(rho(3, 1.0), 1.0, z), Error);
}

TEST_CASE("connection formula across a resonance of Phi") {
  // lambda(1.8, 0.4) is generic, but Phi(lambda) is undefined: the sum is
  // taken as a circle mean around lambda
  const double nu = 1.8, k = 0.4;
  const std::vector<ChamberPoint> zs{aplus({0.3, 0.6, 1.0}), aplus({0.2, 0.5, 1.0})};
  const auto vals = ho_F_connection_batch(degenerate_lambda_quad(3, nu, k), k, zs);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(rel_err(vals[i].value, ho_F_degenerate(3, nu, k, zs[i])) < 1e-10);
    CHECK(std::isnan(vals[i].terms[0].phi.real()));
  }
}

TEST_CASE("Weyl sum collapses to the coset representatives") {
  const auto z = aplus({0.35, 0.6, 1.0});
  const double nu = 0.57, k = 0.77;
  const std::vector<ChamberPoint> zs{z};
  ConnectionOptions full;
  full.skip_threshold = 0.0;
  ConnectionOptions reps;
  reps.coset_reps_only = true;
  const auto a = ho_F_connection_batch(degenerate_lambda_quad(3, nu, k), k, zs, full);
  const auto b = ho_F_connection_batch(degenerate_lambda_quad(3, nu, k), k, zs, reps);
  CHECK(a[0].terms.size() == 6);
  CHECK(b[0].terms.size() == 3);
  CHECK(rel_err(a[0].value, b[0].value) < 1e-10);
}

TEST_CASE("PDE residuals of the degenerate F") {
  // long double keeps the second differences clear of rounding
  using LD = long double;
  using CLD = std::complex<LD>;
  const int n = 3;
  const CLD nu = 0.9L, k = 0.65L;
  ScalarField<LD> phi = [&](std::span<const LD> p) {
    return ho_F_degenerate_eval<LD>(n, nu, k, p).value;
  };
  const std::vector<LD> z{0.7L, 0.9L, 1.3L};
  const LD scale = 1 + std::abs(phi(z));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(std::abs(delta_ij_residual<LD>(n, nu, k, phi, z, i, j)) < 1e-6L * scale);
  CHECK(std::abs(casimir_residual<LD>(n, nu, k, phi, z)) < 1e-6L * scale);
  CHECK(std::abs(lk_residual<LD>(degenerate_lambda(n, 0.9, 0.65), k, phi, z)) < 1e-6L * scale);

  ScalarField<LD> one = [](std::span<const LD>) { return CLD(1.0L); };
  CHECK(std::abs(delta_ij_residual<LD>(n, nu, k, one, z, 0, 2) - nu * (nu + LD(n) * k) / LD(n * n)) <
        1e-12L);
}

TEST_SUITE_END();
