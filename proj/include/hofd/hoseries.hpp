#pragma once

// Harish-Chandra series, c-functions and the Heckman-Opdam hypergeometric
// function F(lambda, k; z) of type A_{n-1}, both through the Weyl-group
// connection formula and through Lauricella's F_D at the degenerate
// parameter lambda(nu, k).

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hofd/lauricella.hpp"
#include "hofd/numerics.hpp"
#include "hofd/rational.hpp"
#include "hofd/rootsys.hpp"

namespace hofd {

/// A point of A = {z in R^n_{>0} : prod z_i = 1}, optionally required to lie
/// in the chamber A_+ (z_0 < z_1 < ... < z_{n-1}).
class ChamberPoint {
 public:
  enum class Region { A, APlus };

  /// Throws Domain unless every z_i > 0 and |prod z_i - 1| <= tol, plus the
  /// strict ordering for APlus.
  ChamberPoint(std::vector<double> z, Region region, double tol = 1e-12);

  /// Rescales a positive vector by its geometric mean so the product is 1.
  static ChamberPoint normalized(std::vector<double> z, Region region);

  std::size_t size() const noexcept { return z_.size(); }
  double operator[](std::size_t i) const { return z_[i]; }
  std::span<const double> coords() const noexcept { return z_; }
  Region region() const noexcept { return region_; }
  /// max_i z_i / z_{i+1}; meaningful on A_+.
  double max_ratio() const;

 private:
  std::vector<double> z_;
  Region region_;
};

/// Enumerates the simple-root coordinates c of Q_+ by height and ranks them.
/// Inside one height the order is lexicographic in c; the rank of c at
/// height h is offset(h) + rank_in_height(c).
class QPlusIndex {
 public:
  explicit QPlusIndex(int n);

  int rank_dim() const noexcept { return m_; }
  void reserve_height(int h);
  std::size_t count(int h) const;
  std::size_t offset(int h) const;
  std::size_t rank_in_height(std::span<const int> c, int h) const;
  /// Calls f(c) for every coordinate vector of height h in rank order.
  template <class F>
  void for_each(int h, F&& f) const;

 private:
  std::uint64_t binom(int a, int b) const;

  int m_;
  int reserved_ = -1;
  std::vector<std::vector<std::uint64_t>> binom_;
};

template <class F>
void QPlusIndex::for_each(int h, F&& f) const {
  std::vector<int> c(m_, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m_ - 1) {
      c[pos] = remaining;
      f(std::span<const int>(c));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, h);
}

/// Gamma_mu(lambda, k) for all mu in Q_+ up to a height, normalized by
/// Gamma_0 = 1 and determined by the recurrence
///   [(mu, mu) - 2(lambda, mu)] Gamma_mu
///     = -2k sum_{alpha > 0} sum_{m >= 1} (lambda - rho - mu + m alpha, alpha) Gamma_{mu - m alpha}
/// that follows from L(k) Phi = ((lambda, lambda) - (rho, rho)) Phi on A_+.
/// S is double, Complex or Rational. The table grows in place via extend().
template <class S>
class HcCoeffTableT {
 public:
  HcCoeffTableT(std::vector<S> lambda, S k, int max_height);

  int n() const noexcept { return n_; }
  int max_height() const noexcept { return height_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<S>& lambda() const noexcept { return lambda_; }
  const S& k() const noexcept { return k_; }
  const QPlusIndex& index() const noexcept { return index_; }

  /// Raises max_height; throws Resonance naming mu if some left factor vanishes.
  void extend(int max_height);

  /// Throws InvalidArgument if mu is higher than max_height().
  const S& coefficient(const LatticeVector& mu) const;
  /// All coefficients of height h, in QPlusIndex order.
  std::span<const S> block(int h) const;

  /// Smallest |(mu, mu) - 2(lambda, mu)| met so far; small values flag
  /// coefficients computed as a near 0/0 quotient.
  double min_denominator() const noexcept { return min_den_; }

 private:
  void compute_height(int h);

  int n_;
  int m_;
  std::vector<S> lambda_;
  S k_;
  std::vector<S> shift_;  // lambda - rho
  std::vector<std::pair<int, int>> roots_;
  QPlusIndex index_;
  int height_ = -1;
  std::vector<S> coeffs_;
  double min_den_ = HUGE_VAL;
  // Root-string sums sum_m Gamma_nu (shift - nu, alpha) over nu = mu - m alpha
  // for the last n-1 heights, slot h % n. Summing the products directly
  // avoids the cancellation of a split sum_m Gamma and sum_m m Gamma.
  std::vector<std::vector<S>> string_sum_;
};

/// Binary128. Rounding error in the recursion grows like a power of the
/// height for n >= 3 and large k, which double cannot absorb near the walls.
using Quad = __float128;
using ComplexQuad = std::complex<Quad>;

/// A weight carried in binary128. lambda(nu, k) built this way keeps the
/// integral differences that make c(w lambda, k) vanish off the minimal coset
/// representatives; rounded to double they only nearly vanish, while the
/// matching Phi(w lambda) can be large.
using QuadWeight = std::vector<ComplexQuad>;
QuadWeight to_quad(const Weight& lambda);
QuadWeight degenerate_lambda_quad(int n, Complex nu, Complex k);

extern template class HcCoeffTableT<double>;
extern template class HcCoeffTableT<Complex>;
extern template class HcCoeffTableT<Quad>;
extern template class HcCoeffTableT<ComplexQuad>;
extern template class HcCoeffTableT<Rational>;

using HcCoeffTable = HcCoeffTableT<Complex>;

HcCoeffTable hc_coefficients(const Weight& lambda, Complex k, int max_height);
HcCoeffTableT<Rational> hc_coefficients_exact(std::span<const Rational> lambda,
                                              const Rational& k, int max_height);

struct SeriesResult {
  Complex value;
  int height = 0;     // last height summed
  double tail = 0.0;  // magnitude of the last two height blocks
};

/// Sum of every coefficient in the table times z^{lambda - rho - mu}.
/// Throws Domain off A_+ and NonConvergence if the last two height blocks
/// outweigh the whole sum.
template <class S>
SeriesResult hc_series_eval(const HcCoeffTableT<S>& table, const ChamberPoint& z);

enum class HcPrecision {
  Auto,    // Quad for n >= 3, double for n = 2
  Double,
  Quad,
};

/// Adaptive truncation policy for Phi.
struct HcPolicy {
  Tolerance tol{1e-16, 1e-14, 20000};
  HcPrecision precision = HcPrecision::Auto;
  int min_height = 8;
  int max_height = 600;
  std::size_t max_coefficients = std::size_t{1} << 23;
  double ratio_bound = 0.9;
};

/// Phi(lambda, k; .) with a coefficient table that grows its height on
/// demand. Real parameters use a real table.
class HarishChandraSeries {
 public:
  HarishChandraSeries(const Weight& lambda, Complex k, HcPolicy policy = {});
  HarishChandraSeries(const QuadWeight& lambda, Complex k, HcPolicy policy = {});

  /// Sums height blocks until the last two fall below abs + rel * |sum|.
  /// Throws Domain if z leaves A_+ or exceeds the ratio bound, and
  /// NonConvergence at the height or size cap.
  SeriesResult evaluate(const ChamberPoint& z);

  int table_height() const;
  /// Smallest |(mu, mu) - 2(lambda, mu)| met so far.
  double min_denominator() const;

 private:
  template <class S>
  SeriesResult evaluate_with(HcCoeffTableT<S>& table, const ChamberPoint& z);

  HcPolicy policy_;
  std::variant<HcCoeffTableT<double>, HcCoeffTableT<Complex>, HcCoeffTableT<Quad>,
               HcCoeffTableT<ComplexQuad>>
      table_;
};

/// (L(k) Phi_H - ((lambda, lambda) - (rho, rho)) Phi_H)(z) for the table
/// truncated at its height H, applying L(k) to each monomial in closed form.
Complex hc_truncation_residual(const HcCoeffTableT<Complex>& table, const ChamberPoint& z);

/// prod_{i<j} Gamma(lambda_j - lambda_i) / Gamma(lambda_j - lambda_i + k).
/// Throws Pole naming the pair if some Gamma(lambda_j - lambda_i) is infinite.
Complex c_tilde(const Weight& lambda, Complex k);
Complex c_tilde(const QuadWeight& lambda, Complex k);

/// True iff k is not a negative integer but jk is for some j in 2..n.
bool singular_set_contains(Complex k, int n);

/// c(lambda, k) = c_tilde(lambda, k) / c_tilde(rho(k), k). SingularParameter
/// for k in the singular set.
Complex c_func(const Weight& lambda, Complex k);
Complex c_func(const QuadWeight& lambda, Complex k);

struct WeylTerm {
  Permutation w;
  Weight lambda;      // w lambda
  Complex c;          // c(w lambda, k)
  Complex phi;        // Phi(w lambda, k; z), zero when skipped
  Complex contribution;  // c * phi, or its mean over the regularizing circle
  bool skipped = false;
  int height = 0;
};

struct ConnectionValue {
  Complex value;
  int height = 0;
  std::vector<WeylTerm> terms;
};

struct ConnectionOptions {
  HcPolicy policy;
  /// Terms with |c| < skip_threshold * max|c| are left out of the sum.
  double skip_threshold = 1e-14;
  /// Restrict the sum to the minimal coset representatives of S_{n-1} \ S_n.
  bool coset_reps_only = false;
};

/// F(lambda, k; z) = sum_w c(w lambda, k) Phi(w lambda, k; z) at every z of
/// the batch. NonGeneric for non-generic lambda, SingularParameter for k in S.
///
/// Generic lambda can still sit on a resonance hyperplane of some Phi(w lambda)
/// (rational k does this); the single terms are then undefined while F is
/// not. F is then the mean of the sum over a small complex circle around
/// lambda, exact for a function holomorphic in lambda up to the 8th Taylor
/// order along the circle.
std::vector<ConnectionValue> ho_F_connection_batch(const Weight& lambda, Complex k,
                                                   std::span<const ChamberPoint> zs,
                                                   const ConnectionOptions& opts = {});
std::vector<ConnectionValue> ho_F_connection_batch(const QuadWeight& lambda, Complex k,
                                                   std::span<const ChamberPoint> zs,
                                                   const ConnectionOptions& opts = {});
Complex ho_F_connection(const Weight& lambda, Complex k, const ChamberPoint& z,
                        int max_height = 0);

/// (y_1 ... y_{n-1})^{-nu/n} F_D(-nu, k, ..., k, nk; 1 - y_1, ..., 1 - y_{n-1}),
/// y_i = z_i / z_n, on all of R^n_{>0} (the expression is homogeneous of
/// degree 0). With `reorder` the largest coordinate is moved last first,
/// which keeps every |1 - y_i| < 1; without it the caller's order is used.
template <class Real>
SeriesValueT<Real> ho_F_degenerate_eval(int n, std::complex<Real> nu, std::complex<Real> k,
                                        std::span<const Real> z, const Tolerance& tol = {},
                                        bool reorder = true);
Complex ho_F_degenerate(int n, Complex nu, Complex k, const ChamberPoint& z,
                        const Tolerance& tol = {});

/// Exact F_D parameters and arguments used by ho_F_degenerate:
/// alpha = -nu, betas = (k, ..., k), gamma = nk.
SeriesParams degenerate_params(int n, Complex nu, Complex k);

/// Finite-difference residuals at a positive point z (not necessarily in A):
///   delta_ij:  Delta_ij phi + nu(nu + nk)/n^2 phi
///   casimir:   (sum_{i<j} theta_i theta_j - k/2 (z_i+z_j)/(z_i-z_j)(theta_i - theta_j)) phi
///              + (n-1) nu (nu + nk)/(2n) phi
///   lk:        L(k) phi - ((lambda, lambda) - (rho, rho)) phi
template <class Real>
std::complex<Real> delta_ij_residual(int n, std::complex<Real> nu, std::complex<Real> k,
                                     const ScalarField<Real>& phi, std::span<const Real> z,
                                     std::size_t i, std::size_t j, Real h = Real(0));
template <class Real>
std::complex<Real> casimir_residual(int n, std::complex<Real> nu, std::complex<Real> k,
                                    const ScalarField<Real>& phi, std::span<const Real> z,
                                    Real h = Real(0));
template <class Real>
std::complex<Real> lk_residual(const Weight& lambda, std::complex<Real> k,
                               const ScalarField<Real>& phi, std::span<const Real> z,
                               Real h = Real(0));

}  // namespace hofd
