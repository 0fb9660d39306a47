#include "hofd/hoseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

namespace hofd {

namespace {

constexpr double kResonanceTol = 1e-10;
// A connection term this close to resonance is replaced by the circle mean.
constexpr double kNearResonance = 1e-7;
constexpr double kRegularMargin = 1e-6;
constexpr int kCirclePoints = 8;
constexpr double kCircleRadius = 0.05;
constexpr double kPi = 3.14159265358979323846;

void require_rank(int n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "rank must satisfy n >= 2, got n = " + std::to_string(n));
  }
}

Complex as_complex(double v) { return {v, 0.0}; }
Complex as_complex(const Complex& v) { return v; }
Complex as_complex(const Rational& v) { return {v.get_d(), 0.0}; }
Complex as_complex(Quad v) { return {static_cast<double>(v), 0.0}; }
Complex as_complex(const ComplexQuad& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::string lattice_string(std::span<const int> mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

bool vanishes(double v) { return std::abs(v) < kResonanceTol; }
bool vanishes(const Complex& v) { return std::abs(v) < kResonanceTol; }
bool vanishes(const Rational& v) { return v == 0; }
template <class T>
bool vanishes(const T& v) { return std::abs(as_complex(v)) < kResonanceTol; }

void require_chamber(std::span<const double> z, std::size_t n) {
  if (z.size() != n) {
    throw Error(ErrorKind::InvalidDimension, "point has " + std::to_string(z.size()) +
                                                 " coordinates, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(z[i] > 0.0 && z[i] < z[i + 1])) {
      throw Error(ErrorKind::Domain, "point is not in the chamber A_+ (z_0 < ... < z_{n-1})");
    }
  }
}

// z^{lambda - rho} with principal powers of positive reals.
Complex leading_power(std::span<const Complex> shift, std::span<const double> z) {
  Complex e = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) e += shift[i] * std::log(z[i]);
  return std::exp(e);
}

// Powers pw[i][c] = (z_i / z_{i+1})^c for c <= h.
struct RatioPowers {
  std::vector<std::vector<double>> pw;

  RatioPowers(std::span<const double> z, int h) : pw(z.size() - 1) {
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
      const double r = z[i] / z[i + 1];
      pw[i].assign(1, 1.0);
      grow_one(i, r, h);
    }
  }
  void grow(std::span<const double> z, int h) {
    for (std::size_t i = 0; i < pw.size(); ++i) grow_one(i, z[i] / z[i + 1], h);
  }
  void grow_one(std::size_t i, double r, int h) {
    while (static_cast<int>(pw[i].size()) <= h) pw[i].push_back(pw[i].back() * r);
  }
};

// Sum and absolute sum of one height block against z^{-mu}.
template <class S>
std::pair<Complex, double> block_sum(std::span<const S> coeffs, const RatioPowers& p, int h) {
  const int m = static_cast<int>(p.pw.size());
  Complex sum = 0.0;
  double mag = 0.0;
  std::size_t pos = 0;
  auto rec = [&](auto&& self, int i, int remaining, double prod) -> void {
    if (i == m - 1) {
      const Complex t = as_complex(coeffs[pos++]) * (prod * p.pw[i][remaining]);
      sum += t;
      mag += std::abs(t);
      return;
    }
    for (int v = 0; v <= remaining; ++v) self(self, i + 1, remaining - v, prod * p.pw[i][v]);
  };
  rec(rec, 0, h, 1.0);
  return {sum, mag};
}

template <class S>
std::vector<Complex> shift_of(const HcCoeffTableT<S>& t) {
  const int n = t.n();
  std::vector<Complex> out(n);
  const Complex k = as_complex(t.k());
  for (int i = 0; i < n; ++i) {
    out[i] = as_complex(t.lambda()[i]) - k * (2.0 * i - (n - 1)) / 2.0;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ChamberPoint::ChamberPoint(std::vector<double> z, Region region, double tol)
    : z_(std::move(z)), region_(region) {
  if (z_.size() < 2) throw Error(ErrorKind::InvalidDimension, "a point needs n >= 2 coordinates");
  double log_prod = 0.0;
  for (double v : z_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::Domain, "coordinates must be positive and finite");
    }
    log_prod += std::log(v);
  }
  if (std::abs(std::expm1(log_prod)) > tol) {
    throw Error(ErrorKind::Domain, "coordinates must multiply to 1");
  }
  if (region_ == Region::APlus) require_chamber(z_, z_.size());
}

ChamberPoint ChamberPoint::normalized(std::vector<double> z, Region region) {
  double log_prod = 0.0;
  for (double v : z) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::Domain, "coordinates must be positive and finite");
    }
    log_prod += std::log(v);
  }
  const double g = std::exp(log_prod / static_cast<double>(z.size()));
  for (double& v : z) v /= g;
  return ChamberPoint(std::move(z), region, 1e-12);
}

double ChamberPoint::max_ratio() const {
  double r = 0.0;
  for (std::size_t i = 0; i + 1 < z_.size(); ++i) r = std::max(r, z_[i] / z_[i + 1]);
  return r;
}

// ---------------------------------------------------------------------------

QPlusIndex::QPlusIndex(int n) : m_(n - 1) {
  require_rank(n);
  reserve_height(8);
}

void QPlusIndex::reserve_height(int h) {
  if (h <= reserved_) return;
  const int top = h + m_ + 2;
  const int start = static_cast<int>(binom_.size());
  binom_.resize(top + 1);
  for (int a = start; a <= top; ++a) {
    binom_[a].assign(m_ + 2, 0);
    binom_[a][0] = 1;
    for (int b = 1; b <= std::min(a, m_ + 1); ++b) {
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
  reserved_ = h;
}

std::uint64_t QPlusIndex::binom(int a, int b) const {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a < static_cast<int>(binom_.size()) && b <= m_ + 1) return binom_[a][b];
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / i;
  return r;
}

std::size_t QPlusIndex::count(int h) const { return binom(h + m_ - 1, m_ - 1); }

std::size_t QPlusIndex::offset(int h) const { return h == 0 ? 0 : binom(h - 1 + m_, m_); }

std::size_t QPlusIndex::rank_in_height(std::span<const int> c, int h) const {
  if (h > reserved_) throw Error(ErrorKind::InvalidArgument, "height above the reserved index");
  std::size_t rank = 0;
  int r = h;
  for (int i = 0; i + 1 < m_; ++i) {
    const int q = m_ - 1 - i;
    // Both arguments stay inside the reserved table.
    rank += binom_[r + q][q] - binom_[r - c[i] + q][q];
    r -= c[i];
  }
  return rank;
}

// ---------------------------------------------------------------------------

template <class S>
HcCoeffTableT<S>::HcCoeffTableT(std::vector<S> lambda, S k, int max_height)
    : n_(static_cast<int>(lambda.size())),
      m_(n_ - 1),
      lambda_(std::move(lambda)),
      k_(std::move(k)),
      index_(std::max(n_, 2)) {
  require_rank(n_);
  if (max_height < 0) throw Error(ErrorKind::InvalidArgument, "max_height must be >= 0");
  for (int i = 0; i < n_; ++i) {
    shift_.push_back(lambda_[i] - k_ * S(2 * i - (n_ - 1)) / S(2));
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) roots_.emplace_back(i, j);
  string_sum_.resize(n_);
  extend(max_height);
}

template <class S>
void HcCoeffTableT<S>::extend(int max_height) {
  if (max_height <= height_) return;
  index_.reserve_height(max_height);
  coeffs_.reserve(index_.offset(max_height + 1));
  for (int h = height_ + 1; h <= max_height; ++h) {
    compute_height(h);
    height_ = h;
  }
}

template <class S>
void HcCoeffTableT<S>::compute_height(int h) {
  const std::size_t nroots = roots_.size();
  const std::size_t cnt = index_.count(h);
  auto& sums = string_sum_[h % n_];
  sums.assign(cnt * nroots, S(0));
  if (h == 0) {
    coeffs_.push_back(S(1));
    return;
  }
  const bool trivial = k_ == S(0);
  std::vector<int> mu(n_), prev(m_);
  std::size_t rank = 0;
  index_.for_each(h, [&](std::span<const int> c) {
    mu[0] = -c[0];
    for (int i = 1; i < m_; ++i) mu[i] = c[i - 1] - c[i];
    mu[m_] = c[m_ - 1];
    int mm = 0;
    S lm(0);
    for (int i = 0; i < n_; ++i) {
      mm += mu[i] * mu[i];
      lm += lambda_[i] * S(mu[i]);
    }
    S acc(0);
    for (std::size_t r = 0; r < nroots; ++r) {
      const auto [i, j] = roots_[r];
      bool inside = true;
      for (int l = i; l < j; ++l) inside = inside && c[l] >= 1;
      if (!inside) continue;
      std::copy(c.begin(), c.end(), prev.begin());
      for (int l = i; l < j; ++l) --prev[l];
      const int hp = h - (j - i);
      const std::size_t pr = index_.rank_in_height(prev, hp);
      const std::size_t at = pr * nroots + r;
      const S& g = coeffs_[index_.offset(hp) + pr];
      // mu - alpha has (mu - alpha)_j - (mu - alpha)_i = mu_j - mu_i - 2.
      const S t = g * (shift_[j] - shift_[i] - S(mu[j] - mu[i] - 2)) + string_sum_[hp % n_][at];
      acc += t;
      sums[rank * nroots + r] = t;
    }
    if (trivial) {
      coeffs_.push_back(S(0));
    } else {
      const S den = S(mm) - S(2) * lm;
      min_den_ = std::min(min_den_, std::abs(as_complex(den)));
      if (vanishes(den)) {
        throw Error(ErrorKind::Resonance,
                    "lambda lies on the resonance hyperplane of mu = " + lattice_string(mu));
      }
      coeffs_.push_back(S(-2) * k_ * acc / den);
    }
    ++rank;
  });
}

template <class S>
const S& HcCoeffTableT<S>::coefficient(const LatticeVector& mu) const {
  if (static_cast<int>(mu.size()) != n_) {
    throw Error(ErrorKind::InvalidDimension, "lattice vector has the wrong length");
  }
  const auto c = mu.simple_coords();
  const int h = mu.height();
  if (h > height_) {
    throw Error(ErrorKind::InvalidArgument, "mu is above the table height " +
                                                std::to_string(height_));
  }
  return coeffs_[index_.offset(h) + index_.rank_in_height(c, h)];
}

template <class S>
std::span<const S> HcCoeffTableT<S>::block(int h) const {
  if (h < 0 || h > height_) throw Error(ErrorKind::InvalidArgument, "height outside the table");
  return {coeffs_.data() + index_.offset(h), index_.count(h)};
}

template class HcCoeffTableT<double>;
template class HcCoeffTableT<Complex>;
template class HcCoeffTableT<Quad>;
template class HcCoeffTableT<ComplexQuad>;
template class HcCoeffTableT<Rational>;

HcCoeffTable hc_coefficients(const Weight& lambda, Complex k, int max_height) {
  return HcCoeffTable(std::vector<Complex>(lambda.entries().begin(), lambda.entries().end()), k,
                      max_height);
}

HcCoeffTableT<Rational> hc_coefficients_exact(std::span<const Rational> lambda,
                                              const Rational& k, int max_height) {
  Rational sum = 0;
  for (const auto& v : lambda) sum += v;
  if (sum != 0) throw Error(ErrorKind::InvalidArgument, "weight entries must sum to zero");
  return HcCoeffTableT<Rational>(std::vector<Rational>(lambda.begin(), lambda.end()), k,
                                 max_height);
}

// ---------------------------------------------------------------------------

template <class S>
SeriesResult hc_series_eval(const HcCoeffTableT<S>& table, const ChamberPoint& z) {
  require_chamber(z.coords(), table.n());
  const int H = table.max_height();
  RatioPowers powers(z.coords(), H);
  Complex sum = 0.0;
  double last = 0.0, before = 0.0;
  for (int h = 0; h <= H; ++h) {
    const auto [s, mag] = block_sum(table.block(h), powers, h);
    sum += s;
    before = last;
    last = mag;
  }
  const double tail = last + (H > 0 ? before : 0.0);
  if (H > 0 && tail > std::abs(sum)) {
    throw Error(ErrorKind::NonConvergence,
                "Harish-Chandra series is not decaying at height " + std::to_string(H));
  }
  const Complex lead = leading_power(shift_of(table), z.coords());
  return {lead * sum, H, std::abs(lead) * tail};
}

template SeriesResult hc_series_eval(const HcCoeffTableT<double>&, const ChamberPoint&);
template SeriesResult hc_series_eval(const HcCoeffTableT<Complex>&, const ChamberPoint&);
template SeriesResult hc_series_eval(const HcCoeffTableT<Rational>&, const ChamberPoint&);

QuadWeight to_quad(const Weight& lambda) {
  QuadWeight out;
  for (const auto& v : lambda.entries()) out.emplace_back(v.real(), v.imag());
  return out;
}

QuadWeight degenerate_lambda_quad(int n, Complex nu, Complex k) {
  require_rank(n);
  const ComplexQuad nq(nu.real(), nu.imag()), kq(k.real(), k.imag());
  QuadWeight out(n);
  for (int i = 0; i < n; ++i) out[i] = kq * Quad(2 * i - (n - 1)) / Quad(2) - nq / Quad(n);
  out[n - 1] += nq;
  return out;
}

namespace {

using AnyTable = std::variant<HcCoeffTableT<double>, HcCoeffTableT<Complex>, HcCoeffTableT<Quad>,
                              HcCoeffTableT<ComplexQuad>>;

AnyTable make_table(const QuadWeight& lambda, Complex k, const HcPolicy& policy) {
  const int n = static_cast<int>(lambda.size());
  require_rank(n);
  const int start = std::min(policy.min_height, policy.max_height);
  const bool quad = policy.precision == HcPrecision::Quad ||
                    (policy.precision == HcPrecision::Auto && n >= 3);
  bool real = k.imag() == 0.0;
  for (const auto& v : lambda) real = real && v.imag() == 0;
  auto build = [&](auto tag) -> AnyTable {
    using S = decltype(tag);
    std::vector<S> lam;
    S kk;
    if constexpr (std::is_same_v<S, ComplexQuad>) {
      lam = lambda;
      kk = S(k.real(), k.imag());
    } else if constexpr (std::is_same_v<S, Complex>) {
      for (const auto& v : lambda) lam.push_back(as_complex(v));
      kk = k;
    } else {
      for (const auto& v : lambda) lam.push_back(static_cast<S>(v.real()));
      kk = static_cast<S>(k.real());
    }
    return HcCoeffTableT<S>(std::move(lam), kk, start);
  };
  if (real) return quad ? build(Quad{}) : build(double{});
  return quad ? build(ComplexQuad{}) : build(Complex{});
}

}  // namespace

HarishChandraSeries::HarishChandraSeries(const Weight& lambda, Complex k, HcPolicy policy)
    : HarishChandraSeries(to_quad(lambda), k, policy) {}

HarishChandraSeries::HarishChandraSeries(const QuadWeight& lambda, Complex k, HcPolicy policy)
    : policy_(policy), table_(make_table(lambda, k, policy)) {
  policy_.tol.validate();
}

int HarishChandraSeries::table_height() const {
  return std::visit([](const auto& t) { return t.max_height(); }, table_);
}

double HarishChandraSeries::min_denominator() const {
  return std::visit([](const auto& t) { return t.min_denominator(); }, table_);
}

SeriesResult HarishChandraSeries::evaluate(const ChamberPoint& z) {
  return std::visit([&](auto& t) { return evaluate_with(t, z); }, table_);
}

template <class S>
SeriesResult HarishChandraSeries::evaluate_with(HcCoeffTableT<S>& table, const ChamberPoint& z) {
  require_chamber(z.coords(), table.n());
  if (z.max_ratio() > policy_.ratio_bound) {
    throw Error(ErrorKind::Domain, "consecutive ratio " + std::to_string(z.max_ratio()) +
                                       " exceeds the series bound " +
                                       std::to_string(policy_.ratio_bound));
  }
  RatioPowers powers(z.coords(), table.max_height());
  Complex sum = 0.0;
  double last = 0.0, before = 0.0;
  for (int h = 0;; ++h) {
    if (h > table.max_height()) {
      // Extension is incremental, so small steps only cost what is used.
      int target = std::min(std::max(table.max_height() + std::max(8, table.max_height() / 4),
                                     policy_.min_height),
                            policy_.max_height);
      while (target > table.max_height() &&
             table.index().offset(target + 1) > policy_.max_coefficients) {
        --target;
      }
      if (target <= table.max_height()) {
        throw Error(ErrorKind::NonConvergence,
                    "Harish-Chandra series did not converge by height " +
                        std::to_string(table.max_height()));
      }
      table.extend(target);
      powers.grow(z.coords(), target);
    }
    const auto [s, mag] = block_sum(table.block(h), powers, h);
    sum += s;
    before = last;
    last = mag;
    if (h >= policy_.min_height &&
        last + before <= policy_.tol.abs_tol + policy_.tol.rel_tol * std::abs(sum)) {
      const Complex lead = leading_power(shift_of(table), z.coords());
      return {lead * sum, h, std::abs(lead) * (last + before)};
    }
  }
}

Complex hc_truncation_residual(const HcCoeffTableT<Complex>& table, const ChamberPoint& z) {
  const int n = table.n();
  require_chamber(z.coords(), n);
  const auto shift = shift_of(table);
  const Complex k = table.k();
  Complex eig = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex rho_i = k * (2.0 * i - (n - 1)) / 2.0;
    eig += table.lambda()[i] * table.lambda()[i] - rho_i * rho_i;
  }
  std::vector<double> logz(n);
  for (int i = 0; i < n; ++i) logz[i] = std::log(z[i]);
  Complex total = 0.0;
  std::vector<int> mu(n);
  std::vector<Complex> e(n);
  for (int h = 0; h <= table.max_height(); ++h) {
    const auto coeffs = table.block(h);
    std::size_t pos = 0;
    table.index().for_each(h, [&](std::span<const int> c) {
      mu[0] = -c[0];
      for (int i = 1; i + 1 < n; ++i) mu[i] = c[i - 1] - c[i];
      mu[n - 1] = c[n - 2];
      Complex ee = 0.0, expo = 0.0;
      for (int i = 0; i < n; ++i) {
        e[i] = shift[i] - static_cast<double>(mu[i]);
        ee += e[i] * e[i];
        expo += e[i] * logz[i];
      }
      Complex cross = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cross += (z[i] + z[j]) / (z[i] - z[j]) * (e[i] - e[j]);
      total += coeffs[pos++] * std::exp(expo) * (ee + k * cross - eig);
    });
  }
  return total;
}

// ---------------------------------------------------------------------------

Complex c_tilde(const QuadWeight& lambda, Complex k) {
  const std::size_t n = lambda.size();
  const ComplexQuad kq(k.real(), k.imag());
  Complex prod = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Both Gamma arguments are formed before rounding, so an integral
      // lambda_j - lambda_i + k reaches rgamma exactly.
      const Complex d = as_complex(lambda[j] - lambda[i]);
      if (near_nonpositive_integer(d, 1e-12)) {
        throw Error(ErrorKind::Pole, "Gamma(lambda_j - lambda_i) has a pole for the pair (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      prod *= gamma(d) * rgamma(as_complex(lambda[j] - lambda[i] + kq));
    }
  }
  return prod;
}

Complex c_tilde(const Weight& lambda, Complex k) { return c_tilde(to_quad(lambda), k); }

bool singular_set_contains(Complex k, int n) {
  constexpr double tol = 1e-9;
  if (near_integer(k, tol) && std::round(k.real()) < 0.0) return false;
  for (int j = 2; j <= n; ++j) {
    const Complex jk = static_cast<double>(j) * k;
    if (near_integer(jk, tol) && std::round(jk.real()) < 0.0) return true;
  }
  return false;
}

Complex c_func(const Weight& lambda, Complex k) { return c_func(to_quad(lambda), k); }

Complex c_func(const QuadWeight& lambda, Complex k) {
  const int n = static_cast<int>(lambda.size());
  require_rank(n);
  if (singular_set_contains(k, n)) {
    throw Error(ErrorKind::SingularParameter, "k lies in the singular set of the c-function");
  }
  const Complex num = c_tilde(lambda, k);
  if (std::abs(k) < 1e-300) {
    // c_tilde(rho(k), k) -> n! as k -> 0.
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    return num / fact;
  }
  Complex den = 1.0;
  for (int j = 2; j <= n; ++j) den *= gamma(k) * rgamma(static_cast<double>(j) * k);
  return num / den;
}

namespace {

// One pass of the Weyl sum. With strict set, a term whose recursion came
// within kNearResonance of a zero denominator throws Resonance.
std::vector<ConnectionValue> weyl_sum(const QuadWeight& lambda, Complex k,
                                      std::span<const ChamberPoint> zs,
                                      const ConnectionOptions& opts, bool strict) {
  const int n = static_cast<int>(lambda.size());
  const auto ws = opts.coset_reps_only ? min_coset_reps(n) : all_permutations(n);
  std::vector<QuadWeight> wl;
  std::vector<WeylTerm> terms;
  double cmax = 0.0;
  for (const auto& w : ws) {
    wl.push_back(weyl_act<ComplexQuad>(w, lambda));
    std::vector<Complex> rounded;
    for (const auto& v : wl.back()) rounded.push_back(as_complex(v));
    WeylTerm t{w, Weight(std::move(rounded), 1e-9), 0.0, 0.0, 0.0, false, 0};
    t.c = c_func(wl.back(), k);
    cmax = std::max(cmax, std::abs(t.c));
    terms.push_back(std::move(t));
  }
  std::vector<ConnectionValue> out(zs.size());
  for (auto& v : out) v.value = 0.0;
  for (std::size_t at = 0; at < terms.size(); ++at) {
    const WeylTerm& proto = terms[at];
    const bool skip = std::abs(proto.c) < opts.skip_threshold * cmax;
    // A term whose c is negligible only needs double coefficients.
    HcPolicy policy = opts.policy;
    if (policy.precision == HcPrecision::Auto && std::abs(proto.c) < 1e-8 * cmax) {
      policy.precision = HcPrecision::Double;
    }
    std::optional<HarishChandraSeries> series;
    if (!skip) series.emplace(wl[at], k, policy);
    for (std::size_t p = 0; p < zs.size(); ++p) {
      WeylTerm t = proto;
      t.skipped = skip;
      if (!skip) {
        const auto r = series->evaluate(zs[p]);
        if (strict && series->min_denominator() < kNearResonance) {
          throw Error(ErrorKind::Resonance, "a Weyl term passes within " +
                                                std::to_string(kNearResonance) +
                                                " of a resonance hyperplane");
        }
        t.phi = r.value;
        t.contribution = t.c * t.phi;
        t.height = r.height;
        out[p].value += t.contribution;
        out[p].height = std::max(out[p].height, r.height);
      }
      out[p].terms.push_back(std::move(t));
    }
  }
  return out;
}

// Mean of the Weyl sum over lambda + r e^{i theta} v, with theta off the real
// axis so that for real lambda and k conjugate points share one evaluation.
std::vector<ConnectionValue> circle_mean(const QuadWeight& lambda, Complex k,
                                         std::span<const ChamberPoint> zs,
                                         const ConnectionOptions& opts) {
  const int n = static_cast<int>(lambda.size());
  // sqrt of distinct primes: (v, mu) != 0 for every nonzero mu in the root lattice.
  constexpr double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n > static_cast<int>(std::size(primes))) {
    throw Error(ErrorKind::Resonance, "no regularizing direction for n > 12");
  }
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::sqrt(primes[i]);
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  for (auto& x : v) x -= mean;

  bool real = k.imag() == 0.0;
  for (const auto& x : lambda) real = real && x.imag() == 0;
  const int evals = real ? kCirclePoints / 2 : kCirclePoints;
  const double weight = (real ? 2.0 : 1.0) / kCirclePoints;
  auto fold = [&](Complex x) { return weight * (real ? Complex(x.real(), 0.0) : x); };

  std::vector<ConnectionValue> out;
  for (int j = 0; j < evals; ++j) {
    const Complex w = std::polar(kCircleRadius, 2.0 * kPi * (j + 0.5) / kCirclePoints);
    QuadWeight lam = lambda;
    for (int i = 0; i < n; ++i) lam[i] += ComplexQuad(w.real() * v[i], w.imag() * v[i]);
    auto vals = weyl_sum(lam, k, zs, opts, false);
    for (auto& val : vals) {
      val.value = fold(val.value);
      for (auto& t : val.terms) t.contribution = fold(t.contribution);
    }
    if (j == 0) {
      out = std::move(vals);
      continue;
    }
    for (std::size_t p = 0; p < out.size(); ++p) {
      out[p].value += vals[p].value;
      out[p].height = std::max(out[p].height, vals[p].height);
      for (std::size_t t = 0; t < out[p].terms.size(); ++t)
        out[p].terms[t].contribution += vals[p].terms[t].contribution;
    }
  }
  // Terms report the unperturbed lambda and c; Phi itself is undefined here.
  for (auto& val : out) {
    for (auto& term : val.terms) {
      const auto wl = weyl_act<ComplexQuad>(term.w, lambda);
      std::vector<Complex> rounded;
      for (const auto& x : wl) rounded.push_back(as_complex(x));
      term.lambda = Weight(std::move(rounded), 1e-9);
      term.c = c_func(wl, k);
      term.phi = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

}  // namespace

std::vector<ConnectionValue> ho_F_connection_batch(const QuadWeight& lambda, Complex k,
                                                   std::span<const ChamberPoint> zs,
                                                   const ConnectionOptions& opts) {
  const int n = static_cast<int>(lambda.size());
  require_rank(n);
  std::vector<Complex> rounded;
  for (const auto& x : lambda) rounded.push_back(as_complex(x));
  const Weight plain(std::move(rounded), 1e-9);
  if (!is_generic(plain)) {
    throw Error(ErrorKind::NonGeneric, "lambda is not generic: some lambda_i - lambda_j is an integer");
  }
  if (singular_set_contains(k, n)) {
    throw Error(ErrorKind::SingularParameter, "k lies in the singular set of the c-function");
  }
  for (const auto& z : zs) require_chamber(z.coords(), n);
  try {
    return weyl_sum(lambda, k, zs, opts, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Resonance || !is_generic(plain, kRegularMargin)) throw;
  }
  return circle_mean(lambda, k, zs, opts);
}

std::vector<ConnectionValue> ho_F_connection_batch(const Weight& lambda, Complex k,
                                                   std::span<const ChamberPoint> zs,
                                                   const ConnectionOptions& opts) {
  return ho_F_connection_batch(to_quad(lambda), k, zs, opts);
}

Complex ho_F_connection(const Weight& lambda, Complex k, const ChamberPoint& z, int max_height) {
  ConnectionOptions opts;
  if (max_height > 0) opts.policy.max_height = max_height;
  return ho_F_connection_batch(lambda, k, std::span<const ChamberPoint>(&z, 1), opts)
      .front()
      .value;
}

// ---------------------------------------------------------------------------

SeriesParams degenerate_params(int n, Complex nu, Complex k) {
  require_rank(n);
  return {-nu, std::vector<Complex>(n - 1, k), static_cast<double>(n) * k};
}

template <class Real>
SeriesValueT<Real> ho_F_degenerate_eval(int n, std::complex<Real> nu, std::complex<Real> k,
                                        std::span<const Real> z, const Tolerance& tol,
                                        bool reorder) {
  using C = std::complex<Real>;
  require_rank(n);
  if (static_cast<int>(z.size()) != n) {
    throw Error(ErrorKind::InvalidDimension, "point has the wrong number of coordinates");
  }
  for (const Real v : z) {
    if (!(v > Real(0))) throw Error(ErrorKind::Domain, "coordinates must be positive");
  }
  const Complex kd(static_cast<double>(k.real()), static_cast<double>(k.imag()));
  if (singular_set_contains(kd, n)) {
    throw Error(ErrorKind::SingularParameter, "k lies in the singular set of the c-function");
  }
  std::vector<Real> w(z.begin(), z.end());
  if (reorder) {
    const auto top = std::max_element(w.begin(), w.end());
    std::iter_swap(top, w.end() - 1);
  }
  SeriesParamsT<Real> p{-nu, std::vector<C>(n - 1, k), static_cast<Real>(n) * k};
  std::vector<C> x(n - 1);
  Real log_prod = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const Real y = w[i] / w[n - 1];
    x[i] = C(Real(1) - y);
    log_prod += std::log(y);
  }
  auto r = fd_series_eval<Real>(p, x, tol);
  const C pref = std::exp(-nu / static_cast<Real>(n) * log_prod);
  r.value *= pref;
  r.tail *= static_cast<double>(std::abs(pref));
  return r;
}

template SeriesValueT<double> ho_F_degenerate_eval(int, std::complex<double>,
                                                   std::complex<double>, std::span<const double>,
                                                   const Tolerance&, bool);
template SeriesValueT<long double> ho_F_degenerate_eval(int, std::complex<long double>,
                                                        std::complex<long double>,
                                                        std::span<const long double>,
                                                        const Tolerance&, bool);

Complex ho_F_degenerate(int n, Complex nu, Complex k, const ChamberPoint& z, const Tolerance& tol) {
  return ho_F_degenerate_eval<double>(n, nu, k, z.coords(), tol, true).value;
}

// ---------------------------------------------------------------------------

template <class Real>
std::complex<Real> delta_ij_residual(int n, std::complex<Real> nu, std::complex<Real> k,
                                     const ScalarField<Real>& phi, std::span<const Real> z,
                                     std::size_t i, std::size_t j, Real h) {
  if (!(i < j && j < z.size())) {
    throw Error(ErrorKind::InvalidArgument, "delta_ij needs i < j < n");
  }
  const Real nn = static_cast<Real>(n);
  const auto f = phi(z);
  const auto ti = theta_apply_fd<Real>(phi, z, i, h);
  const auto tj = theta_apply_fd<Real>(phi, z, j, h);
  const auto tij = theta2_apply_fd<Real>(phi, z, i, j, h);
  const Real cot = (z[i] + z[j]) / (z[i] - z[j]);
  return tij - k / Real(2) * cot * (ti - tj) + (nu / nn + k / Real(2)) * (ti + tj) +
         nu * (nu + nn * k) / (nn * nn) * f;
}

template <class Real>
std::complex<Real> casimir_residual(int n, std::complex<Real> nu, std::complex<Real> k,
                                    const ScalarField<Real>& phi, std::span<const Real> z,
                                    Real h) {
  const Real nn = static_cast<Real>(n);
  const auto f = phi(z);
  std::vector<std::complex<Real>> t(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) t[i] = theta_apply_fd<Real>(phi, z, i, h);
  std::complex<Real> s(0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const Real cot = (z[i] + z[j]) / (z[i] - z[j]);
      s += theta2_apply_fd<Real>(phi, z, i, j, h) - k / Real(2) * cot * (t[i] - t[j]);
    }
  }
  return s + (nn - Real(1)) * nu * (nu + nn * k) / (Real(2) * nn) * f;
}

template <class Real>
std::complex<Real> lk_residual(const Weight& lambda, std::complex<Real> k,
                               const ScalarField<Real>& phi, std::span<const Real> z, Real h) {
  using C = std::complex<Real>;
  const std::size_t n = lambda.size();
  if (z.size() != n) throw Error(ErrorKind::InvalidDimension, "point has the wrong size");
  C eig(0);
  for (std::size_t i = 0; i < n; ++i) {
    const C li(static_cast<Real>(lambda[i].real()), static_cast<Real>(lambda[i].imag()));
    const C ri = k * static_cast<Real>(2.0 * static_cast<double>(i) - static_cast<double>(n - 1)) /
                 Real(2);
    eig += li * li - ri * ri;
  }
  const auto f = phi(z);
  std::vector<C> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = theta_apply_fd<Real>(phi, z, i, h);
  C s(0);
  for (std::size_t i = 0; i < n; ++i) s += theta2_apply_fd<Real>(phi, z, i, i, h);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s += k * ((z[i] + z[j]) / (z[i] - z[j])) * (t[i] - t[j]);
    }
  }
  return s - eig * f;
}

#define HOFD_RESIDUALS(Real)                                                                  \
  template std::complex<Real> delta_ij_residual(int, std::complex<Real>, std::complex<Real>,  \
                                                const ScalarField<Real>&,                      \
                                                std::span<const Real>, std::size_t,            \
                                                std::size_t, Real);                            \
  template std::complex<Real> casimir_residual(int, std::complex<Real>, std::complex<Real>,   \
                                               const ScalarField<Real>&,                       \
                                               std::span<const Real>, Real);                   \
  template std::complex<Real> lk_residual(const Weight&, std::complex<Real>,                  \
                                          const ScalarField<Real>&, std::span<const Real>,     \
                                          Real);

HOFD_RESIDUALS(double)
HOFD_RESIDUALS(long double)

#undef HOFD_RESIDUALS

}  // namespace hofd
