#include "hofd/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hofd/error.hpp"

namespace hofd {

namespace {

void require_dimension(int n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "rank must satisfy n >= 2, got n = " + std::to_string(n));
  }
}

double distance_to_integer(Complex x) {
  return std::hypot(x.real() - std::round(x.real()), x.imag());
}

}  // namespace

Weight::Weight(std::vector<Complex> entries, double tol)
    : entries_(std::move(entries)) {
  Complex sum = 0.0;
  double scale = 1.0;
  for (const auto& e : entries_) {
    sum += e;
    scale = std::max(scale, std::abs(e));
  }
  if (std::abs(sum) > tol * scale) {
    throw Error(ErrorKind::InvalidArgument,
                "weight entries must sum to zero (sum = " +
                    std::to_string(std::abs(sum)) + ")");
  }
}

Weight Weight::operator+(const Weight& other) const {
  std::vector<Complex> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other[i];
  return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& other) const {
  std::vector<Complex> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other[i];
  return Weight(std::move(out));
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector::LatticeVector(std::vector<int> entries)
    : entries_(std::move(entries)) {
  int prefix = 0;
  for (int e : entries_) {
    prefix += e;
    if (prefix > 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "lattice vector has a positive prefix sum; not in Q_+");
    }
  }
  if (prefix != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "lattice vector entries must sum to zero");
  }
}

LatticeVector LatticeVector::from_simple_coords(std::span<const int> coords) {
  const std::size_t n = coords.size() + 1;
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    // alpha_i = e_{i+1} - e_i
    e[i] -= coords[i];
    e[i + 1] += coords[i];
  }
  return LatticeVector(std::move(e));
}

std::vector<int> LatticeVector::simple_coords() const {
  std::vector<int> c;
  int prefix = 0;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    prefix += entries_[i];
    c.push_back(-prefix);
  }
  return c;
}

int LatticeVector::height() const {
  auto c = simple_coords();
  return std::accumulate(c.begin(), c.end(), 0);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "partition parts must be nonnegative and weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) {
    throw Error(ErrorKind::InvalidArgument,
                "partition is longer than the number of variables");
  }
  std::vector<int> out(parts_);
  out.resize(n, 0);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "permutation images must be a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  auto p = identity(n);
  std::swap(p.images_.at(i), p.images_.at(j));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other(i)];
  return Permutation(std::move(out));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Weight rho(int n, Complex k) {
  require_dimension(n);
  std::vector<Complex> r(n);
  for (int i = 0; i < n; ++i) r[i] = k * (0.5 * (2 * i - (n - 1)));
  return Weight(std::move(r));
}

std::vector<Rational> rho_exact(int n, const Rational& k) {
  require_dimension(n);
  std::vector<Rational> r(n);
  for (int i = 0; i < n; ++i) r[i] = k * make_rational(2 * i - (n - 1), 2);
  return r;
}

Weight degenerate_lambda(int n, Complex nu, Complex k) {
  auto r = rho(n, k);
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = r[i] - nu / static_cast<double>(n);
  out[n - 1] = r[n - 1] + nu * (static_cast<double>(n - 1) / n);
  return Weight(std::move(out));
}

std::vector<Rational> degenerate_lambda_exact(int n, const Rational& nu,
                                              const Rational& k) {
  auto out = rho_exact(n, k);
  for (int i = 0; i + 1 < n; ++i) out[i] -= nu / n;
  out[n - 1] += nu * make_rational(n - 1, n);
  return out;
}

Weight weyl_act(const Permutation& w, const Weight& lambda) {
  if (w.size() != lambda.size()) {
    throw Error(ErrorKind::InvalidDimension, "permutation and weight sizes differ");
  }
  return Weight(weyl_act<Complex>(w, lambda.entries()));
}

std::vector<Permutation> min_coset_reps(int n) {
  require_dimension(n);
  std::vector<Permutation> reps;
  for (int i = 1; i <= n; ++i) {
    const int slot = n - i;
    std::vector<int> im(n);
    for (int j = 0; j + 1 < n; ++j) im[j] = j < slot ? j : j + 1;
    im[n - 1] = slot;
    reps.emplace_back(std::move(im));
  }
  return reps;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<LatticeVector> qplus_enumerate(int n, int max_height) {
  require_dimension(n);
  if (max_height < 0) {
    throw Error(ErrorKind::InvalidArgument, "max_height must be nonnegative");
  }
  const int m = n - 1;
  std::vector<LatticeVector> out;
  std::vector<int> c(m, 0);
  // Enumerate all weak compositions with sum <= max_height.
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m) {
      out.push_back(LatticeVector::from_simple_coords(c));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    c[pos] = 0;
  };
  recurse(recurse, 0, max_height);
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

bool is_generic(const Weight& lambda, double tol) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      if (distance_to_integer(lambda[i] - lambda[j]) <= tol) return false;
  return true;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) return false;
  const std::size_t len = std::max(mu.length(), lambda.length());
  int smu = 0, slam = 0;
  for (std::size_t j = 0; j < len; ++j) {
    smu += mu.part(j);
    slam += lambda.part(j);
    if (smu > slam) return false;
  }
  return true;
}

Weight pi_map(const Partition& lambda, int n) {
  auto parts = lambda.padded(static_cast<std::size_t>(n));
  const double shift = static_cast<double>(lambda.weight()) / n;
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = parts[i] - shift;
  return Weight(std::move(out));
}

std::vector<Partition> partitions_of(int weight, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  recurse(recurse, weight, weight);
  return out;
}

}  // namespace hofd
