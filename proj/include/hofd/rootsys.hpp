#pragma once

// Type A_{n-1} combinatorics in the GL picture: weights are n-vectors with
// zero sum, roots are e_j - e_i, and the Weyl group S_n permutes entries.
// Indices are 0-based throughout the C++ interface.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hofd/rational.hpp"

namespace hofd {

using Complex = std::complex<double>;

/// A point of the complexified dual Cartan subalgebra, stored as n complex
/// entries whose sum vanishes.
class Weight {
 public:
  Weight() = default;
  /// Throws InvalidArgument if the entries do not sum to zero within `tol`.
  explicit Weight(std::vector<Complex> entries, double tol = 1e-12);

  std::size_t size() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;

 private:
  std::vector<Complex> entries_;
};

/// Bilinear (not Hermitian) form sum_i a_i b_i.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
inline Complex inner(const Weight& a, const Weight& b) {
  return inner(a.entries(), b.entries());
}

/// An element of Q_+, the nonnegative integer span of {e_j - e_i : i < j}.
/// Membership: zero total and every prefix sum <= 0.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<int> entries);

  static LatticeVector from_simple_coords(std::span<const int> coords);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Coordinates c_i in the simple roots e_{i+1} - e_i (c_i = -prefix sum).
  std::vector<int> simple_coords() const;
  int height() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Weakly decreasing nonnegative parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const;
  std::span<const int> parts() const noexcept { return parts_; }
  /// Part i, or 0 beyond the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::vector<int> padded(std::size_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A bijection of {0, ..., n-1}; w(i) = images[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// Number of inversions, i.e. the Coxeter length.
  int length() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// rho(k) = (-(n-1)k/2, -(n-3)k/2, ..., (n-1)k/2).
Weight rho(int n, Complex k);
std::vector<Rational> rho_exact(int n, const Rational& k);

/// lambda(nu, k) = (-nu/n, ..., -nu/n, (n-1)nu/n) + rho(k).
Weight degenerate_lambda(int n, Complex nu, Complex k);
std::vector<Rational> degenerate_lambda_exact(int n, const Rational& nu,
                                              const Rational& k);

/// (w lambda)_i = lambda_{w^{-1}(i)}.
Weight weyl_act(const Permutation& w, const Weight& lambda);
template <class T>
std::vector<T> weyl_act(const Permutation& w, std::span<const T> v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[w(i)] = v[i];
  return out;
}

/// Minimal-length representatives w_1 = e, ..., w_n of S_{n-1} \ S_n, where
/// S_{n-1} permutes the first n-1 letters. w_i sends the last letter to
/// position n-i (0-based) and is increasing on the others, so
/// w_i lambda inserts lambda_n at that position. length(w_i) = i - 1.
std::vector<Permutation> min_coset_reps(int n);

/// All n! permutations in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int n);

/// All mu in Q_+ of height <= max_height, sorted by height and then
/// lexicographically on the entries.
std::vector<LatticeVector> qplus_enumerate(int n, int max_height);

/// True iff no difference lambda_i - lambda_j lies within `tol` of an integer.
bool is_generic(const Weight& lambda, double tol = 1e-9);

/// Dominance order; partitions of different weight are incomparable.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// pi(lambda) = lambda - (|lambda|/n)(1, ..., 1).
Weight pi_map(const Partition& lambda, int n);

/// All partitions of `weight` with at most `max_length` parts, in
/// lexicographically decreasing order (a linear extension of dominance).
std::vector<Partition> partitions_of(int weight, int max_length);

}  // namespace hofd
