#pragma once

// Exact polynomials over Q in n commuting variables z_0, ..., z_{n-1}.
// MultiPoly is the expanded form that operators act on; SymPoly is the
// monomial-symmetric form that identities are reported in.

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hofd/rational.hpp"
#include "hofd/rootsys.hpp"

namespace hofd {

using Exponent = std::vector<int>;

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t n = 0) : n_(n) {}

  static MultiPoly constant(std::size_t n, const Rational& c);
  static MultiPoly monomial(Exponent e, const Rational& c = 1);
  static MultiPoly variable(std::size_t n, std::size_t i);

  std::size_t nvars() const noexcept { return n_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  /// -1 for the zero polynomial.
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// (w f): the monomial z^e goes to z^{we}, (we)_i = e_{w^{-1}(i)}.
  MultiPoly permuted(const Permutation& w) const;
  /// sigma_ij f: exchange z_i and z_j.
  MultiPoly swapped(std::size_t i, std::size_t j) const;
  /// theta_i f = z_i df/dz_i.
  MultiPoly theta(std::size_t i) const;
  MultiPoly times_variable(std::size_t i, int power = 1) const;
  /// Exact quotient f / (z_i - z_j). Throws Internal if the division leaves a
  /// remainder.
  MultiPoly divide_by_difference(std::size_t i, std::size_t j) const;
  MultiPoly pow(int e) const;

  bool is_symmetric() const;

  double evaluate(std::span<const double> z) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::map<Exponent, Rational> terms_;
};

/// Symmetric polynomial in the monomial basis m_lambda.
class SymPoly {
 public:
  SymPoly(std::size_t n, int degree) : n_(n), degree_(degree) {}

  /// Throws Symmetry for a non-symmetric input and InvalidArgument for a
  /// non-homogeneous one.
  static SymPoly from_multi(const MultiPoly& f);
  MultiPoly to_multi() const;

  std::size_t nvars() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const std::map<Partition, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coefficient(const Partition& lambda) const;
  /// Sets a coefficient; zero removes the entry.
  void set(const Partition& lambda, const Rational& c);

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  int degree_;
  std::map<Partition, Rational> coeffs_;
};

/// m_lambda = sum over the distinct rearrangements alpha of lambda of z^alpha.
MultiPoly monomial_sym(const Partition& lambda, int n);

/// All exponent vectors in n variables of total degree <= max_degree.
std::vector<Exponent> exponents_up_to(std::size_t n, int max_degree);

}  // namespace hofd
