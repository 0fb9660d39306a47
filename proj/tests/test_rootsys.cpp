#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hofd/error.hpp"
#include "hofd/rootsys.hpp"

using namespace hofd;

namespace {

bool same(const Weight& a, std::initializer_list<Complex> b, double tol = 1e-14) {
  if (a.size() != b.size()) return false;
  std::size_t i = 0;
  for (const auto& v : b)
    if (std::abs(a[i++] - v) > tol) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("rho") {
  CHECK(same(rho(2, 1.0), {-0.5, 0.5}));
  CHECK(same(rho(3, 0.0), {0.0, 0.0, 0.0}));
  CHECK(same(rho(3, 2.0), {-2.0, 0.0, 2.0}));
  CHECK_THROWS_AS(rho(1, 1.0), Error);
}

TEST_CASE("degenerate lambda") {
  const double nu = 0.37, k = 0.81;
  CHECK(same(degenerate_lambda(2, nu, k), {-nu / 2 - k / 2, nu / 2 + k / 2}));
  const Weight r = rho(4, k), l0 = degenerate_lambda(4, 0.0, k);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(l0[i] - r[i]) < 1e-15);
  CHECK(same(degenerate_lambda(3, 3.0, 0.0), {-1.0, -1.0, 2.0}));
  const auto exact = degenerate_lambda_exact(3, make_rational(1, 2), make_rational(2, 3));
  CHECK(exact[0] == make_rational(-1, 6) - make_rational(2, 3));
  CHECK(exact[2] == make_rational(1, 3) + make_rational(2, 3));
}

TEST_CASE("weight construction enforces zero sum") {
  CHECK_THROWS_AS(Weight({1.0, 0.5}), Error);
  CHECK_NOTHROW(Weight({1.0, -1.0}));
}

TEST_CASE("weyl action") {
  const Weight l({1.0, 2.0, -3.0});
  CHECK(same(weyl_act(Permutation::identity(3), l), {1.0, 2.0, -3.0}));
  CHECK(same(weyl_act(Permutation::transposition(3, 0, 1), l), {2.0, 1.0, -3.0}));
  // w_n moves the last entry to the front and shifts the rest
  const auto reps = min_coset_reps(3);
  CHECK(same(weyl_act(reps[2], l), {-3.0, 1.0, 2.0}));
  for (const auto& w : all_permutations(4)) {
    const Weight m = weyl_act(w, Weight({0.5, -1.25, 2.0, -1.25}));
    Complex s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i];
    CHECK(std::abs(s) < 1e-14);
  }
}

TEST_CASE("minimal coset representatives") {
  const auto two = min_coset_reps(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Permutation::identity(2));
  CHECK(two[1] == Permutation::transposition(2, 0, 1));

  const auto three = min_coset_reps(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Permutation::identity(3));
  CHECK(three[1] == Permutation::transposition(3, 1, 2));
  CHECK(three[2].length() == 2);

  for (int n = 2; n <= 5; ++n) {
    const auto reps = min_coset_reps(n);
    std::set<std::vector<int>> cosets;
    for (int i = 0; i < n; ++i) {
      CHECK(reps[i].length() == i);
      CHECK(reps[i](n - 1) == n - 1 - i);
      // the minimal element of its coset: no permutation of the first n-1
      // letters shortens it
      for (const auto& u : all_permutations(n)) {
        if (u(n - 1) != n - 1) continue;
        CHECK(reps[i].compose(u).length() >= reps[i].length());
      }
      cosets.insert({reps[i](n - 1)});
    }
    CHECK(cosets.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("Q_+ enumeration") {
  const auto two = qplus_enumerate(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == LatticeVector({0, 0}));
  CHECK(two[1] == LatticeVector({-1, 1}));
  CHECK(two[2] == LatticeVector({-2, 2}));

  for (int n = 2; n <= 5; ++n) CHECK(qplus_enumerate(n, 0).size() == 1);

  const auto three = qplus_enumerate(3, 1);
  REQUIRE(three.size() == 3);
  CHECK(std::find(three.begin(), three.end(), LatticeVector({-1, 1, 0})) != three.end());
  CHECK(std::find(three.begin(), three.end(), LatticeVector({0, -1, 1})) != three.end());

  for (int h = 0; h <= 9; ++h) CHECK(qplus_enumerate(2, h).size() == static_cast<std::size_t>(h + 1));

  // brute force over boxes for n = 4
  const int H = 5;
  std::size_t brute = 0;
  for (int a = -H; a <= H; ++a)
    for (int b = -H; b <= H; ++b)
      for (int c = -H; c <= H; ++c) {
        if (a > 0 || a + b > 0 || a + b + c > 0) continue;
        brute += -a - (a + b) - (a + b + c) <= H;
      }
  const auto four = qplus_enumerate(4, H);
  CHECK(four.size() == brute);
  for (const auto& mu : four) {
    int s = 0, prefix = 0;
    bool ok = true;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      s += mu[i];
      if (i + 1 < mu.size()) ok = ok && (prefix += mu[i]) <= 0;
    }
    CHECK(s == 0);
    CHECK(ok);
    CHECK(mu.height() <= H);
  }
  CHECK_THROWS_AS(LatticeVector({1, -1}), Error);
}

TEST_CASE("genericity") {
  CHECK_FALSE(is_generic(rho(2, 1.0)));
  CHECK(is_generic(Weight({-0.3, 0.3})));

  // lambda(nu, k) is generic iff pk and nu + qk avoid the integers
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const double k = pick(rng) / 6.0, nu = pick(rng) / 4.0 - 1.0;
    bool expect = true;
    for (int p = 1; p <= n - 2; ++p) expect = expect && std::abs(p * k - std::round(p * k)) > 1e-9;
    for (int q = 1; q <= n - 1; ++q)
      expect = expect && std::abs(nu + q * k - std::round(nu + q * k)) > 1e-9;
    CHECK(is_generic(degenerate_lambda(n, nu, k)) == expect);
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({1, 1}), Partition({2})));
  CHECK_FALSE(dominance_leq(Partition({2}), Partition({1, 1})));
  CHECK(dominance_leq(Partition({2, 1, 1}), Partition({2, 2})));
  for (int d = 0; d <= 8; ++d) {
    const auto ps = partitions_of(d, d);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (a != b && dominance_leq(a, b)) CHECK_FALSE(dominance_leq(b, a));
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("pi map") {
  CHECK(same(pi_map(Partition({1}), 2), {0.5, -0.5}));
  CHECK(same(pi_map(Partition({3, 3, 3}), 3), {0.0, 0.0, 0.0}));
  const int p = 4, q = 1, n = 3;
  const Weight w = pi_map(Partition({p, q, q}), n);
  CHECK(std::abs(w[0] - (p - (p + (n - 1) * q) / double(n))) < 1e-14);
}

TEST_CASE("partitions") {
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0, 3).size() == 1);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_SUITE_END();
