#include <doctest.h>

#include <random>

#include "hofd/dunkl.hpp"
#include "hofd/jack.hpp"
#include "support.hpp"

using namespace hofd;

namespace {

MultiPoly random_poly(int n, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  MultiPoly f(n);
  for (auto& e : exponents_up_to(static_cast<std::size_t>(n), degree))
    f.add_term(e, make_rational(c(rng), 1 + std::abs(c(rng))));
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("dunkl");

TEST_CASE("dunkl operators on small inputs") {
  const Rational k = make_rational(2, 3);
  for (int n = 2; n <= 4; ++n) {
    const auto r = rho_exact(n, k);
    for (int i = 0; i < n; ++i)
      CHECK(dunkl_T(i, MultiPoly::constant(n, 1), k, n) == MultiPoly::constant(n, r[i]));
  }
  // n = 2, T_1 z_1 = (1 + k/2) z_1 in 1-based indexing
  const MultiPoly z1 = MultiPoly::variable(2, 0);
  CHECK(dunkl_T(0, z1, k, 2) == z1 * (1 + k / 2));

  std::mt19937_64 rng(1);
  const MultiPoly f = random_poly(3, 4, rng);
  for (int i = 0; i < 3; ++i) CHECK(dunkl_T(i, f, k, 3).total_degree() <= f.total_degree());
  CHECK_THROWS_AS(dunkl_T(3, f, k, 3), Error);
}

TEST_CASE("commutativity") {
  const Rational k = make_rational(2, 3);
  const auto basis = monomial_basis(3, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(commutator_check(i, j, basis, k, 3).ok());

  std::mt19937_64 rng(9);
  const std::vector<MultiPoly> big{random_poly(4, 5, rng)};
  CHECK(commutator_check(0, 3, big, make_rational(5, 11), 4).ok());
  CHECK(commutator_check(1, 2, big, make_rational(5, 11), 4).ok());

  const auto r = rho_exact(3, k);
  CHECK(dunkl_T(0, dunkl_T(2, MultiPoly::constant(3, 1), k, 3), k, 3) ==
        MultiPoly::constant(3, r[0] * r[2]));
}

TEST_CASE("hecke relations") {
  const Rational k = make_rational(3, 4);
  const auto basis = monomial_basis(3, 4);
  for (std::size_t i = 0; i + 1 < 3; ++i) CHECK(hecke_relation_check(i, basis, k, 3).ok());
  CHECK(hecke_relation_check(0, symmetric_basis(4, 3), k, 4).ok());
}

TEST_CASE("D_p on symmetric polynomials") {
  const Rational k = make_rational(2, 7);
  for (int n = 2; n <= 3; ++n) CHECK(elementary_operator_check(k, n, symmetric_basis(n, 4)).ok());
  CHECK(elementary_operator_check(k, 4, symmetric_basis(4, 3)).ok());

  // W-invariant symbols keep symmetric inputs symmetric
  MultiPoly p2(3);
  for (int i = 0; i < 3; ++i) p2 += MultiPoly::variable(3, i).pow(2);
  for (const auto& f : symmetric_basis(3, 3)) CHECK(Tp_apply(p2, f, k, 3).is_symmetric());
}

TEST_CASE("Delta_ij symbol acts on symmetric polynomials through T_p") {
  const Rational nu = make_rational(5, 3), k = make_rational(2, 7);
  // f = 1: (nu/n)(k + nu/n) = nu(nu + nk)/n^2
  const MultiPoly one = MultiPoly::constant(3, 1);
  CHECK(Tp_apply(p_ij_symbol(0, 1, nu, k, 3), one, k, 3) ==
        one * (nu * (nu + 3 * k) / 9));

  for (int n = 2; n <= 3; ++n) {
    const std::vector<MultiPoly> m1{monomial_sym(Partition({1}), n)};
    CHECK(prop41_check(0, n - 1, nu, k, n, m1).ok());
  }
  const auto basis = symmetric_basis(3, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(prop41_check(i, j, nu, k, 3, basis).ok());

  CHECK_THROWS_AS(delta_ij_apply(0, 1, MultiPoly::variable(3, 0), nu, k, 3), Error);
}

TEST_CASE("group algebra elements") {
  GroupPolyElement g(2);
  const Permutation s = Permutation::transposition(2, 0, 1);
  g.add(Permutation::identity(2), MultiPoly::variable(2, 0));
  g.add(s, MultiPoly::constant(2, 3));
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK(g.apply(x) == x * x + y * 3);
  CHECK(g.symmetric_part() == x + MultiPoly::constant(2, 3));
  g.add(s, MultiPoly::constant(2, -3));
  CHECK(g.terms().size() == 1);
}

TEST_CASE("indicial equation") {
  const double nu = 0.63, k = 0.41;
  for (int n = 2; n <= 4; ++n) {
    const auto sols = indicial_solutions(nu, k, n);
    REQUIRE(sols.size() == static_cast<std::size_t>(n));
    const Weight lam = degenerate_lambda(n, nu, k);
    for (const auto& w : min_coset_reps(n)) {
      const Weight wl = weyl_act(w, lam);
      bool found = false;
      for (const auto& s : sols) {
        bool eq = true;
        for (int i = 0; i < n; ++i) eq = eq && std::abs(s[i] - wl[i]) < 1e-9;
        found = found || eq;
      }
      CHECK(found);
    }
  }
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j < n; ++j) CHECK_THROWS_AS(indicial_solutions(-j * k, k, n), Error);
}

TEST_SUITE_END();
