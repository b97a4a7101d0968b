#include <doctest.h>

#include "ideal_oracle.hpp"
#include "test_support.hpp"
#include "unisub/weyl.hpp"

using namespace unisub;
using unisub::testing::in_ideal_bruteforce;
using unisub::testing::random_homogeneous;

namespace {

const std::vector<GroupType>& all_groups(unsigned n_max) {
  static std::vector<GroupType> groups;
  groups.clear();
  for (unsigned n = 1; n <= n_max; ++n) {
    groups.push_back({Family::UnitaryA, n});
    groups.push_back({Family::SymplecticC, n});
    groups.push_back({Family::OddOrthogonalB, n});
    if (n >= 2) groups.push_back({Family::EvenOrthogonalD, n});
  }
  return groups;
}

}  // namespace

TEST_CASE("root system shapes") {
  const RootSystemSpec a3 = make_root_system({Family::UnitaryA, 3});
  CHECK(a3.root_count == 3);
  CHECK(a3.weyl_order == 6);
  CHECK(a3.degrees == std::vector<unsigned>{1, 2, 3});

  const RootSystemSpec c2 = make_root_system({Family::SymplecticC, 2});
  CHECK(c2.root_count == 4);
  CHECK(c2.weyl_order == 8);
  CHECK(c2.degrees == std::vector<unsigned>{2, 4});

  const RootSystemSpec d2 = make_root_system({Family::EvenOrthogonalD, 2});
  CHECK(d2.root_count == 2);
  CHECK(d2.weyl_order == 4);

  const RootSystemSpec b2 = make_root_system({Family::OddOrthogonalB, 2});
  CHECK(b2.root_count == 4);
  CHECK(b2.weyl_order == 8);

  CHECK_THROWS_AS((void)make_root_system({Family::EvenOrthogonalD, 1}), Error);
}

TEST_CASE("positive root counts per family at n <= 6") {
  for (GroupType g : all_groups(6)) {
    const RootSystemSpec spec = make_root_system(g);
    const unsigned n = g.rank;
    std::size_t expected = 0;
    switch (g.family) {
      case Family::UnitaryA: expected = n * (n - 1) / 2; break;
      case Family::SymplecticC: expected = n * n; break;
      case Family::EvenOrthogonalD: expected = n * (n - 1); break;
      case Family::OddOrthogonalB: expected = n * n; break;
    }
    CHECK(spec.root_count == expected);

    BigInt product = 1;
    std::size_t codegrees = 0;
    for (unsigned d : spec.degrees) {
      product *= d;
      codegrees += d - 1;
    }
    CHECK(product == spec.weyl_order);
    CHECK(codegrees == spec.root_count);
  }
}

TEST_CASE("fundamental harmonic closed forms") {
  CHECK(fundamental_harmonic(make_root_system({Family::UnitaryA, 2})) ==
        LinearForm{1, -1}.to_polynomial());

  CHECK(fundamental_harmonic(make_root_system({Family::SymplecticC, 1})) ==
        LinearForm{2}.to_polynomial());

  // B at n=2: (x1^2 - x2^2) x1 x2 from the four positive roots.
  const Polynomial expected_b2 =
      multiply_by_all_vars(substitute_squares(vandermonde(2)));
  CHECK(fundamental_harmonic(make_root_system({Family::OddOrthogonalB, 2})) == expected_b2);

  // Sp(2): f0 = 2^2 * lambda_0(x^2) x1 x2.
  const Polynomial f0_c2 = fundamental_harmonic(make_root_system({Family::SymplecticC, 2}));
  CHECK(f0_c2 == BigInt(4) * expected_b2);

  // The internal cross-check runs for every family and rank.
  for (GroupType g : all_groups(5)) {
    const RootSystemSpec spec = make_root_system(g);
    const Polynomial f0 = fundamental_harmonic(spec);
    CHECK(f0.total_degree() == spec.root_count);
    CHECK(is_skew(f0, g));
  }
}

TEST_CASE("weyl action") {
  const Polynomial d12 = LinearForm{1, -1}.to_polynomial();
  const WeylElement swap12 = WeylElement::transposition(2, 0, 1);
  CHECK(weyl_act(swap12, d12) == -d12);

  std::mt19937_64 rng(3);
  const Polynomial p = random_homogeneous(3, 4, 4, rng);
  CHECK(weyl_act(WeylElement::identity(3), p) == p);

  // Sign flip negates the C1 harmonic: skewness in the smallest case.
  WeylElement flip = WeylElement::identity(1);
  flip.signs[0] = -1;
  const Polynomial f0_c1 = fundamental_harmonic(make_root_system({Family::SymplecticC, 1}));
  CHECK(weyl_act(flip, f0_c1) == -f0_c1);
  CHECK(weyl_sign(flip) == -1);
}

TEST_CASE("weyl element validity per family") {
  WeylElement flip = WeylElement::identity(2);
  flip.signs[1] = -1;
  CHECK_FALSE(weyl_element_valid(flip, {Family::UnitaryA, 2}));
  CHECK(weyl_element_valid(flip, {Family::SymplecticC, 2}));
  CHECK(weyl_element_valid(flip, {Family::OddOrthogonalB, 2}));
  CHECK_FALSE(weyl_element_valid(flip, {Family::EvenOrthogonalD, 2}));
  flip.signs[0] = -1;
  CHECK(weyl_element_valid(flip, {Family::EvenOrthogonalD, 2}));
}

TEST_CASE("invariance and skewness") {
  CHECK(is_invariant(elementary_symmetric(2, 2), {Family::UnitaryA, 2}));
  CHECK(is_skew(fundamental_harmonic(make_root_system({Family::UnitaryA, 3})),
                {Family::UnitaryA, 3}));
  CHECK(is_skew(Polynomial::variable(1, 0), {Family::OddOrthogonalB, 1}));
  CHECK_FALSE(is_invariant(Polynomial::variable(2, 0), {Family::UnitaryA, 2}));

  for (GroupType g : all_groups(4)) {
    const RootSystemSpec spec = make_root_system(g);
    for (const Polynomial& basic : spec.basic_invariants) {
      CHECK(is_invariant(basic, g));
    }
  }
}

TEST_CASE("ideal membership basics") {
  const RootSystemSpec a2 = make_root_system({Family::UnitaryA, 2});
  CHECK(ideal_membership(LinearForm{1, 1}.to_polynomial(), a2));

  // (x1-x2)^2 = e1^2 - 4 e2 lies in the ideal (degree 2 > m = 1).
  const Polynomial d = LinearForm{1, -1}.to_polynomial();
  CHECK(ideal_membership(d * d, a2));

  for (GroupType g : all_groups(4)) {
    const RootSystemSpec spec = make_root_system(g);
    CHECK_FALSE(ideal_membership(fundamental_harmonic(spec), spec));
    for (const Polynomial& basic : spec.basic_invariants) {
      CHECK(ideal_membership(basic, spec));
      CHECK(apply_diff_operator(basic, fundamental_harmonic(spec)).is_zero());
    }
  }
}

TEST_CASE("ideal membership splits non-homogeneous input") {
  const RootSystemSpec a2 = make_root_system({Family::UnitaryA, 2});
  const Polynomial e1 = elementary_symmetric(2, 1);
  const Polynomial e2 = elementary_symmetric(2, 2);
  CHECK(ideal_membership(e1 + e2, a2));
  CHECK_FALSE(ideal_membership(e1 + fundamental_harmonic(a2), a2));
  CHECK_FALSE(ideal_membership(Polynomial::constant(2, 3), a2));
}

TEST_CASE("harmonic dimensions") {
  CHECK(harmonic_dimensions(make_root_system({Family::UnitaryA, 2})) ==
        std::vector<std::uint64_t>{1, 1});
  CHECK(harmonic_dimensions(make_root_system({Family::UnitaryA, 3})) ==
        std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(harmonic_dimensions(make_root_system({Family::SymplecticC, 2})) ==
        std::vector<std::uint64_t>{1, 2, 2, 2, 1});
  for (GroupType g : all_groups(5)) {
    const RootSystemSpec spec = make_root_system(g);
    const auto dims = harmonic_dimensions(spec);
    CHECK(dims.back() == 1);
    std::uint64_t total = 0;
    for (std::uint64_t v : dims) total += v;
    CHECK(BigInt(static_cast<unsigned long>(total)) == spec.weyl_order);
  }
}

TEST_CASE("degree-m functional agreement") {
  std::mt19937_64 rng(2024);
  for (GroupType g : all_groups(3)) {
    const RootSystemSpec spec = make_root_system(g);
    const Polynomial f0 = fundamental_harmonic(spec);
    const BigInt b00 = bilinear_B(f0, f0);
    const BigInt n00 = monomial_inner_product(f0, f0);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f =
          random_homogeneous(g.rank, static_cast<std::uint32_t>(spec.root_count), 6, rng);
      CHECK(monomial_inner_product(f, f0) * b00 == bilinear_B(f, f0) * n00);
    }
  }
}

TEST_CASE("skew degree-m polynomials are multiples of f0 (type A)") {
  std::mt19937_64 rng(31);
  for (unsigned n = 2; n <= 4; ++n) {
    const RootSystemSpec spec = make_root_system({Family::UnitaryA, n});
    const Polynomial f0 = fundamental_harmonic(spec);
    const BigInt n00 = monomial_inner_product(f0, f0);
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial p =
          random_homogeneous(n, static_cast<std::uint32_t>(spec.root_count), 5, rng);
      const Polynomial q = antisymmetrize(p);
      // q = (<q,f0>/<f0,f0>) f0 exactly.
      CHECK(n00 * q == monomial_inner_product(q, f0) * f0);
    }
  }
}

TEST_CASE("membership agrees with the brute-force reduction oracle") {
  std::mt19937_64 rng(555);
  for (GroupType g : all_groups(3)) {
    const RootSystemSpec spec = make_root_system(g);
    if (spec.root_count > 6) continue;  // oracle is budgeted for degree <= 6
    const auto m = static_cast<std::uint32_t>(spec.root_count);
    for (int trial = 0; trial < 15; ++trial) {
      Polynomial f = random_homogeneous(g.rank, m, 5, rng);
      CHECK(ideal_membership(f, spec) == in_ideal_bruteforce(f, spec));
    }
    // Constructed members: basic invariant times a random cofactor.
    for (const Polynomial& basic : spec.basic_invariants) {
      if (basic.total_degree() > m) continue;
      const Polynomial cofactor =
          random_homogeneous(g.rank, m - basic.total_degree(), 4, rng);
      const Polynomial f = basic * cofactor;
      if (f.is_zero()) continue;
      CHECK(ideal_membership(f, spec));
      CHECK(in_ideal_bruteforce(f, spec));
    }
  }
}
