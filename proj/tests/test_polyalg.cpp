#include <doctest.h>

#include "test_support.hpp"
#include "unisub/polynomial.hpp"
#include "unisub/weyl.hpp"

using namespace unisub;
using unisub::testing::random_monomial;
using unisub::testing::random_polynomial;

namespace {

Polynomial form(std::initializer_list<std::int64_t> coeffs) {
  LinearForm f(coeffs);
  return f.to_polynomial();
}

}  // namespace

TEST_CASE("addition basics") {
  const Polynomial x1 = form({1, 0, 0});
  CHECK((x1 + (-x1)).is_zero());

  const Polynomial a = form({1, -1, 0});
  const Polynomial b = form({0, 1, -1});
  CHECK(a + b == form({1, 0, -1}));

  const Polynomial l2 = vandermonde(2);
  CHECK(l2 + l2 == BigInt(2) * form({1, -1}));
}

TEST_CASE("multiplication basics") {
  const Polynomial d = form({1, -1});
  const Polynomial s = form({1, 1});
  Polynomial expected(2);
  expected.add_term(Monomial{2, 0}, 1);
  expected.add_term(Monomial{0, 2}, -1);
  CHECK(d * s == expected);

  CHECK(d * Polynomial::constant(2, 1) == d);

  const Polynomial product = form({1, -1, 0}) * form({1, 0, -1}) * form({0, 1, -1});
  CHECK(product == vandermonde(3));
  CHECK(product.total_degree() == 3);
}

TEST_CASE("expand_linear_product") {
  CHECK(expand_linear_product({}, 2) == Polynomial::constant(2, 1));

  const std::vector<LinearForm> single{LinearForm{1, -1, 0}};
  CHECK(expand_linear_product(single, 3) == form({1, -1, 0}));

  // Two reversed factors: sign (-1)^2 = +1 against the sorted product.
  const std::vector<LinearForm> scrambled{
      LinearForm{1, 0, -1}, LinearForm{-1, 1, 0}, LinearForm{0, -1, 1}};
  CHECK(expand_linear_product(scrambled, 3) == vandermonde(3));

  const std::vector<LinearForm> bad{LinearForm{1, -1}};
  CHECK_THROWS_AS((void)expand_linear_product(bad, 3), Error);
}

TEST_CASE("substitute_squares and multiply_by_all_vars") {
  const Polynomial d = form({1, -1});
  Polynomial d2(2);
  d2.add_term(Monomial{2, 0}, 1);
  d2.add_term(Monomial{0, 2}, -1);
  CHECK(substitute_squares(d) == d2);
  CHECK(substitute_squares(Polynomial::constant(2, 1)) == Polynomial::constant(2, 1));
  CHECK(substitute_squares(vandermonde(2)) == d2);

  Polynomial x1x2(2);
  x1x2.add_term(Monomial{1, 1}, 1);
  CHECK(multiply_by_all_vars(Polynomial::constant(2, 1)) == x1x2);
  Polynomial x1sq_x2(2);
  x1sq_x2.add_term(Monomial{2, 1}, 1);
  CHECK(multiply_by_all_vars(Polynomial::variable(2, 0)) == x1sq_x2);
}

TEST_CASE("monomial inner product") {
  CHECK(monomial_inner_product(vandermonde(2), vandermonde(2)) == 2);
  CHECK(monomial_inner_product(vandermonde(4), vandermonde(4)) == 24);
  CHECK(monomial_inner_product(Polynomial::variable(2, 0), Polynomial::variable(2, 1)) == 0);
}

TEST_CASE("diff operator") {
  Polynomial x1sq(1);
  x1sq.add_term(Monomial{2}, 1);
  CHECK(apply_diff_operator(Polynomial::variable(1, 0), x1sq) ==
        BigInt(2) * Polynomial::variable(1, 0));

  Polynomial x1x2(2);
  x1x2.add_term(Monomial{1, 1}, 1);
  CHECK(apply_diff_operator(x1x2, vandermonde(2)).is_zero());

  // e_1 annihilates the type-A fundamental harmonic at n = 2.
  CHECK(apply_diff_operator(form({1, 1}), vandermonde(2)).is_zero());
}

TEST_CASE("bilinear B on monomials") {
  Polynomial x1x2(2);
  x1x2.add_term(Monomial{1, 1}, 1);
  CHECK(bilinear_B(x1x2, x1x2) == 1);

  Polynomial x1sq(2);
  x1sq.add_term(Monomial{2, 0}, 1);
  CHECK(bilinear_B(x1sq, x1sq) == 2);

  CHECK(bilinear_B(Polynomial::variable(2, 0), Polynomial::variable(2, 1)) == 0);
}

TEST_CASE("antisymmetrize") {
  Polynomial staircase(3);
  staircase.add_term(Monomial{2, 1, 0}, 1);
  CHECK(antisymmetrize(staircase) == vandermonde(3));

  Polynomial sym(2);
  sym.add_term(Monomial{1, 1}, 1);
  CHECK(antisymmetrize(sym).is_zero());

  Polynomial p(3);
  p.add_term(Monomial{2, 1, 0}, 1);
  CHECK(antisymmetrize(p) == vandermonde(3));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial a = random_polynomial(n, 3, 4, rng);
    const Polynomial b = random_polynomial(n, 3, 4, rng);
    const Polynomial c = random_polynomial(n, 3, 4, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("expand equals explicit fold") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<LinearForm> forms;
    for (int k = 0; k < 4; ++k) {
      LinearForm f(n);
      for (std::size_t i = 0; i < n; ++i) f.coeffs[i] = coeff(rng);
      forms.push_back(f);
    }
    Polynomial folded = Polynomial::constant(n, 1);
    for (const LinearForm& f : forms) folded = folded * f.to_polynomial();
    CHECK(expand_linear_product(forms, n) == folded);
  }
}

TEST_CASE("pairings are symmetric and bilinear, B weights by factorials") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial a = random_polynomial(n, 4, 4, rng);
    const Polynomial b = random_polynomial(n, 4, 4, rng);
    const Polynomial c = random_polynomial(n, 4, 4, rng);
    CHECK(monomial_inner_product(a, b) == monomial_inner_product(b, a));
    CHECK(bilinear_B(a, b) == bilinear_B(b, a));
    CHECK(monomial_inner_product(a + b, c) ==
          monomial_inner_product(a, c) + monomial_inner_product(b, c));
    CHECK(bilinear_B(a + b, c) == bilinear_B(a, c) + bilinear_B(b, c));

    // B(x^a, x^a) = a! for exponents with total degree up to 8.
    Monomial m = random_monomial(n, 8 / n, rng);
    Polynomial mono(n);
    mono.add_term(m, 1);
    BigInt expected = 1;
    for (std::uint32_t e : m.exps) expected *= factorial(e);
    CHECK(bilinear_B(mono, mono) == expected);
  }
}

TEST_CASE("B-adjointness of the diff operator") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial f = random_polynomial(n, 2, 3, rng);
    const Polynomial g = random_polynomial(n, 3, 3, rng);
    const Polynomial h = random_polynomial(n, 2, 3, rng);
    CHECK(bilinear_B(g, f * h) == bilinear_B(apply_diff_operator(f, g), h));
  }
}

TEST_CASE("square substitution with the variable product is an isometry") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Polynomial p = random_polynomial(n, 3, 4, rng);
    const Polynomial q = random_polynomial(n, 3, 4, rng);
    const Polynomial pe = multiply_by_all_vars(substitute_squares(p));
    const Polynomial qe = multiply_by_all_vars(substitute_squares(q));
    CHECK(monomial_inner_product(p, q) == monomial_inner_product(pe, qe));
  }
}

TEST_CASE("canonical form invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(2, 4, 5, rng);
    for (const auto& [m, c] : p.terms()) {
      CHECK(c != 0);
      CHECK(m.vars() == p.vars());
    }
  }
  // Structural equality and hashing agree on reordered construction.
  Polynomial a(2), b(2);
  a.add_term(Monomial{1, 0}, 2);
  a.add_term(Monomial{0, 1}, -3);
  b.add_term(Monomial{0, 1}, -3);
  b.add_term(Monomial{1, 0}, 2);
  CHECK(a == b);
  CHECK(hash_value(a) == hash_value(b));
}

TEST_CASE("text serialization") {
  CHECK(to_text(Polynomial(2)) == "0");
  CHECK(to_text(Polynomial::constant(3, -7)) == "-7");
  CHECK(to_text(vandermonde(2)) == "x1 - x2");
  Polynomial p(3);
  p.add_term(Monomial{2, 1, 0}, 1);
  p.add_term(Monomial{0, 0, 1}, -2);
  p.add_term(Monomial{0, 0, 0}, 1);
  CHECK(to_text(p) == "x1^2*x2 - 2*x3 + 1");
}

TEST_CASE("variable count mismatch is rejected") {
  CHECK_THROWS_AS((void)(Polynomial::variable(2, 0) + Polynomial::variable(3, 0)), Error);
  CHECK_THROWS_AS((void)(Polynomial::variable(2, 0) * Polynomial::variable(3, 0)), Error);
  CHECK_THROWS_AS((void)monomial_inner_product(Polynomial(2), Polynomial(3)), Error);
  CHECK_THROWS_AS((void)bilinear_B(Polynomial(2), Polynomial(3)), Error);
  CHECK_THROWS_AS((void)apply_diff_operator(Polynomial(2), Polynomial(3)), Error);
}
