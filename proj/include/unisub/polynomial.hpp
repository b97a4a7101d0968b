#ifndef UNISUB_POLYNOMIAL_HPP
#define UNISUB_POLYNOMIAL_HPP

/*
  Exact sparse multivariate polynomials over arbitrary-precision integers.

  Terms live in a map keyed by exponent vectors under graded lexicographic
  order, so every polynomial is in canonical form by construction and
  equality is structural. Two pairings are provided: the inner product for
  which the monomials are an orthonormal basis, and the differential-
  operator form B(f,g) = (d_f g)(0), which weights monomials by factorials.
  Both are exact.
*/

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "unisub/bigint.hpp"
#include "unisub/error.hpp"

namespace unisub {

struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t vars) : exps(vars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> e) : exps(e) {}

  std::size_t vars() const { return exps.size(); }
  std::uint32_t total_degree() const;

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order with x1 > x2 > ... > xn.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexLess>;

  Polynomial() : vars_(0) {}
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, BigInt c);
  static Polynomial variable(std::size_t vars, std::size_t index, std::uint32_t power = 1);

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree of the leading term; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;

  BigInt coefficient(const Monomial& m) const;

  /// Merge a term into canonical form; zero results are dropped.
  void add_term(const Monomial& m, const BigInt& c);

  const TermMap& terms() const { return terms_; }

  bool operator==(const Polynomial&) const = default;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const BigInt& scalar);

 private:
  std::size_t vars_;
  TermMap terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const BigInt& c, const Polynomial& a);

/// An integer linear form c1*x1 + ... + cn*xn.
struct LinearForm {
  std::vector<std::int64_t> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::size_t vars) : coeffs(vars, 0) {}
  LinearForm(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  std::size_t vars() const { return coeffs.size(); }
  bool is_zero() const;
  Polynomial to_polynomial() const;

  bool operator==(const LinearForm&) const = default;
};

/// x_i - x_j (zero-based indices).
LinearForm coordinate_difference(std::size_t vars, std::size_t i, std::size_t j);
/// x_i + x_j.
LinearForm coordinate_sum(std::size_t vars, std::size_t i, std::size_t j);
/// c * x_i.
LinearForm coordinate_multiple(std::size_t vars, std::size_t i, std::int64_t c);

/// Expanded product of linear forms; the empty product is the constant 1.
Polynomial expand_linear_product(std::span<const LinearForm> forms, std::size_t vars);

/// p(x1^2, ..., xn^2): every exponent doubles.
Polynomial substitute_squares(const Polynomial& p);

/// p * x1*x2*...*xn.
Polynomial multiply_by_all_vars(const Polynomial& p);

/// Inner product with orthonormal monomials: sum of coefficient products
/// over shared monomials.
BigInt monomial_inner_product(const Polynomial& p, const Polynomial& q);

/// d_f g where each monomial x^a of f acts as the constant-coefficient
/// operator prod_i d^{a_i}/dx_i^{a_i}.
Polynomial apply_diff_operator(const Polynomial& f, const Polynomial& g);

/// B(f,g) = (d_f g)(0); on monomials B(x^a, x^b) = a! [a == b].
BigInt bilinear_B(const Polynomial& f, const Polynomial& g);

/// Substitute x_i -> signs[i] * x_{perm[i]}; an algebra automorphism.
Polynomial apply_signed_permutation(const Polynomial& p, std::span<const unsigned> perm,
                                    std::span<const int> signs);

/// Sum over all of S_n of sgn(sigma) * (sigma . p); the result is skew.
Polynomial antisymmetrize(const Polynomial& p);

std::vector<Polynomial> homogeneous_components(const Polynomial& p);

/// Canonical text form, leading term first: "x1^2*x2 - 2*x3 + 1".
std::string to_text(const Polynomial& p);

std::size_t hash_value(const Monomial& m);
std::size_t hash_value(const Polynomial& p);

}  // namespace unisub

#endif
