#ifndef UNISUB_SUBSPACES_HPP
#define UNISUB_SUBSPACES_HPP

/*
  A torus-invariant subspace is presented by the weight multiset of a
  complement: the nonzero characters chi_1..chi_d of the torus action on
  the complementary summands. Everything downstream (characteristic
  polynomial, characteristic number, universality verdict, shrinking)
  depends only on that multiset.
*/

#include <optional>
#include <vector>

#include "unisub/weyl.hpp"

namespace unisub {

struct WeightMultiset {
  GroupType group;
  std::vector<LinearForm> weights;  // characters of the complement, with multiplicity

  std::size_t degree() const { return weights.size(); }
};

/// Throws ZeroWeight / VarMismatch when the multiset is malformed.
void validate_weights(const WeightMultiset& ws);

enum class Verdict { UniversalCertified, Inconclusive, UniversalIff };

const char* verdict_name(Verdict v);

struct UniversalityVerdict {
  Polynomial f_V;
  std::size_t degree = 0;  // d = number of weights
  std::size_t m = 0;       // |positive roots| of the group
  bool in_ideal = false;
  std::optional<BigRat> characteristic_number;  // present only when d == m
  Verdict verdict = Verdict::Inconclusive;
};

/// Product of the weights; the listed order fixes the overall sign.
Polynomial characteristic_polynomial(const WeightMultiset& ws);

/// <f_V, f_0> / <f_0, f_0> * |W| with the monomial-orthonormal inner
/// product. Requires degree d == m (DegreeMismatch otherwise).
BigRat characteristic_number(const WeightMultiset& ws);

/// Never claims non-universality: the certificate is one-directional.
/// Degree d > m is Inconclusive with in_ideal = true.
UniversalityVerdict universality_verdict(const WeightMultiset& ws);

/// Grows the complement to degree m by repeatedly moving a character from
/// the subspace side while keeping the product outside the ideal. The
/// candidates are scanned in lexicographic order of their coefficient
/// vectors; throws NoExtension when no candidate works at some step.
WeightMultiset shrink(const WeightMultiset& v_weights, const WeightMultiset& complement);

}  // namespace unisub

#endif
