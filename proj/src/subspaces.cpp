#include "unisub/subspaces.hpp"

#include <algorithm>

namespace unisub {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::UniversalCertified: return "UniversalCertified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::UniversalIff: return "UniversalIff";
  }
  return "Unknown";
}

void validate_weights(const WeightMultiset& ws) {
  for (const LinearForm& w : ws.weights) {
    if (w.vars() != ws.group.rank) {
      throw Error(ErrorCode::VarMismatch, "weight length does not match group rank");
    }
    if (w.is_zero()) {
      throw Error(ErrorCode::ZeroWeight, "zero weight in complement multiset");
    }
  }
}

Polynomial characteristic_polynomial(const WeightMultiset& ws) {
  validate_weights(ws);
  return expand_linear_product(ws.weights, ws.group.rank);
}

BigRat characteristic_number(const WeightMultiset& ws) {
  validate_weights(ws);
  const GroupData& data = group_data(ws.group);
  if (ws.degree() != data.spec.root_count) {
    throw Error(ErrorCode::DegreeMismatch,
                "characteristic number needs degree d = m = " +
                    std::to_string(data.spec.root_count) + ", got " +
                    std::to_string(ws.degree()));
  }
  const Polynomial f_v = characteristic_polynomial(ws);
  BigRat value(monomial_inner_product(f_v, data.f0), data.f0_norm);
  value.canonicalize();
  value *= BigRat(data.spec.weyl_order);
  value.canonicalize();
  return value;
}

UniversalityVerdict universality_verdict(const WeightMultiset& ws) {
  validate_weights(ws);
  const RootSystemSpec& spec = group_data(ws.group).spec;

  UniversalityVerdict result;
  result.f_V = characteristic_polynomial(ws);
  result.degree = ws.degree();
  result.m = spec.root_count;

  if (result.degree > result.m) {
    // Every homogeneous polynomial of degree > m lies in the ideal.
    result.in_ideal = true;
    result.verdict = Verdict::Inconclusive;
    return result;
  }

  result.in_ideal = ideal_membership(result.f_V, spec);
  if (result.degree == result.m) {
    result.characteristic_number = characteristic_number(ws);
    const bool nonzero = *result.characteristic_number != 0;
    if (nonzero == result.in_ideal) {
      throw Error(ErrorCode::Internal, "characteristic number disagrees with membership");
    }
  }
  result.verdict = result.in_ideal ? Verdict::Inconclusive : Verdict::UniversalCertified;
  return result;
}

WeightMultiset shrink(const WeightMultiset& v_weights, const WeightMultiset& complement) {
  validate_weights(v_weights);
  validate_weights(complement);
  if (!(v_weights.group == complement.group)) {
    throw Error(ErrorCode::Precondition, "shrink arguments disagree on the group");
  }

  const RootSystemSpec& spec = group_data(complement.group).spec;
  const std::size_t m = spec.root_count;

  Polynomial product = characteristic_polynomial(complement);
  if (ideal_membership(product, spec)) {
    throw Error(ErrorCode::Precondition, "complement product already lies in the ideal");
  }

  WeightMultiset grown = complement;
  std::vector<LinearForm> pool = v_weights.weights;
  const auto lex_less = [](const LinearForm& a, const LinearForm& b) {
    return a.coeffs < b.coeffs;
  };
  std::sort(pool.begin(), pool.end(), lex_less);

  while (grown.degree() < m) {
    bool extended = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const Polynomial candidate = product * pool[k].to_polynomial();
      if (!ideal_membership(candidate, spec)) {
        product = candidate;
        grown.weights.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
        extended = true;
        break;
      }
    }
    if (!extended) {
      throw Error(ErrorCode::NoExtension,
                  "no remaining character keeps the product outside the ideal at degree " +
                      std::to_string(grown.degree()));
    }
  }
  return grown;
}

}  // namespace unisub
