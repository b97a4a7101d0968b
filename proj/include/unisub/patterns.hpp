#ifndef UNISUB_PATTERNS_HPP
#define UNISUB_PATTERNS_HPP

/*
  Matrix zero patterns: a set I of n(n-1)/2 off-diagonal index pairs
  (1-indexed, as in the JSON interface). The subspace of matrices vanishing
  on I is certified universal through the characteristic number
  C_I = <lambda_I, lambda_0>, scaled per family. Odd patterns are the
  (n+1)x(n+1) block patterns used for SO(2n+1), carrying one boundary slot
  per row/column pair against the trailing 1x1 block.
*/

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unisub/subspaces.hpp"

namespace unisub {

using IndexPair = std::pair<unsigned, unsigned>;

struct ZeroPattern {
  unsigned n = 0;
  std::vector<IndexPair> pairs;  // sorted, validated, 1-indexed
};

struct OddPattern {
  unsigned n = 0;                // block rank; matrices are (2n+1)x(2n+1)
  std::vector<IndexPair> pairs;  // over {1..n+1}, sorted, validated

  /// The n x n pattern {(i,j) in J | i,j <= n}.
  ZeroPattern inner() const;
};

/// Checks index range, diagonal pairs, duplicates and cardinality
/// n(n-1)/2, in that order; returns the canonical sorted pattern.
ZeroPattern validate_pattern(unsigned n, std::span<const IndexPair> pairs);

/// Cardinality (n+1)n/2 over {1..n+1}, plus the boundary rule: exactly one
/// of (i, n+1) and (n+1, i) for every i <= n.
OddPattern validate_odd_pattern(unsigned n, std::span<const IndexPair> pairs);

/// Exactly one orientation of every unordered pair.
bool is_simple(const ZeroPattern& p);

/// (i0,j0) in I and (j0-i0)(i0-j0+j-i) > 0 imply (i,j) in I.
bool is_bitriangular(const ZeroPattern& p);

/// lambda_I = prod_{(i,j) in I} (x_i - x_j).
Polynomial lambda_pattern(const ZeroPattern& p);

/// C_I = <lambda_I, lambda_0>. For simple patterns the sign-counting value
/// (+-n!) is computed as well and must agree.
BigInt characteristic_number_I(const ZeroPattern& p);

/// (-1)^{#reversed pairs} * n!; Precondition unless the pattern is simple.
BigInt simple_sign_characteristic_number(const ZeroPattern& p);

/// Complement weight multiset of the matrix subspace for families A, C, D.
WeightMultiset complement_weights(const ZeroPattern& p, Family family);
/// Complement weight multiset for family B (odd orthogonal).
WeightMultiset complement_weights(const OddPattern& p);

struct PatternCertificate {
  ZeroPattern pattern;                  // the n x n pattern (inner one for B)
  std::optional<OddPattern> odd;        // present for family B input
  Family family = Family::UnitaryA;
  bool simple = false;
  bool bitriangular = false;
  Polynomial lambda_I;
  BigInt C_I;
  BigInt C_V;                           // family-scaled characteristic number
  Verdict verdict = Verdict::Inconclusive;
  std::optional<BigInt> predicted_flag_count;  // |C_I|, family A bitriangular only
};

PatternCertificate certify(const ZeroPattern& p, Family family);
PatternCertificate certify(const OddPattern& p, Family family);

/// 2^n C_I for C and B, 2^{n-1} C_I for D, C_I itself for A.
BigInt family_scale(Family family, unsigned n);

// --- enumeration over the n(n-1) ordered off-diagonal slots ---

/// Slots in lexicographic order of (i,j); bit k of a mask selects slot k.
std::vector<IndexPair> pattern_slots(unsigned n);
ZeroPattern pattern_from_mask(unsigned n, std::uint64_t mask);
std::uint64_t mask_from_pattern(const ZeroPattern& p);

/// Rank of a k-subset mask among same-popcount masks in increasing
/// numeric order, and its inverse.
std::uint64_t combination_rank(std::uint64_t mask);
std::uint64_t combination_unrank(unsigned slots, unsigned k, std::uint64_t rank);

enum class PatternFilter { None, Simple, Bitriangular };

PatternFilter pattern_filter_from_name(const std::string& name);

struct EnumerationOptions {
  unsigned n = 0;
  Family family = Family::UnitaryA;
  PatternFilter filter = PatternFilter::None;
  unsigned jobs = 1;
  unsigned bound = 5;   // largest n allowed without force
  bool force = false;
};

struct EnumerationSummary {
  std::uint64_t rows = 0;
  std::uint64_t simple = 0;
  std::uint64_t bitriangular = 0;
  std::uint64_t zero_c_i = 0;
};

/// Certifies every pattern (or the filtered subset) in increasing bitmask
/// order, invoking the sink sequentially in that order regardless of the
/// parallelism degree. Throws BoundExceeded (payload: projected count)
/// when n exceeds the bound and force is not set.
EnumerationSummary enumerate_patterns(
    const EnumerationOptions& options,
    const std::function<void(std::uint64_t mask, const PatternCertificate&)>& sink);

}  // namespace unisub

#endif
