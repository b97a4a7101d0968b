#include "unisub/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>

namespace unisub {

namespace {

void check_pairs(unsigned n, unsigned max_index, std::span<const IndexPair> pairs,
                 std::size_t expected_cardinality) {
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j < 1 || i > max_index || j > max_index) {
      throw Error(ErrorCode::IndexRange,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                      std::to_string(max_index));
    }
  }
  for (const auto& [i, j] : pairs) {
    if (i == j) {
      throw Error(ErrorCode::DiagonalPair, "diagonal pair (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") not allowed");
    }
  }
  std::set<IndexPair> seen;
  for (const auto& p : pairs) {
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::DuplicatePair, "pair (" + std::to_string(p.first) + "," +
                                                std::to_string(p.second) + ") listed twice");
    }
  }
  if (pairs.size() != expected_cardinality) {
    throw Error(ErrorCode::WrongCardinality,
                "pattern for n=" + std::to_string(n) + " needs " +
                    std::to_string(expected_cardinality) + " pairs, got " +
                    std::to_string(pairs.size()));
  }
}

}  // namespace

ZeroPattern validate_pattern(unsigned n, std::span<const IndexPair> pairs) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pattern size must be positive");
  check_pairs(n, n, pairs, static_cast<std::size_t>(n) * (n - 1) / 2);
  ZeroPattern p;
  p.n = n;
  p.pairs.assign(pairs.begin(), pairs.end());
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

OddPattern validate_odd_pattern(unsigned n, std::span<const IndexPair> pairs) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "odd pattern rank must be positive");
  check_pairs(n, n + 1, pairs, static_cast<std::size_t>(n + 1) * n / 2);
  OddPattern p;
  p.n = n;
  p.pairs.assign(pairs.begin(), pairs.end());
  std::sort(p.pairs.begin(), p.pairs.end());
  const std::set<IndexPair> set(p.pairs.begin(), p.pairs.end());
  for (unsigned i = 1; i <= n; ++i) {
    const bool to_last = set.count({i, n + 1}) > 0;
    const bool from_last = set.count({n + 1, i}) > 0;
    if (to_last == from_last) {
      throw Error(ErrorCode::InvalidArgument,
                  "odd pattern must contain exactly one of (" + std::to_string(i) + "," +
                      std::to_string(n + 1) + ") and (" + std::to_string(n + 1) + "," +
                      std::to_string(i) + ")");
    }
  }
  return p;
}

ZeroPattern OddPattern::inner() const {
  std::vector<IndexPair> kept;
  for (const auto& p : pairs) {
    if (p.first <= n && p.second <= n) kept.push_back(p);
  }
  return validate_pattern(n, kept);
}

bool is_simple(const ZeroPattern& p) {
  const std::set<IndexPair> set(p.pairs.begin(), p.pairs.end());
  for (unsigned i = 1; i <= p.n; ++i) {
    for (unsigned j = i + 1; j <= p.n; ++j) {
      if ((set.count({i, j}) > 0) == (set.count({j, i}) > 0)) return false;
    }
  }
  return true;
}

bool is_bitriangular(const ZeroPattern& p) {
  const std::set<IndexPair> set(p.pairs.begin(), p.pairs.end());
  for (const auto& [i0, j0] : p.pairs) {
    const long a = static_cast<long>(j0) - static_cast<long>(i0);
    for (unsigned i = 1; i <= p.n; ++i) {
      for (unsigned j = 1; j <= p.n; ++j) {
        if (i == j) continue;
        const long b = -a + static_cast<long>(j) - static_cast<long>(i);
        if (a * b > 0 && set.count({i, j}) == 0) return false;
      }
    }
  }
  return true;
}

Polynomial lambda_pattern(const ZeroPattern& p) {
  std::vector<LinearForm> forms;
  forms.reserve(p.pairs.size());
  for (const auto& [i, j] : p.pairs) {
    forms.push_back(coordinate_difference(p.n, i - 1, j - 1));
  }
  return expand_linear_product(forms, p.n);
}

BigInt simple_sign_characteristic_number(const ZeroPattern& p) {
  if (!is_simple(p)) {
    throw Error(ErrorCode::Precondition, "sign fast path applies to simple patterns only");
  }
  std::size_t reversed = 0;
  for (const auto& [i, j] : p.pairs) {
    if (i > j) ++reversed;
  }
  BigInt value = factorial(p.n);
  return (reversed & 1) ? BigInt(-value) : value;
}

BigInt characteristic_number_I(const ZeroPattern& p) {
  const GroupData& a = group_data({Family::UnitaryA, p.n});
  BigInt value = monomial_inner_product(lambda_pattern(p), a.f0);
  if (is_simple(p) && value != simple_sign_characteristic_number(p)) {
    throw Error(ErrorCode::Internal, "simple-pattern sign value disagrees with inner product");
  }
  return value;
}

WeightMultiset complement_weights(const ZeroPattern& p, Family family) {
  const unsigned n = p.n;
  WeightMultiset ws;
  ws.group = {family, n};
  switch (family) {
    case Family::UnitaryA:
      for (const auto& [i, j] : p.pairs) {
        ws.weights.push_back(coordinate_difference(n, i - 1, j - 1));
      }
      break;
    case Family::SymplecticC:
      for (const auto& [i, j] : p.pairs) {
        ws.weights.push_back(coordinate_difference(n, i - 1, j - 1));
        ws.weights.push_back(coordinate_sum(n, i - 1, j - 1));
      }
      for (unsigned i = 0; i < n; ++i) ws.weights.push_back(coordinate_multiple(n, i, 2));
      break;
    case Family::EvenOrthogonalD:
      for (const auto& [i, j] : p.pairs) {
        ws.weights.push_back(coordinate_difference(n, i - 1, j - 1));
        ws.weights.push_back(coordinate_sum(n, i - 1, j - 1));
      }
      break;
    case Family::OddOrthogonalB:
      throw Error(ErrorCode::FamilyMismatch, "family B takes an odd pattern");
  }
  return ws;
}

WeightMultiset complement_weights(const OddPattern& p) {
  const unsigned n = p.n;
  WeightMultiset ws;
  ws.group = {Family::OddOrthogonalB, n};
  for (const auto& [i, j] : p.inner().pairs) {
    ws.weights.push_back(coordinate_difference(n, i - 1, j - 1));
    ws.weights.push_back(coordinate_sum(n, i - 1, j - 1));
  }
  for (unsigned i = 0; i < n; ++i) ws.weights.push_back(coordinate_multiple(n, i, 1));
  return ws;
}

BigInt family_scale(Family family, unsigned n) {
  BigInt one = 1;
  switch (family) {
    case Family::UnitaryA: return one;
    case Family::SymplecticC:
    case Family::OddOrthogonalB: return one << n;
    case Family::EvenOrthogonalD: return one << (n - 1);
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

namespace {

PatternCertificate certify_inner(const ZeroPattern& inner, std::optional<OddPattern> odd,
                                 Family family) {
  PatternCertificate cert;
  cert.pattern = inner;
  cert.odd = std::move(odd);
  cert.family = family;
  cert.simple = is_simple(inner);
  cert.bitriangular = is_bitriangular(inner);
  cert.lambda_I = lambda_pattern(inner);
  cert.C_I = characteristic_number_I(inner);

  const WeightMultiset weights =
      cert.odd ? complement_weights(*cert.odd) : complement_weights(inner, family);
  const UniversalityVerdict verdict = universality_verdict(weights);
  if (!verdict.characteristic_number) {
    throw Error(ErrorCode::Internal, "pattern complement is not of optimal dimension");
  }
  BigRat c_v = *verdict.characteristic_number;
  c_v.canonicalize();
  if (c_v.get_den() != 1) {
    throw Error(ErrorCode::Internal, "pattern characteristic number is not an integer");
  }
  cert.C_V = c_v.get_num();
  if (cert.C_V != family_scale(family, inner.n) * cert.C_I) {
    throw Error(ErrorCode::Internal, "family scaling identity violated");
  }

  cert.verdict = verdict.verdict;
  if (family == Family::UnitaryA && cert.bitriangular) {
    // The two-sided theorem applies: universal iff C_I != 0, and the flag
    // count of a transversal matrix is |C_I|.
    cert.verdict = Verdict::UniversalIff;
    cert.predicted_flag_count = abs(cert.C_I);
  }
  return cert;
}

}  // namespace

PatternCertificate certify(const ZeroPattern& p, Family family) {
  if (family == Family::OddOrthogonalB) {
    throw Error(ErrorCode::FamilyMismatch,
                "family B certification takes an odd pattern (\"odd\": true)");
  }
  return certify_inner(p, std::nullopt, family);
}

PatternCertificate certify(const OddPattern& p, Family family) {
  if (family != Family::OddOrthogonalB) {
    throw Error(ErrorCode::FamilyMismatch, "odd patterns certify against family B only");
  }
  return certify_inner(p.inner(), p, family);
}

std::vector<IndexPair> pattern_slots(unsigned n) {
  std::vector<IndexPair> slots;
  slots.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  return slots;
}

ZeroPattern pattern_from_mask(unsigned n, std::uint64_t mask) {
  const std::vector<IndexPair> slots = pattern_slots(n);
  std::vector<IndexPair> pairs;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (mask & (std::uint64_t{1} << k)) pairs.push_back(slots[k]);
  }
  return validate_pattern(n, pairs);
}

std::uint64_t mask_from_pattern(const ZeroPattern& p) {
  const std::vector<IndexPair> slots = pattern_slots(p.n);
  std::uint64_t mask = 0;
  for (const auto& pair : p.pairs) {
    const auto it = std::find(slots.begin(), slots.end(), pair);
    mask |= std::uint64_t{1} << static_cast<std::size_t>(it - slots.begin());
  }
  return mask;
}

std::uint64_t combination_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  unsigned t = 0;
  for (unsigned bit = 0; bit < 64; ++bit) {
    if (mask & (std::uint64_t{1} << bit)) {
      ++t;
      rank += binomial_u64(bit, t);
    }
  }
  return rank;
}

std::uint64_t combination_unrank(unsigned slots, unsigned k, std::uint64_t rank) {
  std::uint64_t mask = 0;
  for (unsigned t = k; t >= 1; --t) {
    // Largest position whose prefix count stays within the rank.
    unsigned a = t - 1;
    while (a + 1 < slots && binomial_u64(a + 1, t) <= rank) ++a;
    rank -= binomial_u64(a, t);
    mask |= std::uint64_t{1} << a;
  }
  return mask;
}

namespace {

std::uint64_t next_same_popcount(std::uint64_t mask) {
  const std::uint64_t u = mask & (~mask + 1);
  const std::uint64_t v = mask + u;
  return v + (((v ^ mask) / u) >> 2);
}

}  // namespace

PatternFilter pattern_filter_from_name(const std::string& name) {
  if (name == "none" || name.empty()) return PatternFilter::None;
  if (name == "simple") return PatternFilter::Simple;
  if (name == "bitriangular") return PatternFilter::Bitriangular;
  throw Error(ErrorCode::InvalidArgument, "unknown filter '" + name + "'");
}

EnumerationSummary enumerate_patterns(
    const EnumerationOptions& options,
    const std::function<void(std::uint64_t, const PatternCertificate&)>& sink) {
  const unsigned n = options.n;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "enumeration needs n >= 1");
  if (n > 8) {
    throw Error(ErrorCode::InvalidArgument, "enumeration bitmasks are limited to 64 slots (n <= 8)");
  }
  const unsigned slots = n * (n - 1);
  const unsigned k = slots / 2;
  const std::uint64_t total = binomial_u64(slots, k);
  if (n > options.bound && !options.force) {
    throw Error(ErrorCode::BoundExceeded,
                "n=" + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(options.bound) + "; " + std::to_string(total) +
                    " patterns would be enumerated",
                static_cast<std::int64_t>(total), 0);
  }

  const unsigned jobs = std::max(1u, options.jobs);
  const std::uint64_t chunk = 4096;

  struct Row {
    std::uint64_t mask;
    PatternCertificate cert;
    bool keep;
  };

  EnumerationSummary summary;
  auto emit = [&](const Row& row) {
    if (!row.keep) return;
    ++summary.rows;
    if (row.cert.simple) ++summary.simple;
    if (row.cert.bitriangular) ++summary.bitriangular;
    if (row.cert.C_I == 0) ++summary.zero_c_i;
    if (sink) sink(row.mask, row.cert);
  };

  auto run_range = [&](std::uint64_t first_rank, std::uint64_t count, std::vector<Row>& out) {
    out.clear();
    out.reserve(count);
    std::uint64_t mask = combination_unrank(slots, k, first_rank);
    for (std::uint64_t r = 0; r < count; ++r) {
      Row row;
      row.mask = mask;
      row.keep = true;
      const ZeroPattern pattern = pattern_from_mask(n, mask);
      if (options.filter == PatternFilter::Simple && !is_simple(pattern)) row.keep = false;
      if (options.filter == PatternFilter::Bitriangular && !is_bitriangular(pattern)) {
        row.keep = false;
      }
      if (row.keep) {
        if (options.family == Family::OddOrthogonalB) {
          // Canonical boundary choice: every (i, n+1) slot.
          OddPattern odd;
          odd.n = n;
          odd.pairs = pattern.pairs;
          for (unsigned i = 1; i <= n; ++i) odd.pairs.emplace_back(i, n + 1);
          odd = validate_odd_pattern(n, odd.pairs);
          row.cert = certify(odd, Family::OddOrthogonalB);
        } else {
          row.cert = certify(pattern, options.family);
        }
      }
      out.push_back(std::move(row));
      if (r + 1 < count) mask = next_same_popcount(mask);
    }
  };

  if (jobs == 1) {
    std::vector<Row> rows;
    for (std::uint64_t start = 0; start < total; start += chunk) {
      run_range(start, std::min(chunk, total - start), rows);
      for (const Row& row : rows) emit(row);
    }
    return summary;
  }

  std::vector<std::vector<Row>> buffers(jobs);
  for (std::uint64_t block = 0; block < total; block += chunk * jobs) {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> failures(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint64_t start = block + chunk * t;
      if (start >= total) {
        buffers[t].clear();
        continue;
      }
      const std::uint64_t count = std::min(chunk, total - start);
      workers.emplace_back([&, t, start, count] {
        try {
          run_range(start, count, buffers[t]);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
    for (unsigned t = 0; t < jobs; ++t) {
      for (const Row& row : buffers[t]) emit(row);
    }
  }
  return summary;
}

}  // namespace unisub
