#include "unisub/selftest.hpp"

#include <random>
#include <sstream>

#include "unisub/patterns.hpp"
#include "unisub/subspaces.hpp"

namespace unisub {

namespace {

std::vector<GroupType> groups_up_to(unsigned n_max) {
  std::vector<GroupType> groups;
  for (unsigned n = 1; n <= n_max; ++n) {
    groups.push_back({Family::UnitaryA, n});
    groups.push_back({Family::SymplecticC, n});
    groups.push_back({Family::OddOrthogonalB, n});
    if (n >= 2) groups.push_back({Family::EvenOrthogonalD, n});
  }
  return groups;
}

std::string group_name(GroupType g) {
  return std::string(1, family_letter(g.family)) + std::to_string(g.rank);
}

}  // namespace

std::vector<CheckResult> run_selftest(unsigned n_max, bool inject_fault) {
  std::vector<CheckResult> results;
  auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  };

  // The checks evaluate identities against this copy of f0; the fault
  // corrupts it by one spurious monomial of top degree.
  auto f0_for = [&](GroupType g) {
    Polynomial f0 = group_data(g).f0;
    if (inject_fault) {
      Monomial spike(g.rank);
      spike.exps[0] = f0.total_degree();
      f0.add_term(spike, 1);
    }
    return f0;
  };

  for (GroupType g : groups_up_to(n_max)) {
    const GroupData& data = group_data(g);
    const std::string tag = group_name(g);

    {
      BigInt degree_product = 1;
      std::size_t codegree_sum = 0;
      for (unsigned d : data.spec.degrees) {
        degree_product *= d;
        codegree_sum += d - 1;
      }
      record("degree-identities-" + tag, degree_product == data.spec.weyl_order &&
                                             codegree_sum == data.spec.root_count);
    }

    {
      // Root expansion against the family closed form built from public ops.
      Polynomial expanded = expand_linear_product(data.spec.positive_roots, g.rank);
      if (inject_fault) {
        Monomial spike(g.rank);
        spike.exps[0] = expanded.total_degree();
        expanded.add_term(spike, 1);
      }
      Polynomial closed;
      switch (g.family) {
        case Family::UnitaryA: closed = vandermonde(g.rank); break;
        case Family::SymplecticC: {
          BigInt two_n = 1;
          two_n <<= g.rank;
          closed = two_n * multiply_by_all_vars(substitute_squares(vandermonde(g.rank)));
          break;
        }
        case Family::EvenOrthogonalD: closed = substitute_squares(vandermonde(g.rank)); break;
        case Family::OddOrthogonalB:
          closed = multiply_by_all_vars(substitute_squares(vandermonde(g.rank)));
          break;
      }
      record("f0-closed-form-" + tag, expanded == closed);
    }

    record("f0-skew-" + tag, is_skew(f0_for(g), g));

    {
      bool ok = true;
      const Polynomial f0 = f0_for(g);
      for (const Polynomial& basic : data.spec.basic_invariants) {
        if (!apply_diff_operator(basic, f0).is_zero()) ok = false;
      }
      record("invariants-annihilate-f0-" + tag, ok);
    }

    {
      const auto dims = harmonic_dimensions(data.spec);
      std::uint64_t total = 0;
      for (std::uint64_t d : dims) total += d;
      record("harmonic-dimensions-" + tag,
             dims.back() == 1 && BigInt(static_cast<unsigned long>(total)) == data.spec.weyl_order);
    }

    {
      // Cartan complement: the positive roots themselves give C = |W|.
      const Polynomial f_t = expand_linear_product(data.spec.positive_roots, g.rank);
      const Polynomial f0 = f0_for(g);
      const BigInt num = monomial_inner_product(f_t, f0) * data.spec.weyl_order;
      const BigInt den = monomial_inner_product(f0, f0);
      record("cartan-number-" + tag, num == den * data.spec.weyl_order);
    }
  }

  {
    // Simple patterns: sign counting against the inner product, both
    // evaluated against this run's lambda_0.
    bool ok = true;
    std::mt19937_64 rng(7);
    for (unsigned n = 2; n <= std::max(3u, std::min(n_max, 4u)); ++n) {
      const Polynomial lambda0 = f0_for({Family::UnitaryA, n});
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<IndexPair> pairs;
        std::size_t reversed = 0;
        for (unsigned i = 1; i <= n; ++i) {
          for (unsigned j = i + 1; j <= n; ++j) {
            if (rng() & 1) {
              pairs.emplace_back(i, j);
            } else {
              pairs.emplace_back(j, i);
              ++reversed;
            }
          }
        }
        const ZeroPattern p = validate_pattern(n, pairs);
        const BigInt lhs = monomial_inner_product(lambda_pattern(p), lambda0);
        BigInt rhs = factorial(n);
        if (reversed & 1) rhs = -rhs;
        if (lhs != rhs) ok = false;
      }
    }
    record("simple-fast-path", ok);
  }

  {
    // Degree-m functional agreement: <f,f0> B(f0,f0) == B(f,f0) <f0,f0>.
    bool ok = true;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (GroupType g : groups_up_to(std::min(n_max, 3u))) {
      const GroupData& data = group_data(g);
      const Polynomial f0 = f0_for(g);
      const BigInt b00 = bilinear_B(f0, f0);
      const BigInt n00 = monomial_inner_product(f0, f0);
      for (int trial = 0; trial < 25; ++trial) {
        // Random degree-m polynomial supported on f0's monomials plus noise.
        Polynomial f(g.rank);
        for (const auto& [m, c] : f0.terms()) {
          f.add_term(m, coeff(rng));
        }
        Monomial probe(g.rank);
        probe.exps[0] = f0.total_degree();
        f.add_term(probe, coeff(rng));
        if (monomial_inner_product(f, f0) * b00 != bilinear_B(f, f0) * n00) ok = false;
      }
    }
    record("functional-agreement", ok);
  }

  {
    bool ok = true;
    for (unsigned n = 2; n <= std::max(n_max, 3u); ++n) {
      std::vector<IndexPair> upper;
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) upper.emplace_back(i, j);
      }
      const ZeroPattern i0 = validate_pattern(n, upper);
      const Polynomial lambda0 = f0_for({Family::UnitaryA, n});
      if (monomial_inner_product(lambda_pattern(i0), lambda0) != factorial(n)) ok = false;
    }
    record("schur-baseline", ok);
  }

  {
    const std::vector<IndexPair> pairs{{1, 3}, {1, 4}, {2, 4}, {3, 1}, {4, 1}, {4, 2}};
    const ZeroPattern p = validate_pattern(4, pairs);
    const Polynomial lambda0 = f0_for({Family::UnitaryA, 4});
    record("bitriangular-example",
           monomial_inner_product(lambda_pattern(p), lambda0) == BigInt(-12) &&
               is_bitriangular(p) && !is_simple(p));
  }

  {
    // Cross-module: pattern characteristic number equals the family-A
    // weight-multiset characteristic number.
    bool ok = true;
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      const unsigned n = 3;
      std::vector<IndexPair> pairs;
      for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
          if (rng() & 1) {
            pairs.emplace_back(i, j);
          } else {
            pairs.emplace_back(j, i);
          }
        }
      }
      const ZeroPattern p = validate_pattern(n, pairs);
      const BigRat c_v = characteristic_number(complement_weights(p, Family::UnitaryA));
      if (c_v != BigRat(characteristic_number_I(p))) ok = false;
    }
    record("pattern-weights-consistency", ok);
  }

  return results;
}

std::string selftest_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const CheckResult& r : results) width = std::max(width, r.name.size());
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) {
      os << std::string(width - r.name.size() + 2, ' ') << r.detail;
    }
    os << '\n';
  }
  std::size_t passed = 0;
  for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
  os << passed << '/' << results.size() << " checks passed\n";
  return os.str();
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace unisub
