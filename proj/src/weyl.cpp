#include "unisub/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

namespace unisub {

char family_letter(Family f) {
  switch (f) {
    case Family::UnitaryA: return 'A';
    case Family::OddOrthogonalB: return 'B';
    case Family::SymplecticC: return 'C';
    case Family::EvenOrthogonalD: return 'D';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::UnitaryA;
    case 'B': case 'b': return Family::OddOrthogonalB;
    case 'C': case 'c': return Family::SymplecticC;
    case 'D': case 'd': return Family::EvenOrthogonalD;
  }
  throw Error(ErrorCode::InvalidArgument, std::string("unknown family letter '") + c + "'");
}

WeylElement WeylElement::identity(unsigned n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0u);
  w.signs.assign(n, 1);
  return w;
}

WeylElement WeylElement::transposition(unsigned n, unsigned i, unsigned j) {
  WeylElement w = identity(n);
  std::swap(w.perm[i], w.perm[j]);
  return w;
}

int weyl_sign(const WeylElement& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    for (std::size_t j = i + 1; j < w.perm.size(); ++j) {
      if (w.perm[i] > w.perm[j]) sign = -sign;
    }
  }
  for (int s : w.signs) {
    if (s < 0) sign = -sign;
  }
  return sign;
}

bool weyl_element_valid(const WeylElement& w, GroupType group) {
  if (w.perm.size() != group.rank || w.signs.size() != group.rank) return false;
  int product = 1;
  for (int s : w.signs) product *= s;
  switch (group.family) {
    case Family::UnitaryA:
      return std::all_of(w.signs.begin(), w.signs.end(), [](int s) { return s == 1; });
    case Family::EvenOrthogonalD:
      return product == 1;
    case Family::OddOrthogonalB:
    case Family::SymplecticC:
      return true;
  }
  return false;
}

std::vector<WeylElement> weyl_generators(GroupType group) {
  const unsigned n = group.rank;
  std::vector<WeylElement> gens;
  for (unsigned i = 0; i + 1 < n; ++i) {
    gens.push_back(WeylElement::transposition(n, i, i + 1));
  }
  switch (group.family) {
    case Family::UnitaryA:
      break;
    case Family::OddOrthogonalB:
    case Family::SymplecticC: {
      WeylElement flip = WeylElement::identity(n);
      flip.signs[n - 1] = -1;
      gens.push_back(flip);
      break;
    }
    case Family::EvenOrthogonalD: {
      // Reflection through x_{n-1} + x_n: swaps the last two coordinates
      // and negates both.
      WeylElement w = WeylElement::transposition(n, n - 2, n - 1);
      w.signs[n - 2] = -1;
      w.signs[n - 1] = -1;
      gens.push_back(w);
      break;
    }
  }
  return gens;
}

Polynomial elementary_symmetric(std::size_t n, unsigned k) {
  // Coefficient extraction from prod (1 + x_i t), degree by degree.
  std::vector<Polynomial> rows(k + 1, Polynomial(n));
  rows[0] = Polynomial::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(n, i);
    for (unsigned d = std::min<unsigned>(k, static_cast<unsigned>(i + 1)); d >= 1; --d) {
      rows[d] += xi * rows[d - 1];
    }
  }
  return rows[k];
}

RootSystemSpec make_root_system(GroupType group) {
  const unsigned n = group.rank;
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (group.family == Family::EvenOrthogonalD && n < 2) {
    throw Error(ErrorCode::InvalidArgument, "family D needs rank >= 2");
  }

  RootSystemSpec spec;
  spec.group = group;

  auto add_differences = [&] {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        spec.positive_roots.push_back(coordinate_difference(n, i, j));
      }
    }
  };
  auto add_sums = [&] {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        spec.positive_roots.push_back(coordinate_sum(n, i, j));
      }
    }
  };

  switch (group.family) {
    case Family::UnitaryA: {
      add_differences();
      spec.weyl_order = factorial(n);
      for (unsigned k = 1; k <= n; ++k) {
        spec.degrees.push_back(k);
        spec.basic_invariants.push_back(elementary_symmetric(n, k));
      }
      break;
    }
    case Family::SymplecticC: {
      add_differences();
      add_sums();
      for (unsigned i = 0; i < n; ++i) {
        spec.positive_roots.push_back(coordinate_multiple(n, i, 2));
      }
      spec.weyl_order = factorial(n) << n;
      for (unsigned k = 1; k <= n; ++k) {
        spec.degrees.push_back(2 * k);
        spec.basic_invariants.push_back(substitute_squares(elementary_symmetric(n, k)));
      }
      break;
    }
    case Family::OddOrthogonalB: {
      add_differences();
      add_sums();
      for (unsigned i = 0; i < n; ++i) {
        spec.positive_roots.push_back(coordinate_multiple(n, i, 1));
      }
      spec.weyl_order = factorial(n) << n;
      for (unsigned k = 1; k <= n; ++k) {
        spec.degrees.push_back(2 * k);
        spec.basic_invariants.push_back(substitute_squares(elementary_symmetric(n, k)));
      }
      break;
    }
    case Family::EvenOrthogonalD: {
      add_differences();
      add_sums();
      spec.weyl_order = factorial(n) << (n - 1);
      for (unsigned k = 1; k < n; ++k) {
        spec.degrees.push_back(2 * k);
        spec.basic_invariants.push_back(substitute_squares(elementary_symmetric(n, k)));
      }
      spec.degrees.push_back(n);
      spec.basic_invariants.push_back(elementary_symmetric(n, n));  // x1*...*xn
      break;
    }
  }

  spec.root_count = spec.positive_roots.size();

  // Degree identities: prod d_i = |W| and sum (d_i - 1) = m.
  BigInt degree_product = 1;
  std::size_t codegree_sum = 0;
  for (unsigned d : spec.degrees) {
    degree_product *= d;
    codegree_sum += d - 1;
  }
  if (degree_product != spec.weyl_order || codegree_sum != spec.root_count) {
    throw Error(ErrorCode::Internal, "root system degree identities violated");
  }
  return spec;
}

Polynomial vandermonde(std::size_t n) {
  // Signed permutation sum over the staircase exponents (n-1, n-2, ..., 0).
  Monomial staircase(n);
  for (std::size_t i = 0; i < n; ++i) {
    staircase.exps[i] = static_cast<std::uint32_t>(n - 1 - i);
  }
  Polynomial p(n);
  p.add_term(staircase, 1);
  return antisymmetrize(p);
}

namespace {

Polynomial closed_form_f0(const RootSystemSpec& spec) {
  const unsigned n = spec.group.rank;
  switch (spec.group.family) {
    case Family::UnitaryA:
      return vandermonde(n);
    case Family::SymplecticC: {
      Polynomial f = multiply_by_all_vars(substitute_squares(vandermonde(n)));
      BigInt scale = 1;
      scale <<= n;
      return scale * f;
    }
    case Family::EvenOrthogonalD:
      return substitute_squares(vandermonde(n));
    case Family::OddOrthogonalB:
      return multiply_by_all_vars(substitute_squares(vandermonde(n)));
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

}  // namespace

Polynomial fundamental_harmonic(const RootSystemSpec& spec) {
  Polynomial f0 = expand_linear_product(spec.positive_roots, spec.group.rank);
  if (f0 != closed_form_f0(spec)) {
    throw Error(ErrorCode::Internal, "root expansion disagrees with the family closed form");
  }
  return f0;
}

Polynomial weyl_act(const WeylElement& w, const Polynomial& p) {
  return apply_signed_permutation(p, w.perm, w.signs);
}

bool is_invariant(const Polynomial& p, GroupType group) {
  if (p.vars() != group.rank) {
    throw Error(ErrorCode::VarMismatch, "polynomial variable count does not match rank");
  }
  for (const WeylElement& w : weyl_generators(group)) {
    if (weyl_act(w, p) != p) return false;
  }
  return true;
}

bool is_skew(const Polynomial& p, GroupType group) {
  if (p.vars() != group.rank) {
    throw Error(ErrorCode::VarMismatch, "polynomial variable count does not match rank");
  }
  for (const WeylElement& w : weyl_generators(group)) {
    const Polynomial image = weyl_act(w, p);
    if (weyl_sign(w) > 0 ? image != p : image != -p) return false;
  }
  return true;
}

const GroupData& group_data(GroupType group) {
  static std::map<std::pair<int, unsigned>, std::unique_ptr<GroupData>> cache;
  static std::shared_mutex mutex;
  const std::pair<int, unsigned> key{static_cast<int>(group.family), group.rank};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<GroupData>();
  data->spec = make_root_system(group);
  data->f0 = fundamental_harmonic(data->spec);
  data->f0_norm = monomial_inner_product(data->f0, data->f0);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(data));
  return *it->second;
}

bool ideal_membership(const Polynomial& f, const RootSystemSpec& spec) {
  if (f.vars() != spec.group.rank) {
    throw Error(ErrorCode::VarMismatch, "polynomial variable count does not match root system");
  }
  if (f.is_zero()) return true;
  const Polynomial& f0 = group_data(spec.group).f0;
  const std::size_t m = spec.root_count;
  for (const Polynomial& component : homogeneous_components(f)) {
    const bool member = apply_diff_operator(component, f0).is_zero();
    if (component.total_degree() == m) {
      // Degree-m shortcut along the independent pairing; the two routes
      // decide the same predicate and must agree.
      const bool shortcut = bilinear_B(component, f0) == 0;
      if (shortcut != member) {
        throw Error(ErrorCode::Internal, "degree-m membership routes disagree");
      }
    }
    if (!member) return false;
  }
  return true;
}

std::vector<std::uint64_t> harmonic_dimensions(const RootSystemSpec& spec) {
  std::vector<std::uint64_t> coeffs{1};
  for (unsigned d : spec.degrees) {
    std::vector<std::uint64_t> next(coeffs.size() + d - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (unsigned t = 0; t < d; ++t) next[i + t] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  if (coeffs.size() != spec.root_count + 1 || coeffs.back() != 1) {
    throw Error(ErrorCode::Internal, "harmonic dimension series has wrong top");
  }
  return coeffs;
}

}  // namespace unisub
