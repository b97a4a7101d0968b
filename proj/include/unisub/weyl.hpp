#ifndef UNISUB_WEYL_HPP
#define UNISUB_WEYL_HPP

/*
  Root data for the classical compact groups, in the standard orthonormal
  coordinates x1..xn of the maximal torus:

    family A  (unitary U(n)):        x_i - x_j (i<j)
    family C  (symplectic Sp(n)):    x_i +- x_j (i<j), 2x_i
    family D  (orthogonal SO(2n)):   x_i +- x_j (i<j)
    family B  (orthogonal SO(2n+1)): x_i +- x_j (i<j), x_i

  The Weyl group acts by (signed) coordinate permutations; invariance and
  skewness are decided on a generating set. The central predicate of the
  toolkit is ideal_membership: f lies in the ideal generated by the basic
  invariants iff d_f kills the product of the positive roots.
*/

#include <cstdint>
#include <vector>

#include "unisub/polynomial.hpp"

namespace unisub {

enum class Family { UnitaryA, OddOrthogonalB, SymplecticC, EvenOrthogonalD };

char family_letter(Family f);
Family family_from_letter(char c);

struct GroupType {
  Family family;
  unsigned rank;  // number of x-variables

  bool operator==(const GroupType&) const = default;
};

/// Signed permutation: x_i -> signs[i] * x_{perm[i]} (zero-based).
struct WeylElement {
  std::vector<unsigned> perm;
  std::vector<int> signs;

  static WeylElement identity(unsigned n);
  static WeylElement transposition(unsigned n, unsigned i, unsigned j);
};

/// det of the element as an orthogonal map: sgn(perm) * prod(signs).
int weyl_sign(const WeylElement& w);

/// Sign-vector constraint of the family: all +1 for A, even product for D.
bool weyl_element_valid(const WeylElement& w, GroupType group);

/// A generating set: adjacent transpositions plus the sign generator of the
/// family (none for A, a single flip for B/C, a flip-pair reflection for D).
std::vector<WeylElement> weyl_generators(GroupType group);

struct RootSystemSpec {
  GroupType group;
  std::vector<LinearForm> positive_roots;
  std::size_t root_count = 0;  // m = |positive roots|
  BigInt weyl_order;
  std::vector<unsigned> degrees;            // d_1..d_r
  std::vector<Polynomial> basic_invariants; // F_1..F_r, matching degrees
};

RootSystemSpec make_root_system(GroupType group);

/// The alternant prod_{i<j}(x_i - x_j), built from the signed permutation sum.
Polynomial vandermonde(std::size_t n);

/// Product of the positive roots. Cross-checked internally against the
/// family closed form (Vandermonde in x or x^2, times x1..xn and 2^n where
/// the family calls for it); throws Internal on mismatch.
Polynomial fundamental_harmonic(const RootSystemSpec& spec);

Polynomial weyl_act(const WeylElement& w, const Polynomial& p);

bool is_invariant(const Polynomial& p, GroupType group);
bool is_skew(const Polynomial& p, GroupType group);

/// f in the ideal generated by the basic invariants. Non-homogeneous input
/// is split into homogeneous components (the ideal is graded). At degree m
/// the B(f, f_0) shortcut is evaluated as well and must agree.
bool ideal_membership(const Polynomial& f, const RootSystemSpec& spec);

/// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)), degrees 0..m.
std::vector<std::uint64_t> harmonic_dimensions(const RootSystemSpec& spec);

/// Elementary symmetric polynomial e_k(x1..xn).
Polynomial elementary_symmetric(std::size_t n, unsigned k);

/// Spec, fundamental harmonic and its norm, memoized per group. The
/// construction is deterministic, so the cache is shared freely across
/// threads; returned references stay valid for the process lifetime.
struct GroupData {
  RootSystemSpec spec;
  Polynomial f0;
  BigInt f0_norm;  // <f0, f0>
};

const GroupData& group_data(GroupType group);

}  // namespace unisub

#endif
