#ifndef UNISUB_FLAGSEARCH_HPP
#define UNISUB_FLAGSEARCH_HPP

/*
  Numerical flag search: find unitary g with (g* A g)_{ij} = 0 on a zero
  pattern, count the distinct flags mod torus, and scan the sign of
  det(psi_v) over random pattern-respecting matrices.

  The search runs multi-start Gauss-Newton on the squared pattern residual
  over the flag manifold. Tangent directions are skew-Hermitian matrices
  with zero diagonal (the diagonal directions are the torus gauge and are
  excluded), the retraction is the matrix exponential, and steps are
  damped by Armijo backtracking. The system is square: 2m real residuals
  against 2m real flag coordinates. Every restart derives its own RNG
  stream from (seed, restart index), so results are reproducible and
  independent of the parallelism degree.
*/

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "unisub/patterns.hpp"

namespace unisub {

inline constexpr std::uint64_t kDefaultSeed = 1234567891;
inline constexpr double kDefaultTolerance = 1e-10;

/// 200 * n!, the default multi-start budget.
std::uint64_t default_restarts(unsigned n);

struct FlagProblem {
  unsigned n = 0;
  Eigen::MatrixXcd matrix;
  ZeroPattern pattern;
  double tolerance = kDefaultTolerance;
  std::uint64_t restarts = 0;  // 0 means default_restarts(n)
  std::uint64_t rng_seed = kDefaultSeed;

  std::uint64_t restart_budget() const;
};

void validate_problem(const FlagProblem& problem);

struct FlagSolution {
  Eigen::MatrixXcd conjugator;  // unitary g with g* A g in the pattern
  double residual = 0.0;        // sqrt(sum of |pattern entries|^2)
  // Diagonal of g* A g in position order. Torus conjugation fixes each
  // entry in place, so this identifies the flag mod torus; distinct flags
  // of a generic matrix have distinct diagonal sequences.
  std::vector<std::complex<double>> signature;
};

/// One Gauss-Newton run from the given unitary start; empty when it does
/// not reach the tolerance. Non-finite breakdowns abort the run quietly.
std::optional<FlagSolution> flag_restart(const FlagProblem& problem, const Eigen::MatrixXcd& g0);

/// First converged restart in index order (restart 0 starts at the
/// identity, later ones at seeded random unitaries). Absence of a solution
/// is a legitimate outcome, not an error.
std::optional<FlagSolution> find_flag(const FlagProblem& problem, unsigned jobs = 1);

struct DistinctFlag {
  FlagSolution solution;
  std::uint64_t first_restart = 0;  // earliest restart index that found it
  bool transversal = false;
};

struct FlagCountReport {
  std::vector<DistinctFlag> flags;  // sorted by the signature total order
  std::vector<std::uint64_t> stage_counts;  // distinct counts after each doubling
  std::uint64_t restarts_used = 0;
  bool stable = false;

  std::uint64_t count() const { return flags.size(); }
};

/// Runs the restart budget, doubling it until two consecutive stages agree
/// (at most twice). Signatures within 1e-6 per diagonal entry collapse to
/// one flag.
FlagCountReport count_flags_report(const FlagProblem& problem, unsigned jobs = 1);

/// Distinct-flag count; throws UnstableCount (with the two disagreeing
/// counts in the payload) when doubling does not settle.
std::uint64_t count_flags(const FlagProblem& problem, unsigned jobs = 1);

/// Matrix of X -> P_W([v, X]) on the real basis {E_ij - E_ji, i(E_ij+E_ji)}
/// of the flag tangent space against the pattern basis {E_ij, iE_ij},
/// both in lexicographic slot order. Throws when v violates the pattern.
Eigen::MatrixXd psi_matrix(const Eigen::MatrixXcd& v, const ZeroPattern& pattern);

struct PsiScanReport {
  std::uint64_t samples = 0;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  std::uint64_t zero = 0;  // |det| < 1e-12
  bool sign_constant = false;
};

/// Determinant sign census of psi_v over pattern-respecting v with
/// independent standard complex Gaussian free entries.
PsiScanReport psi_sign_scan(const ZeroPattern& pattern, std::uint64_t samples,
                            std::uint64_t seed);

/// |det psi_v| > 1e-9 for v = g* A g with the pattern slots zeroed.
bool transversality_check(const FlagSolution& solution, const ZeroPattern& pattern,
                          const Eigen::MatrixXcd& A);

Eigen::MatrixXcd random_unitary(unsigned n, std::mt19937_64& rng);
Eigen::MatrixXcd random_complex_matrix(unsigned n, std::uint64_t seed);

/// Operator norm of g* g - I.
double unitarity_error(const Eigen::MatrixXcd& g);

}  // namespace unisub

#endif
