#include "unisub/flagsearch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace unisub {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

/// Zero-based pattern slots in the order fixed by the sorted pair list.
std::vector<std::pair<int, int>> slot_indices(const ZeroPattern& pattern) {
  std::vector<std::pair<int, int>> slots;
  slots.reserve(pattern.pairs.size());
  for (const auto& [i, j] : pattern.pairs) {
    slots.emplace_back(static_cast<int>(i) - 1, static_cast<int>(j) - 1);
  }
  return slots;
}

double pattern_residual(const MatrixXcd& b, const std::vector<std::pair<int, int>>& slots) {
  double sum = 0.0;
  for (const auto& [i, j] : slots) sum += std::norm(b(i, j));
  return std::sqrt(sum);
}

/// exp(X) for skew-Hermitian X via the Hermitian eigendecomposition of -iX.
MatrixXcd exp_skew_hermitian(const MatrixXcd& x) {
  const MatrixXcd h = Complex(0, -1) * x;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const auto& values = es.eigenvalues();
  MatrixXcd phases = MatrixXcd::Zero(x.rows(), x.cols());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    phases(k, k) = std::polar(1.0, values[k]);
  }
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

MatrixXcd orthonormalize(const MatrixXcd& g) {
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < g.cols(); ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

bool signatures_match(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-6) return false;
  }
  return true;
}

/// Fixed total order on complex numbers: lexicographic on rounded
/// (real, imaginary) parts; used to order reported signatures.
bool signature_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto key = [](double v) { return std::round(v * 1e9); };
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    const double ra = key(a[k].real()), rb = key(b[k].real());
    if (ra != rb) return ra < rb;
    const double ia = key(a[k].imag()), ib = key(b[k].imag());
    if (ia != ib) return ia < ib;
  }
  return a.size() < b.size();
}

struct IndexedSolution {
  std::uint64_t restart = 0;
  FlagSolution solution;
};

/// Restarts [first, last) in index order; converged solutions only.
std::vector<IndexedSolution> run_restart_range(const FlagProblem& problem, std::uint64_t first,
                                               std::uint64_t last, unsigned jobs) {
  std::vector<IndexedSolution> found;
  auto run_one = [&](std::uint64_t index) -> std::optional<FlagSolution> {
    MatrixXcd g0;
    if (index == 0) {
      g0 = MatrixXcd::Identity(problem.n, problem.n);
    } else {
      auto rng = restart_rng(problem.rng_seed, index);
      g0 = random_unitary(problem.n, rng);
    }
    return flag_restart(problem, g0);
  };

  if (jobs <= 1) {
    for (std::uint64_t r = first; r < last; ++r) {
      if (auto sol = run_one(r)) found.push_back({r, std::move(*sol)});
    }
    return found;
  }

  const std::uint64_t count = last - first;
  std::vector<std::optional<FlagSolution>> results(count);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> failures(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::uint64_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
          results[k] = run_one(first + k);
        }
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  for (std::uint64_t k = 0; k < count; ++k) {
    if (results[k]) found.push_back({first + k, std::move(*results[k])});
  }
  return found;
}

}  // namespace

std::uint64_t default_restarts(unsigned n) {
  std::uint64_t budget = 200;
  for (unsigned k = 2; k <= n; ++k) budget *= k;
  return budget;
}

std::uint64_t FlagProblem::restart_budget() const {
  return restarts == 0 ? default_restarts(n) : restarts;
}

void validate_problem(const FlagProblem& problem) {
  if (problem.n < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be positive");
  if (problem.matrix.rows() != problem.n || problem.matrix.cols() != problem.n) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape does not match n");
  }
  if (!problem.matrix.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  if (problem.pattern.n != problem.n) {
    throw Error(ErrorCode::InvalidArgument, "pattern size does not match matrix size");
  }
  if (!(problem.tolerance > 0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  // Re-validate the pair list (patterns arriving from JSON are already
  // canonical; this keeps hand-built problems honest).
  validate_pattern(problem.pattern.n, problem.pattern.pairs);
}

Eigen::MatrixXcd random_unitary(unsigned n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXcd z(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      z(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return orthonormalize(z);
}

Eigen::MatrixXcd random_complex_matrix(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXcd a(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return a;
}

double unitarity_error(const Eigen::MatrixXcd& g) {
  const MatrixXcd defect = g.adjoint() * g - MatrixXcd::Identity(g.rows(), g.cols());
  return defect.jacobiSvd().singularValues()(0);
}

std::optional<FlagSolution> flag_restart(const FlagProblem& problem, const MatrixXcd& g0) {
  const unsigned n = problem.n;
  const auto slots = slot_indices(problem.pattern);
  const std::size_t m = slots.size();
  const Eigen::Index dim = static_cast<Eigen::Index>(2 * m);

  MatrixXcd g = g0;
  MatrixXcd b = g.adjoint() * problem.matrix * g;
  double rnorm = pattern_residual(b, slots);

  constexpr int kMaxIterations = 100;
  constexpr double kArmijo = 1e-4;
  int polish_left = 3;

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if (!b.allFinite()) return std::nullopt;
    if (rnorm <= problem.tolerance && polish_left == 0) break;
    if (rnorm <= problem.tolerance) --polish_left;
    if (m == 0) break;

    // Residual and Jacobian of X -> entries of e^{-X} B e^{X} on the slots.
    VectorXd r(dim);
    for (std::size_t s = 0; s < m; ++s) {
      const Complex value = b(slots[s].first, slots[s].second);
      r(static_cast<Eigen::Index>(2 * s)) = value.real();
      r(static_cast<Eigen::Index>(2 * s + 1)) = value.imag();
    }
    MatrixXd jac(dim, dim);
    std::size_t col = 0;
    for (unsigned p = 0; p < n; ++p) {
      for (unsigned q = p + 1; q < n; ++q) {
        // [B, Y] restricted to the slots, for Y = E_pq - E_qp and
        // Y = i(E_pq + E_qp). Only row p/q and column p/q entries move.
        for (std::size_t s = 0; s < m; ++s) {
          const int i = slots[s].first;
          const int j = slots[s].second;
          Complex d_re(0, 0), d_im(0, 0);
          // (B Y)_{ij}
          if (q == static_cast<unsigned>(j)) {
            d_re += b(i, static_cast<int>(p));
            d_im += Complex(0, 1) * b(i, static_cast<int>(p));
          }
          if (p == static_cast<unsigned>(j)) {
            d_re -= b(i, static_cast<int>(q));
            d_im += Complex(0, 1) * b(i, static_cast<int>(q));
          }
          // -(Y B)_{ij}
          if (p == static_cast<unsigned>(i)) {
            d_re -= b(static_cast<int>(q), j);
            d_im -= Complex(0, 1) * b(static_cast<int>(q), j);
          }
          if (q == static_cast<unsigned>(i)) {
            d_re += b(static_cast<int>(p), j);
            d_im -= Complex(0, 1) * b(static_cast<int>(p), j);
          }
          jac(static_cast<Eigen::Index>(2 * s), static_cast<Eigen::Index>(2 * col)) = d_re.real();
          jac(static_cast<Eigen::Index>(2 * s + 1), static_cast<Eigen::Index>(2 * col)) =
              d_re.imag();
          jac(static_cast<Eigen::Index>(2 * s), static_cast<Eigen::Index>(2 * col + 1)) =
              d_im.real();
          jac(static_cast<Eigen::Index>(2 * s + 1), static_cast<Eigen::Index>(2 * col + 1)) =
              d_im.imag();
        }
        ++col;
      }
    }

    VectorXd delta = jac.colPivHouseholderQr().solve(-r);
    if (!delta.allFinite()) return std::nullopt;

    MatrixXcd x = MatrixXcd::Zero(n, n);
    std::size_t idx = 0;
    for (unsigned p = 0; p < n; ++p) {
      for (unsigned q = p + 1; q < n; ++q) {
        const Complex z(delta(static_cast<Eigen::Index>(2 * idx)),
                        delta(static_cast<Eigen::Index>(2 * idx + 1)));
        x(p, q) = z;
        x(q, p) = -std::conj(z);
        ++idx;
      }
    }
    const double xnorm = x.norm();
    if (xnorm > 5.0) x *= 5.0 / xnorm;  // keep the retraction in a sane range

    const double phi0 = rnorm * rnorm;
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-8) {
      const MatrixXcd g_try = g * exp_skew_hermitian(step * x);
      const MatrixXcd b_try = g_try.adjoint() * problem.matrix * g_try;
      const double r_try = pattern_residual(b_try, slots);
      if (r_try * r_try <= phi0 * (1.0 - 2.0 * kArmijo * step)) {
        g = g_try;
        b = b_try;
        rnorm = r_try;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // stalled; the restart either converged already or failed
  }

  if (!(rnorm <= problem.tolerance)) return std::nullopt;

  // Final gauge cleanup: restore exact unitarity and re-measure.
  g = orthonormalize(g);
  b = g.adjoint() * problem.matrix * g;
  rnorm = pattern_residual(b, slots);
  if (!(rnorm <= problem.tolerance)) return std::nullopt;

  FlagSolution solution;
  solution.conjugator = g;
  solution.residual = rnorm;
  solution.signature.reserve(n);
  for (unsigned i = 0; i < n; ++i) solution.signature.push_back(b(i, i));
  return solution;
}

std::optional<FlagSolution> find_flag(const FlagProblem& problem, unsigned jobs) {
  validate_problem(problem);
  const std::uint64_t budget = problem.restart_budget();
  const std::uint64_t block = jobs <= 1 ? 1 : static_cast<std::uint64_t>(jobs) * 8;
  for (std::uint64_t start = 0; start < budget; start += block) {
    const std::uint64_t stop = std::min(budget, start + block);
    auto found = run_restart_range(problem, start, stop, jobs);
    if (!found.empty()) return std::move(found.front().solution);
  }
  return std::nullopt;
}

FlagCountReport count_flags_report(const FlagProblem& problem, unsigned jobs) {
  validate_problem(problem);
  FlagCountReport report;
  std::vector<DistinctFlag> distinct;

  auto absorb = [&](std::vector<IndexedSolution> found) {
    for (auto& item : found) {
      bool known = false;
      for (const DistinctFlag& flag : distinct) {
        if (signatures_match(flag.solution.signature, item.solution.signature)) {
          known = true;
          break;
        }
      }
      if (!known) {
        distinct.push_back({std::move(item.solution), item.restart, false});
      }
    }
  };

  const std::uint64_t base = problem.restart_budget();
  std::uint64_t done = 0;
  // Stage budgets base, 2*base, 4*base; stop at the first repeat count.
  for (int stage = 0; stage < 3; ++stage) {
    const std::uint64_t target = base << stage;
    absorb(run_restart_range(problem, done, target, jobs));
    done = target;
    report.stage_counts.push_back(distinct.size());
    const std::size_t s = report.stage_counts.size();
    if (s >= 2 && report.stage_counts[s - 1] == report.stage_counts[s - 2]) {
      report.stable = true;
      break;
    }
  }
  report.restarts_used = done;

  for (DistinctFlag& flag : distinct) {
    flag.transversal = transversality_check(flag.solution, problem.pattern, problem.matrix);
  }
  std::sort(distinct.begin(), distinct.end(), [](const DistinctFlag& a, const DistinctFlag& b) {
    return signature_less(a.solution.signature, b.solution.signature);
  });
  report.flags = std::move(distinct);
  return report;
}

std::uint64_t count_flags(const FlagProblem& problem, unsigned jobs) {
  const FlagCountReport report = count_flags_report(problem, jobs);
  if (!report.stable) {
    const std::size_t s = report.stage_counts.size();
    throw Error(ErrorCode::UnstableCount,
                "flag count kept changing under restart doubling: " +
                    std::to_string(report.stage_counts[s - 2]) + " then " +
                    std::to_string(report.stage_counts[s - 1]),
                static_cast<std::int64_t>(report.stage_counts[s - 2]),
                static_cast<std::int64_t>(report.stage_counts[s - 1]));
  }
  return report.count();
}

Eigen::MatrixXd psi_matrix(const MatrixXcd& v, const ZeroPattern& pattern) {
  const unsigned n = pattern.n;
  if (v.rows() != n || v.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "matrix shape does not match pattern");
  }
  const auto slots = slot_indices(pattern);
  for (const auto& [i, j] : slots) {
    if (std::abs(v(i, j)) > 1e-12) {
      throw Error(ErrorCode::Precondition, "matrix violates the zero pattern");
    }
  }
  const std::size_t m = slots.size();
  MatrixXd psi(2 * m, 2 * m);
  std::size_t col = 0;
  for (unsigned p = 0; p < n; ++p) {
    for (unsigned q = p + 1; q < n; ++q) {
      // Columns for Y = E_pq - E_qp and Y = i(E_pq + E_qp): entries of
      // [v, Y] on the pattern slots.
      for (std::size_t s = 0; s < m; ++s) {
        const int i = slots[s].first;
        const int j = slots[s].second;
        Complex c_re(0, 0), c_im(0, 0);
        // (v Y)_{ij}
        if (q == static_cast<unsigned>(j)) {
          c_re += v(i, static_cast<int>(p));
          c_im += Complex(0, 1) * v(i, static_cast<int>(p));
        }
        if (p == static_cast<unsigned>(j)) {
          c_re -= v(i, static_cast<int>(q));
          c_im += Complex(0, 1) * v(i, static_cast<int>(q));
        }
        // -(Y v)_{ij}
        if (p == static_cast<unsigned>(i)) {
          c_re -= v(static_cast<int>(q), j);
          c_im -= Complex(0, 1) * v(static_cast<int>(q), j);
        }
        if (q == static_cast<unsigned>(i)) {
          c_re += v(static_cast<int>(p), j);
          c_im -= Complex(0, 1) * v(static_cast<int>(p), j);
        }
        psi(static_cast<Eigen::Index>(2 * s), static_cast<Eigen::Index>(2 * col)) = c_re.real();
        psi(static_cast<Eigen::Index>(2 * s + 1), static_cast<Eigen::Index>(2 * col)) =
            c_re.imag();
        psi(static_cast<Eigen::Index>(2 * s), static_cast<Eigen::Index>(2 * col + 1)) =
            c_im.real();
        psi(static_cast<Eigen::Index>(2 * s + 1), static_cast<Eigen::Index>(2 * col + 1)) =
            c_im.imag();
      }
      ++col;
    }
  }
  return psi;
}

PsiScanReport psi_sign_scan(const ZeroPattern& pattern, std::uint64_t samples,
                            std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const unsigned n = pattern.n;
  const std::set<IndexPair> in_pattern(pattern.pairs.begin(), pattern.pairs.end());

  PsiScanReport report;
  report.samples = samples;
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    MatrixXcd v = MatrixXcd::Zero(n, n);
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = 1; j <= n; ++j) {
        if (i != j && in_pattern.count({i, j}) > 0) continue;
        v(i - 1, j - 1) = Complex(gauss(rng), gauss(rng));
      }
    }
    const double det = psi_matrix(v, pattern).determinant();
    if (std::abs(det) < 1e-12) {
      ++report.zero;
    } else if (det > 0) {
      ++report.plus;
    } else {
      ++report.minus;
    }
  }
  report.sign_constant = !(report.plus > 0 && report.minus > 0);
  return report;
}

bool transversality_check(const FlagSolution& solution, const ZeroPattern& pattern,
                          const MatrixXcd& A) {
  MatrixXcd v = solution.conjugator.adjoint() * A * solution.conjugator;
  for (const auto& [i, j] : slot_indices(pattern)) v(i, j) = Complex(0, 0);
  return std::abs(psi_matrix(v, pattern).determinant()) > 1e-9;
}

}  // namespace unisub
