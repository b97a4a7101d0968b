#include "unisub/polynomial.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace unisub {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::VarMismatch,
                "variable-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VarMismatch: return "VarMismatch";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::DiagonalPair: return "DiagonalPair";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::IndexRange: return "IndexRange";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::UnstableCount: return "UnstableCount";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

BigInt factorial(unsigned k) {
  static std::deque<BigInt> memo{1_mpz, 1_mpz};
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (k < memo.size()) return memo[k];
  }
  std::unique_lock lock(mutex);
  while (memo.size() <= k) {
    memo.push_back(memo.back() * static_cast<unsigned long>(memo.size()));
  }
  return memo[k];
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  if (!r.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidArgument, "binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r.get_ui());
}

std::string to_decimal(const BigRat& v) {
  BigRat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_str();
}

std::size_t hash_bigint(const BigInt& v) {
  // Residue-based hash; cheap and stable across runs.
  std::size_t h = static_cast<std::size_t>(mpz_fdiv_ui(v.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull));
  return h ^ (static_cast<std::size_t>(sgn(v) + 1) << 62);
}

std::uint32_t Monomial::total_degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint32_t da = a.total_degree();
  const std::uint32_t db = b.total_degree();
  if (da != db) return da < db;
  // Equal degree: lexicographic with x1 heaviest.
  for (std::size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  }
  return a.exps.size() < b.exps.size();
}

Polynomial Polynomial::constant(std::size_t vars, BigInt c) {
  Polynomial p(vars);
  p.add_term(Monomial(vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t index, std::uint32_t power) {
  if (index >= vars) throw Error(ErrorCode::IndexRange, "variable index out of range");
  Monomial m(vars);
  m.exps[index] = power;
  Polynomial p(vars);
  p.add_term(m, 1);
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = terms_.begin()->first.total_degree();
  return terms_.rbegin()->first.total_degree() == d;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (m.vars() != vars_) {
    throw Error(ErrorCode::VarMismatch, "monomial length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_vars(vars_, rhs.vars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_vars(vars_, rhs.vars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    *this = Polynomial(vars_);
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r(a.vars());
  for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a.vars(), b.vars());
  Polynomial r(a.vars());
  Monomial prod(a.vars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < prod.exps.size(); ++i) {
        prod.exps[i] = ma.exps[i] + mb.exps[i];
      }
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const BigInt& c, const Polynomial& a) {
  Polynomial r = a;
  r *= c;
  return r;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(coeffs.size());
    m.exps[i] = 1;
    p.add_term(m, BigInt(static_cast<long>(coeffs[i])));
  }
  return p;
}

LinearForm coordinate_difference(std::size_t vars, std::size_t i, std::size_t j) {
  LinearForm f(vars);
  f.coeffs.at(i) += 1;
  f.coeffs.at(j) -= 1;
  return f;
}

LinearForm coordinate_sum(std::size_t vars, std::size_t i, std::size_t j) {
  LinearForm f(vars);
  f.coeffs.at(i) += 1;
  f.coeffs.at(j) += 1;
  return f;
}

LinearForm coordinate_multiple(std::size_t vars, std::size_t i, std::int64_t c) {
  LinearForm f(vars);
  f.coeffs.at(i) = c;
  return f;
}

Polynomial expand_linear_product(std::span<const LinearForm> forms, std::size_t vars) {
  Polynomial r = Polynomial::constant(vars, 1);
  for (const LinearForm& f : forms) {
    require_same_vars(f.vars(), vars);
    r = r * f.to_polynomial();
  }
  return r;
}

Polynomial substitute_squares(const Polynomial& p) {
  Polynomial r(p.vars());
  Monomial m2(p.vars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) m2.exps[i] = 2 * m.exps[i];
    r.add_term(m2, c);
  }
  return r;
}

Polynomial multiply_by_all_vars(const Polynomial& p) {
  Polynomial r(p.vars());
  Monomial shifted(p.vars());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.exps.size(); ++i) shifted.exps[i] = m.exps[i] + 1;
    r.add_term(shifted, c);
  }
  return r;
}

BigInt monomial_inner_product(const Polynomial& p, const Polynomial& q) {
  require_same_vars(p.vars(), q.vars());
  // Walk the smaller term map.
  const Polynomial& small = p.term_count() <= q.term_count() ? p : q;
  const Polynomial& large = p.term_count() <= q.term_count() ? q : p;
  BigInt sum = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

Polynomial apply_diff_operator(const Polynomial& f, const Polynomial& g) {
  require_same_vars(f.vars(), g.vars());
  Polynomial r(g.vars());
  Monomial out(g.vars());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      BigInt scale = 1;
      bool killed = false;
      for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (b.exps[i] < a.exps[i]) {
          killed = true;
          break;
        }
        // Falling factorial b_i (b_i - 1) ... (b_i - a_i + 1).
        for (std::uint32_t t = 0; t < a.exps[i]; ++t) {
          scale *= static_cast<unsigned long>(b.exps[i] - t);
        }
        out.exps[i] = b.exps[i] - a.exps[i];
      }
      if (killed) continue;
      r.add_term(out, ca * cb * scale);
    }
  }
  return r;
}

BigInt bilinear_B(const Polynomial& f, const Polynomial& g) {
  require_same_vars(f.vars(), g.vars());
  const Polynomial& small = f.term_count() <= g.term_count() ? f : g;
  const Polynomial& large = f.term_count() <= g.term_count() ? g : f;
  BigInt sum = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    BigInt w = c * it->second;
    for (std::uint32_t e : m.exps) w *= factorial(e);
    sum += w;
  }
  return sum;
}

Polynomial apply_signed_permutation(const Polynomial& p, std::span<const unsigned> perm,
                                    std::span<const int> signs) {
  if (perm.size() != p.vars() || signs.size() != p.vars()) {
    throw Error(ErrorCode::VarMismatch, "permutation/sign length does not match variable count");
  }
  Polynomial r(p.vars());
  Monomial image(p.vars());
  for (const auto& [m, c] : p.terms()) {
    std::fill(image.exps.begin(), image.exps.end(), 0u);
    int sign = 1;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      image.exps[perm[i]] += m.exps[i];
      if (signs[i] < 0 && (m.exps[i] & 1u)) sign = -sign;
    }
    r.add_term(image, sign < 0 ? BigInt(-c) : c);
  }
  return r;
}

Polynomial antisymmetrize(const Polynomial& p) {
  const std::size_t n = p.vars();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  const std::vector<int> signs(n, 1);
  Polynomial r(n);
  do {
    // Permutation sign by counting inversions.
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inv;
      }
    }
    Polynomial image = apply_signed_permutation(p, perm, signs);
    if (inv & 1) {
      r -= image;
    } else {
      r += image;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

std::vector<Polynomial> homogeneous_components(const Polynomial& p) {
  std::map<std::uint32_t, Polynomial> by_degree;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = by_degree.try_emplace(m.total_degree(), Polynomial(p.vars()));
    it->second.add_term(m, c);
  }
  std::vector<Polynomial> out;
  out.reserve(by_degree.size());
  for (auto& [d, comp] : by_degree) out.push_back(std::move(comp));
  return out;
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const BigInt mag = abs(c);
    const bool constant_term = m.total_degree() == 0;
    bool wrote_coeff = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote_coeff = true;
    }
    bool wrote_var = false;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (wrote_coeff || wrote_var) os << '*';
      os << 'x' << (i + 1);
      if (m.exps[i] > 1) os << '^' << m.exps[i];
      wrote_var = true;
    }
  }
  return os.str();
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = 0x9E3779B97F4A7C15ull;
  for (std::uint32_t e : m.exps) h = (h ^ e) * 0x100000001B3ull;
  return h;
}

std::size_t hash_value(const Polynomial& p) {
  std::size_t h = p.vars();
  for (const auto& [m, c] : p.terms()) {
    h = h * 0x100000001B3ull + hash_value(m);
    h ^= hash_bigint(c);
  }
  return h;
}

}  // namespace unisub
