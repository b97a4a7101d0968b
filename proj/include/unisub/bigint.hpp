#ifndef UNISUB_BIGINT_HPP
#define UNISUB_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace unisub {

using BigInt = mpz_class;
using BigRat = mpq_class;

// k! with a process-wide memo; safe under concurrent calls (idempotent fill).
BigInt factorial(unsigned k);

// Exact binomial coefficient in 64 bits; throws on overflow.
std::uint64_t binomial_u64(unsigned n, unsigned k);

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// "p/q" in lowest terms, or just "p" when the denominator is one.
std::string to_decimal(const BigRat& v);

std::size_t hash_bigint(const BigInt& v);

}  // namespace unisub

#endif
