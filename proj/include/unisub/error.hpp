#ifndef UNISUB_ERROR_HPP
#define UNISUB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unisub {

enum class ErrorCode {
  InvalidArgument,
  VarMismatch,        // polynomial/form variable counts differ
  WrongCardinality,   // pattern pair count != n(n-1)/2
  DiagonalPair,
  DuplicatePair,
  IndexRange,         // pair index outside 1..n
  FamilyMismatch,
  DegreeMismatch,     // characteristic number requested at d != m
  ZeroWeight,
  NoExtension,        // shrink found no admissible character
  BoundExceeded,      // enumeration gate
  UnstableCount,      // flag count changed under two consecutive doublings
  Precondition,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(ErrorCode code, std::string message, std::int64_t a, std::int64_t b)
      : std::runtime_error(std::move(message)), code_(code), payload_a_(a), payload_b_(b) {}

  ErrorCode code() const noexcept { return code_; }
  // Payload meaning depends on the code: BoundExceeded carries the projected
  // enumeration size in a; UnstableCount carries the two disagreeing counts.
  std::int64_t payload_a() const noexcept { return payload_a_; }
  std::int64_t payload_b() const noexcept { return payload_b_; }

 private:
  ErrorCode code_;
  std::int64_t payload_a_ = 0;
  std::int64_t payload_b_ = 0;
};

}  // namespace unisub

#endif
