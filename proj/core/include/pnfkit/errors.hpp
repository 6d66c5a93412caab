#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnfkit {

/// Malformed textual or binary input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  /// 1-based offending position, or 0 when the error is not positional.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A position or count argument lies outside its valid range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// select() asked for an occurrence that does not exist.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds a desk-scale guard. Pass Guard::bypass to override.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant failed. Always a bug, never a caller mistake.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact integer arithmetic would have overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Whether a scale guard is enforced.
enum class Guard { enforce, bypass };

namespace detail {

inline void check_scale(Guard guard, std::size_t value, std::size_t limit, const char* what) {
  if (guard == Guard::enforce && value > limit) {
    throw ScaleError(std::string(what) + ": " + std::to_string(value) + " exceeds the limit of " +
                     std::to_string(limit));
  }
}

}  // namespace detail
}  // namespace pnfkit
