#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xstab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the operation's domain (k = 0, m too large, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The input exceeds a configured search capacity. Callers may fall back to
/// a heuristic and label the result an upper bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A precondition about the input graph does not hold (chromatic number,
/// missing critical edge, no edges).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A construction could not be realised at these parameters. When the
/// failure is the deficiency certificate, `achieved_deficiency` carries the
/// value that was actually obtained.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& what,
                             std::int64_t achieved_deficiency = -1)
      : Error(what), achieved_(achieved_deficiency) {}

  std::int64_t achieved_deficiency() const noexcept { return achieved_; }

 private:
  std::int64_t achieved_;
};

}  // namespace xstab
