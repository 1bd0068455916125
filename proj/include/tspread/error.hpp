#ifndef TSPREAD_ERROR_HPP
#define TSPREAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tspread {

enum class ErrorCode {
  InvalidArgument,
  NotTSpread,
  OutOfRange,
  DegreeMismatch,
  EmptyVeronese,
  SegmentOrder,
  NotInBorelSet,
  NotStronglyStable,
  InvalidFtVector,
  Infeasible,
  TooLarge,
};

/// Domain error raised by every library operation. The code lets callers
/// distinguish, e.g., an empty Borel segment from a malformed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tspread

#endif  // TSPREAD_ERROR_HPP
