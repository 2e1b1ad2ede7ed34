#ifndef HIDESEEK_ERROR_H_
#define HIDESEEK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hideseek {

enum class ErrorKind {
  kDisconnectedGraph,
  kDuplicateEdge,
  kSelfLoop,
  kNodeOutOfRange,
  kMultipleCycles,
  kNotBehindCycle,
  kBadHeight,
  kBadShape,
  kTooLarge,
  kEmptyFrontier,
  kPolicyViolation,
  kNotATree,
  kPreconditionViolated,
  kBadInput,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hideseek

#endif  // HIDESEEK_ERROR_H_
