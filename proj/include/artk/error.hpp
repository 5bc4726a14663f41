#ifndef ARTK_ERROR_HPP
#define ARTK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace artk {

enum class ErrorCode {
  DuplicateVertex,
  UnknownVertex,
  InvalidLabel,
  LoopEdge,
  DuplicateEdge,
  InvalidName,
  Syntax,
  CapExceeded,
  GraphMismatch,
  NotConjugatedInto,
  NotANonEdge,
  NotParabolic,
  InconsistentTables,
  NotInGroup,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
  : std::runtime_error(what), _code(code)
  {}

  ErrorCode code() const noexcept
  { return _code; }

private:
  ErrorCode _code;
};

// Raised whenever an enumeration would exceed its configured bound. Never
// caught internally: a truncated enumeration is never reported as complete.
class CapExceeded : public Error {
public:
  CapExceeded(std::string_view what_was_enumerated, std::size_t cap)
  : Error(ErrorCode::CapExceeded,
          std::string(what_was_enumerated) + " exceeded cap " + std::to_string(cap))
  {}
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict verdict);

} // namespace artk

#endif // ARTK_ERROR_HPP
