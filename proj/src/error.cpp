#include "artk/error.hpp"

namespace artk {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotConjugatedInto: return "NotConjugatedInto";
    case ErrorCode::NotANonEdge: return "NotANonEdge";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::InconsistentTables: return "InconsistentTables";
    case ErrorCode::NotInGroup: return "NotInGroup";
  }
  return "Unknown";
}

std::string_view to_string(Verdict verdict)
{
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

} // namespace artk
