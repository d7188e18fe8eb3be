#include "partmeter/error.hpp"

namespace partmeter {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyComposition: return "empty composition";
    case ErrorKind::NonPositivePart: return "non-positive part";
    case ErrorKind::Descent: return "descent";
    case ErrorKind::InvalidParams: return "invalid parameters";
    case ErrorKind::NoSuccessor: return "no successor";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::MemoLimit: return "memo limit exceeded";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

}  // namespace partmeter
