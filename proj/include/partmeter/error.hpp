#ifndef PARTMETER_ERROR_HPP
#define PARTMETER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partmeter {

enum class ErrorKind {
  EmptyComposition,
  NonPositivePart,
  Descent,
  InvalidParams,
  NoSuccessor,
  Overflow,
  MemoLimit,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind distinguishes them so the C layer can map each onto a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Position of the offending part for NonPositivePart / Descent.
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::size_t index_;
};

}  // namespace partmeter

#endif
