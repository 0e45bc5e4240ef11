#pragma once

#include <stdexcept>
#include <string>

namespace mawkit {

enum class ErrorKind {
  InvalidInput,      // malformed word, symbol outside the alphabet, bad UTF-8
  AlphabetMismatch,  // two operands built over different alphabets
  NoWord,            // a forbidden system that no bi-infinite word satisfies
  MultipleWords,     // a forbidden system satisfied by more than one shift-class
  Overflow,          // exact integer arithmetic out of range
  BudgetExceeded,    // exhaustive search larger than the configured budget
  Inconclusive,      // search horizon too small to answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mawkit
