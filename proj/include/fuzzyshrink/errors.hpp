#ifndef FUZZYSHRINK_ERRORS_HPP
#define FUZZYSHRINK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyshrink {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Design matrix does not have full column rank.
class SingularDesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resampling could not produce a usable design.
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solver reached a state that should be impossible for well-posed input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { MissingColumn, NegativeSpread, NonNumeric, RaggedRow, BadHeader, Empty };

  // row is 1-based over data rows (0 = header); column is 1-based (0 = whole row).
  ParseError(Kind kind, std::size_t row, std::size_t column, const std::string& what)
      : std::runtime_error(what), kind_(kind), row_(row), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t row_;
  std::size_t column_;
};

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_ERRORS_HPP
