#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

// Mixed moduli, mismatched variable sets, malformed flag combinations.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (p not 1 mod 3,
// q not a power of the characteristic, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

// A configured work cap was exceeded; the computation was aborted rather
// than allowed to return a possibly wrong or never-arriving answer.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Frobenius witness failed its defining identity; carries the nonzero
// normal form as a diagnostic.
struct WitnessError : std::runtime_error {
  WitnessError(const std::string& msg, std::string nf)
      : std::runtime_error(msg), normal_form(std::move(nf)) {}
  std::string normal_form;
};

} // namespace charp

#endif // CHARP_ERRORS_HPP
