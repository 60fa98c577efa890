#ifndef CHARP_PARSER_HPP
#define CHARP_PARSER_HPP

#include <string>

#include <charp/polynomial.hpp>

namespace charp {

/// Parses the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | var ('^' integer)?
/// Whitespace is insignificant; integers are decimal and reduced mod p;
/// variables must belong to `vars`. Throws ParseError with line/column.
Polynomial parse_poly(const std::string& text, const VariableSet& vars,
                      PrimeModulus p);

} // namespace charp

#endif // CHARP_PARSER_HPP
