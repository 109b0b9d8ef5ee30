#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclecert/rational_function.hpp"

namespace cyclecert {

/// Parses an arithmetic expression over the given variable and parameter
/// names into an exact RationalFunction.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' exponent)?        exponent: nonnegative integer, right-associative
///   primary := number | name | '(' expr ')'
///
/// Numbers are integers or terminating decimals; `p/q` is ordinary division.
/// Implicit multiplication ("2x", "x y") is rejected. Errors: ParseError with
/// line/column, UnknownIdentifier.
RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& vars,
                                  const std::vector<std::string>& params = {});

}  // namespace cyclecert
