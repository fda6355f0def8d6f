#pragma once

#include <cstddef>
#include <string>

#include "qgb/error.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/symbol.hpp"

namespace qgb {

class MonomialOrder;

struct parse_error : input_error {
  std::size_t position;  // 0-based character offset into the input
  parse_error(const std::string& msg, std::size_t pos)
      : input_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := rational ('*' factor)* | factor ('*' factor)*
///   factor := symbol ['^' positive-int] | '(' expr ')' | '1'
/// Whitespace is ignored; '^' expands to repeated concatenation and
/// parentheses expand by distribution.
Polynomial parse_poly(const std::string& text, const Alphabet& alphabet);

/// A single monomial with coefficient 1 (e.g. "b2*h2", "1").
Monomial parse_monomial(const std::string& text, const Alphabet& alphabet);

/// Terms in descending order, by ord when given, canonical otherwise.
/// Round-trips through parse_poly.
std::string format_poly(const Polynomial& f, const Alphabet& alphabet,
                        const MonomialOrder* ord = nullptr);

std::string format_monomial(const Monomial& m, const Alphabet& alphabet);

}  // namespace qgb
