#pragma once

#include <string>
#include <string_view>

#include "wpo/ordinal.hpp"

namespace wpo {

/// Canonical ASCII notation:
///   ordinal := term (' + ' term)* | '0'
///   term    := 'w' ('^' exp)? ('*' nat)? | 'eps' nat | nat
///   exp     := 'w' | 'eps' nat | nat | '(' ordinal ')'
/// Terms must appear in strictly decreasing exponent order; out-of-order or
/// repeated exponents are rejected rather than reordered (ordinal + is not
/// commutative, so silent normalization would hide user errors).  Whitespace
/// between tokens is ignored on input.  Examples: "w^(w*2+3)*2 + w*5 + 1",
/// "eps0 + w", "w^eps1*2".
Ordinal parseOrdinal(std::string_view text);

/// Renders the unique canonical string: top-level terms joined with " + ",
/// sums inside exponent parentheses joined with "+".  renderOrdinal after
/// parseOrdinal is the identity on canonical strings.
std::string renderOrdinal(const Ordinal& a);

/// Parses a single term of the grammar starting at `pos` (which is advanced
/// past it).  Shared with the wpo-expression parser, where an ordinal leaf is
/// one term and '+' belongs to the expression level.
Ordinal parseOrdinalTerm(std::string_view text, std::size_t& pos);

}  // namespace wpo
