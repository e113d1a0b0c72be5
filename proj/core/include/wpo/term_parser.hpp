#pragma once

#include <string>
#include <string_view>

#include "wpo/term.hpp"

namespace wpo {

/// Textual wpo expressions, loosest binding first:
///   expr := usum (' + ' usum)*                      lexicographic sum
///   usum := prod (' U ' prod)*                      disjoint sum
///   prod := primary ((' x ' | ' . ') primary)*      cartesian / lexicographic
///           product; mixing x and . at one level requires parentheses
///   primary := 'Md(' expr ')' | 'Mr(' expr ')' | 'Gamma(' nat ')' | 'H'
///            | 'poset:' path | '(' expr ')' | ordinal-term
/// Ordinal leaves use the ordinal grammar one term at a time; a '+' between
/// ordinal terms is read as the (invariant-equivalent) lexicographic sum.
/// A poset path extends to the next whitespace or ')' and is loaded eagerly.
WpoTermPtr parseWpoTerm(std::string_view text);

enum class QueryFunction { MaxOrderType, Height, Width, MaxSafeOrderType, All };

struct Query {
  QueryFunction function = QueryFunction::All;
  std::string functionName;  // as written: o, h, w, sot, all
  WpoTermPtr term;
};

/// query := ('o' | 'h' | 'w' | 'sot' | 'all') '(' expr ')'
Query parseQuery(std::string_view text);

}  // namespace wpo
