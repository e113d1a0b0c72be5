#include "wpo/ordinal_text.hpp"

#include <cctype>
#include <limits>

#include "wpo/errors.hpp"

namespace wpo {

namespace {

void skipSpaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

bool atDigit(std::string_view text, std::size_t pos) {
  return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

std::uint64_t parseNat(std::string_view text, std::size_t& pos) {
  if (!atDigit(text, pos)) throw ParseError("expected a number", pos);
  std::uint64_t value = 0;
  while (atDigit(text, pos)) {
    const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
      throw ParseError("number too large", pos);
    value = value * 10 + digit;
    ++pos;
  }
  return value;
}

std::string_view peekWord(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
  return text.substr(pos, end - pos);
}

Ordinal parseOrdinalAt(std::string_view text, std::size_t& pos);

// exp := 'w' | 'eps' nat | nat | '(' ordinal ')'
Ordinal parseExponent(std::string_view text, std::size_t& pos) {
  skipSpaces(text, pos);
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    Ordinal inner = parseOrdinalAt(text, pos);
    skipSpaces(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return inner;
  }
  const std::string_view word = peekWord(text, pos);
  if (word == "w") {
    pos += 1;
    return Ordinal::omega();
  }
  if (word == "eps") {
    pos += 3;
    const std::uint64_t k = parseNat(text, pos);
    if (k > 1000000) throw ParseError("epsilon index too large", pos);
    return Ordinal::epsilon(static_cast<int>(k));
  }
  if (atDigit(text, pos)) return Ordinal(parseNat(text, pos));
  throw ParseError("expected an exponent: 'w', 'eps<k>', a number, or '(...)'", pos);
}

}  // namespace

Ordinal parseOrdinalTerm(std::string_view text, std::size_t& pos) {
  skipSpaces(text, pos);
  const std::size_t start = pos;
  const std::string_view word = peekWord(text, pos);
  if (word == "w") {
    pos += 1;
    Ordinal exponent(std::uint64_t{1});
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parseExponent(text, pos);
    }
    std::uint64_t coefficient = 1;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skipSpaces(text, pos);
      coefficient = parseNat(text, pos);
      if (coefficient == 0) throw ParseError("coefficient must be positive", pos);
    }
    return Ordinal::monomial(exponent, coefficient);
  }
  if (word == "eps") {
    pos += 3;
    const std::uint64_t k = parseNat(text, pos);
    if (k > 1000000) throw ParseError("epsilon index too large", pos);
    return Ordinal::epsilon(static_cast<int>(k));
  }
  if (atDigit(text, pos)) {
    const std::uint64_t n = parseNat(text, pos);
    if (n == 0) throw ParseError("zero is not a term; write the whole ordinal as '0'", start);
    return Ordinal(n);
  }
  throw ParseError("expected an ordinal term", start);
}

namespace {

Ordinal parseOrdinalAt(std::string_view text, std::size_t& pos) {
  skipSpaces(text, pos);
  // A lone '0' denotes the empty sum.
  if (pos < text.size() && text[pos] == '0' && !atDigit(text, pos + 1)) {
    ++pos;
    return Ordinal();
  }
  Ordinal result;
  bool first = true;
  Ordinal previousExponent;
  while (true) {
    skipSpaces(text, pos);
    const std::size_t termStart = pos;
    const Ordinal term = parseOrdinalTerm(text, pos);
    const Ordinal& exponent = term.exponentAt(0);
    if (!first && compare(exponent, previousExponent) != std::strong_ordering::less)
      throw ParseError("terms must have strictly decreasing exponents", termStart);
    previousExponent = exponent;
    result = first ? term : add(result, term);
    first = false;
    skipSpaces(text, pos);
    if (pos < text.size() && text[pos] == '+')
      ++pos;
    else
      break;
  }
  return result;
}

void renderTerm(const Ordinal& exponent, std::uint64_t coefficient, std::string& out) {
  if (exponent.isZero()) {
    out += std::to_string(coefficient);
    return;
  }
  if (exponent.isEpsilonAtom() && coefficient == 1) {
    out += "eps" + std::to_string(exponent.epsilonIndex());
    return;
  }
  out += 'w';
  if (!(exponent == Ordinal(std::uint64_t{1}))) {
    out += '^';
    if (exponent.isEpsilonAtom()) {
      out += "eps" + std::to_string(exponent.epsilonIndex());
    } else if (exponent.isFinite()) {
      out += std::to_string(exponent.finiteValue());
    } else if (exponent == Ordinal::omega()) {
      out += 'w';
    } else {
      std::string inner;
      for (std::size_t i = 0; i < exponent.termCount(); ++i) {
        if (i > 0) inner += '+';
        renderTerm(exponent.exponentAt(i), exponent.coefficientAt(i), inner);
      }
      out += '(' + inner + ')';
    }
  }
  if (coefficient >= 2) out += '*' + std::to_string(coefficient);
}

}  // namespace

Ordinal parseOrdinal(std::string_view text) {
  std::size_t pos = 0;
  Ordinal result = parseOrdinalAt(text, pos);
  skipSpaces(text, pos);
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return result;
}

std::string renderOrdinal(const Ordinal& a) {
  if (a.isZero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.termCount(); ++i) {
    if (i > 0) out += " + ";
    renderTerm(a.exponentAt(i), a.coefficientAt(i), out);
  }
  return out;
}

}  // namespace wpo
