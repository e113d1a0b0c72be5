#include "wpo/term_parser.hpp"

#include <cctype>

#include "wpo/errors.hpp"
#include "wpo/ordinal_text.hpp"

namespace wpo {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool atEnd() {
    skipSpaces();
    return pos >= text.size();
  }
  char peek() { return pos < text.size() ? text[pos] : '\0'; }
  bool consume(char c) {
    skipSpaces();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
  }
  std::string_view peekWord() {
    skipSpaces();
    std::size_t end = pos;
    while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
    return text.substr(pos, end - pos);
  }
  std::uint64_t parseNat() {
    skipSpaces();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a number", pos);
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return value;
  }
};

WpoTermPtr parseExpr(Cursor& cur);

WpoTermPtr parsePrimary(Cursor& cur) {
  cur.skipSpaces();
  const std::size_t start = cur.pos;
  if (cur.peek() == '(') {
    cur.expect('(', "to group a subexpression");
    WpoTermPtr inner = parseExpr(cur);
    cur.expect(')', "to close the group");
    return inner;
  }
  const std::string_view word = cur.peekWord();
  if (word == "Md" || word == "Mr") {
    cur.pos += 2;
    cur.expect('(', word == "Md" ? "after Md" : "after Mr");
    WpoTermPtr inner = parseExpr(cur);
    cur.expect(')', "to close the multiset constructor");
    return WpoTerm::makeMultiset(
        word == "Md" ? WpoTerm::Kind::MultisetEmb : WpoTerm::Kind::MultisetOrd, inner);
  }
  if (word == "Gamma") {
    cur.pos += 5;
    cur.expect('(', "after Gamma");
    const std::uint64_t k = cur.parseNat();
    if (k > 1000) throw ParseError("Gamma index too large", cur.pos);
    cur.expect(')', "to close Gamma");
    return WpoTerm::makeGamma(static_cast<int>(k));
  }
  if (word == "H") {
    cur.pos += 1;
    return WpoTerm::makeH();
  }
  if (word == "poset" && cur.pos + 5 < cur.text.size() && cur.text[cur.pos + 5] == ':') {
    cur.pos += 6;
    std::size_t end = cur.pos;
    while (end < cur.text.size() && cur.text[end] != ' ' && cur.text[end] != '\t' &&
           cur.text[end] != ')')
      ++end;
    const std::string path(cur.text.substr(cur.pos, end - cur.pos));
    if (path.empty()) throw ParseError("expected a file path after 'poset:'", cur.pos);
    cur.pos = end;
    return WpoTerm::makePoset(FinitePoset::fromJsonFile(path), "poset:" + path);
  }
  if (cur.peek() == '0' &&
      !(cur.pos + 1 < cur.text.size() &&
        std::isdigit(static_cast<unsigned char>(cur.text[cur.pos + 1])))) {
    ++cur.pos;
    return WpoTerm::makeOrdinal(Ordinal());
  }
  if (word == "w" || word == "eps" || std::isdigit(static_cast<unsigned char>(cur.peek())))
    return WpoTerm::makeOrdinal(parseOrdinalTerm(cur.text, cur.pos));
  throw ParseError("expected an expression", start);
}

WpoTermPtr parseProduct(Cursor& cur) {
  WpoTermPtr term = parsePrimary(cur);
  bool sawCartesian = false, sawLex = false;
  while (true) {
    cur.skipSpaces();
    const std::size_t opPos = cur.pos;
    WpoTerm::Kind op;
    if (cur.peekWord() == "x") {
      op = WpoTerm::Kind::Cartesian;
      sawCartesian = true;
      cur.pos += 1;
    } else if (cur.peek() == '.') {
      op = WpoTerm::Kind::LexProduct;
      sawLex = true;
      ++cur.pos;
    } else {
      return term;
    }
    if (sawCartesian && sawLex)
      throw ParseError("parentheses required when mixing 'x' and '.'", opPos);
    term = WpoTerm::makeBinary(op, term, parsePrimary(cur));
  }
}

WpoTermPtr parseDisjointSum(Cursor& cur) {
  WpoTermPtr term = parseProduct(cur);
  while (true) {
    cur.skipSpaces();
    if (cur.peekWord() != "U") return term;
    cur.pos += 1;
    term = WpoTerm::makeBinary(WpoTerm::Kind::DisjointSum, term, parseProduct(cur));
  }
}

WpoTermPtr parseExpr(Cursor& cur) {
  WpoTermPtr term = parseDisjointSum(cur);
  while (cur.consume('+'))
    term = WpoTerm::makeBinary(WpoTerm::Kind::LexSum, term, parseDisjointSum(cur));
  return term;
}

}  // namespace

WpoTermPtr parseWpoTerm(std::string_view text) {
  Cursor cur{text};
  WpoTermPtr term = parseExpr(cur);
  if (!cur.atEnd()) throw ParseError("unexpected trailing input", cur.pos);
  return term;
}

Query parseQuery(std::string_view text) {
  Cursor cur{text};
  const std::string_view word = cur.peekWord();
  Query query;
  if (word == "o")
    query.function = QueryFunction::MaxOrderType;
  else if (word == "h")
    query.function = QueryFunction::Height;
  else if (word == "w")
    query.function = QueryFunction::Width;
  else if (word == "sot")
    query.function = QueryFunction::MaxSafeOrderType;
  else if (word == "all")
    query.function = QueryFunction::All;
  else
    throw ParseError("expected a query function: o, h, w, sot, or all", cur.pos);
  query.functionName = std::string(word);
  cur.pos += word.size();
  cur.expect('(', "after the query function");
  query.term = parseExpr(cur);
  cur.expect(')', "to close the query");
  if (!cur.atEnd()) throw ParseError("unexpected trailing input", cur.pos);
  return query;
}

}  // namespace wpo
