#include "wpo/ordinal_text.hpp"

#include <doctest.h>

#include "wpo/errors.hpp"

using namespace wpo;

TEST_CASE("grammar round trips") {
  const char* canonical[] = {
      "0",
      "1",
      "17",
      "w",
      "w*5",
      "w + 1",
      "w^2*2 + w*5 + 1",
      "w^(w*2+3)*2 + 1",
      "w^(w*2+3)*2 + w*5 + 1",
      "w^w",
      "w^(w^w)",
      "w^(w^w+w)",
      "eps0",
      "eps2",
      "eps0 + w",
      "w^eps0*2",
      "w^(eps0+1)",
      "w^(eps1+w)",
      "w^(w+1) + w^3*4 + 2",
  };
  for (const char* text : canonical) {
    CAPTURE(text);
    const Ordinal parsed = parseOrdinal(text);
    CHECK(renderOrdinal(parsed) == text);
  }
}

TEST_CASE("parser accepts spacing variations and normalizing forms") {
  CHECK(parseOrdinal("w+1") == parseOrdinal("w + 1"));
  CHECK(parseOrdinal("  w^2  +  w ") == parseOrdinal("w^2 + w"));
  // w^eps0 denotes the same ordinal as eps0
  CHECK(parseOrdinal("w^eps0") == Ordinal::epsilon(0));
  CHECK(renderOrdinal(parseOrdinal("w^eps0")) == "eps0");
  CHECK(parseOrdinal("w^(2)") == parseOrdinal("w^2"));
  CHECK(parseOrdinal("w^1") == Ordinal::omega());
}

TEST_CASE("parser rejects non-canonical sums") {
  CHECK_THROWS_AS(parseOrdinal("1 + w"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w + w"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w + w^2"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w^(1 + w)"), ParseError);
}

TEST_CASE("parser reports positions and bad tokens") {
  CHECK_THROWS_AS(parseOrdinal(""), ParseError);
  CHECK_THROWS_AS(parseOrdinal("x"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w^"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w^("), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w^(w"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w*0"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w + 0"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w w"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("eps"), ParseError);
  CHECK_THROWS_AS(parseOrdinal("w^w^2"), ParseError);
  try {
    parseOrdinal("w^2 + $");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}
