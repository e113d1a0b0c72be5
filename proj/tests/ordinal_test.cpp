#include "wpo/ordinal.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "wpo/ordinal_text.hpp"

using namespace wpo;

namespace {

Ordinal ord(const char* text) { return parseOrdinal(text); }

}  // namespace

TEST_CASE("compare is a total order on hand cases") {
  CHECK(compare(ord("w^2 + w"), ord("w^2 + w")) == std::strong_ordering::equal);
  CHECK(compare(ord("w"), ord("w^2")) == std::strong_ordering::less);
  // eps1 > eps0 + w: already eps0 + w < w^(eps0+1) <= eps1
  CHECK(compare(Ordinal::epsilon(1), ord("eps0 + w")) == std::strong_ordering::greater);
  CHECK(compare(ord("eps0 + w"), omegaPower(ord("eps0 + 1"))) == std::strong_ordering::less);
  CHECK(compare(omegaPower(ord("eps0 + 1")), Ordinal::epsilon(1)) == std::strong_ordering::less);
  CHECK(Ordinal(3) < Ordinal::omega());
  CHECK(Ordinal::epsilon(0) > ord("w^w"));
}

TEST_CASE("addition") {
  const Ordinal x = ord("w^2*3 + 5");
  CHECK(add(x, Ordinal()) == x);
  CHECK(add(Ordinal(), x) == x);
  CHECK(add(Ordinal(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(add(Ordinal::omega(), Ordinal(1)) == ord("w + 1"));
  CHECK(add(ord("w*2 + 3"), ord("w + 1")) == ord("w*3 + 1"));
  // finite stages of 1 + n stay below omega, and their order types grow by one
  for (std::uint64_t n = 0; n < 20; ++n)
    CHECK(add(Ordinal(1), Ordinal(n)) == Ordinal(1 + n));
}

TEST_CASE("multiplication") {
  CHECK(multiply(ord("w + 1"), Ordinal::omega()) == ord("w^2"));
  // oracle: (w+1)*n = w*n + 1 for n >= 1, whose supremum is w^2
  for (std::uint64_t n = 1; n <= 10; ++n) {
    Ordinal sum;
    for (std::uint64_t i = 0; i < n; ++i) sum = add(sum, ord("w + 1"));
    CHECK(multiply(ord("w + 1"), Ordinal(n)) == sum);
    CHECK(compare(sum, ord("w^2")) == std::strong_ordering::less);
  }
  CHECK(multiply(ord("w"), Ordinal(3)) == ord("w*3"));
  CHECK(multiply(Ordinal(3), ord("w")) == ord("w"));
  CHECK(multiply(ord("w^2 + 1"), ord("w + 2")) == ord("w^3 + w^2*2 + 1"));
  CHECK(multiply(Ordinal(), ord("w")) == Ordinal());
}

TEST_CASE("predecessor differs from left subtraction above omega") {
  CHECK(predecessor(ord("w + 1")) == Ordinal::omega());
  CHECK(leftSubtract(ord("w + 1"), Ordinal(1)) == ord("w + 1"));
  CHECK(predecessor(Ordinal(5)) == Ordinal(4));
  CHECK(predecessor(ord("w^2*2 + 3")) == ord("w^2*2 + 2"));
  CHECK_THROWS_AS(predecessor(Ordinal::omega()), std::invalid_argument);
  CHECK_THROWS_AS(predecessor(Ordinal()), std::invalid_argument);
}

TEST_CASE("left subtraction") {
  const Ordinal x = ord("w^w + w*4");
  CHECK(leftSubtract(x, x) == Ordinal());
  CHECK(leftSubtract(Ordinal::omega(), Ordinal(1)) == Ordinal::omega());
  CHECK(leftSubtract(ord("w*2 + 3"), Ordinal::omega()) == ord("w + 3"));
  CHECK(add(Ordinal::omega(), ord("w + 3")) == ord("w*2 + 3"));
  CHECK(leftSubtract(Ordinal(7), Ordinal(3)) == Ordinal(4));
  CHECK(leftSubtract(Ordinal(), Ordinal(1)) == Ordinal());  // documented convention
  CHECK_THROWS_AS(leftSubtract(Ordinal(1), Ordinal(2)), std::invalid_argument);
  CHECK_THROWS_AS(leftSubtract(Ordinal(), Ordinal(2)), std::invalid_argument);
}

TEST_CASE("natural operations") {
  const Ordinal x = ord("w^3 + w*2 + 1");
  CHECK(natSum(x, Ordinal()) == x);
  // merge of exponent multisets {1,0} and {1}
  CHECK(natSum(ord("w + 1"), Ordinal::omega()) == ord("w*2 + 1"));
  // all four exponent pairs of (w+1) (x) (w+1): 1+1, 1+0, 0+1, 0+0
  CHECK(natProd(ord("w + 1"), ord("w + 1")) == ord("w^2 + w*2 + 1"));
  CHECK(natProd(x, Ordinal()) == Ordinal());
  CHECK(natSum(Ordinal::epsilon(0), Ordinal::epsilon(0)) == ord("w^eps0*2"));
}

TEST_CASE("hessenberg-based product") {
  CHECK(hessProd(ord("w^2 + 4"), Ordinal()) == Ordinal());
  // two applications of the successor clause
  Ordinal byClauses;
  byClauses = natSum(byClauses, ord("w + 1"));
  byClauses = natSum(byClauses, ord("w + 1"));
  CHECK(byClauses == ord("w*2 + 2"));
  CHECK(hessProd(ord("w + 1"), Ordinal(2)) == ord("w*2 + 2"));
  // (w+1) (.) n = w*n + n climbs to w^2
  for (std::uint64_t n = 1; n <= 10; ++n) {
    CHECK(hessProd(ord("w + 1"), Ordinal(n)) ==
          add(Ordinal::monomial(Ordinal(std::uint64_t{1}), n), Ordinal(n)));
  }
  CHECK(hessProd(ord("w + 1"), Ordinal::omega()) == ord("w^2"));
  // the example pair from width computations: w^w (.) w^w and w^w (.) 1
  CHECK(hessProd(ord("w^w"), ord("w^w")) == ord("w^(w*2)"));
  CHECK(hessProd(ord("w^w"), Ordinal(1)) == ord("w^w"));
}

TEST_CASE("omega power") {
  CHECK(omegaPower(Ordinal()) == Ordinal(1));
  CHECK(omegaPower(Ordinal::epsilon(0)) == Ordinal::epsilon(0));
  CHECK(omegaPower(ord("w + 1")) == ord("w^(w+1)"));
  CHECK(omegaPower(Ordinal(2)) == ord("w^2"));
}

TEST_CASE("hat transform bumps exactly the epsilon-plus-finite exponents") {
  CHECK(hatTransform(ord("w^w")) == ord("w^w"));
  CHECK(hatTransform(Ordinal::epsilon(0)) == ord("w^(eps0+1)"));
  CHECK(hatTransform(Ordinal(3)) == Ordinal(3));
  CHECK(hatTransform(ord("w^(eps0+3)*2 + w^2")) == ord("w^(eps0+4)*2 + w^2"));
  // eps_k + limit + finite is untouched: the exponent is not eps plus finite
  CHECK(hatTransform(omegaPower(ord("eps0 + w"))) == omegaPower(ord("eps0 + w")));
  CHECK(hatTransform(omegaPower(ord("w^eps0*2"))) == omegaPower(ord("w^eps0*2")));
  CHECK(hatTransform(Ordinal()) == Ordinal());
}

TEST_CASE("h-star") {
  CHECK(hStar(Ordinal::omega()) == Ordinal::omega());
  CHECK(hStar(Ordinal(5)) == Ordinal::omega());
  CHECK(hStar(ord("w + 1")) == ord("w^2"));
  CHECK(hStar(ord("w^w")) == ord("w^w"));
  CHECK(hStar(ord("w*2")) == ord("w^2"));
}

TEST_CASE("delta bound") {
  CHECK(deltaBound(Ordinal::omega()) == Ordinal::omega());
  CHECK(deltaBound(ord("w + 5")) == ord("w + 2"));
  CHECK(deltaBound(Ordinal(6)) == Ordinal(3));
  CHECK(deltaBound(Ordinal(1)) == Ordinal());
  CHECK(deltaBound(Ordinal()) == Ordinal());
  CHECK(deltaBound(Ordinal::epsilon(1)) == Ordinal::epsilon(1));
}

TEST_CASE("height supremum of a product") {
  CHECK(hSupProduct(Ordinal(1), Ordinal(1)) == Ordinal(1));
  CHECK(hSupProduct(Ordinal(2), Ordinal(3)) == Ordinal(4));
  // finite brute force oracle
  for (std::uint64_t a = 1; a <= 6; ++a)
    for (std::uint64_t b = 1; b <= 6; ++b) {
      std::uint64_t best = 0;
      for (std::uint64_t x = 0; x < a; ++x)
        for (std::uint64_t y = 0; y < b; ++y) best = std::max(best, x + y + 1);
      CHECK(hSupProduct(Ordinal(a), Ordinal(b)) == Ordinal(best));
    }
  CHECK(hSupProduct(Ordinal::omega(), Ordinal::omega()) == Ordinal::omega());
  CHECK(hSupProduct(ord("w + 1"), Ordinal::omega()) == ord("w*2"));
  CHECK(hSupProduct(ord("w^2"), Ordinal::omega()) == ord("w^2"));
  CHECK(hSupProduct(ord("w^5 + w"), ord("w^5 + w")) == ord("w^5*2 + w"));
  CHECK_THROWS_AS(hSupProduct(Ordinal(), Ordinal(1)), std::invalid_argument);
  const Ordinal x = ord("w^w + w^2*4 + 17");
  CHECK(hSupProduct(x, Ordinal(1)) == x);
  CHECK(hSupProduct(Ordinal(1), x) == x);
}

TEST_CASE("classification") {
  const OrdinalClassification doubled = classify(ord("w*2"));
  CHECK(doubled.kind == OrdinalClassification::Kind::Limit);
  CHECK_FALSE(doubled.additivelyIndecomposable);

  const OrdinalClassification cube = classify(ord("w^3"));
  CHECK(cube.additivelyIndecomposable);
  CHECK_FALSE(cube.multiplicativelyIndecomposable);

  const OrdinalClassification tower = classify(ord("w^w"));
  CHECK(tower.multiplicativelyIndecomposable);
  CHECK_FALSE(tower.epsilonNumber);

  const OrdinalClassification eps = classify(Ordinal::epsilon(2));
  CHECK(eps.epsilonNumber);
  CHECK(eps.multiplicativelyIndecomposable);
  CHECK(eps.kind == OrdinalClassification::Kind::Limit);

  const OrdinalClassification zero = classify(Ordinal());
  CHECK(zero.kind == OrdinalClassification::Kind::Zero);
  CHECK_FALSE(zero.additivelyIndecomposable);
  CHECK_FALSE(zero.epsilonNumber);

  CHECK(classify(Ordinal(7)).kind == OrdinalClassification::Kind::Successor);
}

TEST_CASE("fundamental steps") {
  CHECK(fundamentalStep(Ordinal::omega(), 3) == Ordinal(3));
  CHECK(fundamentalStep(ord("w^2"), 2) == ord("w*2"));
  CHECK(fundamentalStep(ord("w^w"), 3) == ord("w^3"));
  CHECK(fundamentalStep(ord("w^2*2 + w*3"), 4) == ord("w^2*2 + w*2 + 4"));
  CHECK_THROWS_AS(fundamentalStep(Ordinal(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(fundamentalStep(Ordinal(), 1), std::invalid_argument);
  CHECK_THROWS_AS(fundamentalStep(Ordinal::epsilon(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(fundamentalStep(ord("w^eps0*2"), 1), std::invalid_argument);
}

TEST_CASE("structural equality is ordinal equality") {
  CHECK(Ordinal::epsilon(0) == omegaPower(Ordinal::epsilon(0)));
  CHECK(Ordinal::monomial(Ordinal::epsilon(0), 1) == Ordinal::epsilon(0));
  CHECK(Ordinal(0) == Ordinal());
  CHECK_FALSE(ord("w^eps0*2") == Ordinal::epsilon(0));
}
