#include "wpo/poset.hpp"

#include <doctest.h>

#include <bit>

#include "wpo/errors.hpp"

using namespace wpo;

namespace {

// a < c, b < c, b < d
FinitePoset nPoset() {
  return FinitePoset::fromRelations({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
}

}  // namespace

TEST_CASE("construction closes transitively and validates") {
  const FinitePoset p = FinitePoset::fromRelations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));  // inferred a <= c
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(2, 0));

  const FinitePoset gamma2 = FinitePoset::fromRelations({"a", "b"}, {});
  CHECK(gamma2.incomparable(0, 1));

  CHECK_THROWS_AS(FinitePoset::fromRelations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PosetError);
  CHECK_THROWS_AS(FinitePoset::fromRelations({"a", "a"}, {}), PosetError);
  CHECK_THROWS_AS(FinitePoset::fromRelations({"a"}, {{"a", "z"}}), PosetError);
}

TEST_CASE("order axioms hold after construction") {
  const FinitePoset p = nPoset();
  for (int i = 0; i < p.size(); ++i) {
    CHECK(p.leq(i, i));
    for (int j = 0; j < p.size(); ++j) {
      if (i != j) CHECK_FALSE((p.leq(i, j) && p.leq(j, i)));
      for (int k = 0; k < p.size(); ++k)
        if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
    }
  }
}

TEST_CASE("residuals are induced substructures") {
  const FinitePoset chain3 = FinitePoset::chain(3);
  CHECK(chain3.residual(ResidualKind::StrictlyBelow, 2).size() == 2);
  CHECK(chain3.residual(ResidualKind::Incomparable, 1).size() == 0);
  const FinitePoset gamma3 = FinitePoset::antichain(3);
  CHECK(gamma3.residual(ResidualKind::Incomparable, 0).size() == 2);
  CHECK(gamma3.residual(ResidualKind::NotGreaterEqual, 0).size() == 2);

  const FinitePoset p = nPoset();
  const FinitePoset r = p.residual(ResidualKind::NotGreaterEqual, 1);  // X_{not>= b}
  // b, c, d are >= b; only a survives
  CHECK(r.size() == 1);
  CHECK(r.label(0) == "a");

  const int pivots[] = {0, 1};
  CHECK(p.residualNotGeqSet(pivots).size() == 0);
  CHECK_THROWS_AS(p.residual(ResidualKind::StrictlyBelow, 9), PosetError);

  // order of the residual equals the restriction
  const FinitePoset below = p.residual(ResidualKind::NotGreaterEqual, 3);  // only d is >= d
  CHECK(below.size() == 3);
  CHECK(below.less(below.indexOf("a"), below.indexOf("c")));
  CHECK(below.less(below.indexOf("b"), below.indexOf("c")));
  CHECK(below.incomparable(below.indexOf("a"), below.indexOf("b")));
}

TEST_CASE("stripped subset keeps exactly the incomparable-to-something elements") {
  CHECK(FinitePoset::chain(4).strippedSubset().size() == 0);
  CHECK(FinitePoset::antichain(3).strippedSubset().size() == 3);
  const FinitePoset p =
      FinitePoset::fromRelations({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});  // b perp c
  const FinitePoset s = p.strippedSubset();
  CHECK(s.size() == 2);
  CHECK(s.indexOf("b") >= 0);
  CHECK(s.indexOf("c") >= 0);
  // fixed point: str(str(X)) = str(X)
  CHECK(s.strippedSubset() == s);
  const FinitePoset n = nPoset();
  CHECK(n.strippedSubset().strippedSubset() == n.strippedSubset());
}

TEST_CASE("composition orders match their definitions") {
  const FinitePoset a = FinitePoset::chain(2);
  const FinitePoset b = FinitePoset::antichain(2);

  const FinitePoset disjoint = FinitePoset::compose(ComposeOp::DisjointSum, a, b);
  CHECK(disjoint.size() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) CHECK(disjoint.incomparable(i, j));

  const FinitePoset lexsum = FinitePoset::compose(ComposeOp::LexSum, b, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) CHECK(lexsum.less(i, j));

  const FinitePoset cart = FinitePoset::compose(ComposeOp::CartesianProduct, a, a);
  // pairs compared component-wise: (0,0) < (1,1); (0,1) perp (1,0)
  CHECK(cart.less(cart.indexOf("(0,0)"), cart.indexOf("(1,1)")));
  CHECK(cart.incomparable(cart.indexOf("(0,1)"), cart.indexOf("(1,0)")));

  const FinitePoset lexprod = FinitePoset::compose(ComposeOp::LexProduct, a, b);
  // (p,q) perp (p',q') whenever q perp q'
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb) {
      const int left = lexprod.indexOf("(" + std::to_string(pa) + ",0)");
      const int right = lexprod.indexOf("(" + std::to_string(pb) + ",1)");
      CHECK(lexprod.incomparable(left, right));
    }
  // and within equal second component the first component decides
  CHECK(lexprod.less(lexprod.indexOf("(0,0)"), lexprod.indexOf("(1,0)")));

  // disjoint sum is symmetric up to isomorphism; lexicographic sum is not
  const FinitePoset ab = FinitePoset::compose(ComposeOp::DisjointSum, a, b);
  const FinitePoset ba = FinitePoset::compose(ComposeOp::DisjointSum, b, a);
  CHECK(ab.isomorphicTo(ba));
  const FinitePoset oneThenTwo =
      FinitePoset::compose(ComposeOp::LexSum, FinitePoset::chain(1), b);
  const FinitePoset twoThenOne =
      FinitePoset::compose(ComposeOp::LexSum, b, FinitePoset::chain(1));
  CHECK_FALSE(oneThenTwo.isomorphicTo(twoThenOne));
}

TEST_CASE("linear extensions") {
  CHECK(FinitePoset::chain(3).countLinearExtensions() == 1);
  CHECK(FinitePoset::antichain(2).countLinearExtensions() == 2);
  CHECK(nPoset().countLinearExtensions() == 5);
  CHECK(FinitePoset().countLinearExtensions() == 1);
  CHECK(FinitePoset::antichain(4).countLinearExtensions() == 24);
  CHECK_THROWS_AS(FinitePoset::antichain(11).countLinearExtensions(), GuardExceeded);

  // every visited sequence is a linear extension
  const FinitePoset p = nPoset();
  p.forEachLinearExtension([&](std::span<const int> ext) {
    REQUIRE(ext.size() == 4);
    for (std::size_t i = 0; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(p.less(ext[j], ext[i]));
  });
}

TEST_CASE("longest chain and widest antichain") {
  CHECK(FinitePoset::chain(5).longestChain().length == 5);
  CHECK(FinitePoset::chain(5).widestAntichain().length == 1);
  CHECK(FinitePoset::antichain(4).longestChain().length == 1);
  CHECK(FinitePoset::antichain(4).widestAntichain().length == 4);
  const FinitePoset p = nPoset();
  CHECK(p.longestChain().length == 2);
  CHECK(p.widestAntichain().length == 2);
  // witnesses are actual chains / antichains
  const auto chain = p.longestChain();
  for (std::size_t i = 0; i + 1 < chain.witness.size(); ++i)
    CHECK(p.less(chain.witness[i], chain.witness[i + 1]));
  const auto anti = p.widestAntichain();
  for (std::size_t i = 0; i < anti.witness.size(); ++i)
    for (std::size_t j = i + 1; j < anti.witness.size(); ++j)
      CHECK(p.incomparable(anti.witness[i], anti.witness[j]));
  CHECK(FinitePoset().longestChain().length == 0);
  CHECK(FinitePoset().widestAntichain().length == 0);
}

TEST_CASE("json loading") {
  const FinitePoset p = FinitePoset::fromJsonText(
      R"({"elements": ["a", "b", "c"], "le": [["a", "b"], ["b", "c"]]})");
  CHECK(p.size() == 3);
  CHECK(p.leq(p.indexOf("a"), p.indexOf("c")));
  CHECK_THROWS_AS(FinitePoset::fromJsonText("not json"), PosetError);
  CHECK_THROWS_AS(FinitePoset::fromJsonText(R"({"elements": []})"), PosetError);
  CHECK_THROWS_AS(FinitePoset::fromJsonText(R"({"elements": ["a"], "le": [["a"]]})"), PosetError);
  CHECK_THROWS_AS(FinitePoset::fromJsonFile("/nonexistent/path.json"), PosetError);
}
