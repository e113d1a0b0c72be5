#include "wpo/algebra.hpp"

#include <functional>
#include <stdexcept>

#include "wpo/oracle.hpp"
#include "wpo/ordinal_text.hpp"

namespace wpo {

InvariantValue InvariantValue::knownValue(Ordinal v) {
  InvariantValue iv;
  iv.value = std::move(v);
  return iv;
}

InvariantValue InvariantValue::unknownValue(std::string reason, std::optional<Ordinal> lower,
                                            std::optional<Ordinal> upper) {
  InvariantValue iv;
  iv.reason = std::move(reason);
  iv.lowerBound = std::move(lower);
  iv.upperBound = std::move(upper);
  return iv;
}

namespace {

constexpr const char* kReasonCartesianWidth = "width of cartesian product not functional";
constexpr const char* kReasonCartesianSot =
    "maximal safe order type of cartesian product only bounded below";
constexpr const char* kReasonLexProdHeight = "no rule for height of lexicographic product";
constexpr const char* kReasonLexProdSot =
    "no rule for maximal safe order type of lexicographic product";
constexpr const char* kReasonEmbSot = "no rule for maximal safe order type of multiset embedding";
constexpr const char* kReasonOrdSot =
    "no rule for maximal safe order type of multiset ordering over a non-linear order";

const std::optional<Ordinal>& lowOf(const InvariantValue& v) {
  return v.known() ? v.value : v.lowerBound;
}
const std::optional<Ordinal>& highOf(const InvariantValue& v) {
  return v.known() ? v.value : v.upperBound;
}

std::string chain(const std::string& what, const std::string& side, const InvariantValue& v) {
  return what + " of " + side + " operand unknown: " + v.reason;
}

/// Applies a rule monotone in both arguments, propagating bounds.
InvariantValue lift2(const std::function<Ordinal(const Ordinal&, const Ordinal&)>& fn,
                     const InvariantValue& a, const InvariantValue& b, const std::string& what) {
  if (a.known() && b.known()) return InvariantValue::knownValue(fn(*a.value, *b.value));
  std::string reason = !a.known() ? chain(what, "left", a) : chain(what, "right", b);
  std::optional<Ordinal> lo, hi;
  if (lowOf(a) && lowOf(b)) lo = fn(*lowOf(a), *lowOf(b));
  if (highOf(a) && highOf(b)) hi = fn(*highOf(a), *highOf(b));
  return InvariantValue::unknownValue(std::move(reason), std::move(lo), std::move(hi));
}

/// Applies a rule monotone in its single argument.
InvariantValue lift1(const std::function<Ordinal(const Ordinal&)>& fn, const InvariantValue& a,
                     const std::string& what) {
  if (a.known()) return InvariantValue::knownValue(fn(*a.value));
  std::optional<Ordinal> lo, hi;
  if (a.lowerBound) lo = fn(*a.lowerBound);
  if (a.upperBound) hi = fn(*a.upperBound);
  return InvariantValue::unknownValue(what + " of operand unknown: " + a.reason, std::move(lo),
                                      std::move(hi));
}

Ordinal maxOrd(const Ordinal& a, const Ordinal& b) { return compare(a, b) == std::strong_ordering::less ? b : a; }

InvariantTuple tupleOfInts(int o, int h, int w, int sot) {
  return {InvariantValue::knownValue(Ordinal(static_cast<std::uint64_t>(o))),
          InvariantValue::knownValue(Ordinal(static_cast<std::uint64_t>(h))),
          InvariantValue::knownValue(Ordinal(static_cast<std::uint64_t>(w))),
          InvariantValue::knownValue(Ordinal(static_cast<std::uint64_t>(sot)))};
}

InvariantTuple oracleTuple(const FinitePoset& p, const EvalOptions& opts) {
  const RankTriple ranks = rankInvariants(p, opts.rankGuard);
  const SotResult sot = sotBruteForce(p, opts.sotGuard);
  return tupleOfInts(ranks.mot, ranks.height, ranks.width, sot.value);
}

bool knownEquals(const InvariantValue& v, std::uint64_t n) {
  return v.known() && *v.value == Ordinal(n);
}

bool knownAtMost(const InvariantValue& v, std::uint64_t n) {
  return v.known() && compare(*v.value, Ordinal(n)) != std::strong_ordering::greater;
}

// Number of omega leaves when the subtree is a pure cartesian fold of copies
// of the ordinal omega.
std::optional<int> omegaFoldCount(const WpoTerm& t) {
  if (t.kind() == WpoTerm::Kind::Ordinal && t.ordinal() == Ordinal::omega()) return 1;
  if (t.kind() == WpoTerm::Kind::Cartesian) {
    const auto l = omegaFoldCount(*t.left());
    const auto r = omegaFoldCount(*t.right());
    if (l && r) return *l + *r;
  }
  return std::nullopt;
}

struct EvalState {
  const EvalOptions& opts;
  DerivationTrace& trace;
};

struct NodeResult {
  InvariantTuple tuple;
  std::optional<FinitePoset> concrete;
};

void validateTuple(const InvariantTuple& t, const std::string& node) {
  const auto checkLeq = [&](const InvariantValue& a, const InvariantValue& b,
                            const char* relation) {
    if (a.known() && b.known() &&
        compare(*a.value, *b.value) == std::strong_ordering::greater)
      throw std::logic_error("invariant violation at '" + node + "': " + relation);
  };
  checkLeq(t.h, t.o, "h <= o");
  checkLeq(t.w, t.o, "w <= o");
  checkLeq(t.sot, t.o, "sot <= o");
  for (const InvariantValue* v : {&t.o, &t.h, &t.w, &t.sot})
    if (v->lowerBound && v->upperBound &&
        compare(*v->lowerBound, *v->upperBound) == std::strong_ordering::greater)
      throw std::logic_error("invariant bounds crossed at '" + node + "'");
}

NodeResult evalNode(const WpoTermPtr& term, EvalState& state, int depth);

NodeResult evalLeaf(const WpoTerm& t, EvalState& state, std::string& rule) {
  NodeResult result;
  switch (t.kind()) {
    case WpoTerm::Kind::Ordinal: {
      rule = "leaf-ordinal";
      const Ordinal& a = t.ordinal();
      result.tuple.o = InvariantValue::knownValue(a);
      result.tuple.h = InvariantValue::knownValue(a);
      result.tuple.w =
          InvariantValue::knownValue(Ordinal(static_cast<std::uint64_t>(a.isZero() ? 0 : 1)));
      result.tuple.sot = InvariantValue::knownValue(Ordinal());
      if (a.isFinite() && a.finiteValue() <= static_cast<std::uint64_t>(state.opts.foldGuard))
        result.concrete = FinitePoset::chain(static_cast<int>(a.finiteValue()));
      return result;
    }
    case WpoTerm::Kind::Poset:
      rule = "leaf-poset";
      result.tuple = oracleTuple(t.poset(), state.opts);
      result.concrete = t.poset();
      return result;
    case WpoTerm::Kind::Gamma: {
      rule = "leaf-gamma";
      const int k = t.gammaK();
      result.tuple = k == 0 ? tupleOfInts(0, 0, 0, 0) : tupleOfInts(k, 1, k, k - 1);
      if (k <= state.opts.foldGuard) result.concrete = FinitePoset::antichain(k);
      return result;
    }
    case WpoTerm::Kind::H: {
      rule = "leaf-h";
      const Ordinal w = Ordinal::omega();
      result.tuple = {InvariantValue::knownValue(w), InvariantValue::knownValue(w),
                      InvariantValue::knownValue(w), InvariantValue::knownValue(w)};
      return result;
    }
    default:
      throw std::logic_error("evalLeaf: not a leaf");
  }
}

NodeResult evalBinary(const WpoTerm& t, EvalState& state, int depth, std::string& rule) {
  const NodeResult l = evalNode(t.left(), state, depth + 1);
  const NodeResult r = evalNode(t.right(), state, depth + 1);
  NodeResult result;

  // Constant folding: compose explicit finite operands and ask the oracle.
  if (state.opts.fold && l.concrete && r.concrete) {
    const long long composedSize =
        (t.kind() == WpoTerm::Kind::DisjointSum || t.kind() == WpoTerm::Kind::LexSum)
            ? l.concrete->size() + r.concrete->size()
            : static_cast<long long>(l.concrete->size()) * r.concrete->size();
    if (composedSize <= state.opts.foldGuard) {
      const ComposeOp op = t.kind() == WpoTerm::Kind::DisjointSum ? ComposeOp::DisjointSum
                           : t.kind() == WpoTerm::Kind::LexSum    ? ComposeOp::LexSum
                           : t.kind() == WpoTerm::Kind::Cartesian ? ComposeOp::CartesianProduct
                                                                  : ComposeOp::LexProduct;
      result.concrete = FinitePoset::compose(op, *l.concrete, *r.concrete);
      result.tuple = oracleTuple(*result.concrete, state.opts);
      rule = "finite-fold";
      return result;
    }
  }

  const bool leftEmpty = knownEquals(l.tuple.o, 0);
  const bool rightEmpty = knownEquals(r.tuple.o, 0);
  const Ordinal one(std::uint64_t{1});

  switch (t.kind()) {
    case WpoTerm::Kind::DisjointSum:
    case WpoTerm::Kind::LexSum: {
      const bool disjoint = t.kind() == WpoTerm::Kind::DisjointSum;
      if (leftEmpty || rightEmpty) {
        rule = disjoint ? "disjoint-sum-empty-operand" : "lex-sum-empty-operand";
        result.tuple = leftEmpty ? r.tuple : l.tuple;
        return result;
      }
      rule = disjoint ? "disjoint-sum" : "lex-sum";
      if (disjoint) {
        result.tuple.o = lift2(natSum, l.tuple.o, r.tuple.o, "maximal order type");
        result.tuple.w = lift2(natSum, l.tuple.w, r.tuple.w, "width");
        result.tuple.h = lift2(maxOrd, l.tuple.h, r.tuple.h, "height");
        result.tuple.sot = lift2(
            [&](const Ordinal& a, const Ordinal& b) {
              return add(one, natSum(leftSubtract(a, one), leftSubtract(b, one)));
            },
            l.tuple.o, r.tuple.o, "maximal order type");
      } else {
        result.tuple.o = lift2(add, l.tuple.o, r.tuple.o, "maximal order type");
        result.tuple.w = lift2(maxOrd, l.tuple.w, r.tuple.w, "width");
        result.tuple.h = lift2(add, l.tuple.h, r.tuple.h, "height");
        result.tuple.sot = lift2(add, l.tuple.sot, r.tuple.sot, "maximal safe order type");
      }
      return result;
    }
    case WpoTerm::Kind::Cartesian: {
      if (leftEmpty || rightEmpty) {
        rule = "cartesian-empty-operand";
        result.tuple = tupleOfInts(0, 0, 0, 0);
        return result;
      }
      result.tuple.o = lift2(natProd, l.tuple.o, r.tuple.o, "maximal order type");
      result.tuple.h = lift2(hSupProduct, l.tuple.h, r.tuple.h, "height");
      if (const auto k = omegaFoldCount(t)) {
        rule = "cartesian-of-omegas";
        result.tuple.w = InvariantValue::knownValue(
            omegaPower(Ordinal(static_cast<std::uint64_t>(*k - 1))));
      } else {
        rule = "cartesian-product";
        result.tuple.w = InvariantValue::unknownValue(kReasonCartesianWidth);
      }
      // sot(A x B) >= (o(A) - 1) (x) (o(B) - 1).  The variant without the
      // second -1 fails on products of chains (sot(2 x 2) = 1, not 2); the two
      // agree whenever o(B) is infinite.
      std::optional<Ordinal> lower;
      if (l.tuple.o.known() && r.tuple.o.known())
        lower = natProd(leftSubtract(*l.tuple.o.value, one),
                        leftSubtract(*r.tuple.o.value, one));
      result.tuple.sot = InvariantValue::unknownValue(kReasonCartesianSot, std::move(lower));
      return result;
    }
    case WpoTerm::Kind::LexProduct: {
      if (leftEmpty || rightEmpty) {
        rule = "lex-product-empty-operand";
        result.tuple = tupleOfInts(0, 0, 0, 0);
        return result;
      }
      rule = "lex-product";
      result.tuple.o = lift2(multiply, l.tuple.o, r.tuple.o, "maximal order type");
      result.tuple.w = lift2(hessProd, l.tuple.w, r.tuple.w, "width");
      result.tuple.h = InvariantValue::unknownValue(kReasonLexProdHeight);
      result.tuple.sot = InvariantValue::unknownValue(kReasonLexProdSot);
      return result;
    }
    default:
      throw std::logic_error("evalBinary: not a binary node");
  }
}

NodeResult evalMultiset(const WpoTerm& t, EvalState& state, int depth, std::string& rule) {
  const NodeResult c = evalNode(t.child(), state, depth + 1);
  NodeResult result;
  if (knownEquals(c.tuple.o, 0)) {
    // M(empty) is the singleton containing only the empty multiset.
    rule = "multiset-empty-operand";
    result.tuple = tupleOfInts(1, 1, 1, 0);
    return result;
  }
  if (t.kind() == WpoTerm::Kind::MultisetEmb) {
    rule = "multiset-embedding";
    result.tuple.o = lift1([](const Ordinal& a) { return omegaPower(hatTransform(a)); },
                           c.tuple.o, "maximal order type");
    result.tuple.h = lift1(hStar, c.tuple.h, "height");
    result.tuple.w = lift1(
        [](const Ordinal& a) {
          return omegaPower(leftSubtract(hatTransform(a), Ordinal(std::uint64_t{1})));
        },
        c.tuple.o, "maximal order type");
    result.tuple.sot = InvariantValue::unknownValue(kReasonEmbSot);
  } else {
    rule = "multiset-ordering";
    result.tuple.o = lift1(omegaPower, c.tuple.o, "maximal order type");
    result.tuple.h = lift1(omegaPower, c.tuple.h, "height");
    result.tuple.w = lift1(omegaPower, c.tuple.sot, "maximal safe order type");
    // Mr of a linear order stays linear; width <= 1 detects linearity.
    if (knownAtMost(c.tuple.w, 1)) {
      result.tuple.sot = InvariantValue::knownValue(Ordinal());
    } else if (c.tuple.w.known() ||
               (c.tuple.w.lowerBound &&
                compare(*c.tuple.w.lowerBound, Ordinal(std::uint64_t{2})) !=
                    std::strong_ordering::less)) {
      result.tuple.sot = InvariantValue::unknownValue(kReasonOrdSot);
    } else {
      result.tuple.sot = InvariantValue::unknownValue(
          "linearity of operand undecided: " + c.tuple.w.reason);
    }
  }
  // A one-element antichain of widths means the construction stayed linear.
  if (!result.tuple.sot.known() && knownAtMost(result.tuple.w, 1))
    result.tuple.sot = InvariantValue::knownValue(Ordinal());
  return result;
}

NodeResult evalNode(const WpoTermPtr& term, EvalState& state, int depth) {
  const std::size_t traceIndex = state.trace.size();
  state.trace.push_back(TraceEntry{term->render(), "", {}, depth});
  std::string rule;
  NodeResult result;
  switch (term->kind()) {
    case WpoTerm::Kind::Ordinal:
    case WpoTerm::Kind::Poset:
    case WpoTerm::Kind::Gamma:
    case WpoTerm::Kind::H:
      result = evalLeaf(*term, state, rule);
      break;
    case WpoTerm::Kind::MultisetEmb:
    case WpoTerm::Kind::MultisetOrd:
      result = evalMultiset(*term, state, depth, rule);
      break;
    default:
      result = evalBinary(*term, state, depth, rule);
      break;
  }
  validateTuple(result.tuple, state.trace[traceIndex].node);
  state.trace[traceIndex].rule = rule;
  state.trace[traceIndex].tuple = result.tuple;
  return result;
}

}  // namespace

std::pair<InvariantTuple, DerivationTrace> invariants(const WpoTermPtr& term,
                                                      const EvalOptions& options) {
  DerivationTrace trace;
  EvalState state{options, trace};
  const NodeResult result = evalNode(term, state, 0);
  return {result.tuple, std::move(trace)};
}

namespace {

struct FoldResult {
  WpoTermPtr term;
  std::optional<FinitePoset> concrete;  // set when term denotes this finite poset
};

FoldResult foldRec(const WpoTermPtr& term, int guard) {
  switch (term->kind()) {
    case WpoTerm::Kind::Ordinal: {
      const Ordinal& a = term->ordinal();
      if (a.isFinite() && a.finiteValue() <= static_cast<std::uint64_t>(guard))
        return {term, FinitePoset::chain(static_cast<int>(a.finiteValue()))};
      return {term, std::nullopt};
    }
    case WpoTerm::Kind::Poset:
      return {term, term->poset()};
    case WpoTerm::Kind::Gamma:
      if (term->gammaK() <= guard) return {term, FinitePoset::antichain(term->gammaK())};
      return {term, std::nullopt};
    case WpoTerm::Kind::H:
      return {term, std::nullopt};
    case WpoTerm::Kind::MultisetEmb:
    case WpoTerm::Kind::MultisetOrd: {
      const FoldResult c = foldRec(term->child(), guard);
      if (c.term == term->child()) return {term, std::nullopt};
      return {WpoTerm::makeMultiset(term->kind(), c.term), std::nullopt};
    }
    default: {
      const FoldResult l = foldRec(term->left(), guard);
      const FoldResult r = foldRec(term->right(), guard);
      if (l.concrete && r.concrete) {
        const bool sum = term->kind() == WpoTerm::Kind::DisjointSum ||
                         term->kind() == WpoTerm::Kind::LexSum;
        const long long size = sum ? l.concrete->size() + r.concrete->size()
                                   : static_cast<long long>(l.concrete->size()) *
                                         r.concrete->size();
        if (size <= guard) {
          const ComposeOp op = term->kind() == WpoTerm::Kind::DisjointSum ? ComposeOp::DisjointSum
                               : term->kind() == WpoTerm::Kind::LexSum    ? ComposeOp::LexSum
                               : term->kind() == WpoTerm::Kind::Cartesian
                                   ? ComposeOp::CartesianProduct
                                   : ComposeOp::LexProduct;
          FinitePoset composed = FinitePoset::compose(op, *l.concrete, *r.concrete);
          WpoTermPtr leaf = WpoTerm::makePoset(composed);
          return {leaf, std::move(composed)};
        }
      }
      if (l.term == term->left() && r.term == term->right()) return {term, std::nullopt};
      return {WpoTerm::makeBinary(term->kind(), l.term, r.term), std::nullopt};
    }
  }
}

}  // namespace

WpoTermPtr foldFinite(const WpoTermPtr& term, int guard) { return foldRec(term, guard).term; }

bool ConsistencyReport::pass() const {
  for (const Relation& r : relations)
    if (r.comparable && !r.holds) return false;
  return true;
}

ConsistencyReport consistencyRelations(const WpoTermPtr& term, const EvalOptions& options) {
  const auto ord = invariants(WpoTerm::makeMultiset(WpoTerm::Kind::MultisetOrd, term), options);
  const auto emb = invariants(WpoTerm::makeMultiset(WpoTerm::Kind::MultisetEmb, term), options);
  ConsistencyReport report;
  const auto addRelation = [&](const std::string& name, const InvariantValue& a,
                               const InvariantValue& b) {
    ConsistencyReport::Relation rel;
    rel.name = name;
    rel.comparable = a.known() && b.known();
    if (rel.comparable) {
      rel.holds = compare(*a.value, *b.value) != std::strong_ordering::greater;
      rel.detail = toString(a) + " vs " + toString(b);
    }
    report.relations.push_back(rel);
  };
  addRelation("o(Mr) <= o(Md)", ord.first.o, emb.first.o);
  addRelation("w(Mr) <= w(Md)", ord.first.w, emb.first.w);
  addRelation("h(Md) <= h(Mr)", emb.first.h, ord.first.h);
  return report;
}

std::string toString(const InvariantValue& v) {
  if (v.known()) return renderOrdinal(*v.value);
  std::string out = "unknown: " + v.reason;
  if (v.lowerBound && v.upperBound)
    out += " (at least " + renderOrdinal(*v.lowerBound) + ", at most " +
           renderOrdinal(*v.upperBound) + ")";
  else if (v.lowerBound)
    out += " (at least " + renderOrdinal(*v.lowerBound) + ")";
  else if (v.upperBound)
    out += " (at most " + renderOrdinal(*v.upperBound) + ")";
  return out;
}

std::string compactString(const InvariantValue& v) {
  return v.known() ? renderOrdinal(*v.value) : "?";
}

std::string tupleString(const InvariantTuple& t) {
  return "o=" + compactString(t.o) + " h=" + compactString(t.h) + " w=" + compactString(t.w) +
         " sot=" + compactString(t.sot);
}

}  // namespace wpo
