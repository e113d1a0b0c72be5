#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpo/ordinal.hpp"
#include "wpo/term.hpp"

namespace wpo {

/// One ordinal invariant of a term: either a known value, or unknown with a
/// human-readable reason and optional bounds (lower <= upper when both given).
struct InvariantValue {
  std::optional<Ordinal> value;
  std::string reason;
  std::optional<Ordinal> lowerBound, upperBound;

  bool known() const { return value.has_value(); }
  static InvariantValue knownValue(Ordinal v);
  static InvariantValue unknownValue(std::string reason, std::optional<Ordinal> lower = {},
                                     std::optional<Ordinal> upper = {});
};

/// The four invariants: maximal order type, height, width, and maximal safe
/// order type.
struct InvariantTuple {
  InvariantValue o, h, w, sot;
};

struct TraceEntry {
  std::string node;  // rendered subterm
  std::string rule;  // rule key applied at this node
  InvariantTuple tuple;
  int depth = 0;
};
using DerivationTrace = std::vector<TraceEntry>;

struct EvalOptions {
  bool fold = true;   // replace all-finite composition subtrees by explicit posets
  int foldGuard = 8;  // largest composed poset the evaluator materializes
  int rankGuard = 9;
  int sotGuard = 8;
};

/// Bottom-up evaluation of all four invariants with the composition rule
/// table; unknown inputs propagate with chained reasons, and bounds propagate
/// through the monotone rules.  Throws GuardExceeded when an explicit poset
/// leaf exceeds the oracle guards.
std::pair<InvariantTuple, DerivationTrace> invariants(const WpoTermPtr& term,
                                                      const EvalOptions& options = {});

/// Rewrites every maximal all-finite {U, +, x, .} subtree into an explicit
/// poset leaf (composition subtrees only; lone leaves stay).  Known invariants
/// are unchanged by folding; folding can only turn unknown into known.
WpoTermPtr foldFinite(const WpoTermPtr& term, int guard = 8);

/// Checks the cross-ordering relations between Mr(t) and Md(t) whenever both
/// sides are known: o_r <= o_emb, w_r <= w_emb, h_r >= h_emb.
struct ConsistencyReport {
  struct Relation {
    std::string name;
    bool comparable = false;  // both sides known
    bool holds = true;
    std::string detail;
  };
  std::vector<Relation> relations;
  bool pass() const;
};
ConsistencyReport consistencyRelations(const WpoTermPtr& term, const EvalOptions& options = {});

std::string toString(const InvariantValue& v);         // "w^2" or "unknown: ..." with bounds
std::string compactString(const InvariantValue& v);    // value or "?" for traces
std::string tupleString(const InvariantTuple& t);      // "o=... h=... w=... sot=..."

}  // namespace wpo
