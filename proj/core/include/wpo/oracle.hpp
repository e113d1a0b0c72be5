#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpo/multiset.hpp"
#include "wpo/ordinal.hpp"
#include "wpo/poset.hpp"

namespace wpo {

struct RankTriple {
  int mot = 0;     // maximal order type; equals |X| on finite posets
  int height = 0;  // longest chain
  int width = 0;   // widest antichain
  bool operator==(const RankTriple&) const = default;
};

/// Computes the three rank invariants by memoized recursion on the residual
/// equations (sup is max at finite scale):
///   o(X) = max_x o(X_{not>= x}) + 1,
///   h(X) = max_x h(X_{< x}) + 1,
///   w(X) = max_x w(X_{perp x}) + 1,
/// and cross-checks o = |X|, h = longest chain, w = widest antichain before
/// returning (throws std::logic_error on mismatch; any such mismatch is a bug).
RankTriple rankInvariants(const FinitePoset& x, int guard = 9);

/// |X| <= longest chain * widest antichain.
bool checkHeightWidth(const FinitePoset& x, int guard = 9);

struct SafeSubsetWitness {
  std::vector<int> subset;         // element indices, ascending
  std::vector<int> linearisation;  // the subset in increasing order position
  long long checkedTuples = 0;     // residual non-emptiness checks performed
};

struct SotResult {
  int value = 0;
  SafeSubsetWitness witness;
};

/// Maximal safe order type by exhaustive search: the largest subset of the
/// stripped subset str(X) admitting a linear extension y_1 < ... < y_s such
/// that every y_p with p < s has (X_{not>= y_{p+1},...,y_s})_{perp y_p}
/// nonempty.  Because X_{not>= T} shrinks as the tuple T grows, the full
/// suffix is the binding tuple, so checking it covers every nonempty tuple of
/// later elements; membership in str(X) covers the empty tuple.
SotResult sotBruteForce(const FinitePoset& x, int guard = 8);

/// Reference implementation that quantifies over every nonempty tuple
/// explicitly; used to validate the suffix reduction.  `requireStripped`
/// selects between the two candidate readings of the safety condition.
SotResult sotBruteForceNaive(const FinitePoset& x, int guard = 6, bool requireStripped = true);

/// The finite residual identity for the maximal safe order type:
///   sot(X) == max({ sot(X_{not>= x}) + 1 | x in X, X_{perp x} nonempty } u {0}).
bool sotResidualCheck(const FinitePoset& x, int guard = 8);

/// deltaBound(|str(X)|) <= sot(X) <= |str(X)|.
bool deltaBoundCheck(const FinitePoset& x, int guard = 8);

/// The order-type image of a multiset over chain(n): sum of w^i * count(i).
/// Under the multiset ordering, chains map order-isomorphically onto an
/// initial segment of w^n, so multisetLeqR agrees with comparing images.
Ordinal chainMultisetOrdinal(int n, const Multiset& m);

/// Truncated checks of the transformation isomorphisms between multiset
/// constructions on composed posets.
enum class TransformationLemma {
  EmbDisjointSum,     // emb over A|_|B  ~~  cartesian pair of embs
  OrdDisjointSum,     // ordering over A|_|B  ~~  cartesian pair of orderings
  OrdLexSum,          // ordering over A+B  ~~  lexicographic pair of orderings
  EmbLexSumAugment,   // emb over A+B implies the lexicographic pair relation
  EmbLexSumIsoMisuse  // deliberately false iso claim; negative control
};

std::string toString(TransformationLemma id);

struct LemmaReport {
  TransformationLemma id;
  std::string params;
  bool pass = false;
  long long pairsChecked = 0;
  /// Present iff !pass; a re-checkable pair over the composed poset.
  std::optional<std::pair<Multiset, Multiset>> counterexample;
  std::string detail;
};

/// Verifies the lemma on all multisets of total size <= sizeBound over the
/// composed poset, via the canonical split m -> (m_A, m_B).
LemmaReport checkTransformationLemma(TransformationLemma id, const FinitePoset& a,
                                     const FinitePoset& b, int sizeBound);

}  // namespace wpo
