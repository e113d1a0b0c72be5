#include "wpo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "wpo/errors.hpp"

namespace wpo {

namespace {

int rankByResidual(const FinitePoset& x, std::uint32_t mask,
                   const std::vector<std::uint32_t>& residualMask,
                   std::unordered_map<std::uint32_t, int>& memo) {
  if (mask == 0) return 0;
  if (const auto it = memo.find(mask); it != memo.end()) return it->second;
  int best = 0;
  for (int e = 0; e < x.size(); ++e)
    if ((mask >> e) & 1u)
      best = std::max(best,
                      rankByResidual(x, mask & residualMask[static_cast<std::size_t>(e)],
                                     residualMask, memo) +
                          1);
  memo.emplace(mask, best);
  return best;
}

}  // namespace

RankTriple rankInvariants(const FinitePoset& x, int guard) {
  if (x.size() > guard) throw GuardExceeded("rank invariants", x.size(), guard);
  std::vector<std::uint32_t> notGeq, below, incomp;
  for (int e = 0; e < x.size(); ++e) {
    notGeq.push_back(x.notGeqMask(e));
    below.push_back(x.strictlyBelowMask(e));
    incomp.push_back(x.incomparableMask(e));
  }
  std::unordered_map<std::uint32_t, int> memoO, memoH, memoW;
  RankTriple t;
  t.mot = rankByResidual(x, x.fullMask(), notGeq, memoO);
  t.height = rankByResidual(x, x.fullMask(), below, memoH);
  t.width = rankByResidual(x, x.fullMask(), incomp, memoW);
  if (t.mot != x.size())
    throw std::logic_error("rank oracle: o(X) != |X| on a finite poset");
  if (t.height != x.longestChain().length)
    throw std::logic_error("rank oracle: h(X) != longest chain");
  if (t.width != x.widestAntichain().length)
    throw std::logic_error("rank oracle: w(X) != widest antichain");
  return t;
}

bool checkHeightWidth(const FinitePoset& x, int guard) {
  if (x.size() > guard) throw GuardExceeded("height-width check", x.size(), guard);
  return x.size() <= x.longestChain().length * x.widestAntichain().length;
}

namespace {

struct SotSearch {
  const FinitePoset* x = nullptr;
  std::vector<std::uint32_t> notGeq, incomp;
  long long checked = 0;

  // Builds the linearisation from its last position backwards.  `suffixResidual`
  // is the not-geq residual of everything already placed (i.e. of the elements
  // that will follow the next choice).
  bool search(std::uint32_t remaining, std::uint32_t suffixResidual, bool suffixNonEmpty,
              std::vector<int>& reversed) {
    if (remaining == 0) return true;
    for (int e = 0; e < x->size(); ++e) {
      if (!((remaining >> e) & 1u)) continue;
      bool maximal = true;
      for (int other = 0; other < x->size() && maximal; ++other)
        if (((remaining >> other) & 1u) && x->less(e, other)) maximal = false;
      if (!maximal) continue;
      if (suffixNonEmpty) {
        ++checked;
        if ((suffixResidual & incomp[static_cast<std::size_t>(e)]) == 0) continue;
      }
      reversed.push_back(e);
      if (search(remaining & ~(1u << e), suffixResidual & notGeq[static_cast<std::size_t>(e)],
                 true, reversed))
        return true;
      reversed.pop_back();
    }
    return false;
  }
};

}  // namespace

SotResult sotBruteForce(const FinitePoset& x, int guard) {
  if (x.size() > guard) throw GuardExceeded("maximal safe order type search", x.size(), guard);
  SotSearch s;
  s.x = &x;
  for (int e = 0; e < x.size(); ++e) {
    s.notGeq.push_back(x.notGeqMask(e));
    s.incomp.push_back(x.incomparableMask(e));
  }
  const std::uint32_t stripped = x.strippedMask();
  std::vector<std::vector<std::uint32_t>> byPopcount(
      static_cast<std::size_t>(std::popcount(stripped)) + 1);
  for (std::uint32_t sub = stripped;; sub = (sub - 1) & stripped) {
    byPopcount[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
    if (sub == 0) break;
  }
  for (int size = static_cast<int>(byPopcount.size()) - 1; size >= 1; --size) {
    for (const std::uint32_t subset : byPopcount[static_cast<std::size_t>(size)]) {
      std::vector<int> reversed;
      if (s.search(subset, x.fullMask(), false, reversed)) {
        SotResult result;
        result.value = size;
        for (int e = 0; e < x.size(); ++e)
          if ((subset >> e) & 1u) result.witness.subset.push_back(e);
        result.witness.linearisation.assign(reversed.rbegin(), reversed.rend());
        result.witness.checkedTuples = s.checked;
        return result;
      }
    }
  }
  SotResult empty;
  empty.witness.checkedTuples = s.checked;
  return empty;
}

SotResult sotBruteForceNaive(const FinitePoset& x, int guard, bool requireStripped) {
  if (x.size() > guard) throw GuardExceeded("naive safe order type search", x.size(), guard);
  const std::uint32_t universe = requireStripped ? x.strippedMask() : x.fullMask();
  SotResult best;
  for (std::uint32_t subset = universe;; subset = (subset - 1) & universe) {
    const int size = std::popcount(subset);
    if (size > best.value) {
      std::vector<int> members;
      for (int e = 0; e < x.size(); ++e)
        if ((subset >> e) & 1u) members.push_back(e);
      const FinitePoset sub = x.induced(subset);
      long long localChecked = 0;
      bool found = false;
      std::vector<int> order;
      sub.forEachLinearExtension(
          [&](std::span<const int> ext) {
            if (found) return;
            // ext positions index into `members`.
            bool safe = true;
            const int s = static_cast<int>(ext.size());
            for (int p = 0; p < s && safe; ++p) {
              // every nonempty tuple of elements placed after position p
              for (std::uint32_t t = 1; t < (1u << (s - p - 1)) && safe; ++t) {
                std::uint32_t residual = x.fullMask();
                for (int q = p + 1; q < s; ++q)
                  if ((t >> (q - p - 1)) & 1u)
                    residual &= x.notGeqMask(members[static_cast<std::size_t>(ext[static_cast<std::size_t>(q)])]);
                ++localChecked;
                if ((residual &
                     x.incomparableMask(members[static_cast<std::size_t>(ext[static_cast<std::size_t>(p)])])) == 0)
                  safe = false;
              }
            }
            if (safe) {
              found = true;
              order.assign(ext.begin(), ext.end());
            }
          },
          guard);
      if (found) {
        best.value = size;
        best.witness.subset = members;
        best.witness.linearisation.clear();
        for (const int position : order)
          best.witness.linearisation.push_back(members[static_cast<std::size_t>(position)]);
        best.witness.checkedTuples = localChecked;
      }
    }
    if (subset == 0) break;
  }
  return best;
}

bool sotResidualCheck(const FinitePoset& x, int guard) {
  const int lhs = sotBruteForce(x, guard).value;
  int rhs = 0;
  for (int e = 0; e < x.size(); ++e) {
    if (x.incomparableMask(e) == 0) continue;
    const FinitePoset residual = x.induced(x.notGeqMask(e));
    rhs = std::max(rhs, sotBruteForce(residual, guard).value + 1);
  }
  return lhs == rhs;
}

bool deltaBoundCheck(const FinitePoset& x, int guard) {
  const int strSize = std::popcount(x.strippedMask());
  const int sot = sotBruteForce(x, guard).value;
  const int lower = static_cast<int>(deltaBound(Ordinal(static_cast<std::uint64_t>(strSize))).finiteValue());
  return lower <= sot && sot <= strSize;
}

Ordinal chainMultisetOrdinal(int n, const Multiset& m) {
  if (m.ambientSize() != n) throw PosetError("multiset is not over chain(n)");
  std::vector<CnfTerm> terms;
  for (int i = n - 1; i >= 0; --i)
    if (m.count(i) > 0)
      terms.push_back(CnfTerm{Ordinal(static_cast<std::uint64_t>(i)), m.count(i)});
  return Ordinal::fromCnf(std::move(terms));
}

std::string toString(TransformationLemma id) {
  switch (id) {
    case TransformationLemma::EmbDisjointSum: return "emb-disjoint-sum";
    case TransformationLemma::OrdDisjointSum: return "ord-disjoint-sum";
    case TransformationLemma::OrdLexSum: return "ord-lex-sum";
    case TransformationLemma::EmbLexSumAugment: return "emb-lex-sum-augment";
    case TransformationLemma::EmbLexSumIsoMisuse: return "emb-lex-sum-iso-misuse";
  }
  return "?";
}

LemmaReport checkTransformationLemma(TransformationLemma id, const FinitePoset& a,
                                     const FinitePoset& b, int sizeBound) {
  const bool disjoint =
      id == TransformationLemma::EmbDisjointSum || id == TransformationLemma::OrdDisjointSum;
  const FinitePoset composed = FinitePoset::compose(
      disjoint ? ComposeOp::DisjointSum : ComposeOp::LexSum, a, b);

  LemmaReport report;
  report.id = id;
  report.params = "|A|=" + std::to_string(a.size()) + ", |B|=" + std::to_string(b.size()) +
                  ", k=" + std::to_string(sizeBound);
  report.pass = true;

  const std::vector<Multiset> all = enumerateMultisets(composed, sizeBound);
  const auto split = [&](const Multiset& m) {
    Multiset ma(a.size()), mb(b.size());
    for (int i = 0; i < a.size(); ++i)
      if (m.count(i) > 0) ma.add(i, m.count(i));
    for (int j = 0; j < b.size(); ++j)
      if (m.count(a.size() + j) > 0) mb.add(j, m.count(a.size() + j));
    return std::pair{ma, mb};
  };

  for (const Multiset& m : all) {
    const auto [ma, mb] = split(m);
    for (const Multiset& mp : all) {
      const auto [mpa, mpb] = split(mp);
      ++report.pairsChecked;
      bool lhs = false, rhs = false;
      switch (id) {
        case TransformationLemma::EmbDisjointSum:
          lhs = multisetLeqEmb(composed, m, mp);
          rhs = multisetLeqEmb(a, ma, mpa) && multisetLeqEmb(b, mb, mpb);
          break;
        case TransformationLemma::OrdDisjointSum:
          lhs = multisetLeqR(composed, m, mp);
          rhs = multisetLeqR(a, ma, mpa) && multisetLeqR(b, mb, mpb);
          break;
        case TransformationLemma::OrdLexSum:
          lhs = multisetLeqR(composed, m, mp);
          rhs = (multisetLeqR(b, mb, mpb) && !(mb == mpb)) ||
                (mb == mpb && multisetLeqR(a, ma, mpa));
          break;
        case TransformationLemma::EmbLexSumAugment:
        case TransformationLemma::EmbLexSumIsoMisuse:
          lhs = multisetLeqEmb(composed, m, mp);
          rhs = (multisetLeqEmb(b, mb, mpb) && !(mb == mpb)) ||
                (mb == mpb && multisetLeqEmb(a, ma, mpa));
          break;
      }
      const bool ok = id == TransformationLemma::EmbLexSumAugment ? (!lhs || rhs) : (lhs == rhs);
      if (!ok) {
        report.pass = false;
        report.counterexample = {m, mp};
        report.detail = "m=" + m.toString(composed) + " m'=" + mp.toString(composed) +
                        " lhs=" + (lhs ? "true" : "false") + " rhs=" + (rhs ? "true" : "false");
        return report;
      }
    }
  }
  return report;
}

}  // namespace wpo
