#include "wpo/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wpo/algebra.hpp"
#include "wpo/errors.hpp"
#include "wpo/multiset.hpp"
#include "wpo/ordinal_text.hpp"
#include "wpo/term_parser.hpp"

namespace wpo {

bool VerifyReport::pass() const {
  for (const PropertyOutcome& p : properties)
    if (p.failures > 0) return false;
  return true;
}

std::string toString(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::Residuals: return "residuals";
    case VerifySuite::Sot: return "sot";
    case VerifySuite::MultisetIso: return "multiset-iso";
    case VerifySuite::OrdinalArith: return "ordinal-arith";
    case VerifySuite::Relations: return "relations";
    case VerifySuite::All: return "all";
  }
  return "?";
}

VerifySuite parseSuiteName(const std::string& name) {
  if (name == "residuals") return VerifySuite::Residuals;
  if (name == "sot") return VerifySuite::Sot;
  if (name == "multiset-iso") return VerifySuite::MultisetIso;
  if (name == "ordinal-arith") return VerifySuite::OrdinalArith;
  if (name == "relations") return VerifySuite::Relations;
  if (name == "all") return VerifySuite::All;
  throw std::invalid_argument("unknown suite '" + name +
                              "'; expected residuals, sot, multiset-iso, ordinal-arith, "
                              "relations, or all");
}

void forEachLabeledPoset(int n, const std::function<void(const FinitePoset&)>& visit) {
  if (n < 0 || n > 4) throw std::invalid_argument("labelled poset enumeration supports n <= 4");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  const std::uint32_t limit = 1u << slots.size();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool rel[4][4] = {};
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) rel[slots[s].first][slots[s].second] = true;
    bool valid = true;
    for (int i = 0; i < n && valid; ++i)
      for (int j = 0; j < n && valid; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) valid = false;
        for (int k = 0; k < n && valid; ++k)
          if (rel[i][j] && rel[j][k] && i != k && !rel[i][k]) valid = false;
      }
    if (!valid) continue;
    std::vector<std::pair<std::string, std::string>> le;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rel[i][j]) le.emplace_back(labels[static_cast<std::size_t>(i)],
                                                 labels[static_cast<std::size_t>(j)]);
    visit(FinitePoset::fromRelations(labels, le));
  }
}

long long countLabeledPosets(int n) {
  long long count = 0;
  forEachLabeledPoset(n, [&](const FinitePoset&) { ++count; });
  return count;
}

FinitePoset randomPoset(std::mt19937_64& rng, int n) {
  const std::uint64_t percent = 15 + rng() % 45;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> le;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 100 < percent)
        le.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  return FinitePoset::fromRelations(labels, le);
}

Ordinal randomOrdinal(std::mt19937_64& rng, int maxDepth, bool allowEpsilon) {
  if (rng() % 8 == 0) return Ordinal();
  const int termCount = 1 + static_cast<int>(rng() % 3);
  Ordinal result;
  for (int t = 0; t < termCount; ++t) {
    Ordinal exponent;
    if (maxDepth == 0) {
      if (allowEpsilon && rng() % 4 == 0)
        exponent = Ordinal::epsilon(static_cast<int>(rng() % 3));
      else
        exponent = Ordinal(rng() % 4);
    } else {
      exponent = randomOrdinal(rng, maxDepth - 1, allowEpsilon);
    }
    result = natSum(result, Ordinal::monomial(exponent, 1 + rng() % 4));
  }
  return result;
}

WpoTermPtr randomTerm(std::mt19937_64& rng, int maxDepth) {
  if (maxDepth == 0 || rng() % 3 == 0) {
    switch (rng() % 5) {
      case 0: return WpoTerm::makeGamma(1 + static_cast<int>(rng() % 3));
      case 1: return WpoTerm::makeH();
      case 2: return WpoTerm::makeOrdinal(Ordinal(1 + rng() % 4));
      case 3: return WpoTerm::makeOrdinal(Ordinal::monomial(Ordinal(1 + rng() % 2), 1));
      default: return WpoTerm::makePoset(randomPoset(rng, 2 + static_cast<int>(rng() % 2)));
    }
  }
  switch (rng() % 6) {
    case 0:
      return WpoTerm::makeBinary(WpoTerm::Kind::DisjointSum, randomTerm(rng, maxDepth - 1),
                                 randomTerm(rng, maxDepth - 1));
    case 1:
      return WpoTerm::makeBinary(WpoTerm::Kind::LexSum, randomTerm(rng, maxDepth - 1),
                                 randomTerm(rng, maxDepth - 1));
    case 2:
      return WpoTerm::makeBinary(WpoTerm::Kind::Cartesian, randomTerm(rng, maxDepth - 1),
                                 randomTerm(rng, maxDepth - 1));
    case 3:
      return WpoTerm::makeBinary(WpoTerm::Kind::LexProduct, randomTerm(rng, maxDepth - 1),
                                 randomTerm(rng, maxDepth - 1));
    case 4:
      return WpoTerm::makeMultiset(WpoTerm::Kind::MultisetEmb, randomTerm(rng, maxDepth - 1));
    default:
      return WpoTerm::makeMultiset(WpoTerm::Kind::MultisetOrd, randomTerm(rng, maxDepth - 1));
  }
}

WpoTermPtr randomFiniteTerm(std::mt19937_64& rng, int maxDepth) {
  if (maxDepth == 0 || rng() % 3 == 0) {
    switch (rng() % 3) {
      case 0: return WpoTerm::makeGamma(1 + static_cast<int>(rng() % 3));
      case 1: return WpoTerm::makeOrdinal(Ordinal(1 + rng() % 3));
      default: return WpoTerm::makePoset(randomPoset(rng, 2 + static_cast<int>(rng() % 2)));
    }
  }
  const WpoTerm::Kind ops[4] = {WpoTerm::Kind::DisjointSum, WpoTerm::Kind::LexSum,
                                WpoTerm::Kind::Cartesian, WpoTerm::Kind::LexProduct};
  return WpoTerm::makeBinary(ops[rng() % 4], randomFiniteTerm(rng, maxDepth - 1),
                             randomFiniteTerm(rng, maxDepth - 1));
}

namespace {

struct PropertyRun {
  PropertyOutcome outcome;

  explicit PropertyRun(std::string name) { outcome.name = std::move(name); }

  void instance(bool ok, const std::function<std::string()>& describe) {
    ++outcome.instances;
    if (!ok) {
      ++outcome.failures;
      if (outcome.counterexample.empty()) outcome.counterexample = describe();
    }
  }
  void instance(bool ok, const std::string& description) {
    instance(ok, [&] { return description; });
  }
};

std::string describePoset(const FinitePoset& p) {
  std::string out = "{";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p.label(i);
  }
  out += "; ";
  bool first = true;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j)) {
        if (!first) out += " ";
        out += p.label(i) + "<" + p.label(j);
        first = false;
      }
  return out + "}";
}

/// Exhaustive posets up to min(maxSize, 4), then random posets of sizes
/// 5..maxSize, `samples` of them.
std::vector<FinitePoset> posetPool(const VerifyConfig& cfg) {
  std::vector<FinitePoset> pool;
  for (int n = 0; n <= std::min(cfg.maxSize, 4); ++n)
    forEachLabeledPoset(n, [&](const FinitePoset& p) { pool.push_back(p); });
  if (cfg.maxSize >= 5) {
    std::mt19937_64 rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
      const int n = 5 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.maxSize - 4));
      pool.push_back(randomPoset(rng, n));
    }
  }
  return pool;
}

std::vector<FinitePoset> nonEmptyPosetsUpTo3() {
  std::vector<FinitePoset> out;
  for (int n = 1; n <= 3; ++n)
    forEachLabeledPoset(n, [&](const FinitePoset& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------- residuals

VerifyReport runResiduals(const VerifyConfig& cfg) {
  if (cfg.maxSize > 9)
    throw std::invalid_argument("residuals suite: max-size exceeds the rank guard (9)");
  VerifyReport report;
  report.suite = "residuals";
  PropertyRun ranks("rank-residual-equations");
  PropertyRun heightWidth("height-width-bound");
  for (const FinitePoset& p : posetPool(cfg)) {
    bool ok = true;
    std::string detail;
    try {
      const RankTriple t = rankInvariants(p, cfg.maxSize);
      ok = t.mot == p.size() && t.height == p.longestChain().length &&
           t.width == p.widestAntichain().length;
    } catch (const std::logic_error& e) {
      ok = false;
      detail = e.what();
    }
    ranks.instance(ok, [&] { return describePoset(p) + " " + detail; });
    heightWidth.instance(checkHeightWidth(p, cfg.maxSize), [&] { return describePoset(p); });
  }
  report.properties = {ranks.outcome, heightWidth.outcome};
  return report;
}

// ---------------------------------------------------------------------- sot

VerifyReport runSot(const VerifyConfig& cfg) {
  if (cfg.maxSize > 8)
    throw std::invalid_argument("sot suite: max-size exceeds the safe-order-type guard (8)");
  VerifyReport report;
  report.suite = "sot";

  PropertyRun residualIdentity("sot-residual-identity");
  PropertyRun delta("sot-delta-bound");
  PropertyRun readings("sot-safety-reading");
  long long readingDisagreements = 0;
  for (const FinitePoset& p : posetPool(cfg)) {
    residualIdentity.instance(sotResidualCheck(p, cfg.maxSize),
                              [&] { return describePoset(p); });
    delta.instance(deltaBoundCheck(p, cfg.maxSize), [&] { return describePoset(p); });
    if (p.size() <= 5) {
      const int adopted = sotBruteForce(p, cfg.maxSize).value;
      const int tupleOnly = sotBruteForceNaive(p, 5, /*requireStripped=*/false).value;
      readings.instance(true, "");
      if (adopted != tupleOnly) ++readingDisagreements;
    }
  }
  if (readingDisagreements > 0)
    readings.outcome.notes.push_back(
        std::to_string(readingDisagreements) +
        " posets where the tuple-only reading of the safety condition differs; the "
        "stripped-subset reading is in use");

  PropertyRun suffixVsNaive("sot-suffix-vs-naive");
  for (int n = 0; n <= std::min(cfg.maxSize, 4); ++n) {
    forEachLabeledPoset(n, [&](const FinitePoset& p) {
      const SotResult fast = sotBruteForce(p, cfg.maxSize);
      const SotResult naive = sotBruteForceNaive(p, 5, /*requireStripped=*/true);
      suffixVsNaive.instance(fast.value == naive.value, [&] {
        return describePoset(p) + " fast=" + std::to_string(fast.value) +
               " naive=" + std::to_string(naive.value);
      });
    });
  }

  PropertyRun lexRule("sot-lex-sum-rule");
  PropertyRun disjointRule("sot-disjoint-sum-rule");
  PropertyRun cartesianBound("sot-cartesian-lower-bound");
  const std::vector<FinitePoset> small = nonEmptyPosetsUpTo3();
  for (const FinitePoset& a : small)
    for (const FinitePoset& b : small) {
      const int sa = sotBruteForce(a).value;
      const int sb = sotBruteForce(b).value;
      const FinitePoset lexSum = FinitePoset::compose(ComposeOp::LexSum, a, b);
      lexRule.instance(sotBruteForce(lexSum).value == sa + sb, [&] {
        return describePoset(a) + " + " + describePoset(b);
      });
      const FinitePoset disjoint = FinitePoset::compose(ComposeOp::DisjointSum, a, b);
      disjointRule.instance(sotBruteForce(disjoint).value == a.size() + b.size() - 1, [&] {
        return describePoset(a) + " U " + describePoset(b);
      });
      const FinitePoset product = FinitePoset::compose(ComposeOp::CartesianProduct, a, b);
      // bound is (o(A)-1)(x)(o(B)-1): without the second -1 it fails on chains
      cartesianBound.instance(
          sotBruteForce(product, 9).value >= (a.size() - 1) * (b.size() - 1),
          [&] { return describePoset(a) + " x " + describePoset(b); });
    }

  report.properties = {residualIdentity.outcome, delta.outcome,     suffixVsNaive.outcome,
                       lexRule.outcome,          disjointRule.outcome, cartesianBound.outcome,
                       readings.outcome};
  return report;
}

// -------------------------------------------------------------- multiset-iso

VerifyReport runMultisetIso(const VerifyConfig& cfg, const VerifyHooks& hooks) {
  if (cfg.sizeBound > 5)
    throw std::invalid_argument("multiset-iso suite: size-bound above 5 is not desk scale");
  VerifyReport report;
  report.suite = "multiset-iso";

  PropertyRun embDisjoint("lemma-emb-disjoint-sum");
  PropertyRun ordDisjoint("lemma-ord-disjoint-sum");
  PropertyRun ordLex("lemma-ord-lex-sum");
  PropertyRun embLexAug("lemma-emb-lex-sum-augment");
  const std::vector<FinitePoset> small = [] {
    std::vector<FinitePoset> out{FinitePoset()};
    for (int n = 1; n <= 2; ++n)
      forEachLabeledPoset(n, [&](const FinitePoset& p) { out.push_back(p); });
    // a spread of 3-element shapes rather than all 19, to keep the CLI quick
    out.push_back(FinitePoset::chain(3));
    out.push_back(FinitePoset::antichain(3));
    out.push_back(FinitePoset::fromRelations({"a", "b", "c"}, {{"a", "b"}}));
    out.push_back(FinitePoset::fromRelations({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}));
    out.push_back(FinitePoset::fromRelations({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
    return out;
  }();
  const auto runLemma = [&](TransformationLemma id, PropertyRun& run) {
    for (const FinitePoset& a : small)
      for (const FinitePoset& b : small) {
        const LemmaReport r = checkTransformationLemma(id, a, b, cfg.sizeBound);
        run.instance(r.pass, [&] { return r.params + " " + r.detail; });
      }
  };
  runLemma(TransformationLemma::EmbDisjointSum, embDisjoint);
  runLemma(TransformationLemma::OrdDisjointSum, ordDisjoint);
  runLemma(TransformationLemma::OrdLexSum, ordLex);
  runLemma(TransformationLemma::EmbLexSumAugment, embLexAug);

  PropertyRun negativeControl("lemma-negative-control");
  {
    const LemmaReport r =
        checkTransformationLemma(TransformationLemma::EmbLexSumIsoMisuse,
                                 FinitePoset::antichain(2), FinitePoset::antichain(2), 2);
    negativeControl.instance(!r.pass && r.counterexample.has_value(),
                             "the false iso claim was not caught");
    if (!r.pass)
      negativeControl.outcome.notes.push_back("correctly rejected with counterexample " +
                                              r.detail);
  }

  PropertyRun chainLinearity("chain-multiset-linearity");
  for (int n = 1; n <= 4; ++n) {
    const FinitePoset chain = FinitePoset::chain(n);
    const std::vector<Multiset> all = enumerateMultisets(chain, 5);
    for (const Multiset& m : all) {
      const Ordinal im = chainMultisetOrdinal(n, m);
      for (const Multiset& mp : all) {
        const Ordinal imp = chainMultisetOrdinal(n, mp);
        bool lhs = multisetLeqR(chain, m, mp);
        if (hooks.breakMultisetComparator && m.size() == 0 && mp.size() == 1) lhs = !lhs;
        const bool rhs = compare(im, imp) != std::strong_ordering::greater;
        chainLinearity.instance(lhs == rhs, [&] {
          return "n=" + std::to_string(n) + " m=" + m.toString(chain) +
                 " m'=" + mp.toString(chain) + " images " + renderOrdinal(im) + " vs " +
                 renderOrdinal(imp);
        });
      }
    }
  }

  PropertyRun axioms("multiset-partial-order-axioms");
  PropertyRun augmentation("multiset-aug-relation");
  PropertyRun sizeMono("multiset-size-monotonicity");
  {
    std::vector<FinitePoset> ambients;
    for (int n = 1; n <= 3; ++n)
      forEachLabeledPoset(n, [&](const FinitePoset& p) { ambients.push_back(p); });
    for (const FinitePoset& amb : ambients) {
      const std::vector<Multiset> all = enumerateMultisets(amb, 4);
      const std::size_t n = all.size();
      for (const bool emb : {true, false}) {
        const auto leq = [&](const Multiset& x, const Multiset& y) {
          return emb ? multisetLeqEmb(amb, x, y) : multisetLeqR(amb, x, y);
        };
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(all[i], all[j]);
        for (std::size_t i = 0; i < n; ++i) {
          axioms.instance(rel[i][i], "reflexivity");
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j)
              axioms.instance(!(rel[i][j] && rel[j][i]), [&] {
                return "antisymmetry " + all[i].toString(amb) + " " + all[j].toString(amb);
              });
            for (std::size_t k = 0; k < n; ++k)
              if (rel[i][j] && rel[j][k])
                axioms.instance(rel[i][k], "transitivity");
          }
        }
        if (emb) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (rel[i][j]) {
                augmentation.instance(multisetLeqR(amb, all[i], all[j]), [&] {
                  return all[i].toString(amb) + " <=emb " + all[j].toString(amb) +
                         " but not <=r";
                });
                sizeMono.instance(all[i].size() <= all[j].size(), [&] {
                  return all[i].toString(amb) + " <=emb " + all[j].toString(amb);
                });
              }
        }
      }
    }
  }

  PropertyRun substructure("multiset-substructure-monotonicity");
  {
    const auto checkSub = [&](const FinitePoset& big, std::uint32_t mask) {
      const FinitePoset sub = big.induced(mask);
      std::vector<int> kept;
      for (int i = 0; i < big.size(); ++i)
        if ((mask >> i) & 1u) kept.push_back(i);
      const std::vector<Multiset> smallSets = enumerateMultisets(sub, 3);
      const auto inject = [&](const Multiset& m) {
        Multiset out(big.size());
        for (int i = 0; i < sub.size(); ++i)
          if (m.count(i) > 0) out.add(kept[static_cast<std::size_t>(i)], m.count(i));
        return out;
      };
      for (const Multiset& m : smallSets)
        for (const Multiset& mp : smallSets) {
          const Multiset bm = inject(m), bmp = inject(mp);
          substructure.instance(
              multisetLeqEmb(sub, m, mp) == multisetLeqEmb(big, bm, bmp) &&
                  multisetLeqR(sub, m, mp) == multisetLeqR(big, bm, bmp),
              [&] { return describePoset(big) + " mask=" + std::to_string(mask); });
        }
    };
    // exhaustive over all induced substructures of all posets on <= 3 elements
    for (int n = 1; n <= 3; ++n)
      forEachLabeledPoset(n, [&](const FinitePoset& big) {
        for (std::uint32_t mask = 1; mask < big.fullMask(); ++mask) checkSub(big, mask);
      });
    std::mt19937_64 rng(cfg.seed);
    for (int trial = 0; trial < std::min(cfg.samples, 25); ++trial) {
      const FinitePoset big = randomPoset(rng, 4);
      checkSub(big, static_cast<std::uint32_t>(rng() % 14 + 1));
    }
  }

  report.properties = {embDisjoint.outcome,   ordDisjoint.outcome, ordLex.outcome,
                       embLexAug.outcome,     negativeControl.outcome, chainLinearity.outcome,
                       axioms.outcome,        augmentation.outcome, sizeMono.outcome,
                       substructure.outcome};
  return report;
}

// ------------------------------------------------------------- ordinal-arith

std::vector<Ordinal> gridBelowOmegaCubed(int coeffCap) {
  std::vector<Ordinal> out;
  for (int a = 0; a <= coeffCap; ++a)
    for (int b = 0; b <= coeffCap; ++b)
      for (int c = 0; c <= coeffCap; ++c) {
        Ordinal v = natSum(Ordinal::monomial(Ordinal(std::uint64_t{2}), static_cast<std::uint64_t>(a)),
                           natSum(Ordinal::monomial(Ordinal(std::uint64_t{1}), static_cast<std::uint64_t>(b)),
                                  Ordinal(static_cast<std::uint64_t>(c))));
        out.push_back(v);
      }
  return out;
}

VerifyReport runOrdinalArith(const VerifyConfig& cfg) {
  VerifyReport report;
  report.suite = "ordinal-arith";
  std::mt19937_64 rng(cfg.seed);
  const int samples = std::max(cfg.samples, 1);

  PropertyRun order("compare-total-order");
  PropertyRun assoc("sum-product-laws");
  PropertyRun natural("natural-ops-laws");
  PropertyRun sandwich("product-sandwich");
  PropertyRun roundtrip("parse-render-roundtrip");
  PropertyRun subtract("left-subtract-roundtrip");
  PropertyRun hat("hat-transform-properties");
  PropertyRun delta("delta-bound-properties");
  for (int s = 0; s < samples; ++s) {
    const Ordinal a = randomOrdinal(rng, 2, true);
    const Ordinal b = randomOrdinal(rng, 2, true);
    const Ordinal c = randomOrdinal(rng, 2, true);
    const auto show = [&] {
      return renderOrdinal(a) + " ; " + renderOrdinal(b) + " ; " + renderOrdinal(c);
    };
    order.instance(compare(a, a) == std::strong_ordering::equal, show);
    {
      const auto ab = compare(a, b), ba = compare(b, a);
      order.instance((ab == std::strong_ordering::equal) == (a == b), show);
      order.instance((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater),
                     show);
      const auto bc = compare(b, c);
      if (ab != std::strong_ordering::greater && bc != std::strong_ordering::greater)
        order.instance(compare(a, c) != std::strong_ordering::greater, show);
    }
    assoc.instance(add(add(a, b), c) == add(a, add(b, c)), show);
    assoc.instance(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), show);
    assoc.instance(add(a, Ordinal()) == a && multiply(a, Ordinal(std::uint64_t{1})) == a, show);
    assoc.instance(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)), show);
    natural.instance(natSum(a, b) == natSum(b, a) && natProd(a, b) == natProd(b, a), show);
    natural.instance(natSum(natSum(a, b), c) == natSum(a, natSum(b, c)), show);
    natural.instance(natProd(natProd(a, b), c) == natProd(a, natProd(b, c)), show);
    natural.instance(natProd(a, natSum(b, c)) == natSum(natProd(a, b), natProd(a, c)), show);
    {
      const Ordinal h = hessProd(a, b);
      sandwich.instance(compare(multiply(a, b), h) != std::strong_ordering::greater &&
                            compare(h, natProd(a, b)) != std::strong_ordering::greater,
                        show);
      sandwich.instance(hessProd(a, add(b, Ordinal(std::uint64_t{1}))) == natSum(h, a), show);
    }
    roundtrip.instance(parseOrdinal(renderOrdinal(a)) == a, [&] { return renderOrdinal(a); });
    {
      const Ordinal lo = compare(a, b) == std::strong_ordering::greater ? b : a;
      const Ordinal hi = compare(a, b) == std::strong_ordering::greater ? a : b;
      subtract.instance(add(lo, leftSubtract(hi, lo)) == hi, show);
    }
    {
      hat.instance(compare(hatTransform(a), a) != std::strong_ordering::less, show);
      if (!a.containsEpsilonAtom()) hat.instance(hatTransform(a) == a, show);
      const Ordinal lo = compare(a, b) == std::strong_ordering::greater ? b : a;
      const Ordinal hi = compare(a, b) == std::strong_ordering::greater ? a : b;
      hat.instance(compare(hatTransform(lo), hatTransform(hi)) != std::strong_ordering::greater,
                   show);
    }
    {
      const Ordinal d = deltaBound(a);
      delta.instance(compare(d, a) != std::strong_ordering::greater &&
                         compare(a, add(d, Ordinal::omega())) != std::strong_ordering::greater,
                     show);
    }
  }

  // Closed forms against their defining clauses on the grid below w^3.
  PropertyRun hessValidation("hessprod-matches-inductive-definition");
  PropertyRun hsupValidation("hsup-matches-sup-oracle");
  const std::vector<Ordinal> grid = gridBelowOmegaCubed(2);
  const Ordinal one(std::uint64_t{1});
  for (const Ordinal& a : grid) {
    for (const Ordinal& b : grid) {
      const auto show = [&] { return renderOrdinal(a) + " ; " + renderOrdinal(b); };
      // hessProd clauses
      if (b.isZero()) {
        hessValidation.instance(hessProd(a, b).isZero(), show);
      } else if (b.isSuccessor()) {
        hessValidation.instance(hessProd(a, b) == natSum(hessProd(a, predecessor(b)), a), show);
      } else if (!a.isZero()) {
        const Ordinal value = hessProd(a, b);
        bool increasing = true, bounded = true;
        Ordinal previous;
        for (std::uint64_t i = 1; i <= 8; ++i) {
          const Ordinal vi = hessProd(a, fundamentalStep(b, i));
          if (i > 1 && compare(previous, vi) != std::strong_ordering::less) increasing = false;
          if (compare(vi, value) != std::strong_ordering::less) bounded = false;
          previous = vi;
        }
        hessValidation.instance(increasing && bounded, show);
        // least upper bound: any sampled c < value is exceeded along the sequence
        if (value.isLimit() && !value.containsEpsilonAtom()) {
          for (std::uint64_t j = 1; j <= 4; ++j) {
            const Ordinal c = fundamentalStep(value, j);
            bool exceeded = false;
            for (std::uint64_t i = 1; i <= 24 && !exceeded; ++i)
              if (compare(hessProd(a, fundamentalStep(b, i)), c) == std::strong_ordering::greater)
                exceeded = true;
            hessValidation.instance(exceeded, show);
          }
        }
      }
      // hSupProduct against approximation from below
      if (!a.isZero() && !b.isZero()) {
        const Ordinal value = hSupProduct(a, b);
        hsupValidation.instance(hSupProduct(b, a) == value, show);
        if (a.isFinite() && b.isFinite()) {
          // finite brute force: max over x < a, y < b of x (+) y + 1
          const std::uint64_t fa = a.finiteValue(), fb = b.finiteValue();
          hsupValidation.instance(value == Ordinal(fa + fb - 1), show);
        } else {
          const auto approximants = [](const Ordinal& x) {
            std::vector<Ordinal> out;
            if (x.isSuccessor())
              out.push_back(predecessor(x));
            else
              for (std::uint64_t i = 1; i <= 9; ++i) out.push_back(fundamentalStep(x, i));
            return out;
          };
          const std::vector<Ordinal> xs = approximants(a);
          const std::vector<Ordinal> ys = approximants(b);
          bool below = true;
          Ordinal largest;
          for (const Ordinal& x : xs)
            for (const Ordinal& y : ys) {
              const Ordinal v = add(natSum(x, y), one);
              if (compare(v, value) == std::strong_ordering::greater) below = false;
              if (compare(v, largest) == std::strong_ordering::greater) largest = v;
            }
          hsupValidation.instance(below, show);
          if (a.isSuccessor() && b.isSuccessor()) {
            hsupValidation.instance(largest == value, show);
          } else if (value.isLimit()) {
            // least: sampled c < value is exceeded by some grid point
            for (std::uint64_t j = 1; j <= 4; ++j) {
              const Ordinal c = fundamentalStep(value, j);
              bool exceeded = false;
              for (const Ordinal& x : xs)
                for (const Ordinal& y : ys)
                  if (compare(add(natSum(x, y), one), c) == std::strong_ordering::greater)
                    exceeded = true;
              hsupValidation.instance(exceeded, show);
            }
          }
        }
      }
    }
    if (!a.isZero())
      hsupValidation.instance(hSupProduct(a, one) == a, [&] { return renderOrdinal(a); });
  }

  PropertyRun fundamental("fundamental-step-increasing");
  for (const Ordinal& a : grid) {
    if (!a.isLimit()) continue;
    Ordinal previous;
    bool ok = true;
    for (std::uint64_t i = 1; i <= 10; ++i) {
      const Ordinal ai = fundamentalStep(a, i);
      if (compare(ai, a) != std::strong_ordering::less) ok = false;
      if (i > 1 && compare(previous, ai) != std::strong_ordering::less) ok = false;
      previous = ai;
    }
    fundamental.instance(ok, [&] { return renderOrdinal(a); });
  }

  report.properties = {order.outcome,     assoc.outcome,          natural.outcome,
                       sandwich.outcome,  hessValidation.outcome, hsupValidation.outcome,
                       roundtrip.outcome, subtract.outcome,       hat.outcome,
                       delta.outcome,     fundamental.outcome};
  return report;
}

// ----------------------------------------------------------------- relations

VerifyReport runRelations(const VerifyConfig& cfg) {
  VerifyReport report;
  report.suite = "relations";
  std::mt19937_64 rng(cfg.seed);

  PropertyRun cross("cross-ordering-consistency");
  PropertyRun internal("tuple-internal-bounds");
  PropertyRun spot("height-width-spot-check");
  // deterministic instances with o multiplicatively indecomposable and h < o
  for (const char* text : {"Md(w)", "Md(H)", "Md(w^w)"}) {
    const InvariantTuple tuple = invariants(parseWpoTerm(text)).first;
    const OrdinalClassification cls = classify(*tuple.o.value);
    if (cls.multiplicativelyIndecomposable &&
        compare(*tuple.h.value, *tuple.o.value) == std::strong_ordering::less)
      spot.instance(tuple.w.known() && *tuple.w.value == *tuple.o.value,
                    [&] { return std::string(text); });
  }
  const int terms = std::max(cfg.samples / 10, 20);
  for (int s = 0; s < terms; ++s) {
    const WpoTermPtr t = randomTerm(rng, 2);
    const ConsistencyReport r = consistencyRelations(t);
    std::string detail = t->render();
    for (const auto& rel : r.relations)
      if (rel.comparable && !rel.holds) detail += " | " + rel.name + ": " + rel.detail;
    cross.instance(r.pass(), detail);
    // The evaluator validates h<=o, w<=o, sot<=o at every node and throws on
    // violation; surviving evaluation is the property.
    bool ok = true;
    std::string what;
    InvariantTuple tuple;
    try {
      tuple = invariants(t).first;
    } catch (const std::logic_error& e) {
      ok = false;
      what = e.what();
    }
    internal.instance(ok, [&] { return t->render() + " " + what; });
    if (ok && tuple.o.known() && tuple.h.known() && tuple.w.known()) {
      const OrdinalClassification cls = classify(*tuple.o.value);
      if (cls.multiplicativelyIndecomposable &&
          compare(*tuple.h.value, *tuple.o.value) == std::strong_ordering::less)
        spot.instance(*tuple.w.value == *tuple.o.value, [&] { return t->render(); });
    }
  }

  PropertyRun agreement("finite-leaf-agreement");
  for (int s = 0; s < std::max(cfg.samples / 4, 30); ++s) {
    const WpoTermPtr t = randomFiniteTerm(rng, 2);
    EvalOptions folded;
    EvalOptions rules;
    rules.fold = false;
    InvariantTuple viaFold, viaRules;
    try {
      viaFold = invariants(t, folded).first;
      viaRules = invariants(t, rules).first;
    } catch (const GuardExceeded&) {
      continue;  // term grew past desk scale; skip
    }
    bool ok = viaFold.o.known() && viaRules.o.known() && *viaFold.o.value == *viaRules.o.value;
    if (viaRules.h.known())
      ok = ok && viaFold.h.known() && *viaFold.h.value == *viaRules.h.value;
    if (viaRules.w.known())
      ok = ok && viaFold.w.known() && *viaFold.w.value == *viaRules.w.value;
    if (viaRules.sot.known())
      ok = ok && viaFold.sot.known() && *viaFold.sot.value == *viaRules.sot.value;
    else if (viaRules.sot.lowerBound && viaFold.sot.known())
      ok = ok && compare(*viaRules.sot.lowerBound, *viaFold.sot.value) !=
                     std::strong_ordering::greater;
    agreement.instance(ok, [&] {
      return t->render() + " fold{" + tupleString(viaFold) + "} rules{" + tupleString(viaRules) +
             "}";
    });
  }

  PropertyRun trace("trace-completeness");
  for (int s = 0; s < 20; ++s) {
    const WpoTermPtr t = randomTerm(rng, 2);
    const auto [tuple, entries] = invariants(t);
    bool ok = entries.size() == t->nodeCount();
    for (const TraceEntry& e : entries)
      if (e.rule.empty()) ok = false;
    trace.instance(ok, [&] { return t->render(); });
  }

  PropertyRun widths("multiset-embedding-width-on-antichains");
  for (int k = 1; k <= 5; ++k) {
    const auto [tuple, entries] =
        invariants(WpoTerm::makeMultiset(WpoTerm::Kind::MultisetEmb, WpoTerm::makeGamma(k)));
    const Ordinal expected = omegaPower(Ordinal(static_cast<std::uint64_t>(k - 1)));
    widths.instance(tuple.w.known() && *tuple.w.value == expected,
                    [&] { return "k=" + std::to_string(k); });
  }
  // and the same widths through the omega-power cartesian fold
  for (int k = 2; k <= 4; ++k) {
    WpoTermPtr fold = WpoTerm::makeOrdinal(Ordinal::omega());
    for (int i = 1; i < k; ++i)
      fold = WpoTerm::makeBinary(WpoTerm::Kind::Cartesian, fold,
                                 WpoTerm::makeOrdinal(Ordinal::omega()));
    const auto [tuple, entries] = invariants(fold);
    widths.instance(tuple.w.known() &&
                        *tuple.w.value == omegaPower(Ordinal(static_cast<std::uint64_t>(k - 1))),
                    [&] { return "omega fold k=" + std::to_string(k); });
  }

  report.properties = {cross.outcome, internal.outcome, spot.outcome,
                       agreement.outcome, trace.outcome, widths.outcome};
  return report;
}

}  // namespace

VerifyReport runVerifySuite(const VerifyConfig& config, const VerifyHooks& hooks) {
  if (config.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (config.maxSize < 0) throw std::invalid_argument("max-size must be >= 0");
  if (config.sizeBound < 0) throw std::invalid_argument("size-bound must be >= 0");
  const auto finish = [&](VerifyReport report) {
    report.config = config;
    return report;
  };
  switch (config.suite) {
    case VerifySuite::Residuals: return finish(runResiduals(config));
    case VerifySuite::Sot: return finish(runSot(config));
    case VerifySuite::MultisetIso: return finish(runMultisetIso(config, hooks));
    case VerifySuite::OrdinalArith: return finish(runOrdinalArith(config));
    case VerifySuite::Relations: return finish(runRelations(config));
    case VerifySuite::All: break;
  }
  VerifyConfig sub = config;
  VerifyReport all;
  all.suite = "all";
  all.config = config;
  for (const VerifySuite s : {VerifySuite::Residuals, VerifySuite::Sot, VerifySuite::MultisetIso,
                              VerifySuite::OrdinalArith, VerifySuite::Relations}) {
    sub.suite = s;
    if (s == VerifySuite::Sot) sub.maxSize = std::min(config.maxSize, 8);
    VerifyReport part = runVerifySuite(sub, hooks);
    for (PropertyOutcome& p : part.properties) {
      p.name = part.suite + "/" + p.name;
      all.properties.push_back(std::move(p));
    }
  }
  return all;
}

}  // namespace wpo
