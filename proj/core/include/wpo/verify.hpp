#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wpo/oracle.hpp"
#include "wpo/poset.hpp"
#include "wpo/term.hpp"

namespace wpo {

enum class VerifySuite { Residuals, Sot, MultisetIso, OrdinalArith, Relations, All };

struct VerifyConfig {
  VerifySuite suite = VerifySuite::All;
  int maxSize = 4;        // largest poset size the suite touches
  int samples = 200;      // random instance budget
  std::uint64_t seed = 1;
  int sizeBound = 3;      // multiset truncation bound
};

/// Test-only fault injection: when set, the multiset-iso suite runs one check
/// through a deliberately broken comparator so the failure path (nonzero exit,
/// counterexample reporting) can be exercised end to end.
struct VerifyHooks {
  bool breakMultisetComparator = false;
};

struct PropertyOutcome {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string counterexample;  // first failing instance, when any
  std::vector<std::string> notes;
};

struct VerifyReport {
  std::string suite;
  VerifyConfig config;
  std::vector<PropertyOutcome> properties;
  bool pass() const;
};

/// Runs the selected suite deterministically from the seed.  Throws
/// std::invalid_argument when the configuration exceeds the module guards.
VerifyReport runVerifySuite(const VerifyConfig& config, const VerifyHooks& hooks = {});

std::string toString(VerifySuite suite);
VerifySuite parseSuiteName(const std::string& name);  // throws std::invalid_argument

/// Every labelled poset on n elements, exactly once (n <= 4 stays cheap:
/// 1, 1, 3, 19, 219 posets for n = 0..4).
void forEachLabeledPoset(int n, const std::function<void(const FinitePoset&)>& visit);
long long countLabeledPosets(int n);

/// Seeded generators used by the property suites and the acceptance runner.
FinitePoset randomPoset(std::mt19937_64& rng, int n);
Ordinal randomOrdinal(std::mt19937_64& rng, int maxDepth, bool allowEpsilon);
WpoTermPtr randomTerm(std::mt19937_64& rng, int maxDepth);
WpoTermPtr randomFiniteTerm(std::mt19937_64& rng, int maxDepth);

}  // namespace wpo
