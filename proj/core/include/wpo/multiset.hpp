#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wpo/poset.hpp"

namespace wpo {

/// A finite multiset over the elements of an ambient finite poset, stored as
/// one multiplicity per element index.  Relations taking two multisets require
/// both to be over the same ambient size and throw PosetError otherwise
/// (a foreign element cannot be compared).
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(int ambientSize) : counts_(static_cast<std::size_t>(ambientSize), 0) {}
  /// Convenience: the multiset with the listed element indices.
  static Multiset of(int ambientSize, std::initializer_list<int> elements);

  int ambientSize() const { return static_cast<int>(counts_.size()); }
  std::uint32_t count(int element) const { return counts_.at(static_cast<std::size_t>(element)); }
  void add(int element, std::uint32_t copies = 1) {
    counts_.at(static_cast<std::size_t>(element)) += copies;
  }
  /// Total number of elements, multiplicities included.
  int size() const;
  bool empty() const { return size() == 0; }

  Multiset intersect(const Multiset& other) const;  // pointwise min
  Multiset minus(const Multiset& other) const;      // pointwise saturating difference
  Multiset unite(const Multiset& other) const;      // pointwise sum
  Multiset repeat(std::uint32_t n) const;           // union of n copies

  bool operator==(const Multiset& other) const = default;

  std::string toString(const FinitePoset& ambient) const;

 private:
  std::vector<std::uint32_t> counts_;
};

/// Multiset embedding: m <= m' iff some injection f : m -> m' has x <= f(x)
/// for every x.  Decided as a bipartite matching feasibility problem
/// (augmenting paths over element copies).
bool multisetLeqEmb(const FinitePoset& ambient, const Multiset& m, const Multiset& mPrime);

/// Multiset ordering: m <= m' iff m = m', or after cancelling the common part
/// every remaining element of m is strictly below some remaining element of m'.
bool multisetLeqR(const FinitePoset& ambient, const Multiset& m, const Multiset& mPrime);

/// All multisets of total size <= k over the ambient poset, each exactly once,
/// in a deterministic order (sizes increasing, lexicographic within a size).
std::vector<Multiset> enumerateMultisets(const FinitePoset& ambient, int k);

}  // namespace wpo
