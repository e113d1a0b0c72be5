#include "wpo/multiset.hpp"

#include <algorithm>
#include <numeric>

#include "wpo/errors.hpp"

namespace wpo {

Multiset Multiset::of(int ambientSize, std::initializer_list<int> elements) {
  Multiset m(ambientSize);
  for (const int e : elements) m.add(e);
  return m;
}

int Multiset::size() const {
  return static_cast<int>(std::accumulate(counts_.begin(), counts_.end(), 0u));
}

Multiset Multiset::intersect(const Multiset& other) const {
  Multiset out(ambientSize());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out.counts_[i] = std::min(counts_[i], other.counts_.at(i));
  return out;
}

Multiset Multiset::minus(const Multiset& other) const {
  Multiset out(ambientSize());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const std::uint32_t o = other.counts_.at(i);
    out.counts_[i] = counts_[i] > o ? counts_[i] - o : 0;
  }
  return out;
}

Multiset Multiset::unite(const Multiset& other) const {
  Multiset out(ambientSize());
  for (std::size_t i = 0; i < counts_.size(); ++i) out.counts_[i] = counts_[i] + other.counts_.at(i);
  return out;
}

Multiset Multiset::repeat(std::uint32_t n) const {
  Multiset out(ambientSize());
  for (std::size_t i = 0; i < counts_.size(); ++i) out.counts_[i] = counts_[i] * n;
  return out;
}

std::string Multiset::toString(const FinitePoset& ambient) const {
  std::string out = "[";
  bool first = true;
  for (int i = 0; i < ambientSize(); ++i)
    for (std::uint32_t c = 0; c < count(i); ++c) {
      if (!first) out += ",";
      out += i < ambient.size() ? ambient.label(i) : std::to_string(i);
      first = false;
    }
  return out + "]";
}

namespace {

void requireSameAmbient(const FinitePoset& ambient, const Multiset& a, const Multiset& b) {
  if (a.ambientSize() != ambient.size() || b.ambientSize() != ambient.size())
    throw PosetError("multiset contains elements foreign to the ambient poset");
}

// Kuhn's augmenting-path matching on expanded element copies.
bool tryAugment(int left, const std::vector<std::vector<int>>& adj, std::vector<int>& matchRight,
                std::vector<bool>& visited) {
  for (const int right : adj[static_cast<std::size_t>(left)]) {
    if (visited[static_cast<std::size_t>(right)]) continue;
    visited[static_cast<std::size_t>(right)] = true;
    if (matchRight[static_cast<std::size_t>(right)] < 0 ||
        tryAugment(matchRight[static_cast<std::size_t>(right)], adj, matchRight, visited)) {
      matchRight[static_cast<std::size_t>(right)] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

bool multisetLeqEmb(const FinitePoset& ambient, const Multiset& m, const Multiset& mPrime) {
  requireSameAmbient(ambient, m, mPrime);
  if (m.size() > mPrime.size()) return false;
  std::vector<int> leftElems, rightElems;
  for (int i = 0; i < ambient.size(); ++i) {
    for (std::uint32_t c = 0; c < m.count(i); ++c) leftElems.push_back(i);
    for (std::uint32_t c = 0; c < mPrime.count(i); ++c) rightElems.push_back(i);
  }
  std::vector<std::vector<int>> adj(leftElems.size());
  for (std::size_t l = 0; l < leftElems.size(); ++l)
    for (std::size_t r = 0; r < rightElems.size(); ++r)
      if (ambient.leq(leftElems[l], rightElems[r])) adj[l].push_back(static_cast<int>(r));
  std::vector<int> matchRight(rightElems.size(), -1);
  for (std::size_t l = 0; l < leftElems.size(); ++l) {
    std::vector<bool> visited(rightElems.size(), false);
    if (!tryAugment(static_cast<int>(l), adj, matchRight, visited)) return false;
  }
  return true;
}

bool multisetLeqR(const FinitePoset& ambient, const Multiset& m, const Multiset& mPrime) {
  requireSameAmbient(ambient, m, mPrime);
  const Multiset common = m.intersect(mPrime);
  const Multiset a = m.minus(common);
  const Multiset b = mPrime.minus(common);
  for (int x = 0; x < ambient.size(); ++x) {
    if (a.count(x) == 0) continue;
    bool dominated = false;
    for (int y = 0; y < ambient.size() && !dominated; ++y)
      if (b.count(y) > 0 && ambient.less(x, y)) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

std::vector<Multiset> enumerateMultisets(const FinitePoset& ambient, int k) {
  std::vector<Multiset> out;
  // Grow size by size; a multiset of size s is produced exactly once by
  // appending an element index >= its last nonzero index.
  std::vector<Multiset> bySize{Multiset(ambient.size())};
  out.push_back(bySize[0]);
  for (int s = 1; s <= k; ++s) {
    std::vector<Multiset> next;
    for (const Multiset& m : bySize) {
      int last = 0;
      for (int i = 0; i < ambient.size(); ++i)
        if (m.count(i) > 0) last = i;
      for (int i = last; i < ambient.size(); ++i) {
        Multiset grown = m;
        grown.add(i);
        next.push_back(grown);
      }
    }
    bySize = std::move(next);
    out.insert(out.end(), bySize.begin(), bySize.end());
  }
  return out;
}

}  // namespace wpo
