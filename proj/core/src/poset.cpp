#include "wpo/poset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wpo/errors.hpp"

namespace wpo {

FinitePoset::FinitePoset() = default;

void FinitePoset::closeAndValidate() {
  for (int i = 0; i < n_; ++i) up_[static_cast<std::size_t>(i)] |= 1u << i;
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (leq(i, k)) up_[static_cast<std::size_t>(i)] |= up_[static_cast<std::size_t>(k)];
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (leq(i, j) && leq(j, i))
        throw PosetError("cycle between '" + label(i) + "' and '" + label(j) +
                         "' violates antisymmetry");
}

FinitePoset FinitePoset::fromRelations(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& le) {
  FinitePoset p;
  p.n_ = static_cast<int>(elements.size());
  if (p.n_ > kMaxSize) throw PosetError("too many elements (limit " + std::to_string(kMaxSize) + ")");
  p.labels_ = std::move(elements);
  std::map<std::string_view, int> index;
  for (int i = 0; i < p.n_; ++i) {
    if (!index.emplace(p.labels_[static_cast<std::size_t>(i)], i).second)
      throw PosetError("duplicate element '" + p.labels_[static_cast<std::size_t>(i)] + "'");
  }
  p.up_.assign(static_cast<std::size_t>(p.n_), 0);
  for (const auto& [a, b] : le) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw PosetError("unknown element '" + a + "' in relation");
    if (ib == index.end()) throw PosetError("unknown element '" + b + "' in relation");
    p.up_[static_cast<std::size_t>(ia->second)] |= 1u << ib->second;
  }
  p.closeAndValidate();
  return p;
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> le;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) le.emplace_back(std::to_string(i), std::to_string(i + 1));
  return fromRelations(std::move(labels), le);
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return fromRelations(std::move(labels), {});
}

FinitePoset FinitePoset::fromJsonText(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PosetError(std::string("invalid poset document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("le"))
    throw PosetError("poset document must be an object with 'elements' and 'le'");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw PosetError("'elements' entries must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> le;
  for (const auto& pair : doc["le"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw PosetError("'le' entries must be [from, to] string pairs");
    le.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return fromRelations(std::move(elements), le);
}

FinitePoset FinitePoset::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PosetError("cannot open poset file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return fromJsonText(buffer.str());
}

FinitePoset FinitePoset::compose(ComposeOp op, const FinitePoset& a, const FinitePoset& b) {
  FinitePoset p;
  if (op == ComposeOp::DisjointSum || op == ComposeOp::LexSum) {
    p.n_ = a.n_ + b.n_;
    if (p.n_ > kMaxSize) throw PosetError("composed poset too large");
    for (int i = 0; i < a.n_; ++i) p.labels_.push_back("l:" + a.label(i));
    for (int j = 0; j < b.n_; ++j) p.labels_.push_back("r:" + b.label(j));
    p.up_.assign(static_cast<std::size_t>(p.n_), 0);
    for (int i = 0; i < a.n_; ++i)
      p.up_[static_cast<std::size_t>(i)] |= a.up_[static_cast<std::size_t>(i)];
    for (int j = 0; j < b.n_; ++j)
      p.up_[static_cast<std::size_t>(a.n_ + j)] |= b.up_[static_cast<std::size_t>(j)]
                                                   << a.n_;
    if (op == ComposeOp::LexSum) {
      const std::uint32_t rightAll = b.n_ > 0 ? ((b.fullMask()) << a.n_) : 0u;
      for (int i = 0; i < a.n_; ++i) p.up_[static_cast<std::size_t>(i)] |= rightAll;
    }
  } else {
    if (a.n_ == 0 || b.n_ == 0) return FinitePoset();
    const long long total = static_cast<long long>(a.n_) * b.n_;
    if (total > kMaxSize) throw PosetError("composed poset too large");
    p.n_ = static_cast<int>(total);
    // index = ia * |B| + ib
    for (int ia = 0; ia < a.n_; ++ia)
      for (int ib = 0; ib < b.n_; ++ib)
        p.labels_.push_back("(" + a.label(ia) + "," + b.label(ib) + ")");
    p.up_.assign(static_cast<std::size_t>(p.n_), 0);
    for (int ia = 0; ia < a.n_; ++ia)
      for (int ib = 0; ib < b.n_; ++ib) {
        const int from = ia * b.n_ + ib;
        for (int ja = 0; ja < a.n_; ++ja)
          for (int jb = 0; jb < b.n_; ++jb) {
            const int to = ja * b.n_ + jb;
            bool rel = false;
            if (op == ComposeOp::CartesianProduct)
              rel = a.leq(ia, ja) && b.leq(ib, jb);
            else
              rel = b.less(ib, jb) || (ib == jb && a.leq(ia, ja));
            if (rel) p.up_[static_cast<std::size_t>(from)] |= 1u << to;
          }
      }
  }
  // Composition of valid orders; closure re-checks the axioms.
  for (int i = 0; i < p.n_; ++i) p.up_[static_cast<std::size_t>(i)] |= 1u << i;
  p.closeAndValidate();
  return p;
}

int FinitePoset::indexOf(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

std::uint32_t FinitePoset::fullMask() const {
  return n_ == 32 ? ~0u : ((1u << n_) - 1u);
}

std::uint32_t FinitePoset::notGeqMask(int x) const {
  std::uint32_t mask = 0;
  for (int y = 0; y < n_; ++y)
    if (!leq(x, y)) mask |= 1u << y;
  return mask;
}

std::uint32_t FinitePoset::strictlyBelowMask(int x) const {
  std::uint32_t mask = 0;
  for (int y = 0; y < n_; ++y)
    if (less(y, x)) mask |= 1u << y;
  return mask;
}

std::uint32_t FinitePoset::incomparableMask(int x) const {
  std::uint32_t mask = 0;
  for (int y = 0; y < n_; ++y)
    if (incomparable(y, x)) mask |= 1u << y;
  return mask;
}

FinitePoset FinitePoset::induced(std::uint32_t mask) const {
  FinitePoset p;
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i)
    if ((mask >> i) & 1u) keep.push_back(i);
  p.n_ = static_cast<int>(keep.size());
  for (const int i : keep) p.labels_.push_back(labels_[static_cast<std::size_t>(i)]);
  p.up_.assign(static_cast<std::size_t>(p.n_), 0);
  for (int x = 0; x < p.n_; ++x)
    for (int y = 0; y < p.n_; ++y)
      if (leq(keep[static_cast<std::size_t>(x)], keep[static_cast<std::size_t>(y)]))
        p.up_[static_cast<std::size_t>(x)] |= 1u << y;
  return p;
}

FinitePoset FinitePoset::residual(ResidualKind kind, int pivot) const {
  if (pivot < 0 || pivot >= n_) throw PosetError("residual pivot not in poset");
  switch (kind) {
    case ResidualKind::NotGreaterEqual:
      return induced(notGeqMask(pivot));
    case ResidualKind::StrictlyBelow:
      return induced(strictlyBelowMask(pivot));
    case ResidualKind::Incomparable:
      return induced(incomparableMask(pivot));
  }
  throw PosetError("unknown residual kind");
}

FinitePoset FinitePoset::residualNotGeqSet(std::span<const int> pivots) const {
  if (pivots.empty()) throw PosetError("residualNotGeqSet needs at least one pivot");
  std::uint32_t mask = fullMask();
  for (const int x : pivots) {
    if (x < 0 || x >= n_) throw PosetError("residual pivot not in poset");
    mask &= notGeqMask(x);
  }
  return induced(mask);
}

std::uint32_t FinitePoset::strippedMask() const {
  std::uint32_t mask = 0;
  for (int x = 0; x < n_; ++x)
    if (incomparableMask(x) != 0) mask |= 1u << x;
  return mask;
}

FinitePoset FinitePoset::strippedSubset() const { return induced(strippedMask()); }

FinitePoset::ChainResult FinitePoset::longestChain() const {
  ChainResult best;
  std::vector<int> len(static_cast<std::size_t>(n_), 1);
  std::vector<int> prev(static_cast<std::size_t>(n_), -1);
  // Process in an order compatible with <; index order need not be, so sort
  // by the number of elements strictly below.
  std::vector<int> order;
  for (int i = 0; i < n_; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::popcount(strictlyBelowMask(x)) < std::popcount(strictlyBelowMask(y));
  });
  for (const int x : order)
    for (int y = 0; y < n_; ++y)
      if (less(y, x) && len[static_cast<std::size_t>(y)] + 1 > len[static_cast<std::size_t>(x)]) {
        len[static_cast<std::size_t>(x)] = len[static_cast<std::size_t>(y)] + 1;
        prev[static_cast<std::size_t>(x)] = y;
      }
  int top = -1;
  for (int x = 0; x < n_; ++x)
    if (top < 0 || len[static_cast<std::size_t>(x)] > len[static_cast<std::size_t>(top)]) top = x;
  if (top >= 0) {
    best.length = len[static_cast<std::size_t>(top)];
    for (int x = top; x >= 0; x = prev[static_cast<std::size_t>(x)]) best.witness.push_back(x);
    std::reverse(best.witness.begin(), best.witness.end());
  }
  return best;
}

FinitePoset::ChainResult FinitePoset::widestAntichain() const {
  ChainResult best;
  // comp[x] = x together with everything comparable to x.
  std::vector<std::uint32_t> comp(static_cast<std::size_t>(n_), 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y) || leq(y, x)) comp[static_cast<std::size_t>(x)] |= 1u << y;
  const std::uint32_t full = fullMask();
  for (std::uint32_t mask = 0; mask <= full && n_ > 0; ++mask) {
    bool anti = true;
    for (int x = 0; x < n_ && anti; ++x)
      if ((mask >> x) & 1u)
        if ((comp[static_cast<std::size_t>(x)] & mask) != (1u << x)) anti = false;
    if (anti && std::popcount(mask) > best.length) {
      best.length = std::popcount(mask);
      best.witness.clear();
      for (int x = 0; x < n_; ++x)
        if ((mask >> x) & 1u) best.witness.push_back(x);
    }
    if (mask == full) break;
  }
  return best;
}

namespace {

void extendLinear(const FinitePoset& p, std::uint32_t remaining, std::vector<int>& prefix,
                  long long& count, const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    ++count;
    if (visit) visit(prefix);
    return;
  }
  for (int x = 0; x < p.size(); ++x) {
    if (!((remaining >> x) & 1u)) continue;
    bool minimal = true;
    for (int y = 0; y < p.size() && minimal; ++y)
      if (((remaining >> y) & 1u) && p.less(y, x)) minimal = false;
    if (!minimal) continue;
    prefix.push_back(x);
    extendLinear(p, remaining & ~(1u << x), prefix, count, visit);
    prefix.pop_back();
  }
}

}  // namespace

long long FinitePoset::forEachLinearExtension(
    const std::function<void(std::span<const int>)>& visit, int guard) const {
  if (n_ > guard) throw GuardExceeded("linear extension enumeration", n_, guard);
  long long count = 0;
  std::vector<int> prefix;
  extendLinear(*this, fullMask(), prefix, count, visit);
  return count;
}

long long FinitePoset::countLinearExtensions(int guard) const {
  return forEachLinearExtension(nullptr, guard);
}

namespace {

struct DegreeProfile {
  int below = 0, above = 0, incomp = 0;
  auto operator<=>(const DegreeProfile&) const = default;
};

DegreeProfile profileOf(const FinitePoset& p, int x) {
  return {std::popcount(p.strictlyBelowMask(x)),
          std::popcount(p.upMask(x)) - 1,
          std::popcount(p.incomparableMask(x))};
}

bool matchIso(const FinitePoset& a, const FinitePoset& b, std::vector<int>& image, int x,
              const std::vector<DegreeProfile>& pa, const std::vector<DegreeProfile>& pb,
              std::uint32_t used) {
  if (x == a.size()) return true;
  for (int y = 0; y < b.size(); ++y) {
    if ((used >> y) & 1u) continue;
    if (pa[static_cast<std::size_t>(x)] != pb[static_cast<std::size_t>(y)]) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      const int yz = image[static_cast<std::size_t>(z)];
      if (a.leq(x, z) != b.leq(y, yz) || a.leq(z, x) != b.leq(yz, y)) ok = false;
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(x)] = y;
    if (matchIso(a, b, image, x + 1, pa, pb, used | (1u << y))) return true;
  }
  return false;
}

}  // namespace

bool FinitePoset::isomorphicTo(const FinitePoset& other, int guard) const {
  if (n_ != other.n_) return false;
  if (n_ > guard) throw GuardExceeded("isomorphism check", n_, guard);
  std::vector<DegreeProfile> pa, pb;
  for (int i = 0; i < n_; ++i) {
    pa.push_back(profileOf(*this, i));
    pb.push_back(profileOf(other, i));
  }
  auto sortedA = pa;
  auto sortedB = pb;
  std::sort(sortedA.begin(), sortedA.end());
  std::sort(sortedB.begin(), sortedB.end());
  if (sortedA != sortedB) return false;
  std::vector<int> image(static_cast<std::size_t>(n_), -1);
  return matchIso(*this, other, image, 0, pa, pb, 0);
}

bool FinitePoset::operator==(const FinitePoset& other) const {
  return n_ == other.n_ && labels_ == other.labels_ && up_ == other.up_;
}

}  // namespace wpo
