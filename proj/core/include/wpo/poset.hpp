#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wpo {

/// Residuals X_{* x} = { y in X | y * x }.
enum class ResidualKind { NotGreaterEqual, StrictlyBelow, Incomparable };

enum class ComposeOp { DisjointSum, LexSum, CartesianProduct, LexProduct };

/// An explicit finite partial order on labelled elements.  The full
/// reflexive-transitive closure is stored, so order queries, residual
/// extraction and incomparability tests are O(1) bit operations.
/// Immutable after construction.
class FinitePoset {
 public:
  static constexpr int kMaxSize = 30;

  FinitePoset();  // the empty order, a first-class value

  /// Builds from arbitrary valid <= assertions: closes transitively, adds
  /// reflexivity, and rejects cycles, duplicate elements, and pairs that
  /// mention unknown elements (PosetError).
  static FinitePoset fromRelations(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& le);

  static FinitePoset chain(int n);      // 0 < 1 < ... < n-1
  static FinitePoset antichain(int n);  // n pairwise incomparable elements

  /// Loads { "elements": [...], "le": [["a","b"], ...] }.
  static FinitePoset fromJsonText(std::string_view text);
  static FinitePoset fromJsonFile(const std::string& path);

  /// Disjoint sum, lexicographic sum, cartesian product (component-wise), and
  /// lexicographic product ((p,q) <= (p',q') iff q < q', or q = q' and
  /// p <= p').  For the sums the left operand occupies indices [0, |A|).
  static FinitePoset compose(ComposeOp op, const FinitePoset& a, const FinitePoset& b);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  int indexOf(std::string_view label) const;  // -1 when absent

  bool leq(int a, int b) const { return (up_[static_cast<std::size_t>(a)] >> b) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool incomparable(int a, int b) const { return a != b && !leq(a, b) && !leq(b, a); }

  std::uint32_t fullMask() const;
  std::uint32_t upMask(int x) const { return up_[static_cast<std::size_t>(x)]; }
  std::uint32_t notGeqMask(int x) const;
  std::uint32_t strictlyBelowMask(int x) const;
  std::uint32_t incomparableMask(int x) const;

  /// Induced substructure on the elements of `mask`, order restricted.
  FinitePoset induced(std::uint32_t mask) const;

  FinitePoset residual(ResidualKind kind, int pivot) const;
  /// X_{not>= x_1,...,x_n}: intersection of the not-geq residuals; n >= 1.
  FinitePoset residualNotGeqSet(std::span<const int> pivots) const;

  /// Elements incomparable to at least one other element.
  std::uint32_t strippedMask() const;
  FinitePoset strippedSubset() const;

  struct ChainResult {
    int length = 0;
    std::vector<int> witness;
  };
  ChainResult longestChain() const;
  ChainResult widestAntichain() const;

  /// Visits every linear extension exactly once, as element indices in
  /// increasing order; returns the count.  Throws GuardExceeded above `guard`.
  long long forEachLinearExtension(const std::function<void(std::span<const int>)>& visit,
                                   int guard = 10) const;
  long long countLinearExtensions(int guard = 10) const;

  /// Brute-force order isomorphism with degree-profile pruning; desk scale
  /// only (GuardExceeded above `guard` elements).
  bool isomorphicTo(const FinitePoset& other, int guard = 10) const;

  bool operator==(const FinitePoset& other) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> up_;  // up_[i] = { j | i <= j }

  void closeAndValidate();
};

}  // namespace wpo
