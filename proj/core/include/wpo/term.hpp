#pragma once

#include <memory>
#include <string>

#include "wpo/ordinal.hpp"
#include "wpo/poset.hpp"

namespace wpo {

class WpoTerm;
using WpoTermPtr = std::shared_ptr<const WpoTerm>;

/// Expression tree over well partial orders: ordinal and finite-poset leaves,
/// the antichain family Gamma(k), the built-in order H (the increasing sum of
/// all finite antichains), the four binary constructions, and the two multiset
/// constructions Md (multiset embedding) and Mr (multiset ordering).
class WpoTerm : public std::enable_shared_from_this<WpoTerm> {
 public:
  enum class Kind {
    Ordinal,
    Poset,
    Gamma,
    H,
    DisjointSum,      // A U B
    LexSum,           // A + B
    Cartesian,        // A x B
    LexProduct,       // A . B
    MultisetEmb,      // Md(A)
    MultisetOrd,      // Mr(A)
  };

  static WpoTermPtr makeOrdinal(Ordinal value);
  static WpoTermPtr makePoset(FinitePoset poset, std::string name = "");
  static WpoTermPtr makeGamma(int k);
  static WpoTermPtr makeH();
  static WpoTermPtr makeBinary(Kind op, WpoTermPtr left, WpoTermPtr right);
  static WpoTermPtr makeMultiset(Kind op, WpoTermPtr child);

  Kind kind() const { return kind_; }
  const Ordinal& ordinal() const { return ordinal_; }
  const FinitePoset& poset() const { return poset_; }
  const std::string& posetName() const { return posetName_; }
  int gammaK() const { return gammaK_; }
  const WpoTermPtr& left() const { return left_; }
  const WpoTermPtr& right() const { return right_; }
  const WpoTermPtr& child() const { return left_; }

  bool isBinary() const;
  bool isMultiset() const;
  std::size_t nodeCount() const;

  /// Canonical textual form, re-parseable by the expression grammar.
  std::string render() const;

 private:
  WpoTerm() = default;

  Kind kind_ = Kind::Ordinal;
  Ordinal ordinal_;
  FinitePoset poset_;
  std::string posetName_;
  int gammaK_ = 0;
  WpoTermPtr left_, right_;
};

}  // namespace wpo
