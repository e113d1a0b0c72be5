#include "wpo/term.hpp"

#include <stdexcept>

#include "wpo/ordinal_text.hpp"

namespace wpo {

WpoTermPtr WpoTerm::makeOrdinal(Ordinal value) {
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = Kind::Ordinal;
  t->ordinal_ = std::move(value);
  return t;
}

WpoTermPtr WpoTerm::makePoset(FinitePoset poset, std::string name) {
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = Kind::Poset;
  t->poset_ = std::move(poset);
  t->posetName_ = std::move(name);
  return t;
}

WpoTermPtr WpoTerm::makeGamma(int k) {
  if (k < 0) throw std::invalid_argument("Gamma(k) needs k >= 0");
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = Kind::Gamma;
  t->gammaK_ = k;
  return t;
}

WpoTermPtr WpoTerm::makeH() {
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = Kind::H;
  return t;
}

WpoTermPtr WpoTerm::makeBinary(Kind op, WpoTermPtr left, WpoTermPtr right) {
  if (op != Kind::DisjointSum && op != Kind::LexSum && op != Kind::Cartesian &&
      op != Kind::LexProduct)
    throw std::invalid_argument("makeBinary: not a binary constructor");
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = op;
  t->left_ = std::move(left);
  t->right_ = std::move(right);
  return t;
}

WpoTermPtr WpoTerm::makeMultiset(Kind op, WpoTermPtr child) {
  if (op != Kind::MultisetEmb && op != Kind::MultisetOrd)
    throw std::invalid_argument("makeMultiset: not a multiset constructor");
  auto t = std::shared_ptr<WpoTerm>(new WpoTerm());
  t->kind_ = op;
  t->left_ = std::move(child);
  return t;
}

bool WpoTerm::isBinary() const {
  return kind_ == Kind::DisjointSum || kind_ == Kind::LexSum || kind_ == Kind::Cartesian ||
         kind_ == Kind::LexProduct;
}

bool WpoTerm::isMultiset() const {
  return kind_ == Kind::MultisetEmb || kind_ == Kind::MultisetOrd;
}

std::size_t WpoTerm::nodeCount() const {
  std::size_t n = 1;
  if (left_) n += left_->nodeCount();
  if (isBinary() && right_) n += right_->nodeCount();
  return n;
}

namespace {

// Binding strength, loosest first: + < U < x/. < atoms.
int precedenceOf(WpoTerm::Kind k) {
  switch (k) {
    case WpoTerm::Kind::LexSum: return 0;
    case WpoTerm::Kind::DisjointSum: return 1;
    case WpoTerm::Kind::Cartesian:
    case WpoTerm::Kind::LexProduct: return 2;
    default: return 3;
  }
}

std::string renderAt(const WpoTerm& t, int parentPrecedence) {
  std::string out;
  switch (t.kind()) {
    case WpoTerm::Kind::Ordinal:
      out = renderOrdinal(t.ordinal());
      break;
    case WpoTerm::Kind::Poset:
      out = t.posetName().empty() ? "poset(" + std::to_string(t.poset().size()) + ")"
                                  : t.posetName();
      break;
    case WpoTerm::Kind::Gamma:
      out = "Gamma(" + std::to_string(t.gammaK()) + ")";
      break;
    case WpoTerm::Kind::H:
      out = "H";
      break;
    case WpoTerm::Kind::MultisetEmb:
      return "Md(" + renderAt(*t.child(), 0) + ")";
    case WpoTerm::Kind::MultisetOrd:
      return "Mr(" + renderAt(*t.child(), 0) + ")";
    default: {
      const int prec = precedenceOf(t.kind());
      const char* op = t.kind() == WpoTerm::Kind::LexSum        ? " + "
                       : t.kind() == WpoTerm::Kind::DisjointSum ? " U "
                       : t.kind() == WpoTerm::Kind::Cartesian   ? " x "
                                                                : " . ";
      // x and . share a level but may not mix without parentheses, so a
      // product child of the other product kind is parenthesized too.
      const auto childText = [&](const WpoTerm& c, bool rightSide) {
        const int childPrec = precedenceOf(c.kind());
        bool parens = childPrec < prec || (rightSide && childPrec == prec);
        if (prec == 2 && childPrec == 2 && c.kind() != t.kind()) parens = true;
        std::string s = renderAt(c, 0);
        return parens ? "(" + s + ")" : s;
      };
      out = childText(*t.left(), false) + op + childText(*t.right(), true);
      return out;
    }
  }
  (void)parentPrecedence;
  return out;
}

}  // namespace

std::string WpoTerm::render() const { return renderAt(*this, 0); }

}  // namespace wpo
