#include "wpo/ordinal.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace wpo {

namespace {

std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("ordinal coefficient overflow in +");
  return a + b;
}

std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("ordinal coefficient overflow in *");
  return a * b;
}

}  // namespace

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(CnfTerm{Ordinal(), n});
}

Ordinal Ordinal::omega() { return monomial(Ordinal(std::uint64_t{1}), 1); }

Ordinal Ordinal::epsilon(int k) {
  if (k < 0) throw std::invalid_argument("epsilon index must be >= 0");
  Ordinal e;
  e.eps_ = k;
  return e;
}

Ordinal Ordinal::monomial(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  return fromSorted({CnfTerm{exponent, coefficient}});
}

Ordinal Ordinal::fromSorted(std::vector<CnfTerm> terms) {
  // Collapse the fixed point: a lone w^{eps_k} with coefficient 1 is eps_k.
  if (terms.size() == 1 && terms[0].coefficient == 1 && terms[0].exponent.isEpsilonAtom())
    return terms[0].exponent;
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::fromCnf(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw std::invalid_argument("CNF coefficients must be positive");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
  }
  return fromSorted(std::move(terms));
}

bool Ordinal::isZero() const { return eps_ < 0 && terms_.empty(); }

bool Ordinal::isFinite() const {
  if (eps_ >= 0) return false;
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.isZero());
}

std::uint64_t Ordinal::finiteValue() const {
  if (!isFinite()) throw std::logic_error("finiteValue() on an infinite ordinal");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool Ordinal::isEpsilonAtom() const { return eps_ >= 0; }

int Ordinal::epsilonIndex() const {
  if (eps_ < 0) throw std::logic_error("epsilonIndex() on a non-epsilon ordinal");
  return eps_;
}

bool Ordinal::isSuccessor() const {
  if (eps_ >= 0 || terms_.empty()) return false;
  return terms_.back().exponent.isZero();
}

bool Ordinal::isLimit() const { return !isZero() && !isSuccessor(); }

bool Ordinal::containsEpsilonAtom() const {
  if (eps_ >= 0) return true;
  for (const CnfTerm& t : terms_)
    if (t.exponent.containsEpsilonAtom()) return true;
  return false;
}

std::size_t Ordinal::termCount() const { return eps_ >= 0 ? 1 : terms_.size(); }

const Ordinal& Ordinal::exponentAt(std::size_t i) const {
  if (eps_ >= 0) {
    if (i != 0) throw std::out_of_range("term index");
    return *this;  // w^{eps_k} = eps_k: the exponent is the value itself
  }
  return terms_.at(i).exponent;
}

std::uint64_t Ordinal::coefficientAt(std::size_t i) const {
  if (eps_ >= 0) {
    if (i != 0) throw std::out_of_range("term index");
    return 1;
  }
  return terms_.at(i).coefficient;
}

std::vector<CnfTerm> Ordinal::cnf() const {
  if (eps_ >= 0) return {CnfTerm{*this, 1}};
  return terms_;
}

bool Ordinal::operator==(const Ordinal& other) const {
  return eps_ == other.eps_ && terms_ == other.terms_;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  return compare(*this, other);
}

bool CnfTerm::operator==(const CnfTerm& other) const {
  return coefficient == other.coefficient && exponent == other.exponent;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  if (a.isEpsilonAtom() && b.isEpsilonAtom()) return a.epsilonIndex() <=> b.epsilonIndex();
  const std::size_t na = a.termCount();
  const std::size_t nb = b.termCount();
  for (std::size_t i = 0;; ++i) {
    if (i == na && i == nb) return std::strong_ordering::equal;
    if (i == na) return std::strong_ordering::less;
    if (i == nb) return std::strong_ordering::greater;
    if (auto c = compare(a.exponentAt(i), b.exponentAt(i)); c != std::strong_ordering::equal)
      return c;
    if (auto c = a.coefficientAt(i) <=> b.coefficientAt(i); c != std::strong_ordering::equal)
      return c;
  }
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.isZero()) return a;
  if (a.isZero()) return b;
  const Ordinal& lead = b.exponentAt(0);
  std::vector<CnfTerm> out;
  std::size_t i = 0;
  const std::size_t na = a.termCount();
  while (i < na && compare(a.exponentAt(i), lead) == std::strong_ordering::greater) {
    out.push_back(CnfTerm{a.exponentAt(i), a.coefficientAt(i)});
    ++i;
  }
  std::uint64_t mergeCoeff = b.coefficientAt(0);
  if (i < na && compare(a.exponentAt(i), lead) == std::strong_ordering::equal)
    mergeCoeff = checkedAdd(a.coefficientAt(i), mergeCoeff);
  out.push_back(CnfTerm{lead, mergeCoeff});
  for (std::size_t j = 1; j < b.termCount(); ++j)
    out.push_back(CnfTerm{b.exponentAt(j), b.coefficientAt(j)});
  return Ordinal::fromSorted(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.isZero() || b.isZero()) return Ordinal();
  Ordinal result;
  for (std::size_t j = 0; j < b.termCount(); ++j) {
    const Ordinal& e = b.exponentAt(j);
    const std::uint64_t d = b.coefficientAt(j);
    Ordinal part;
    if (e.isZero()) {
      // a * d: the leading coefficient scales, the tail is kept once.
      std::vector<CnfTerm> terms = a.cnf();
      terms[0].coefficient = checkedMul(terms[0].coefficient, d);
      part = Ordinal::fromSorted(std::move(terms));
    } else {
      part = Ordinal::monomial(add(a.exponentAt(0), e), d);
    }
    result = add(result, part);
  }
  return result;
}

Ordinal leftSubtract(const Ordinal& a, const Ordinal& b) {
  if (a.isZero() && b == Ordinal(std::uint64_t{1})) return Ordinal();  // documented convention
  const auto ab = compare(b, a);
  if (ab == std::strong_ordering::greater)
    throw std::invalid_argument("leftSubtract requires b <= a");
  if (ab == std::strong_ordering::equal) return Ordinal();
  const std::size_t na = a.termCount();
  const std::size_t nb = b.termCount();
  for (std::size_t i = 0;; ++i) {
    if (i == nb) {
      // b is a proper prefix of a; the remainder is a's tail.
      std::vector<CnfTerm> rest;
      for (std::size_t j = i; j < na; ++j) rest.push_back(CnfTerm{a.exponentAt(j), a.coefficientAt(j)});
      return Ordinal::fromCnf(std::move(rest));
    }
    const auto ce = compare(a.exponentAt(i), b.exponentAt(i));
    if (ce == std::strong_ordering::greater) {
      std::vector<CnfTerm> rest;
      for (std::size_t j = i; j < na; ++j) rest.push_back(CnfTerm{a.exponentAt(j), a.coefficientAt(j)});
      return Ordinal::fromCnf(std::move(rest));
    }
    if (ce == std::strong_ordering::less) throw std::logic_error("leftSubtract: unreachable");
    const std::uint64_t ca = a.coefficientAt(i);
    const std::uint64_t cb = b.coefficientAt(i);
    if (cb < ca) {
      std::vector<CnfTerm> rest;
      rest.push_back(CnfTerm{a.exponentAt(i), ca - cb});
      for (std::size_t j = i + 1; j < na; ++j)
        rest.push_back(CnfTerm{a.exponentAt(j), a.coefficientAt(j)});
      return Ordinal::fromCnf(std::move(rest));
    }
    if (cb > ca) throw std::logic_error("leftSubtract: unreachable");
  }
}

Ordinal predecessor(const Ordinal& a) {
  if (!a.isSuccessor()) throw std::invalid_argument("predecessor requires a successor ordinal");
  std::vector<CnfTerm> terms = a.cnf();
  if (terms.back().coefficient > 1)
    terms.back().coefficient -= 1;
  else
    terms.pop_back();
  return Ordinal::fromCnf(std::move(terms));
}

Ordinal natSum(const Ordinal& a, const Ordinal& b) {
  std::vector<CnfTerm> out;
  std::size_t i = 0, j = 0;
  const std::size_t na = a.termCount(), nb = b.termCount();
  while (i < na || j < nb) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == na)
      c = std::strong_ordering::less;
    else if (j == nb)
      c = std::strong_ordering::greater;
    else
      c = compare(a.exponentAt(i), b.exponentAt(j));
    if (c == std::strong_ordering::greater) {
      out.push_back(CnfTerm{a.exponentAt(i), a.coefficientAt(i)});
      ++i;
    } else if (c == std::strong_ordering::less) {
      out.push_back(CnfTerm{b.exponentAt(j), b.coefficientAt(j)});
      ++j;
    } else {
      out.push_back(CnfTerm{a.exponentAt(i), checkedAdd(a.coefficientAt(i), b.coefficientAt(j))});
      ++i;
      ++j;
    }
  }
  return Ordinal::fromSorted(std::move(out));
}

Ordinal natProd(const Ordinal& a, const Ordinal& b) {
  Ordinal result;
  for (std::size_t i = 0; i < a.termCount(); ++i)
    for (std::size_t j = 0; j < b.termCount(); ++j)
      result = natSum(result, Ordinal::monomial(natSum(a.exponentAt(i), b.exponentAt(j)),
                                                checkedMul(a.coefficientAt(i), b.coefficientAt(j))));
  return result;
}

Ordinal hessProd(const Ordinal& a, const Ordinal& b) {
  // Split b = L + n with L its limit-or-zero part and n < omega.
  std::uint64_t n = 0;
  std::vector<CnfTerm> limitTerms;
  for (std::size_t i = 0; i < b.termCount(); ++i) {
    if (b.exponentAt(i).isZero())
      n = b.coefficientAt(i);
    else
      limitTerms.push_back(CnfTerm{b.exponentAt(i), b.coefficientAt(i)});
  }
  const Ordinal limitPart = Ordinal::fromCnf(std::move(limitTerms));
  return natSum(multiply(a, limitPart), natProd(a, Ordinal(n)));
}

Ordinal omegaPower(const Ordinal& a) {
  if (a.isEpsilonAtom()) return a;
  return Ordinal::monomial(a, 1);
}

namespace {

// e = eps_k + n for some k and some finite n (n = 0 included)?
bool isEpsilonPlusFinite(const Ordinal& e) {
  if (e.isEpsilonAtom()) return true;
  if (e.termCount() != 2) return false;
  return e.exponentAt(0).isEpsilonAtom() && e.coefficientAt(0) == 1 && e.exponentAt(1).isZero();
}

}  // namespace

Ordinal hatTransform(const Ordinal& a) {
  if (a.isZero()) return a;
  std::vector<CnfTerm> out;
  for (std::size_t i = 0; i < a.termCount(); ++i) {
    const Ordinal& e = a.exponentAt(i);
    out.push_back(CnfTerm{isEpsilonPlusFinite(e) ? add(e, Ordinal(std::uint64_t{1})) : e,
                          a.coefficientAt(i)});
  }
  // Bumping preserves strict descent (the bumped forms are closed under +1),
  // and fromCnf re-validates that.
  return Ordinal::fromCnf(std::move(out));
}

Ordinal hStar(const Ordinal& a) {
  const bool infinite = !a.isZero() && !a.isFinite();
  const bool indecomposable = a.termCount() == 1 && a.coefficientAt(0) == 1;
  if (infinite && indecomposable) return a;
  return multiply(a, Ordinal::omega());
}

Ordinal deltaBound(const Ordinal& a) {
  if (!a.isSuccessor()) return a;
  std::vector<CnfTerm> out = a.cnf();
  const std::uint64_t n = out.back().coefficient;
  out.pop_back();
  if (n / 2 > 0) out.push_back(CnfTerm{Ordinal(), n / 2});
  return Ordinal::fromCnf(std::move(out));
}

namespace {

// x with the terms of exponent < e dropped.
Ordinal restrictToExponentsAtLeast(const Ordinal& x, const Ordinal& e) {
  std::vector<CnfTerm> kept;
  for (std::size_t i = 0; i < x.termCount(); ++i) {
    if (compare(x.exponentAt(i), e) == std::strong_ordering::less) break;
    kept.push_back(CnfTerm{x.exponentAt(i), x.coefficientAt(i)});
  }
  return Ordinal::fromCnf(std::move(kept));
}

// x minus one copy of its smallest CNF term.
Ordinal dropOneOfSmallest(const Ordinal& x) {
  std::vector<CnfTerm> terms = x.cnf();
  if (terms.back().coefficient > 1)
    terms.back().coefficient -= 1;
  else
    terms.pop_back();
  return Ordinal::fromCnf(std::move(terms));
}

Ordinal leastExponent(const Ordinal& x) { return x.exponentAt(x.termCount() - 1); }

}  // namespace

Ordinal hSupProduct(const Ordinal& a, const Ordinal& b) {
  if (a.isZero() || b.isZero())
    throw std::invalid_argument("hSupProduct requires a, b >= 1");
  const Ordinal one(std::uint64_t{1});
  if (a == one) return b;
  if (b == one) return a;
  const bool sa = a.isSuccessor();
  const bool sb = b.isSuccessor();
  if (sa && sb) return add(natSum(predecessor(a), predecessor(b)), one);
  if (sa) return natSum(restrictToExponentsAtLeast(predecessor(a), leastExponent(b)), b);
  if (sb) return natSum(restrictToExponentsAtLeast(predecessor(b), leastExponent(a)), a);
  // Both limits: only the terms at or above the other side's least exponent
  // survive in the supremum; at equal least exponents one copy is shed.
  const auto c = compare(leastExponent(a), leastExponent(b));
  if (c == std::strong_ordering::equal) return natSum(dropOneOfSmallest(a), b);
  if (c == std::strong_ordering::less) return natSum(restrictToExponentsAtLeast(a, leastExponent(b)), b);
  return natSum(restrictToExponentsAtLeast(b, leastExponent(a)), a);
}

OrdinalClassification classify(const Ordinal& a) {
  OrdinalClassification c;
  if (a.isZero()) {
    c.kind = OrdinalClassification::Kind::Zero;
    return c;
  }
  c.kind = a.isSuccessor() ? OrdinalClassification::Kind::Successor
                           : OrdinalClassification::Kind::Limit;
  c.additivelyIndecomposable = a.termCount() == 1 && a.coefficientAt(0) == 1;
  if (c.additivelyIndecomposable) {
    const Ordinal& e = a.exponentAt(0);
    c.multiplicativelyIndecomposable =
        (a.isEpsilonAtom() || (e.termCount() == 1 && e.coefficientAt(0) == 1));
  }
  c.epsilonNumber = a.isEpsilonAtom();
  return c;
}

Ordinal fundamentalStep(const Ordinal& a, std::uint64_t i) {
  if (a.containsEpsilonAtom())
    throw std::invalid_argument("fundamentalStep is only defined below eps_0");
  if (!a.isLimit())
    throw std::invalid_argument("fundamentalStep requires a limit ordinal");
  std::vector<CnfTerm> terms = a.cnf();
  const Ordinal lastExp = terms.back().exponent;
  if (terms.back().coefficient > 1)
    terms.back().coefficient -= 1;
  else
    terms.pop_back();
  const Ordinal prefix = Ordinal::fromCnf(std::move(terms));
  Ordinal step;
  if (lastExp.isSuccessor())
    step = Ordinal::monomial(predecessor(lastExp), i);
  else
    step = omegaPower(fundamentalStep(lastExp, i));
  return add(prefix, step);
}

}  // namespace wpo
