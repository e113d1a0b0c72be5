#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wpo {

class Ordinal;
struct CnfTerm;

/// An ordinal below eps_omega, kept in Cantor normal form
///   w^{e_1}*c_1 + ... + w^{e_n}*c_n   with e_1 > ... > e_n, c_i >= 1,
/// plus distinguished atoms for the epsilon numbers eps_k (k < omega).
/// The empty sum is 0.  The fixed point w^{eps_k} = eps_k is collapsed, so the
/// representation is unique and structural equality is ordinal equality.
///
/// Values are immutable after construction; every operation below is a pure
/// function, so Ordinal can be shared freely across threads.
class Ordinal {
 public:
  Ordinal();                           // zero
  Ordinal(std::uint64_t n);            // finite ordinal; deliberately implicit
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  static Ordinal epsilon(int k);
  /// w^e * c; c == 0 gives 0.  Collapses w^{eps_k} to eps_k.
  static Ordinal monomial(const Ordinal& exponent, std::uint64_t coefficient);
  /// Builds from explicit terms; throws std::invalid_argument unless the
  /// exponents are strictly decreasing and all coefficients positive.
  static Ordinal fromCnf(std::vector<CnfTerm> terms);

  bool isZero() const;
  bool isFinite() const;               // below omega (includes zero)
  std::uint64_t finiteValue() const;   // requires isFinite()
  bool isEpsilonAtom() const;          // the value is exactly some eps_k
  int epsilonIndex() const;            // requires isEpsilonAtom()
  bool isSuccessor() const;
  bool isLimit() const;
  /// True when some eps_k occurs anywhere in the notation, i.e. value >= eps_0.
  bool containsEpsilonAtom() const;

  /// CNF access.  An epsilon atom reads as the single term (eps_k, 1); its
  /// exponent is the value itself.
  std::size_t termCount() const;
  const Ordinal& exponentAt(std::size_t i) const;
  std::uint64_t coefficientAt(std::size_t i) const;
  std::vector<CnfTerm> cnf() const;

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  static Ordinal fromSorted(std::vector<CnfTerm> terms);

  int eps_ = -1;                 // >= 0: the value eps_{eps_} (terms_ empty)
  std::vector<CnfTerm> terms_;

  friend std::strong_ordering compare(const Ordinal&, const Ordinal&);
  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal multiply(const Ordinal&, const Ordinal&);
  friend Ordinal natSum(const Ordinal&, const Ordinal&);
  friend Ordinal natProd(const Ordinal&, const Ordinal&);
};

/// One CNF term w^exponent * coefficient.
struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  bool operator==(const CnfTerm& other) const;
};

/// Total order agreeing with the ordinal order; equal iff structurally equal.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum and product (associative; left-distributive over +).
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal multiply(const Ordinal& a, const Ordinal& b);

/// The unique c with add(b, c) == a, for b <= a.  Throws std::invalid_argument
/// when b > a, with one carve-out needed by width computations on the empty
/// order: leftSubtract(0, 1) == 0.  Note leftSubtract(w+1, 1) == w+1; the
/// largest ordinal below a successor is predecessor() instead.
Ordinal leftSubtract(const Ordinal& a, const Ordinal& b);

/// The unique b with add(b, 1) == a; requires a.isSuccessor().
Ordinal predecessor(const Ordinal& a);

/// Natural (Hessenberg) sum and product: commutative, associative, strictly
/// monotone; the sum merges the CNF exponent multisets, the product natural-sums
/// all exponent pairs.
Ordinal natSum(const Ordinal& a, const Ordinal& b);
Ordinal natProd(const Ordinal& a, const Ordinal& b);

/// Hessenberg-based product, defined by transfinite recursion
///   a (.) 0 = 0,  a (.) (b+1) = (a (.) b) (+) a,  sup at limits.
/// Computed here in closed form  a (.) (L + n) = a*L (+) (a (x) n)  with L the
/// limit part of b and n its finite part; always a*b <= a(.)b <= a(x)b.
Ordinal hessProd(const Ordinal& a, const Ordinal& b);

/// w^a, with the epsilon fixed point w^{eps_k} = eps_k.  Strictly monotone.
Ordinal omegaPower(const Ordinal& a);

/// Rewrites each CNF exponent e of a to e+1 exactly when e = eps_k + n for some
/// k and finite n (including n = 0); other exponents are untouched.
Ordinal hatTransform(const Ordinal& a);

/// a itself when a is infinite and additively indecomposable, otherwise a*w.
Ordinal hStar(const Ordinal& a);

/// a when a is a limit (or zero); g + floor(n/2) when a = g + n with g the
/// limit-or-zero part and n finite.
Ordinal deltaBound(const Ordinal& a);

/// sup { x (+) y + 1 | x < a, y < b } for a, b >= 1; symmetric, and
/// hSupProduct(a, 1) == a.  Throws std::invalid_argument when a or b is 0.
Ordinal hSupProduct(const Ordinal& a, const Ordinal& b);

struct OrdinalClassification {
  enum class Kind { Zero, Successor, Limit };
  Kind kind = Kind::Zero;
  bool additivelyIndecomposable = false;        // of the form w^b
  bool multiplicativelyIndecomposable = false;  // w^b with b itself w^c
  bool epsilonNumber = false;                   // w^a == a
};

OrdinalClassification classify(const Ordinal& a);

/// i-th element of the canonical fundamental sequence of a limit a < eps_0:
/// the last CNF term w^{b+1} steps to w^b * i, and w^L (L limit) steps to
/// w^{L[i]}.  Strictly increasing in i with supremum a.  Used only by
/// validation oracles.  Throws std::invalid_argument on zero, successor, or
/// any notation containing an epsilon atom.
Ordinal fundamentalStep(const Ordinal& a, std::uint64_t i);

}  // namespace wpo
