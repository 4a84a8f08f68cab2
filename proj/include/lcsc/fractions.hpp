#pragma once

// Fractions num^{-1} * den over a category: equivalence via common left
// multiples, products, the unit embedding, right reversibility, and the
// extension of a functor into a groupoid to fractions.

#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"

#include <string>

namespace lcsc {

enum class Verdict { kTrue, kFalse, kUnknown };

struct ReversibilityReport {
  Verdict verdict = Verdict::kUnknown;
  Mor a = -1, b = -1;  // counterexample pair when kFalse; unresolved pair when kUnknown
  std::string method;
};

// Exhaustive over co-sourced pairs; requires a total carrier
// (std::domain_error otherwise).
ReversibilityReport is_right_reversible(const SmallCategory& cat);
// Bounded carriers: in-carrier witnesses prove kTrue; a pair without one is
// only kUnknown, never refuted.
ReversibilityReport is_right_reversible_bounded(const SmallCategory& cat);
// Group-embedded monoids: exact for Z^k (abelian) and for the free monoid on
// two letters (terminal-letter obstruction); otherwise a carrier search.
ReversibilityReport is_right_reversible(const GroupedMonoid& g);

// The fraction num^{-1} * den; both legs must share their range object.
struct FractionPair {
  Mor num = -1;
  Mor den = -1;
};

FractionPair iota(const SmallCategory& cat, Mor a);  // (id at r(a), a)

struct EquivResult {
  Verdict verdict = Verdict::kUnknown;
  Mor x = -1, y = -1;  // witness pair when kTrue: x*num1 == y*num2, x*den1 == y*den2
};

// Witness search in index order (ascending index sum, then first index).
// Exhaustive refutation for total carriers; kUnknown past a bounded carrier.
// std::invalid_argument when a pair is not a fraction or the sources of the
// two fractions do not match.
EquivResult fraction_equiv(const SmallCategory& cat, FractionPair p, FractionPair q);
// Exact for Z^k boxes: the group-element invariant refutes, and when the
// invariants agree an in-box witness always exists. For free kinds the
// invariant can only refute.
EquivResult fraction_equiv(const GroupedMonoid& g, FractionPair p, FractionPair q);

// num^{-1} den in the group.
GroupElem fraction_invariant(const GroupedMonoid& g, FractionPair p);

struct ProductResult {
  bool ok = false;                         // a witness with both composites in carrier
  FractionPair rep;                        // representative of the product class
  Mor x = -1, y = -1;                      // the witness: x*den1 == y*num2
  bool witness_independent_checked = false;  // a second witness gave an equivalent result
};

// [num1,den1] * [num2,den2] via a common left multiple of den1 and num2;
// requires s(den1) == s(num2) (std::invalid_argument).
ProductResult fraction_product(const SmallCategory& cat, FractionPair p, FractionPair q);

// A functor into a finite groupoid presented as a category whose morphisms
// are all invertible.
struct FunctorToGroupoid {
  const SmallCategory* target = nullptr;
  std::vector<Mor> map;  // per source morphism
};

bool groupoid_all_invertible(const SmallCategory& h);
Mor h_inverse(const SmallCategory& h, Mor m);

struct HomCheck {
  bool ok = false;
  std::string violation;
};
HomCheck validate_functor(const SmallCategory& cat, const FunctorToGroupoid& f);

// pi(num)^{-1} * pi(den) in the target groupoid; validates the functor
// first (std::invalid_argument when invalid).
Mor extend_hom_apply(const SmallCategory& cat, const FunctorToGroupoid& f, FractionPair p);

}  // namespace lcsc
