#pragma once

// Zigzags, their partial-injection actions on the carrier, and the finitely
// generated inverse semigroup of such maps over a TOTAL category.

#include "lcsc/category.hpp"

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lcsc {

// Alternating tuple ((a1,b1),...,(an,bn)) with r(ai)=r(bi) and
// s(a_{i+1})=s(b_i). Acts on x in src()Lambda by
//   x |-> divide_left(a_n, b_n x) |-> ... |-> divide_left(a_1, b_1 ...).
struct Zigzag {
  std::vector<std::pair<Mor, Mor>> pairs;
  bool empty() const { return pairs.empty(); }
  bool operator==(const Zigzag& o) const { return pairs == o.pairs; }
};

bool zigzag_valid(const SmallCategory& cat, const Zigzag& z);
Obj zigzag_src(const SmallCategory& cat, const Zigzag& z);  // s(b_n)
Obj zigzag_dst(const SmallCategory& cat, const Zigzag& z);  // s(a_1)
// Pairs of z1 followed by pairs of z2; requires src(z1) == dst(z2); the
// action composes as (action of z1) after (action of z2).
Zigzag zigzag_concat(const SmallCategory& cat, const Zigzag& z1, const Zigzag& z2);
Zigzag zigzag_reverse(const Zigzag& z);
// One-pair encodings of the generators.
Zigzag zigzag_tau(const SmallCategory& cat, Mor a);    // x |-> ax on s(a)Lambda
Zigzag zigzag_sigma(const SmallCategory& cat, Mor a);  // ax |-> x on aLambda
Zigzag zigzag_unit(const SmallCategory& cat, Obj v);   // identity on vLambda

// Injective partial map from a subset of dom_obj's cone into ran_obj's cone.
// The all-empty map is normalized to a single zero with dom_obj=ran_obj=-1.
struct PartialInjection {
  Obj dom_obj = -1;
  Obj ran_obj = -1;
  std::vector<Mor> img;  // carrier-indexed; kUndef where undefined
  MorSet trunc;          // rows whose evaluation escaped a bounded carrier

  bool is_zero() const { return dom_obj < 0; }
  bool defined_at(Mor x) const { return x >= 0 && img[x] >= 0; }
  Mor operator()(Mor x) const { return img[x]; }
  MorSet domain() const;
  MorSet range() const;
  int dom_size() const;
  void normalize_zero();
  bool operator==(const PartialInjection& o) const {
    return dom_obj == o.dom_obj && ran_obj == o.ran_obj && img == o.img && trunc == o.trunc;
  }
};

PartialInjection zigzag_map(const SmallCategory& cat, const Zigzag& z);
MorSet zigzag_set(const SmallCategory& cat, const Zigzag& z);  // the domain A(z)
// f after g; zero when the objects do not match or nothing survives.
PartialInjection pinj_compose(const PartialInjection& f, const PartialInjection& g);
PartialInjection pinj_inverse(const PartialInjection& f);
// Nonzero and fixes every point of its domain.
bool pinj_is_identity(const PartialInjection& f);

class ZigzagSemigroup {
 public:
  std::vector<PartialInjection> elems;  // elems[0] is the zero map
  std::vector<Zigzag> witness;          // one witnessing zigzag each (empty for zero)
  std::vector<int> rev;                 // index of the inverse partial map
  std::vector<int> tau_of;              // morphism -> index of its tau map
  std::vector<int> sigma_of;            // morphism -> index of its sigma map
  std::vector<int> unit_of;             // object -> index of identity on vLambda

  int size() const { return static_cast<int>(elems.size()); }
  int find(const PartialInjection& m) const;
  // elems[i] after elems[j]; always defined (0 = zero element).
  int compose(int i, int j) const;

  void index_insert(const PartialInjection& m, int idx);

 private:
  std::unordered_map<std::size_t, std::vector<int>> index_;
  std::size_t hash(const PartialInjection& m) const;
};

// Closure of {identities on vLambda, tau^a, sigma^a} under composition, as
// partial maps, with the empty map as a single zero. Throws std::domain_error
// for non-TOTAL input and std::runtime_error past the element cap.
ZigzagSemigroup generate_semigroup(const SmallCategory& cat, std::size_t cap = 250000);

}  // namespace lcsc
