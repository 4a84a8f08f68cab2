#pragma once

// The family D0_v of zigzag domains based at an object, the finite ring of
// sets it generates, normal forms in that ring, and extension of a map on
// D0_v to a ring homomorphism.

#include "lcsc/category.hpp"
#include "lcsc/zigzag.hpp"

#include <map>
#include <string>
#include <vector>

namespace lcsc {

// All nonempty zigzag domains A(z) with src(z) == vertex, each with one
// witnessing zigzag. Closed under pairwise intersection (when nonempty).
struct DZeroFamily {
  Obj vertex = -1;
  std::vector<MorSet> sets;
  std::vector<Zigzag> witness;
  std::map<MorSet, int> index;

  int size() const { return static_cast<int>(sets.size()); }
  int find(const MorSet& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }
};

// Breadth-first closure over all objects at once: seeds {vLambda}, then for
// each known E and morphism g adds the translate gE (E based at s(g)) and the
// pullback sigma^g(E cap gLambda) (E based at r(g)), plus pairwise
// intersections, all with witnesses. Requires a total carrier.
std::vector<DZeroFamily> build_dzero_all(const SmallCategory& cat);
DZeroFamily build_dzero(const SmallCategory& cat, Obj v);

// Atoms of the generated ring of sets: classes of the partition of vLambda by
// membership pattern across D0_v. Each atom's sets of its pattern intersect
// to the smallest D0 set containing it.
struct RingData {
  Obj vertex = -1;
  DZeroFamily d0;
  std::vector<MorSet> atoms;
  std::vector<int> atom_of;                // morphism -> atom index, -1 off vLambda
  std::vector<std::vector<int>> pattern;   // per atom: sorted D0 indices containing it
  std::vector<int> min_d0;                 // per atom: D0 index of the pattern intersection

  bool in_ring(const MorSet& s) const;     // union of atoms (the empty set counts)
  bool in_dv(const MorSet& s) const;       // nonempty difference form E minus a union
};
RingData build_ring_data(const SmallCategory& cat, DZeroFamily d0);

// One difference-form term: sets[E] minus the union of sets[f], f in F.
struct DSetTerm {
  int E = -1;
  std::vector<int> F;
};

struct RingSet {
  Obj vertex = -1;
  MorSet elements;
  std::vector<DSetTerm> normal_form;  // pairwise disjoint terms with union == elements
};

// Deterministic difference-form decomposition of a ring member; throws
// std::invalid_argument when s is not a union of atoms.
RingSet ring_normal_form(const SmallCategory& cat, const RingData& ring, const MorSet& s);

// Every member of the generated ring, including the empty set, each in
// normal form. Throws std::runtime_error("ring too large") past max_atoms.
std::vector<RingSet> generate_ring(const SmallCategory& cat, const RingData& ring,
                                   std::size_t max_atoms = 16);

// Independent construction of the same ring from principal cones only; valid
// for finitely aligned categories. Returns the atom partition of vLambda.
std::vector<MorSet> cone_ring_atoms(const SmallCategory& cat, Obj v);

struct RingHomCheck {
  bool ok = false;
  std::string violation;              // which condition failed and where
  std::vector<MorSet> atom_image;     // per atom of the source ring
  std::size_t target_size = 0;
};

// mu assigns a subset of {0..target_size-1} to each D0 set (parallel to
// ring.d0.sets). Succeeds iff mu respects pairwise intersections and sends
// exact finite unions to unions; on success the unique extension to the whole
// ring is returned via its atom images.
RingHomCheck extend_to_ring_hom(const RingData& ring, const std::vector<MorSet>& mu,
                                std::size_t target_size);
MorSet apply_ring_hom(const RingData& ring, const RingHomCheck& hom, const MorSet& s);

}  // namespace lcsc
