#pragma once

// Filter points of the ring at a vertex, ultrafilters of the generated ring,
// directed hereditary subsets, maximal points, and boundary points. For a
// finite carrier every filter is principal, so points are indexed by the
// atoms whose membership pattern is exactly an up-set.

#include "lcsc/alignment.hpp"
#include "lcsc/category.hpp"
#include "lcsc/set_ring.hpp"

#include <vector>

namespace lcsc {

struct FilterPoint {
  Obj vertex = -1;
  int atom = -1;            // the atom realizing the point
  int min_set = -1;         // D0 index of the smallest member
  std::vector<int> sets;    // sorted D0 indices of all members (the up-set)
  bool operator==(const FilterPoint& o) const {
    return vertex == o.vertex && atom == o.atom && min_set == o.min_set && sets == o.sets;
  }
};

struct Ultrafilter {
  Obj vertex = -1;
  MorSet atom_cell;             // principal generator among unions of atoms
  std::vector<int> d0_members;  // its trace on D0
};

// All filter points at ring.vertex, in atom order.
std::vector<FilterPoint> lambda_star(const SmallCategory& cat, const RingData& ring);

Ultrafilter ultrafilter_of(const RingData& ring, const FilterPoint& p);
// Throws std::invalid_argument when u is not an ultrafilter of the ring
// (principal over a single atom with a D0 member realizing the pattern).
FilterPoint point_of(const RingData& ring, const Ultrafilter& u);

// The point whose smallest member is the cone of alpha; alpha must lie in
// ring.vertex's cone.
FilterPoint fixed_point(const SmallCategory& cat, const RingData& ring, Mor alpha);

// H = { alpha in vLambda : cone(alpha) is a member of the filter }.
MorSet hereditary_of(const SmallCategory& cat, const RingData& ring, const FilterPoint& p);
// Validates that H is nonempty, hereditary (closed under initial segments)
// and directed (any two members have a common extension inside H), then
// returns the corresponding point. std::invalid_argument on violation.
FilterPoint point_of_hereditary(const SmallCategory& cat, const RingData& ring, const MorSet& H);

// A point is maximal iff every D0 set meeting every member belongs to the
// filter. Checked against two equivalent forms (minimality of the smallest
// member; no other point below it).
bool is_maximal_point(const SmallCategory& cat, const RingData& ring, const FilterPoint& p);
std::vector<FilterPoint> maximal_points(const SmallCategory& cat, const RingData& ring);

// Boundary points, computed two independent ways and compared: (a) the
// closure of the maximal points in the topology generated by the difference
// sets, and (b) the filters through which no finite non-covering family can
// be completed to a cover. std::logic_error if the methods disagree.
std::vector<FilterPoint> boundary_points(const SmallCategory& cat, const RingData& ring);

// Everything per object, with global point indexing and per-point flags.
struct GroupoidPoint {
  Obj vertex = -1;
  int atom = -1;
};
struct SpectrumAll {
  std::vector<RingData> rings;                 // per object
  std::vector<GroupoidPoint> points;           // global index order
  std::vector<FilterPoint> filters;            // parallel to points
  std::vector<std::vector<int>> point_index;   // per object: atom -> global point
  std::vector<bool> maximal;                   // per global point
  std::vector<bool> boundary;                  // per global point

  int point_at(Obj v, int atom) const { return point_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(atom)]; }
};
SpectrumAll build_spectrum_all(const SmallCategory& cat);

}  // namespace lcsc
