#pragma once

// Common extensions, minimal common extensions (joins), finite alignment,
// covers, and exhaustive families.

#include "lcsc/category.hpp"
#include "lcsc/set_ring.hpp"

#include <string>
#include <vector>

namespace lcsc {

// Intersection of the cones of F; all of F must share a range object and F
// must be nonempty (std::invalid_argument otherwise).
MorSet common_extensions(const SmallCategory& cat, const std::vector<Mor>& F);

struct ExtensionReport {
  std::vector<Mor> input;
  MorSet common;
  // One representative per equal-cone class of minimal common extensions,
  // the lexicographically least morphism name in its class.
  std::vector<Mor> minimal;
};
ExtensionReport minimal_common_extensions(const SmallCategory& cat, const std::vector<Mor>& F);

// Number of equal-cone classes of minimal common extensions of {a, b}.
int join_size(const SmallCategory& cat, Mor a, Mor b);

struct AlignReport {
  bool finitely_aligned = true;
  int max_join = 0;
  struct PairJoin {
    Mor a = -1, b = -1;
    int size = 0;
  };
  std::vector<PairJoin> pairs;  // co-ranged unordered pairs a < b
};
// Requires a total carrier (std::domain_error otherwise); a finite total
// category is always finitely aligned, and the report carries the join sizes.
AlignReport is_finitely_aligned(const SmallCategory& cat);

// Does the family (indices into d0.sets) cover the set d0.sets[e]? That is:
// every member lies inside it, and no D0 set survives in the difference.
// When the containment precondition fails the answer is false and *why says
// so.
bool covers_set(const SmallCategory& cat, const DZeroFamily& d0, const std::vector<int>& family,
                int e, std::string* why = nullptr);

// Does the family cover the filter whose smallest member is min_set? True
// iff min_set is contained in the union.
bool covers_filter(const DZeroFamily& d0, const std::vector<int>& family, const MorSet& min_set);

// Is F (subset of vLambda) exhaustive: every member of vLambda has a common
// extension with some member of F?
bool is_exhaustive(const SmallCategory& cat, Obj v, const std::vector<Mor>& F);

}  // namespace lcsc
