#pragma once

// Concrete operator families on finite-dimensional spaces: the regular
// family on the carrier, induced families on germ spaces, relation checking,
// spectral bounds, the separation estimate, and Wiener-Hopf operators over
// group-embedded monoids.

#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/set_ring.hpp"
#include "lcsc/spectrum.hpp"
#include "lcsc/zigzag.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lcsc {

// A 0/1 matrix with at most one 1 per row and per column: T e_j = e_{img[j]}
// (or 0 when img[j] < 0).
struct PartialPerm {
  int n = 0;
  std::vector<int> img;

  static PartialPerm zeros(int n);
  static PartialPerm eye(int n);
  PartialPerm after(const PartialPerm& g) const;  // this * g
  PartialPerm adjoint() const;
  bool is_projection() const;  // img[j] is j or absent
  bool operator==(const PartialPerm& o) const { return n == o.n && img == o.img; }
  Eigen::MatrixXd to_matrix() const;
};

PartialPerm perm_of_injection(const PartialInjection& m, int n);
// Union of projections (exact on 0/1 diagonal projections).
PartialPerm join_projections(const PartialPerm& p, const PartialPerm& q);
// Spectral version: the orthogonal projection onto range(P + Q), eigenvalues
// thresholded at tol.
Eigen::MatrixXd join_projections_spectral(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                                          double tol = 1e-9);
// <T xi, xi>.
std::complex<double> pairing(const PartialPerm& t, const Eigen::VectorXcd& xi);

struct OperatorFamily {
  std::vector<std::string> labels;      // basis labels
  const ZigzagSemigroup* sg = nullptr;
  std::vector<PartialPerm> ops;         // parallel to sg->elems
  double tol = 1e-9;
};

// Basis = the carrier; each element acts by its partial injection.
OperatorFamily regular_rep(const SmallCategory& cat, const ZigzagSemigroup& sg);
// Basis = germs with source x; elements act by composing germs. x must be an
// active point of g (std::invalid_argument otherwise).
OperatorFamily induced_rep(const FiniteGroupoid& g, int x);
OperatorFamily direct_sum(const std::vector<const OperatorFamily*>& parts);
// Direct sum of the induced families over all active boundary points.
OperatorFamily boundary_family(const FiniteGroupoid& g);

enum : unsigned {
  kRelProducts = 1u << 0,        // T_s T_t = T_{st}
  kRelAdjoints = 1u << 1,        // T_s^* = T_{s^*}
  kRelUnions = 1u << 2,          // exact domain unions join
  kRelPointCollapse = 1u << 3,   // trivial point action forces the projection
  kRelMapCollapse = 1u << 4,     // identity map forces the projection
  kRelCovers = 1u << 5,          // domain covers join
  kRelGenIsometry = 1u << 6,     // T_a^* T_a = T_{s(a)}
  kRelGenProducts = 1u << 7,     // T_a T_b = T_{ab}
  kRelGenJoins = 1u << 8,        // range projections meet along joins
  kRelGermCollapse = 1u << 9,    // equal germs everywhere force equal operators
  kRelExhaustive = 1u << 10,     // exhaustive families join to the unit
};

struct RelationResult {
  unsigned id = 0;
  std::string name;
  bool pass = true;
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;     // instances over the enumeration guard
  double max_deviation = 0.0;
  std::string counterexample;    // first failing instance
  std::string witness_basis;     // a basis label where the two sides differ
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

RelationReport check_relations(const SmallCategory& cat, const ZigzagSemigroup& sg,
                               const SpectrumAll& spec, const OperatorFamily& fam, unsigned mask);

struct ShiftBound {
  int p = 0;
  double min_eig = 0.0;  // smallest eigenvalue of the real part of the shift
  double c = 0.0;        // (1 + min_eig) / 2
};
// Cyclic shift on l^2(Z/p) for odd p >= 3 (std::invalid_argument otherwise).
ShiftBound shift_spectral_bound(int p);

struct SeparationReport {
  int p = 0, M = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double c = 0.0;             // (1 - cos(pi/p)) / 2
  double min_lhs = 0.0;
  std::uint64_t argmin_trial = 0;
  bool pass = false;
  struct Structured {
    std::string name;
    double p1 = 0, p2 = 0, p3 = 0;  // the three pairings
    double lhs = 0;
  };
  std::vector<Structured> structured;
};
// |<T1 xi, xi>| + |<T2 xi, xi>| + 1 - Re <T3 xi, xi> over random unit
// vectors, against the bound c; plus three exact structured vectors.
SeparationReport separation_test(int p, int M, std::uint64_t trials, std::uint64_t seed);

struct WHOperator {
  PartialPerm op;
  MorSet edge_rows;     // image known in the monoid but beyond the carrier
  MorSet unknown_rows;  // membership undecided at this carrier
};
// Compression of left translation by the group element t to the monoid.
WHOperator wiener_hopf(const GroupedMonoid& g, const GroupElem& t);

struct WHCertificate {
  bool found = false;
  std::vector<Zigzag> family;               // actions joining to W_t
  std::vector<std::string> description;     // one human-readable form each
  double deviation = 0.0;                   // on rows with decided membership
  bool verified = false;
};
// Search for zigzags of the forms (g^-1 d) and (m n^-1) whose actions join
// to W_t on all rows with decided membership.
WHCertificate wh_membership(const GroupedMonoid& g, const GroupElem& t);

// Dimension of the linear span of the family's matrices.
int family_span_dimension(const OperatorFamily& fam);

struct ShadowReport {
  bool ok = true;
  // per active point: the carrier basis label whose regular vector state
  // matches the induced vector state, or "" when none was found.
  std::vector<std::pair<int, std::string>> eta_per_point;
};
// For each point, find a carrier basis vector whose vector state in the
// regular family equals the unit vector state of the induced family.
ShadowReport weak_containment_shadow(const SmallCategory& cat, const ZigzagSemigroup& sg,
                                     const FiniteGroupoid& g, const OperatorFamily& regular);

}  // namespace lcsc
