#pragma once

// Finite (or bounded-truncation) small categories with left cancellation:
// carrier tables, shift maps tau/sigma, principal cones, the extension
// preorder, and the validation suite.

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcsc {

using Mor = std::int32_t;  // index into the morphism carrier
using Obj = std::int32_t;  // index into the object list

// Sentinels returned by composition.
inline constexpr Mor kUndef = -1;  // not composable (source/target mismatch)
inline constexpr Mor kTrunc = -2;  // composable, but the product lies outside a bounded carrier

using MorSet = boost::dynamic_bitset<>;

enum class CarrierMode { kTotal, kBounded };

struct ValidationIssue {
  std::string kind;    // "structure" | "identity" | "associativity" | "left-cancellation"
  std::string detail;  // human-readable instance
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  // Associativity bookkeeping: in very large carriers the triple scan is
  // sampled; exhaustive==false means only `checked_triples` were tested.
  std::uint64_t checked_triples = 0;
  bool exhaustive = true;
  bool ok() const { return issues.empty(); }
};

class SmallCategory {
 public:
  CarrierMode mode = CarrierMode::kTotal;
  std::int64_t bound = 0;  // size bound used to truncate (bounded mode only)

  std::vector<std::string> object_names;
  std::vector<std::string> names;  // morphism names; identities use the object name
  std::vector<Obj> src;            // s(a)
  std::vector<Obj> dst;            // r(a)
  std::vector<Mor> identity;       // object -> its identity morphism
  std::vector<Obj> identity_of;    // morphism -> object if identity, else -1

  int size() const { return static_cast<int>(names.size()); }
  int num_objects() const { return static_cast<int>(object_names.size()); }
  bool is_identity(Mor a) const { return identity_of[a] >= 0; }

  // a*b, defined iff s(a) = r(b); kUndef / kTrunc otherwise.
  Mor compose(Mor a, Mor b) const { return table_[static_cast<std::size_t>(a) * names.size() + b]; }

  // Unique b with a*b = c (left cancellation makes it unique); kUndef if none
  // in the carrier.
  Mor divide_left(Mor a, Mor c) const { return ldiv_[static_cast<std::size_t>(a) * names.size() + c]; }

  // Shift maps. tau(a,b) = ab; sigma(a,c) = the unique b with ab = c.
  // Both return kUndef / kTrunc sentinels like compose.
  Mor tau(Mor a, Mor b) const { return compose(a, b); }
  Mor sigma(Mor a, Mor c) const;

  // Principal cone aLambda = {ab : b in s(a)Lambda} within the carrier.
  const MorSet& cone(Mor a) const { return cone_[a]; }
  // vLambda = {b : r(b) = v}.
  const MorSet& obj_cone(Obj v) const { return obj_cone_[v]; }
  // False when some product a*b escaped a bounded carrier, i.e. cone(a) is
  // only a lower bound for the true cone.
  bool cone_exact(Mor a) const { return cone_exact_[a]; }

  // {x : b in xLambda}; contains r(b) and b.
  MorSet initial_segments(Mor b) const;
  // aLambda == bLambda.
  bool approx(Mor a, Mor b) const;
  // aLambda and bLambda intersect.
  bool cap(Mor a, Mor b) const;
  bool perp(Mor a, Mor b) const { return !cap(a, b); }
  // Morphisms v -> v with a two-sided inverse in the carrier.
  MorSet invertibles(Obj v) const;
  bool has_nontrivial_invertibles() const;

  ValidationReport validate() const;

  Mor mor(const std::string& name) const;  // -1 if absent
  Obj obj(const std::string& name) const;  // -1 if absent

  struct Builder {
    CarrierMode mode = CarrierMode::kTotal;
    std::int64_t bound = 0;
    std::vector<std::string> objects;
    // (name, src object name, dst object name); identities are added
    // automatically, named after their object.
    std::vector<std::array<std::string, 3>> morphisms;
    // (a, b, ab) for non-identity pairs. Identity compositions are implied.
    std::vector<std::array<std::string, 3>> compositions;

    void add_object(const std::string& v) { objects.push_back(v); }
    void add_morphism(const std::string& name, const std::string& s, const std::string& r) {
      morphisms.push_back({name, s, r});
    }
    void add_composition(const std::string& a, const std::string& b, const std::string& ab) {
      compositions.push_back({a, b, ab});
    }
    // Throws std::runtime_error on structurally malformed input (unknown
    // names, duplicate ids, non-composable table entries).
    SmallCategory build() const;
  };

 private:
  std::vector<Mor> table_;  // n*n compose
  std::vector<Mor> ldiv_;   // n*n left division
  std::vector<MorSet> cone_;
  std::vector<MorSet> obj_cone_;
  std::vector<bool> cone_exact_;
  std::unordered_map<std::string, Mor> mor_index_;
  std::unordered_map<std::string, Obj> obj_index_;

  void finalize();  // builds division, cones, indices
};

}  // namespace lcsc
