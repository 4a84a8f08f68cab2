#pragma once

// Built-in example categories and monoid-inside-group models.

#include "lcsc/category.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lcsc {

// Cyclic group of order n as a one-object category ("e", "g1", ..).
SmallCategory build_group(int n);
// Two objects u, v and two parallel arrows f, g : v -> u.
SmallCategory build_par();
// Objects u, x, y, v; alpha: x->u, beta: y->u, gamma_i: v->x, delta_i: v->y
// and eps_i = alpha gamma_i = beta delta_i (i = 1..n).
SmallCategory build_kg(int n);
// The two-floor category with twisted matchings used by the separation
// estimate: five upper objects, two middle ones, and 2M+p lower ones. The
// lower arrows form an (i,j) grid with i in Z/3M, j in Z/p; the k-th matching
// shifts the grid depending on i mod 3, and the last one is only partial.
// The shifted matchings force lower sources to coincide: rows with i = 1 or
// 2 mod 3 share one source per i, while the i = 0 mod 3 cells share one
// source per j (across all such i).
SmallCategory build_sep(int p, int M);
// N^dim restricted to the box {0..L}^dim, one object, bounded carrier
// (componentwise sums; products leaving the box are truncated). Morphisms
// are named "(a)", "(a,b)", ... and sorted by (total, lex).
SmallCategory build_nbox(int dim, int L);
// Free monoid on letters a, b restricted to words of length <= L, bounded.
SmallCategory build_free2(int L);
// The submonoid of the free group on a, b, c1..cn generated by
// {a, b, c_i, d_i = b^-1 a c_i}, cut to reduced-word length <= L (carrier
// found by closure search at radius L+4), bounded.
SmallCategory build_fg(int n, int L);

// "GROUP(2)", "PAR", "KG(2)", "SEP(3,4)", "NSQ(20)" (= NBOX(2,20)),
// "NBOX(1,4)", "FREE2(4)", "FG(2,4)". Throws std::invalid_argument on
// anything else.
SmallCategory build_fixture(const std::string& name);

// ---- group models ------------------------------------------------------

// Element of Z^k (coordinates) or of a free group (reduced word of signed
// letters; a=1, b=2, c_i=2+i, negatives are inverses).
struct GroupElem {
  std::vector<std::int32_t> v;
  bool operator==(const GroupElem& o) const { return v == o.v; }
  bool operator<(const GroupElem& o) const { return v < o.v; }
};

struct GroupModel {
  enum Kind { kZk, kFree } kind = kZk;
  int rank = 1;

  GroupElem identity() const;
  GroupElem mul(const GroupElem& x, const GroupElem& y) const;
  GroupElem inv(const GroupElem& x) const;
  std::string name(const GroupElem& x) const;
  // Z^k: "(1,-1)"; free: dot- or space-separated letter tokens, "~" prefix
  // for an inverse, "e" for the identity. Throws std::invalid_argument.
  GroupElem parse(const std::string& s) const;
};

enum class Membership { kInCarrier, kBeyondCarrier, kOutside, kUnknown };

// A bounded one-object category embedded in a group: each morphism carries a
// group element, products agree with the group multiplication.
struct GroupedMonoid {
  SmallCategory cat;
  GroupModel model;
  std::vector<GroupElem> elem_of;          // per morphism
  std::map<GroupElem, Mor> lookup;
  std::set<GroupElem> known_in;            // free kinds: elements proven in the monoid
  int box_bound = 0;                       // Z^k kinds: the box edge

  Mor find(const GroupElem& e) const {
    auto it = lookup.find(e);
    return it == lookup.end() ? kUndef : it->second;
  }
  // Is the group element a member of the monoid? Exact for Z^k (coordinates
  // nonnegative) and for the free monoid on a, b (no inverse letters);
  // semi-decided for the richer free-group submonoid.
  Membership membership(const GroupElem& e) const;
};

GroupedMonoid build_nbox_grouped(int dim, int L);
GroupedMonoid build_free2_grouped(int L);
GroupedMonoid build_fg_grouped(int n, int L);

}  // namespace lcsc
