#include <doctest.h>

#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/zigzag.hpp"

#include <stdexcept>
#include <vector>

using namespace lcsc;

namespace {

std::vector<Zigzag> generator_zigzags(const SmallCategory& cat) {
  std::vector<Zigzag> out;
  for (Obj v = 0; v < cat.num_objects(); ++v) out.push_back(zigzag_unit(cat, v));
  for (Mor a = 0; a < cat.size(); ++a) {
    out.push_back(zigzag_tau(cat, a));
    out.push_back(zigzag_sigma(cat, a));
  }
  return out;
}

}  // namespace

TEST_CASE("zigzag endpoints and validity") {
  SmallCategory kg = build_kg(2);
  const Obj x = kg.obj("x");
  const Obj y = kg.obj("y");

  Zigzag z;  // divide by beta after multiplying by alpha
  z.pairs.push_back({kg.mor("beta"), kg.mor("alpha")});
  CHECK(zigzag_valid(kg, z));
  CHECK(zigzag_src(kg, z) == x);
  CHECK(zigzag_dst(kg, z) == y);

  Zigzag bad;  // the two legs of a pair must share their range
  bad.pairs.push_back({kg.mor("alpha"), kg.mor("gamma1")});
  CHECK_FALSE(zigzag_valid(kg, bad));

  Zigzag units = zigzag_unit(kg, x);
  CHECK(zigzag_valid(kg, units));
  CHECK(zigzag_src(kg, units) == x);
  CHECK(zigzag_dst(kg, units) == x);
}

TEST_CASE("a one-pair zigzag divides after multiplying") {
  SmallCategory kg = build_kg(2);
  Zigzag z;
  z.pairs.push_back({kg.mor("beta"), kg.mor("alpha")});
  PartialInjection m = zigzag_map(kg, z);
  REQUIRE_FALSE(m.is_zero());
  CHECK(m.dom_obj == kg.obj("x"));
  CHECK(m.ran_obj == kg.obj("y"));
  CHECK(m(kg.mor("gamma1")) == kg.mor("delta1"));
  CHECK(m(kg.mor("gamma2")) == kg.mor("delta2"));
  CHECK_FALSE(m.defined_at(kg.identity[kg.obj("x")]));
  CHECK(m.dom_size() == 2);

  MorSet dom = zigzag_set(kg, z);
  CHECK(dom == m.domain());
  CHECK(dom.count() == 2);
}

TEST_CASE("tau and sigma act as shift and division") {
  SmallCategory par = build_par();
  const Mor f = par.mor("f");
  PartialInjection tf = zigzag_map(par, zigzag_tau(par, f));
  CHECK(tf.dom_obj == par.obj("v"));
  CHECK(tf.ran_obj == par.obj("u"));
  CHECK(tf(par.identity[par.obj("v")]) == f);
  CHECK(tf.dom_size() == 1);

  PartialInjection sf = zigzag_map(par, zigzag_sigma(par, f));
  CHECK(sf(f) == par.identity[par.obj("v")]);
  CHECK(sf.dom_size() == 1);
  CHECK(pinj_inverse(tf) == sf);

  // Disjoint cones make the cross map empty.
  Zigzag cross;
  cross.pairs.push_back({f, par.mor("g")});
  PartialInjection empty = zigzag_map(par, cross);
  CHECK(empty.is_zero());
}

TEST_CASE("reversal inverts the action and concatenation composes it") {
  SmallCategory kg = build_kg(2);
  auto gens = generator_zigzags(kg);
  for (const auto& z : gens) {
    PartialInjection m = zigzag_map(kg, z);
    PartialInjection mi = zigzag_map(kg, zigzag_reverse(z));
    CHECK(mi == pinj_inverse(m));
  }
  int checked = 0;
  for (const auto& z1 : gens)
    for (const auto& z2 : gens) {
      if (zigzag_src(kg, z1) != zigzag_dst(kg, z2)) continue;
      Zigzag cc = zigzag_concat(kg, z1, z2);
      CHECK(zigzag_valid(kg, cc));
      PartialInjection direct = zigzag_map(kg, cc);
      PartialInjection composed = pinj_compose(zigzag_map(kg, z1), zigzag_map(kg, z2));
      CHECK(direct == composed);
      ++checked;
    }
  CHECK(checked > 50);
}

TEST_CASE("the all-empty map normalizes to the single zero") {
  PartialInjection m;
  m.dom_obj = 1;
  m.ran_obj = 0;
  m.img.assign(4, kUndef);
  m.trunc.resize(4);
  m.normalize_zero();
  CHECK(m.is_zero());
  CHECK(m.dom_obj == -1);
  CHECK(m.ran_obj == -1);
}

TEST_CASE("partial injections satisfy the inverse-semigroup law") {
  SmallCategory kg = build_kg(2);
  ZigzagSemigroup sg = generate_semigroup(kg);
  for (const auto& m : sg.elems) {
    PartialInjection back = pinj_compose(pinj_compose(m, pinj_inverse(m)), m);
    CHECK(back == m);
  }
}

TEST_CASE("the closure over the parallel-arrow category has eleven elements") {
  SmallCategory par = build_par();
  ZigzagSemigroup sg = generate_semigroup(par);
  CHECK(sg.size() == 11);
  CHECK(sg.elems[0].is_zero());
  CHECK(sg.witness[0].empty());

  const Obj u = par.obj("u");
  const Obj v = par.obj("v");
  const Mor f = par.mor("f");
  const Mor g = par.mor("g");

  // Generators are indexed and their identities deduplicate onto the units.
  CHECK(sg.unit_of[u] > 0);
  CHECK(sg.unit_of[v] > 0);
  CHECK(sg.tau_of[par.identity[u]] == sg.unit_of[u]);
  CHECK(sg.sigma_of[par.identity[v]] == sg.unit_of[v]);
  CHECK(sg.tau_of[f] != sg.tau_of[g]);

  // Every element is realized by its witnessing zigzag.
  for (int i = 1; i < sg.size(); ++i)
    CHECK(zigzag_map(par, sg.witness[i]) == sg.elems[i]);

  // rev is an involution matching the actual inverse map.
  for (int i = 0; i < sg.size(); ++i) {
    CHECK(sg.rev[sg.rev[i]] == i);
    CHECK(sg.elems[sg.rev[i]] == pinj_inverse(sg.elems[i]));
  }

  // The composition table matches map composition and is associative.
  for (int i = 0; i < sg.size(); ++i)
    for (int j = 0; j < sg.size(); ++j) {
      CHECK(sg.elems[sg.compose(i, j)] == pinj_compose(sg.elems[i], sg.elems[j]));
      for (int k = 0; k < sg.size(); ++k)
        CHECK(sg.compose(sg.compose(i, j), k) == sg.compose(i, sg.compose(j, k)));
    }

  // find is the inverse of the element list; unknown maps return -1.
  for (int i = 0; i < sg.size(); ++i) CHECK(sg.find(sg.elems[i]) == i);
  PartialInjection swap;
  swap.dom_obj = u;
  swap.ran_obj = u;
  swap.img.assign(par.size(), kUndef);
  swap.img[f] = g;
  swap.img[g] = f;
  swap.trunc.resize(par.size());
  CHECK(sg.find(swap) == -1);

  // Composites act on points as expected: tau then sigma is the cone identity.
  const int on_f = sg.compose(sg.tau_of[f], sg.sigma_of[f]);
  CHECK(pinj_is_identity(sg.elems[on_f]));
  CHECK(sg.elems[on_f].dom_size() == 1);
  CHECK_FALSE(pinj_is_identity(sg.elems[sg.tau_of[f]]));
  CHECK(pinj_is_identity(sg.elems[sg.unit_of[u]]));
}

TEST_CASE("group translations close into a tiny monoid of bijections") {
  SmallCategory g2 = build_group(2);
  ZigzagSemigroup sg = generate_semigroup(g2);
  CHECK(sg.size() == 3);  // zero, identity, the involution
  const Mor g = g2.mor("g1");
  CHECK(sg.rev[sg.tau_of[g]] == sg.tau_of[g]);
  CHECK(sg.sigma_of[g] == sg.tau_of[g]);
  CHECK(sg.compose(sg.tau_of[g], sg.tau_of[g]) == sg.unit_of[0]);
}

TEST_CASE("the double-factorization closure size is stable") {
  SmallCategory kg = build_kg(2);
  ZigzagSemigroup sg = generate_semigroup(kg);
  CHECK(sg.size() == 68);
}

TEST_CASE("generation rejects bounded carriers and tiny caps") {
  CHECK_THROWS_AS(generate_semigroup(build_nbox(1, 3)), std::domain_error);
  CHECK_THROWS_AS(generate_semigroup(build_par(), 5), std::runtime_error);
}
