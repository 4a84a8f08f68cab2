#include <doctest.h>

#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"

#include <stdexcept>

using namespace lcsc;

namespace {

SmallCategory two_arrows() { return build_par(); }

}  // namespace

TEST_CASE("builder assembles objects, identities and generators") {
  SmallCategory cat = two_arrows();
  CHECK(cat.num_objects() == 2);
  CHECK(cat.size() == 4);  // id_u, id_v, f, g
  const Obj u = cat.obj("u");
  const Obj v = cat.obj("v");
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  CHECK(cat.obj("nope") == -1);
  CHECK(cat.mor("nope") == -1);

  // Identities are named after their object and round-trip through the maps.
  const Mor idu = cat.identity[u];
  CHECK(cat.names[idu] == "u");
  CHECK(cat.is_identity(idu));
  CHECK(cat.identity_of[idu] == u);
  const Mor f = cat.mor("f");
  CHECK_FALSE(cat.is_identity(f));
  CHECK(cat.src[f] == v);
  CHECK(cat.dst[f] == u);
}

TEST_CASE("composition respects endpoints and identities") {
  SmallCategory cat = two_arrows();
  const Mor f = cat.mor("f");
  const Mor g = cat.mor("g");
  const Mor idu = cat.identity[cat.obj("u")];
  const Mor idv = cat.identity[cat.obj("v")];

  CHECK(cat.compose(idu, f) == f);
  CHECK(cat.compose(f, idv) == f);
  CHECK(cat.compose(f, g) == kUndef);   // s(f) = v, r(g) = u
  CHECK(cat.compose(f, f) == kUndef);
  CHECK(cat.tau(idu, g) == g);
}

TEST_CASE("left division inverts composition") {
  SmallCategory cat = build_kg(2);
  const Mor alpha = cat.mor("alpha");
  const Mor gamma1 = cat.mor("gamma1");
  const Mor eps1 = cat.mor("eps1");
  REQUIRE(cat.compose(alpha, gamma1) == eps1);
  CHECK(cat.divide_left(alpha, eps1) == gamma1);
  CHECK(cat.sigma(alpha, eps1) == gamma1);
  CHECK(cat.divide_left(alpha, cat.mor("eps2")) == cat.mor("gamma2"));
  CHECK(cat.sigma(alpha, alpha) == cat.identity[cat.obj("x")]);
  // eps1 does not factor through beta-side gamma.
  CHECK(cat.sigma(cat.mor("gamma1"), eps1) == kUndef);

  // Exhaustive consistency: whenever ab is defined, sigma(a, ab) == b.
  for (Mor a = 0; a < cat.size(); ++a)
    for (Mor b = 0; b < cat.size(); ++b) {
      const Mor ab = cat.compose(a, b);
      if (ab >= 0) CHECK(cat.sigma(a, ab) == b);
    }
}

TEST_CASE("cones and object cones enumerate the carrier correctly") {
  SmallCategory cat = two_arrows();
  const Mor f = cat.mor("f");
  const Mor g = cat.mor("g");
  const Mor idu = cat.identity[cat.obj("u")];
  const Mor idv = cat.identity[cat.obj("v")];

  CHECK(cat.cone(f).count() == 1);
  CHECK(cat.cone(f).test(f));
  CHECK(cat.cone(idu).count() == 3);  // id_u, f, g
  CHECK(cat.cone(idu).test(g));
  CHECK(cat.obj_cone(cat.obj("u")).count() == 3);
  CHECK(cat.obj_cone(cat.obj("v")).count() == 1);
  CHECK(cat.obj_cone(cat.obj("v")).test(idv));
  CHECK(cat.cone_exact(f));

  // cone(a) == { ab : b defined } exactly.
  for (Mor a = 0; a < cat.size(); ++a) {
    MorSet expect(cat.size());
    for (Mor b = 0; b < cat.size(); ++b) {
      const Mor ab = cat.compose(a, b);
      if (ab >= 0) expect.set(ab);
    }
    CHECK(cat.cone(a) == expect);
  }
}

TEST_CASE("initial segments list the prefixes of a morphism") {
  SmallCategory cat = build_kg(2);
  const Mor eps1 = cat.mor("eps1");
  MorSet pre = cat.initial_segments(eps1);
  // eps1 = alpha gamma1 = beta delta1, plus the trivial factorizations.
  CHECK(pre.test(cat.identity[cat.obj("u")]));
  CHECK(pre.test(eps1));
  CHECK(pre.test(cat.mor("alpha")));
  CHECK(pre.test(cat.mor("beta")));
  CHECK_FALSE(pre.test(cat.mor("gamma1")));
  CHECK(pre.count() == 4);
}

TEST_CASE("equal-cone and intersecting-cone predicates") {
  SmallCategory par = two_arrows();
  const Mor f = par.mor("f");
  const Mor g = par.mor("g");
  CHECK(par.approx(f, f));
  CHECK_FALSE(par.approx(f, g));
  CHECK(par.perp(f, g));
  CHECK(par.cap(par.identity[par.obj("u")], f));

  // In a group every cone is the whole carrier.
  SmallCategory grp = build_group(3);
  for (Mor a = 0; a < grp.size(); ++a)
    for (Mor b = 0; b < grp.size(); ++b) {
      CHECK(grp.approx(a, b));
      CHECK(grp.cap(a, b));
    }
}

TEST_CASE("invertibles are found exactly") {
  SmallCategory grp = build_group(2);
  CHECK(grp.invertibles(0).count() == 2);
  CHECK(grp.has_nontrivial_invertibles());

  SmallCategory par = two_arrows();
  CHECK(par.invertibles(par.obj("u")).count() == 1);
  CHECK_FALSE(par.has_nontrivial_invertibles());
}

TEST_CASE("bounded carriers report truncation sentinels") {
  SmallCategory box = build_nbox(1, 2);
  REQUIRE(box.mode == CarrierMode::kBounded);
  CHECK(box.size() == 3);  // (0) identity, (1), (2)
  CHECK(box.is_identity(box.mor("(0)")));
  const Mor one = box.mor("(1)");
  const Mor two = box.mor("(2)");
  REQUIRE(one >= 0);
  REQUIRE(two >= 0);
  CHECK(box.compose(one, one) == two);
  CHECK(box.compose(one, two) == kTrunc);
  CHECK(box.compose(two, two) == kTrunc);
  CHECK_FALSE(box.cone_exact(one));
  CHECK(box.cone(one).test(two));
}

TEST_CASE("validation passes on the built-in categories") {
  for (const char* name : {"GROUP(2)", "GROUP(3)", "PAR", "KG(2)", "SEP(3,1)"}) {
    SmallCategory cat = build_fixture(name);
    ValidationReport rep = cat.validate();
    CAPTURE(name);
    CHECK(rep.ok());
    CHECK(rep.exhaustive);
    CHECK(rep.checked_triples > 0);
  }
}

TEST_CASE("validation flags a left-cancellation failure") {
  // One object, one idempotent non-identity arrow: a*a = a = a*e.
  SmallCategory::Builder b;
  b.add_object("e");
  b.add_morphism("a", "e", "e");
  b.add_composition("a", "a", "a");
  SmallCategory cat = b.build();
  ValidationReport rep = cat.validate();
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& issue : rep.issues)
    if (issue.kind == "left-cancellation") found = true;
  CHECK(found);
}

TEST_CASE("validation flags an associativity failure") {
  SmallCategory::Builder b;
  b.add_object("e");
  b.add_morphism("a", "e", "e");
  b.add_morphism("b", "e", "e");
  b.add_composition("a", "a", "b");
  b.add_composition("a", "b", "b");
  b.add_composition("b", "a", "a");
  b.add_composition("b", "b", "b");
  SmallCategory cat = b.build();
  ValidationReport rep = cat.validate();
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& issue : rep.issues)
    if (issue.kind == "associativity") found = true;
  CHECK(found);
}

TEST_CASE("builder rejects structurally malformed input") {
  SUBCASE("unknown endpoint object") {
    SmallCategory::Builder b;
    b.add_object("u");
    b.add_morphism("f", "u", "ghost");
    CHECK_THROWS_AS(b.build(), std::runtime_error);
  }
  SUBCASE("duplicate morphism name") {
    SmallCategory::Builder b;
    b.add_object("u");
    b.add_morphism("f", "u", "u");
    b.add_morphism("f", "u", "u");
    CHECK_THROWS_AS(b.build(), std::runtime_error);
  }
  SUBCASE("morphism named like an object clashes with its identity") {
    SmallCategory::Builder b;
    b.add_object("u");
    b.add_morphism("u", "u", "u");
    CHECK_THROWS_AS(b.build(), std::runtime_error);
  }
  SUBCASE("composition with mismatched endpoints") {
    SmallCategory::Builder b;
    b.add_object("u");
    b.add_object("v");
    b.add_morphism("f", "v", "u");
    b.add_morphism("h", "u", "u");
    // f*h is not composable: s(f) = v but r(h) = u.
    b.add_composition("f", "h", "h");
    CHECK_THROWS_AS(b.build(), std::runtime_error);
  }
  SUBCASE("composition referencing an unknown morphism") {
    SmallCategory::Builder b;
    b.add_object("u");
    b.add_morphism("a", "u", "u");
    b.add_composition("a", "a", "zz");
    CHECK_THROWS_AS(b.build(), std::runtime_error);
  }
}
