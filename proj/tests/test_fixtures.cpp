#include <doctest.h>

#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"

#include <stdexcept>
#include <string>

using namespace lcsc;

TEST_CASE("cyclic groups build as one-object categories") {
  for (int n = 1; n <= 5; ++n) {
    SmallCategory g = build_group(n);
    CAPTURE(n);
    CHECK(g.num_objects() == 1);
    CHECK(g.size() == n);
    CHECK(g.validate().ok());
    CHECK(g.invertibles(0).count() == static_cast<std::size_t>(n));
  }
  SmallCategory g4 = build_group(4);
  CHECK(g4.compose(g4.mor("g2"), g4.mor("g3")) == g4.mor("g1"));
  CHECK_THROWS_AS(build_group(0), std::invalid_argument);
}

TEST_CASE("the two parallel arrows have disjoint cones") {
  SmallCategory par = build_par();
  CHECK(par.size() == 4);
  CHECK(par.validate().ok());
  CHECK(par.perp(par.mor("f"), par.mor("g")));
}

TEST_CASE("the double-factorization family identifies the diagonal composites") {
  for (int n : {1, 2, 4, 8}) {
    SmallCategory kg = build_kg(n);
    CAPTURE(n);
    CHECK(kg.num_objects() == 4);
    CHECK(kg.size() == 6 + 3 * n);
    CHECK(kg.validate().ok());
    for (int i = 1; i <= n; ++i) {
      const Mor eps = kg.mor("eps" + std::to_string(i));
      CHECK(kg.compose(kg.mor("alpha"), kg.mor("gamma" + std::to_string(i))) == eps);
      CHECK(kg.compose(kg.mor("beta"), kg.mor("delta" + std::to_string(i))) == eps);
    }
  }
}

TEST_CASE("the twisted-matching category has the derived size and endpoints") {
  SmallCategory sep = build_sep(3, 4);
  // 7 + 2M + p objects and 18 + 10 + 2*3Mp + 5*3Mp + Mp morphisms at p=3, M=4.
  CHECK(sep.num_objects() == 18);
  CHECK(sep.size() == 292);
  CHECK(sep.validate().ok());

  // Lower sources: one per row for i = 1,2 mod 3, one per column for i = 0.
  CHECK(sep.mor("gamma_1_0") >= 0);
  CHECK(sep.src[sep.mor("gamma_1_0")] == sep.src[sep.mor("gamma_1_2")]);
  CHECK(sep.src[sep.mor("gamma_2_0")] == sep.src[sep.mor("delta_2_1")]);
  CHECK(sep.src[sep.mor("gamma_0_1")] == sep.src[sep.mor("gamma_9_1")]);
  CHECK(sep.src[sep.mor("gamma_0_1")] != sep.src[sep.mor("gamma_0_2")]);
  CHECK(sep.src[sep.mor("gamma_1_0")] != sep.src[sep.mor("gamma_4_0")]);
  CHECK(sep.obj("zrow_1") >= 0);
  CHECK(sep.obj("zcol_0") >= 0);
}

TEST_CASE("the twisted matchings compose according to the row class") {
  const int p = 3, M = 4, rows = 3 * M;
  SmallCategory sep = build_sep(p, M);
  auto gname = [](int i, int j) { return "gamma_" + std::to_string(i) + "_" + std::to_string(j); };
  auto dname = [](int i, int j) { return "delta_" + std::to_string(i) + "_" + std::to_string(j); };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < p; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const Mor gij = sep.mor(gname(i, j));
      // Matching 0 is straight: alpha0 gamma_ij == beta0 delta_ij.
      CHECK(sep.compose(sep.mor("alpha0"), gij) ==
            sep.compose(sep.mor("beta0"), sep.mor(dname(i, j))));
      // Matching 1 shifts j by one on rows i = 1 mod 3.
      const int j1 = i % 3 == 1 ? (j + 1) % p : j;
      CHECK(sep.compose(sep.mor("alpha1"), gij) ==
            sep.compose(sep.mor("beta1"), sep.mor(dname(i, j1))));
      // Matching 2 shifts j by one on rows i = 2 mod 3.
      const int j2 = i % 3 == 2 ? (j + 1) % p : j;
      CHECK(sep.compose(sep.mor("alpha2"), gij) ==
            sep.compose(sep.mor("beta2"), sep.mor(dname(i, j2))));
      // Matching 3 shifts i by three on rows i = 0 mod 3.
      const int i3 = i % 3 == 0 ? (i + 3) % rows : i;
      CHECK(sep.compose(sep.mor("alpha3"), gij) ==
            sep.compose(sep.mor("beta3"), sep.mor(dname(i3, j))));
      // Matching 4 only exists off the rows i = 0 mod 3.
      if (i % 3 != 0) {
        CHECK(sep.compose(sep.mor("alpha4"), gij) ==
              sep.compose(sep.mor("beta4"), sep.mor(dname(i, j))));
      } else {
        CHECK(sep.compose(sep.mor("alpha4"), gij) !=
              sep.compose(sep.mor("beta4"), sep.mor(dname(i, j))));
      }
    }
  }
  CHECK_THROWS_AS(build_sep(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_sep(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_sep(3, 0), std::invalid_argument);
}

TEST_CASE("the box monoid truncates sums leaving the box") {
  SmallCategory box = build_nbox(2, 1);
  CHECK(box.size() == 4);  // (0,0), (0,1), (1,0), (1,1)
  CHECK(box.mode == CarrierMode::kBounded);
  CHECK(box.compose(box.mor("(0,1)"), box.mor("(1,0)")) == box.mor("(1,1)"));
  CHECK(box.compose(box.mor("(0,1)"), box.mor("(0,1)")) == kTrunc);
  CHECK(box.validate().ok());
  CHECK_THROWS_AS(build_nbox(0, 3), std::invalid_argument);
}

TEST_CASE("the free monoid model lists words by length") {
  SmallCategory f2 = build_free2(2);
  CHECK(f2.size() == 7);  // e, a, b, a.a, a.b, b.a, b.b
  CHECK(f2.compose(f2.mor("a"), f2.mor("b")) == f2.mor("a.b"));
  CHECK(f2.compose(f2.mor("a.b"), f2.mor("a")) == kTrunc);
  CHECK(f2.validate().ok());
}

TEST_CASE("fixture names parse with parameters") {
  CHECK(build_fixture("GROUP(2)").size() == 2);
  CHECK(build_fixture("PAR").size() == 4);
  CHECK(build_fixture("KG(2)").size() == 12);
  CHECK(build_fixture("SEP(3,1)").size() == 88);
  CHECK(build_fixture("NSQ(2)").size() == 9);
  CHECK(build_fixture("NBOX(1,4)").size() == 5);
  CHECK(build_fixture("FREE2(2)").size() == 7);
  CHECK(build_fixture("FG(2,2)").validate().ok());
  CHECK_THROWS_AS(build_fixture("WHAT"), std::invalid_argument);
  CHECK_THROWS_AS(build_fixture("GROUP(x)"), std::invalid_argument);
  CHECK_THROWS_AS(build_fixture("SEP(4,4)"), std::invalid_argument);
}

TEST_CASE("group elements multiply, invert and print in both models") {
  GroupModel zk{GroupModel::kZk, 2};
  GroupElem a = zk.parse("(1,-1)");
  GroupElem b = zk.parse("(2,3)");
  CHECK(zk.name(zk.mul(a, b)) == "(3,2)");
  CHECK(zk.mul(a, zk.inv(a)) == zk.identity());
  CHECK_THROWS_AS(zk.parse("(1)"), std::invalid_argument);
  CHECK_THROWS_AS(zk.parse("garbage"), std::invalid_argument);

  GroupModel fr{GroupModel::kFree, 3};
  GroupElem w = fr.parse("a.b.~a");
  CHECK(fr.name(w) == "a.b.~a");
  CHECK(fr.name(fr.mul(w, fr.parse("a"))) == "a.b");
  CHECK(fr.mul(w, fr.inv(w)) == fr.identity());
  CHECK(fr.name(fr.identity()) == "e");
  CHECK(fr.parse("e") == fr.identity());
  CHECK_THROWS_AS(fr.parse("q"), std::invalid_argument);
}

TEST_CASE("the embedded box monoid decides membership exactly") {
  GroupedMonoid g = build_nbox_grouped(2, 3);
  CHECK(g.cat.size() == 16);
  CHECK(g.membership(g.model.parse("(1,2)")) == Membership::kInCarrier);
  CHECK(g.membership(g.model.parse("(5,0)")) == Membership::kBeyondCarrier);
  CHECK(g.membership(g.model.parse("(-1,2)")) == Membership::kOutside);
  CHECK(g.find(g.model.parse("(1,2)")) == g.cat.mor("(1,2)"));
  CHECK(g.elem_of[g.cat.mor("(2,1)")] == g.model.parse("(2,1)"));
}

TEST_CASE("the embedded free monoid decides membership by letter signs") {
  GroupedMonoid g = build_free2_grouped(3);
  CHECK(g.membership(g.model.parse("a.b.a")) == Membership::kInCarrier);
  CHECK(g.membership(g.model.parse("a.b.a.b")) == Membership::kBeyondCarrier);
  CHECK(g.membership(g.model.parse("~a.b")) == Membership::kOutside);
  // The empty word is indexed like any other carrier member.
  CHECK(g.membership(g.model.identity()) == Membership::kInCarrier);
  CHECK(g.find(g.model.identity()) == g.cat.mor("e"));
}

TEST_CASE("the group-embedded submonoid proves membership by search") {
  GroupedMonoid g = build_fg_grouped(1, 4);
  // d1 = ~b.a.c1 is a generator of the submonoid.
  CHECK(g.membership(g.model.parse("~b.a.c1")) == Membership::kInCarrier);
  CHECK(g.membership(g.model.parse("a.b")) == Membership::kInCarrier);
  // The letters a and c occur with nonnegative total degree in every
  // product of the generators, so their plain inverses are provably outside.
  CHECK(g.membership(g.model.parse("~a")) == Membership::kOutside);
  CHECK(g.membership(g.model.parse("~c1")) == Membership::kOutside);
  // No such obstruction exists for b; an unreached b-inverse stays undecided.
  CHECK(g.membership(g.model.parse("~b")) == Membership::kUnknown);
  CHECK(g.membership(g.model.identity()) == Membership::kInCarrier);
  CHECK(g.find(g.model.identity()) == g.cat.mor("e"));
  CHECK(g.cat.mode == CarrierMode::kBounded);
  CHECK(g.cat.validate().ok());
}
