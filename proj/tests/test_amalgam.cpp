#include <doctest.h>

#include "lcsc/amalgam.hpp"
#include "lcsc/fixtures.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace lcsc;

namespace {

AmalgamWord raw_word(int cls, std::vector<std::pair<int, Mor>> entries) {
  AmalgamWord w;
  w.src_class = cls;
  w.dst_class = cls;
  w.entries = std::move(entries);
  return w;
}

}  // namespace

TEST_CASE("identification blocks define the object classes") {
  SmallCategory p1 = build_par();
  SmallCategory p2 = build_par();
  Amalgam am = make_amalgam({&p1, &p2}, {{{0, "u"}, {1, "u"}}});
  CHECK(am.num_classes == 3);
  CHECK(am.class_of[0][static_cast<std::size_t>(p1.obj("u"))] ==
        am.class_of[1][static_cast<std::size_t>(p2.obj("u"))]);
  CHECK(am.class_of[0][static_cast<std::size_t>(p1.obj("v"))] !=
        am.class_of[1][static_cast<std::size_t>(p2.obj("v"))]);
  const int merged = am.class_of[0][static_cast<std::size_t>(p1.obj("u"))];
  CHECK(am.class_rep[static_cast<std::size_t>(merged)] ==
        std::pair<int, Obj>{0, p1.obj("u")});

  // Identifying objects inside a single component is allowed.
  Amalgam loop = make_amalgam({&p1}, {{{0, "u"}, {0, "v"}}});
  CHECK(loop.num_classes == 1);

  SmallCategory box = build_nbox(1, 2);
  CHECK_THROWS_AS(make_amalgam({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_amalgam({&box}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_amalgam({&p1, nullptr}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_amalgam({&p1}, {{{1, "u"}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_amalgam({&p1}, {{{0, "nope"}}}), std::invalid_argument);
}

TEST_CASE("a single unglued component reproduces itself") {
  SmallCategory par = build_par();
  Amalgam am = make_amalgam({&par}, {});
  CHECK(am.num_classes == 2);
  std::vector<AmalgamWord> dict;
  SmallCategory cat = amalgamate(am, 1, &dict);
  CHECK(cat.mode == CarrierMode::kBounded);
  CHECK(cat.size() == 4);
  CHECK(cat.validate().ok());
  const Mor f = cat.mor("0:f");
  REQUIRE(f >= 0);
  CHECK(cat.object_names[static_cast<std::size_t>(cat.dst[f])] == "0:u");
  CHECK(cat.object_names[static_cast<std::size_t>(cat.src[f])] == "0:v");
  CHECK(dict[static_cast<std::size_t>(f)] == letter_word(am, 0, par.mor("f")));
  CHECK(dict[static_cast<std::size_t>(cat.mor("0:u"))].entries.empty());

  // Identity words and letters agree with the component's own structure.
  AmalgamWord idw = identity_word(am, am.class_of[0][static_cast<std::size_t>(par.obj("u"))]);
  CHECK(word_valid(am, idw));
  CHECK(word_label(am, idw) == "0:u");
  CHECK(word_mul(am, idw, letter_word(am, 0, par.mor("f"))) ==
        letter_word(am, 0, par.mor("f")));

  CHECK_THROWS_AS(identity_word(am, 9), std::invalid_argument);
  CHECK_THROWS_AS(letter_word(am, 1, par.mor("f")), std::invalid_argument);
  CHECK_THROWS_AS(letter_word(am, 0, Mor{77}), std::invalid_argument);
  CHECK_THROWS_AS(amalgamate(am, -1), std::invalid_argument);
  CHECK(amalgamate(am, 0).size() == 2);  // identity words only
}

TEST_CASE("gluing two components at a sink adds no long words") {
  SmallCategory p1 = build_par();
  SmallCategory p2 = build_par();
  Amalgam am = make_amalgam({&p1, &p2}, {{{0, "u"}, {1, "u"}}});
  // Every arrow lands in the glued class, so nothing concatenates.
  CHECK(amalgamate(am, 1).size() == 7);
  CHECK(amalgamate(am, 2).size() == 7);
}

TEST_CASE("gluing head to tail concatenates across components") {
  SmallCategory p1 = build_par();
  SmallCategory p2 = build_par();
  Amalgam am = make_amalgam({&p1, &p2}, {{{0, "v"}, {1, "u"}}});
  CHECK(am.num_classes == 3);
  std::vector<AmalgamWord> dict;
  SmallCategory two = amalgamate(am, 2, &dict);
  CHECK(two.size() == 11);  // 3 identities + 4 letters + 4 two-letter words
  CHECK(two.validate().ok());
  const Mor ff = two.mor("0:f*1:f");
  REQUIRE(ff >= 0);
  CHECK(two.compose(two.mor("0:f"), two.mor("1:f")) == ff);

  // The same product truncates when the bound cannot hold it.
  SmallCategory one = amalgamate(am, 1);
  CHECK(one.compose(one.mor("0:f"), one.mor("1:f")) == kTrunc);

  // Multiplication across mismatched classes is refused.
  CHECK_THROWS_AS(word_mul(am, letter_word(am, 1, p2.mor("f")),
                           letter_word(am, 0, p1.mor("f"))),
                  std::invalid_argument);
  // And amalgam_cap distinguishes classes before comparing prefixes.
  CHECK_FALSE(amalgam_cap(am, identity_word(am, am.class_of[0][0]),
                          letter_word(am, 1, p2.mor("f"))));
}

TEST_CASE("identifying both objects of the two-arrow category frees it") {
  SmallCategory par = build_par();
  Amalgam am = make_amalgam({&par}, {{{0, "u"}, {0, "v"}}});
  REQUIRE(am.num_classes == 1);
  // With no possible merges the words are exactly the free words on f, g.
  CHECK(amalgamate(am, 2).size() == 7);
  CHECK(amalgamate(am, 2).size() == build_fixture("FREE2(2)").size());
  CHECK(amalgamate(am, 3).size() == 15);
}

TEST_CASE("one glued class over the double-square category") {
  SmallCategory kg = build_kg(2);
  Amalgam am = make_amalgam(
      {&kg}, {{{0, "u"}, {0, "x"}, {0, "y"}, {0, "v"}}});
  REQUIRE(am.num_classes == 1);
  std::vector<AmalgamWord> dict;
  SmallCategory cat = amalgamate(am, 2, &dict);
  // 1 identity + 8 letters + (8*8 - 4 mergeable pairs) two-letter words.
  CHECK(cat.size() == 69);
  CHECK(cat.validate().ok());

  // Merges happen exactly where the component composes.
  CHECK(cat.compose(cat.mor("0:alpha"), cat.mor("0:gamma1")) == cat.mor("0:eps1"));
  CHECK(cat.compose(cat.mor("0:beta"), cat.mor("0:delta2")) == cat.mor("0:eps2"));
  const Mor ad = cat.mor("0:alpha*0:delta1");
  REQUIRE(ad >= 0);
  CHECK(cat.compose(cat.mor("0:alpha"), cat.mor("0:delta1")) == ad);
  CHECK(cat.compose(ad, cat.mor("0:gamma1")) == kTrunc);

  // The dictionary inverts the labels and stores only normal forms.
  REQUIRE(dict.size() == static_cast<std::size_t>(cat.size()));
  for (Mor m = 0; m < cat.size(); ++m) {
    CHECK(word_valid(am, dict[static_cast<std::size_t>(m)]));
    CHECK(word_label(am, dict[static_cast<std::size_t>(m)]) ==
          cat.names[static_cast<std::size_t>(m)]);
    CHECK(normal_form(am, dict[static_cast<std::size_t>(m)]) ==
          dict[static_cast<std::size_t>(m)]);
  }

  // Carrier composition agrees with word multiplication everywhere, with
  // truncation exactly past the bound.
  for (Mor a = 0; a < cat.size(); ++a)
    for (Mor b = 0; b < cat.size(); ++b) {
      const AmalgamWord prod =
          word_mul(am, dict[static_cast<std::size_t>(a)], dict[static_cast<std::size_t>(b)]);
      const Mor c = cat.compose(a, b);
      if (prod.entries.size() <= 2) {
        CHECK(c == cat.mor(word_label(am, prod)));
      } else {
        CHECK(c == kTrunc);
      }
    }
}

TEST_CASE("normal forms are reached in any move order") {
  SmallCategory kg = build_kg(2);
  Amalgam am = make_amalgam(
      {&kg}, {{{0, "u"}, {0, "x"}, {0, "y"}, {0, "v"}}});

  // Identities drop and composable neighbours merge.
  AmalgamWord messy = raw_word(0, {{0, kg.identity[kg.obj("u")]},
                                   {0, kg.mor("alpha")},
                                   {0, kg.identity[kg.obj("x")]},
                                   {0, kg.mor("gamma1")},
                                   {0, kg.identity[kg.obj("v")]}});
  AmalgamWord nf = normal_form(am, messy);
  CHECK(nf == letter_word(am, 0, kg.mor("eps1")));
  CHECK(normal_form(am, nf) == nf);

  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> pick_mor(0, kg.size() - 1);
  std::uniform_int_distribution<int> pick_len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, Mor>> entries;
    const int len = pick_len(rng);
    for (int i = 0; i < len; ++i) entries.emplace_back(0, pick_mor(rng));
    AmalgamWord w = raw_word(0, std::move(entries));
    REQUIRE(word_valid(am, w));
    AmalgamWord det = normal_form(am, w);
    for (int rep = 0; rep < 3; ++rep) CHECK(normal_form_random(am, w, rng) == det);
  }

  // Multiplication is associative on already-normal words.
  std::vector<AmalgamWord> dict;
  amalgamate(am, 2, &dict);
  std::uniform_int_distribution<std::size_t> pick_word(0, dict.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const AmalgamWord& a = dict[pick_word(rng)];
    const AmalgamWord& b = dict[pick_word(rng)];
    const AmalgamWord& c = dict[pick_word(rng)];
    CHECK(word_mul(am, word_mul(am, a, b), c) == word_mul(am, a, word_mul(am, b, c)));
  }

  AmalgamWord invalid = raw_word(0, {{0, Mor{99}}});
  CHECK_THROWS_AS(normal_form(am, invalid), std::invalid_argument);
  std::mt19937_64 rng2(7);
  CHECK_THROWS_AS(normal_form_random(am, invalid, rng2), std::invalid_argument);
  CHECK_FALSE(word_valid(am, raw_word(3, {})));
}

TEST_CASE("word cones meet exactly by prefix comparison") {
  SmallCategory kg = build_kg(2);
  Amalgam am = make_amalgam(
      {&kg}, {{{0, "u"}, {0, "x"}, {0, "y"}, {0, "v"}}});
  const AmalgamWord wa = letter_word(am, 0, kg.mor("alpha"));
  const AmalgamWord wb = letter_word(am, 0, kg.mor("beta"));
  const AmalgamWord we = letter_word(am, 0, kg.mor("eps1"));
  const AmalgamWord wg = letter_word(am, 0, kg.mor("gamma1"));
  const AmalgamWord wd = letter_word(am, 0, kg.mor("delta1"));

  // Equal length: decided by the component's own intersection test.
  CHECK(amalgam_cap(am, wa, wb));        // joined by the eps arrows
  CHECK(amalgam_cap(am, wa, we));        // eps1 extends alpha
  CHECK_FALSE(amalgam_cap(am, wg, wd));  // different targets inside the component
  CHECK_FALSE(amalgam_cap(am, wa, wg));

  // Identity words meet everything in their class.
  CHECK(amalgam_cap(am, identity_word(am, 0), wa));
  CHECK(amalgam_cap(am, wa, identity_word(am, 0)));

  // Longer words: the shorter must divide letterwise.
  AmalgamWord ad = raw_word(0, {{0, kg.mor("alpha")}, {0, kg.mor("delta1")}});
  REQUIRE(normal_form(am, ad) == ad);
  CHECK(amalgam_cap(am, wa, ad));        // alpha is a prefix
  CHECK_FALSE(amalgam_cap(am, wb, ad));  // beta is not
  CHECK_FALSE(amalgam_cap(am, we, ad));  // eps1 does not divide alpha

  // Inputs are normalized first: alpha*gamma1 collapses to eps1.
  AmalgamWord ag = raw_word(0, {{0, kg.mor("alpha")}, {0, kg.mor("gamma1")}});
  CHECK(amalgam_cap(am, wa, ag));
  CHECK(amalgam_cap(am, we, ag));
  CHECK_FALSE(amalgam_cap(am, wg, ag));
}
