#pragma once

// Amalgams of disjoint categories over an identification of their objects:
// words in component morphisms, normal forms, the intersection test for
// cones of words, and a bounded category of normal-form words.

#include "lcsc/category.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lcsc {

struct Amalgam {
  std::vector<const SmallCategory*> comps;
  std::vector<std::vector<int>> class_of;  // per component: object -> class id
  int num_classes = 0;
  std::vector<std::pair<int, Obj>> class_rep;  // smallest (component, object) member
};

// Blocks list (component, object-name) pairs to be identified; objects not
// mentioned become singleton classes. A block may identify objects within
// one component. Components must be total categories.
Amalgam make_amalgam(const std::vector<const SmallCategory*>& components,
                     const std::vector<std::vector<std::pair<int, std::string>>>& blocks);

// Letters compose left-to-right like category composition: entry 0 is the
// outermost factor, and the link condition is class(src of entry j) ==
// class(dst of entry j+1).
struct AmalgamWord {
  int src_class = -1;
  int dst_class = -1;
  std::vector<std::pair<int, Mor>> entries;  // (component, morphism)
  bool operator==(const AmalgamWord& o) const {
    return src_class == o.src_class && dst_class == o.dst_class && entries == o.entries;
  }
  bool operator<(const AmalgamWord& o) const {
    return std::tie(entries, src_class, dst_class) <
           std::tie(o.entries, o.src_class, o.dst_class);
  }
};

AmalgamWord identity_word(const Amalgam& am, int cls);
AmalgamWord letter_word(const Amalgam& am, int comp, Mor m);
bool word_valid(const Amalgam& am, const AmalgamWord& w);

// Drop identity letters and merge adjacent letters of one component whose
// actual endpoints match, to a fixed point. Deterministic leftmost-first
// order; the result is independent of the order moves are applied in.
// Throws std::invalid_argument on an invalid word.
AmalgamWord normal_form(const Amalgam& am, const AmalgamWord& w);
// Same reduction applying applicable moves in random order (for testing the
// order independence).
AmalgamWord normal_form_random(const Amalgam& am, const AmalgamWord& w, std::mt19937_64& rng);

// Concatenation (w1 outer, w2 inner) followed by normal_form; requires
// src_class(w1) == dst_class(w2).
AmalgamWord word_mul(const Amalgam& am, const AmalgamWord& w1, const AmalgamWord& w2);

// Do the cones of two normal-form words intersect? Decided by the prefix
// comparison: with m = |w1| <= k = |w2|, the first m-1 letters must agree,
// and the m-th letters must lie in one component where the shorter word's
// letter either divides the other (m < k) or has a common extension with it
// (m = k). Identity words reduce to a class check.
bool amalgam_cap(const Amalgam& am, const AmalgamWord& w1, const AmalgamWord& w2);

std::string word_label(const Amalgam& am, const AmalgamWord& w);

// Bounded category of all normal-form words of length <= bound: objects are
// the classes, composition is word_mul when the result stays within the
// bound, truncated otherwise. The dictionary (when given) receives the word
// of each morphism, indexed like the carrier.
SmallCategory amalgamate(const Amalgam& am, int bound,
                         std::vector<AmalgamWord>* dictionary = nullptr);

}  // namespace lcsc
