#include "lcsc/amalgam.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace lcsc {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Amalgam make_amalgam(const std::vector<const SmallCategory*>& components,
                     const std::vector<std::vector<std::pair<int, std::string>>>& blocks) {
  if (components.empty()) throw std::invalid_argument("make_amalgam: no components");
  for (const SmallCategory* c : components)
    if (!c || c->mode != CarrierMode::kTotal)
      throw std::invalid_argument("make_amalgam: components must be total categories");
  Amalgam am;
  am.comps = components;
  std::vector<int> offset(components.size() + 1, 0);
  for (std::size_t i = 0; i < components.size(); ++i)
    offset[i + 1] = offset[i] + components[i]->num_objects();
  std::vector<int> parent(static_cast<std::size_t>(offset.back()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  for (const auto& block : blocks) {
    int first = -1;
    for (const auto& [ci, oname] : block) {
      if (ci < 0 || ci >= static_cast<int>(components.size()))
        throw std::invalid_argument("make_amalgam: component index out of range");
      const Obj o = components[static_cast<std::size_t>(ci)]->obj(oname);
      if (o < 0)
        throw std::invalid_argument("make_amalgam: unknown object '" + oname + "' in component " +
                                    std::to_string(ci));
      const int id = offset[static_cast<std::size_t>(ci)] + o;
      if (first < 0)
        first = id;
      else
        parent[static_cast<std::size_t>(find_root(parent, id))] = find_root(parent, first);
    }
  }
  std::vector<int> class_id(parent.size(), -1);
  am.num_classes = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    am.class_of.emplace_back(static_cast<std::size_t>(components[i]->num_objects()), -1);
    for (Obj o = 0; o < components[i]->num_objects(); ++o) {
      const int root = find_root(parent, offset[i] + o);
      if (class_id[static_cast<std::size_t>(root)] < 0) {
        class_id[static_cast<std::size_t>(root)] = am.num_classes++;
        am.class_rep.emplace_back(static_cast<int>(i), o);
      }
      am.class_of[i][static_cast<std::size_t>(o)] = class_id[static_cast<std::size_t>(root)];
    }
  }
  return am;
}

AmalgamWord identity_word(const Amalgam& am, int cls) {
  if (cls < 0 || cls >= am.num_classes) throw std::invalid_argument("identity_word: bad class");
  AmalgamWord w;
  w.src_class = cls;
  w.dst_class = cls;
  return w;
}

AmalgamWord letter_word(const Amalgam& am, int comp, Mor m) {
  if (comp < 0 || comp >= static_cast<int>(am.comps.size()))
    throw std::invalid_argument("letter_word: bad component");
  const SmallCategory& c = *am.comps[static_cast<std::size_t>(comp)];
  if (m < 0 || m >= c.size()) throw std::invalid_argument("letter_word: bad morphism");
  AmalgamWord w;
  w.src_class = am.class_of[static_cast<std::size_t>(comp)][static_cast<std::size_t>(c.src[m])];
  w.dst_class = am.class_of[static_cast<std::size_t>(comp)][static_cast<std::size_t>(c.dst[m])];
  w.entries.emplace_back(comp, m);
  return w;
}

bool word_valid(const Amalgam& am, const AmalgamWord& w) {
  if (w.src_class < 0 || w.src_class >= am.num_classes || w.dst_class < 0 ||
      w.dst_class >= am.num_classes)
    return false;
  if (w.entries.empty()) return w.src_class == w.dst_class;
  for (std::size_t j = 0; j < w.entries.size(); ++j) {
    const auto& [ci, m] = w.entries[j];
    if (ci < 0 || ci >= static_cast<int>(am.comps.size())) return false;
    const SmallCategory& c = *am.comps[static_cast<std::size_t>(ci)];
    if (m < 0 || m >= c.size()) return false;
    if (j + 1 < w.entries.size()) {
      const auto& [cj, mj] = w.entries[j + 1];
      const SmallCategory& cn = *am.comps[static_cast<std::size_t>(cj)];
      if (am.class_of[static_cast<std::size_t>(ci)][static_cast<std::size_t>(c.src[m])] !=
          am.class_of[static_cast<std::size_t>(cj)][static_cast<std::size_t>(cn.dst[mj])])
        return false;
    }
  }
  const auto& [c0, m0] = w.entries.front();
  const auto& [cl, ml] = w.entries.back();
  const SmallCategory& cc0 = *am.comps[static_cast<std::size_t>(c0)];
  const SmallCategory& ccl = *am.comps[static_cast<std::size_t>(cl)];
  return w.dst_class ==
             am.class_of[static_cast<std::size_t>(c0)][static_cast<std::size_t>(cc0.dst[m0])] &&
         w.src_class ==
             am.class_of[static_cast<std::size_t>(cl)][static_cast<std::size_t>(ccl.src[ml])];
}

namespace {

// Applicable moves: (pos, kDrop) for an identity letter, (pos, kMerge) for a
// same-component adjacent pair with matching actual endpoints.
enum class MoveKind { kDrop, kMerge };

std::vector<std::pair<std::size_t, MoveKind>> moves_of(const Amalgam& am, const AmalgamWord& w) {
  std::vector<std::pair<std::size_t, MoveKind>> out;
  for (std::size_t j = 0; j < w.entries.size(); ++j) {
    const auto& [ci, m] = w.entries[j];
    if (am.comps[static_cast<std::size_t>(ci)]->is_identity(m)) out.emplace_back(j, MoveKind::kDrop);
    if (j + 1 < w.entries.size() && w.entries[j + 1].first == ci) {
      const SmallCategory& c = *am.comps[static_cast<std::size_t>(ci)];
      if (c.src[m] == c.dst[w.entries[j + 1].second]) out.emplace_back(j, MoveKind::kMerge);
    }
  }
  return out;
}

AmalgamWord apply_move(const Amalgam& am, AmalgamWord w, std::pair<std::size_t, MoveKind> mv) {
  const auto [j, kind] = mv;
  if (kind == MoveKind::kDrop) {
    w.entries.erase(w.entries.begin() + static_cast<std::ptrdiff_t>(j));
    return w;
  }
  const int ci = w.entries[j].first;
  const SmallCategory& c = *am.comps[static_cast<std::size_t>(ci)];
  const Mor prod = c.compose(w.entries[j].second, w.entries[j + 1].second);
  if (prod < 0) throw std::logic_error("normal_form: total component missing a product");
  w.entries[j].second = prod;
  w.entries.erase(w.entries.begin() + static_cast<std::ptrdiff_t>(j + 1));
  return w;
}

}  // namespace

AmalgamWord normal_form(const Amalgam& am, const AmalgamWord& w) {
  if (!word_valid(am, w)) throw std::invalid_argument("normal_form: invalid word");
  AmalgamWord cur = w;
  while (true) {
    const auto moves = moves_of(am, cur);
    if (moves.empty()) return cur;
    cur = apply_move(am, cur, moves.front());
  }
}

AmalgamWord normal_form_random(const Amalgam& am, const AmalgamWord& w, std::mt19937_64& rng) {
  if (!word_valid(am, w)) throw std::invalid_argument("normal_form_random: invalid word");
  AmalgamWord cur = w;
  while (true) {
    const auto moves = moves_of(am, cur);
    if (moves.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    cur = apply_move(am, cur, moves[pick(rng)]);
  }
}

AmalgamWord word_mul(const Amalgam& am, const AmalgamWord& w1, const AmalgamWord& w2) {
  if (w1.src_class != w2.dst_class)
    throw std::invalid_argument("word_mul: classes do not match");
  AmalgamWord cat;
  cat.src_class = w2.src_class;
  cat.dst_class = w1.dst_class;
  cat.entries = w1.entries;
  cat.entries.insert(cat.entries.end(), w2.entries.begin(), w2.entries.end());
  return normal_form(am, cat);
}

bool amalgam_cap(const Amalgam& am, const AmalgamWord& a_in, const AmalgamWord& b_in) {
  AmalgamWord a = normal_form(am, a_in);
  AmalgamWord b = normal_form(am, b_in);
  if (a.dst_class != b.dst_class) return false;
  if (a.entries.size() > b.entries.size()) std::swap(a, b);
  if (a.entries.empty()) return true;  // identity at the shared class
  const std::size_t m = a.entries.size();
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (a.entries[j] != b.entries[j]) return false;
  const auto& [ca, ma] = a.entries[m - 1];
  const auto& [cb, mb] = b.entries[m - 1];
  if (ca != cb) return false;
  const SmallCategory& c = *am.comps[static_cast<std::size_t>(ca)];
  if (m < b.entries.size()) return c.cone(ma).test(static_cast<std::size_t>(mb));
  return c.cap(ma, mb);
}

std::string word_label(const Amalgam& am, const AmalgamWord& w) {
  if (w.entries.empty()) {
    const auto& [ci, o] = am.class_rep[static_cast<std::size_t>(w.src_class)];
    return std::to_string(ci) + ":" +
           am.comps[static_cast<std::size_t>(ci)]->object_names[static_cast<std::size_t>(o)];
  }
  std::string s;
  for (std::size_t j = 0; j < w.entries.size(); ++j) {
    if (j) s += "*";
    s += std::to_string(w.entries[j].first) + ":" +
         am.comps[static_cast<std::size_t>(w.entries[j].first)]
             ->names[static_cast<std::size_t>(w.entries[j].second)];
  }
  return s;
}

SmallCategory amalgamate(const Amalgam& am, int bound, std::vector<AmalgamWord>* dictionary) {
  if (bound < 0) throw std::invalid_argument("amalgamate: bound must be nonnegative");
  std::map<AmalgamWord, int> seen;
  std::vector<AmalgamWord> words;
  std::deque<AmalgamWord> queue;
  auto push = [&](const AmalgamWord& w) {
    if (seen.count(w)) return;
    seen[w] = static_cast<int>(words.size());
    words.push_back(w);
    queue.push_back(w);
  };
  for (int c = 0; c < am.num_classes; ++c) push(identity_word(am, c));
  while (!queue.empty()) {
    const AmalgamWord w = queue.front();
    queue.pop_front();
    for (std::size_t ci = 0; ci < am.comps.size(); ++ci) {
      const SmallCategory& c = *am.comps[ci];
      for (Mor m = 0; m < c.size(); ++m) {
        if (c.is_identity(m)) continue;
        if (am.class_of[ci][static_cast<std::size_t>(c.dst[m])] != w.src_class) continue;
        const AmalgamWord ext = word_mul(am, w, letter_word(am, static_cast<int>(ci), m));
        if (ext.entries.size() <= static_cast<std::size_t>(bound)) push(ext);
      }
    }
  }

  SmallCategory::Builder b;
  b.mode = CarrierMode::kBounded;
  b.bound = bound;
  for (int c = 0; c < am.num_classes; ++c) b.add_object(word_label(am, identity_word(am, c)));
  auto class_label = [&](int c) { return word_label(am, identity_word(am, c)); };
  for (const AmalgamWord& w : words)
    if (!w.entries.empty())
      b.add_morphism(word_label(am, w), class_label(w.src_class), class_label(w.dst_class));
  for (const AmalgamWord& w1 : words)
    for (const AmalgamWord& w2 : words) {
      if (w1.src_class != w2.dst_class) continue;
      const AmalgamWord prod = word_mul(am, w1, w2);
      auto it = seen.find(prod);
      if (it != seen.end())
        b.add_composition(word_label(am, w1), word_label(am, w2), word_label(am, prod));
    }
  SmallCategory cat = b.build();
  if (dictionary) {
    dictionary->assign(static_cast<std::size_t>(cat.size()), AmalgamWord{});
    for (const AmalgamWord& w : words) {
      const Mor m = cat.mor(word_label(am, w));
      if (m < 0) throw std::logic_error("amalgamate: word label missing from carrier");
      (*dictionary)[static_cast<std::size_t>(m)] = w;
    }
  }
  return cat;
}

}  // namespace lcsc
