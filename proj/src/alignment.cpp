#include "lcsc/alignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsc {

MorSet common_extensions(const SmallCategory& cat, const std::vector<Mor>& F) {
  if (F.empty()) throw std::invalid_argument("common_extensions: empty family");
  const Obj r = cat.dst[F.front()];
  MorSet out = cat.obj_cone(r);
  for (Mor a : F) {
    if (a < 0 || a >= cat.size()) throw std::invalid_argument("common_extensions: bad morphism");
    if (cat.dst[a] != r) throw std::invalid_argument("common_extensions: mixed range objects");
    out &= cat.cone(a);
  }
  return out;
}

ExtensionReport minimal_common_extensions(const SmallCategory& cat, const std::vector<Mor>& F) {
  ExtensionReport rep;
  rep.input = F;
  rep.common = common_extensions(cat, F);
  // e is minimal when every common extension whose cone contains e has the
  // same cone as e.
  std::vector<Mor> minimal;
  for (std::size_t e = rep.common.find_first(); e != MorSet::npos; e = rep.common.find_next(e)) {
    bool is_min = true;
    for (std::size_t g = rep.common.find_first(); g != MorSet::npos && is_min;
         g = rep.common.find_next(g))
      if (cat.cone(static_cast<Mor>(g)).test(e) &&
          !cat.approx(static_cast<Mor>(g), static_cast<Mor>(e)))
        is_min = false;
    if (is_min) minimal.push_back(static_cast<Mor>(e));
  }
  // One representative per equal-cone class: the lexicographically least name.
  std::vector<bool> used(minimal.size(), false);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (used[i]) continue;
    Mor best = minimal[i];
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (used[j] || !cat.approx(minimal[i], minimal[j])) continue;
      used[j] = true;
      if (cat.names[static_cast<std::size_t>(minimal[j])] <
          cat.names[static_cast<std::size_t>(best)])
        best = minimal[j];
    }
    rep.minimal.push_back(best);
  }
  std::sort(rep.minimal.begin(), rep.minimal.end());
  return rep;
}

int join_size(const SmallCategory& cat, Mor a, Mor b) {
  return static_cast<int>(minimal_common_extensions(cat, {a, b}).minimal.size());
}

AlignReport is_finitely_aligned(const SmallCategory& cat) {
  if (cat.mode != CarrierMode::kTotal)
    throw std::domain_error("is_finitely_aligned: requires a total carrier");
  AlignReport rep;
  for (Mor a = 0; a < cat.size(); ++a)
    for (Mor b = a + 1; b < cat.size(); ++b) {
      if (cat.dst[a] != cat.dst[b]) continue;
      const int s = join_size(cat, a, b);
      rep.pairs.push_back({a, b, s});
      rep.max_join = std::max(rep.max_join, s);
    }
  rep.finitely_aligned = true;  // exhaustively enumerated above, all joins finite
  return rep;
}

bool covers_set(const SmallCategory& cat, const DZeroFamily& d0, const std::vector<int>& family,
                int e, std::string* why) {
  (void)cat;
  if (e < 0 || e >= d0.size()) throw std::invalid_argument("covers_set: bad set index");
  const MorSet& E = d0.sets[static_cast<std::size_t>(e)];
  MorSet u(E.size());
  for (int f : family) {
    if (f < 0 || f >= d0.size()) throw std::invalid_argument("covers_set: bad family index");
    const MorSet& F = d0.sets[static_cast<std::size_t>(f)];
    if (!(F - E).none()) {
      if (why) *why = "family member escapes the target set";
      return false;
    }
    u |= F;
  }
  const MorSet rest = E - u;
  for (const MorSet& G : d0.sets)
    if ((G - rest).none()) {
      if (why) *why = "a D0 set survives in the difference";
      return false;
    }
  if (why) why->clear();
  return true;
}

bool covers_filter(const DZeroFamily& d0, const std::vector<int>& family, const MorSet& min_set) {
  MorSet u(min_set.size());
  for (int f : family) {
    if (f < 0 || f >= d0.size()) throw std::invalid_argument("covers_filter: bad family index");
    u |= d0.sets[static_cast<std::size_t>(f)];
  }
  return (min_set - u).none();
}

bool is_exhaustive(const SmallCategory& cat, Obj v, const std::vector<Mor>& F) {
  const MorSet& cone = cat.obj_cone(v);
  for (Mor a : F) {
    if (a < 0 || a >= cat.size() || !cone.test(static_cast<std::size_t>(a)))
      throw std::invalid_argument("is_exhaustive: family not inside vLambda");
  }
  for (std::size_t b = cone.find_first(); b != MorSet::npos; b = cone.find_next(b)) {
    bool met = false;
    for (Mor a : F)
      if (cat.cap(a, static_cast<Mor>(b))) { met = true; break; }
    if (!met) return false;
  }
  return true;
}

}  // namespace lcsc
