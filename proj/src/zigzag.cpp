#include "lcsc/zigzag.hpp"

#include <deque>
#include <stdexcept>

namespace lcsc {

bool zigzag_valid(const SmallCategory& cat, const Zigzag& z) {
  if (z.pairs.empty()) return false;
  const int n = cat.size();
  for (std::size_t i = 0; i < z.pairs.size(); ++i) {
    const Mor a = z.pairs[i].first;
    const Mor b = z.pairs[i].second;
    if (a < 0 || a >= n || b < 0 || b >= n) return false;
    if (cat.dst[a] != cat.dst[b]) return false;
    if (i + 1 < z.pairs.size() && cat.src[z.pairs[i + 1].first] != cat.src[b]) return false;
  }
  return true;
}

Obj zigzag_src(const SmallCategory& cat, const Zigzag& z) {
  if (z.pairs.empty()) throw std::invalid_argument("zigzag_src: empty zigzag");
  return cat.src[z.pairs.back().second];
}

Obj zigzag_dst(const SmallCategory& cat, const Zigzag& z) {
  if (z.pairs.empty()) throw std::invalid_argument("zigzag_dst: empty zigzag");
  return cat.src[z.pairs.front().first];
}

Zigzag zigzag_concat(const SmallCategory& cat, const Zigzag& z1, const Zigzag& z2) {
  if (!zigzag_valid(cat, z1) || !zigzag_valid(cat, z2))
    throw std::invalid_argument("zigzag_concat: invalid zigzag");
  if (zigzag_src(cat, z1) != zigzag_dst(cat, z2))
    throw std::invalid_argument("zigzag_concat: src(z1) != dst(z2)");
  Zigzag out = z1;
  out.pairs.insert(out.pairs.end(), z2.pairs.begin(), z2.pairs.end());
  return out;
}

Zigzag zigzag_reverse(const Zigzag& z) {
  Zigzag out;
  out.pairs.reserve(z.pairs.size());
  for (auto it = z.pairs.rbegin(); it != z.pairs.rend(); ++it)
    out.pairs.emplace_back(it->second, it->first);
  return out;
}

Zigzag zigzag_tau(const SmallCategory& cat, Mor a) {
  if (a < 0 || a >= cat.size()) throw std::invalid_argument("zigzag_tau: bad morphism");
  Zigzag z;
  z.pairs.emplace_back(cat.identity[cat.dst[a]], a);
  return z;
}

Zigzag zigzag_sigma(const SmallCategory& cat, Mor a) {
  if (a < 0 || a >= cat.size()) throw std::invalid_argument("zigzag_sigma: bad morphism");
  Zigzag z;
  z.pairs.emplace_back(a, cat.identity[cat.dst[a]]);
  return z;
}

Zigzag zigzag_unit(const SmallCategory& cat, Obj v) {
  if (v < 0 || v >= cat.num_objects()) throw std::invalid_argument("zigzag_unit: bad object");
  Zigzag z;
  z.pairs.emplace_back(cat.identity[v], cat.identity[v]);
  return z;
}

MorSet PartialInjection::domain() const {
  MorSet d(img.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    if (img[x] >= 0) d.set(x);
  return d;
}

MorSet PartialInjection::range() const {
  MorSet r(img.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    if (img[x] >= 0) r.set(static_cast<std::size_t>(img[x]));
  return r;
}

int PartialInjection::dom_size() const {
  int c = 0;
  for (Mor y : img) c += (y >= 0);
  return c;
}

void PartialInjection::normalize_zero() {
  bool any = trunc.any();
  if (!any)
    for (Mor y : img)
      if (y >= 0) { any = true; break; }
  if (!any) {
    dom_obj = -1;
    ran_obj = -1;
    for (auto& y : img) y = kUndef;
  }
}

PartialInjection zigzag_map(const SmallCategory& cat, const Zigzag& z) {
  if (!zigzag_valid(cat, z)) throw std::invalid_argument("zigzag_map: invalid zigzag");
  const int n = cat.size();
  PartialInjection f;
  f.dom_obj = zigzag_src(cat, z);
  f.ran_obj = zigzag_dst(cat, z);
  f.img.assign(static_cast<std::size_t>(n), kUndef);
  f.trunc.resize(static_cast<std::size_t>(n));
  const MorSet& dom0 = cat.obj_cone(f.dom_obj);
  for (std::size_t x = dom0.find_first(); x != MorSet::npos; x = dom0.find_next(x)) {
    Mor y = static_cast<Mor>(x);
    bool truncated = false, undefined = false;
    for (auto it = z.pairs.rbegin(); it != z.pairs.rend(); ++it) {
      Mor up = cat.compose(it->second, y);
      if (up == kTrunc) { truncated = true; break; }
      if (up == kUndef) throw std::logic_error("zigzag_map: broken composition table");
      Mor dn = cat.divide_left(it->first, up);
      if (dn == kUndef) { undefined = true; break; }
      y = dn;
    }
    if (truncated)
      f.trunc.set(x);
    else if (!undefined)
      f.img[x] = y;
  }
  f.normalize_zero();
  return f;
}

MorSet zigzag_set(const SmallCategory& cat, const Zigzag& z) {
  return zigzag_map(cat, z).domain();
}

PartialInjection pinj_compose(const PartialInjection& f, const PartialInjection& g) {
  PartialInjection out;
  const std::size_t n = f.img.empty() ? g.img.size() : f.img.size();
  out.img.assign(n, kUndef);
  out.trunc.resize(n);
  if (f.is_zero() || g.is_zero() || g.ran_obj != f.dom_obj) {
    out.normalize_zero();
    return out;
  }
  out.dom_obj = g.dom_obj;
  out.ran_obj = f.ran_obj;
  for (std::size_t x = 0; x < n; ++x) {
    if (g.trunc.test(x)) { out.trunc.set(x); continue; }
    Mor mid = g.img[x];
    if (mid < 0) continue;
    if (f.trunc.test(static_cast<std::size_t>(mid))) { out.trunc.set(x); continue; }
    out.img[x] = f.img[mid];
  }
  out.normalize_zero();
  return out;
}

PartialInjection pinj_inverse(const PartialInjection& f) {
  PartialInjection out;
  out.img.assign(f.img.size(), kUndef);
  out.trunc.resize(f.img.size());
  if (f.is_zero()) return out;
  if (f.trunc.any())
    throw std::invalid_argument("pinj_inverse: truncated map is not invertible");
  out.dom_obj = f.ran_obj;
  out.ran_obj = f.dom_obj;
  for (std::size_t x = 0; x < f.img.size(); ++x)
    if (f.img[x] >= 0) out.img[static_cast<std::size_t>(f.img[x])] = static_cast<Mor>(x);
  out.normalize_zero();
  return out;
}

bool pinj_is_identity(const PartialInjection& f) {
  if (f.is_zero() || f.dom_obj != f.ran_obj) return false;
  for (std::size_t x = 0; x < f.img.size(); ++x)
    if (f.img[x] >= 0 && f.img[x] != static_cast<Mor>(x)) return false;
  return true;
}

std::size_t ZigzagSemigroup::hash(const PartialInjection& m) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(m.dom_obj + 1));
  mix(static_cast<std::size_t>(m.ran_obj + 1));
  for (Mor y : m.img) mix(static_cast<std::size_t>(y + 2));
  return h;
}

int ZigzagSemigroup::find(const PartialInjection& m) const {
  auto it = index_.find(hash(m));
  if (it == index_.end()) return -1;
  for (int i : it->second)
    if (elems[static_cast<std::size_t>(i)] == m) return i;
  return -1;
}

void ZigzagSemigroup::index_insert(const PartialInjection& m, int idx) {
  index_[hash(m)].push_back(idx);
}

int ZigzagSemigroup::compose(int i, int j) const {
  const PartialInjection p =
      pinj_compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
  int k = find(p);
  if (k < 0) throw std::logic_error("ZigzagSemigroup::compose: product escaped closure");
  return k;
}

ZigzagSemigroup generate_semigroup(const SmallCategory& cat, std::size_t cap) {
  if (cat.mode != CarrierMode::kTotal)
    throw std::domain_error("generate_semigroup: requires a total carrier");
  ZigzagSemigroup sg;
  const int n = cat.size();

  PartialInjection zero;
  zero.img.assign(static_cast<std::size_t>(n), kUndef);
  zero.trunc.resize(static_cast<std::size_t>(n));
  sg.elems.push_back(zero);
  sg.witness.emplace_back();
  sg.index_insert(zero, 0);

  auto add = [&sg, cap](const PartialInjection& m, const Zigzag& w) -> int {
    int k = sg.find(m);
    if (k >= 0) return k;
    if (sg.elems.size() >= cap)
      throw std::runtime_error("generate_semigroup: element cap exceeded");
    k = sg.size();
    sg.elems.push_back(m);
    sg.witness.push_back(w);
    sg.index_insert(m, k);
    return k;
  };

  sg.unit_of.assign(static_cast<std::size_t>(cat.num_objects()), -1);
  for (Obj v = 0; v < cat.num_objects(); ++v) {
    Zigzag z = zigzag_unit(cat, v);
    sg.unit_of[static_cast<std::size_t>(v)] = add(zigzag_map(cat, z), z);
  }
  sg.tau_of.assign(static_cast<std::size_t>(n), -1);
  sg.sigma_of.assign(static_cast<std::size_t>(n), -1);
  for (Mor a = 0; a < n; ++a) {
    Zigzag t = zigzag_tau(cat, a);
    sg.tau_of[static_cast<std::size_t>(a)] = add(zigzag_map(cat, t), t);
    Zigzag s = zigzag_sigma(cat, a);
    sg.sigma_of[static_cast<std::size_t>(a)] = add(zigzag_map(cat, s), s);
  }

  // Closure under composition, iterated to a fixed point. Products with the
  // zero element are zero, so index 0 never needs expanding.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = sg.elems.size();
    for (std::size_t i = 1; i < sz; ++i)
      for (std::size_t j = 1; j < sz; ++j) {
        const PartialInjection p = pinj_compose(sg.elems[i], sg.elems[j]);
        if (sg.find(p) >= 0) continue;
        add(p, p.is_zero() ? Zigzag{} : zigzag_concat(cat, sg.witness[i], sg.witness[j]));
        grew = true;
      }
  }

  sg.rev.assign(sg.elems.size(), -1);
  sg.rev[0] = 0;
  for (std::size_t i = 1; i < sg.elems.size(); ++i) {
    int k = sg.find(pinj_inverse(sg.elems[i]));
    if (k < 0) throw std::logic_error("generate_semigroup: closure is missing an inverse");
    sg.rev[i] = k;
  }
  return sg;
}

}  // namespace lcsc
