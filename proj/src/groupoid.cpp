#include "lcsc/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsc {

namespace {

// Push the atom of a point through a partial injection; requires the atom
// inside the domain. Returns the global index of the image point and checks
// that the image of the atom is exactly an atom again.
int push_atom(const SpectrumAll& spec, const PartialInjection& m, int point) {
  const GroupoidPoint& p = spec.points[static_cast<std::size_t>(point)];
  const RingData& ring = spec.rings[static_cast<std::size_t>(p.vertex)];
  const MorSet& atom = ring.atoms[static_cast<std::size_t>(p.atom)];
  if (m.is_zero() || m.dom_obj != p.vertex)
    throw std::domain_error("push_atom: point outside the domain");
  MorSet image(atom.size());
  int first = -1;
  for (std::size_t x = atom.find_first(); x != MorSet::npos; x = atom.find_next(x)) {
    const Mor y = m.img[x];
    if (y < 0) throw std::domain_error("push_atom: point outside the domain");
    image.set(static_cast<std::size_t>(y));
    if (first < 0) first = y;
  }
  const RingData& target = spec.rings[static_cast<std::size_t>(m.ran_obj)];
  const int b = target.atom_of[static_cast<std::size_t>(first)];
  if (b < 0 || target.atoms[static_cast<std::size_t>(b)] != image)
    throw std::logic_error("push_atom: image of an atom is not an atom");
  return spec.point_at(m.ran_obj, b);
}

bool atom_in_domain(const SpectrumAll& spec, const PartialInjection& m, int point) {
  const GroupoidPoint& p = spec.points[static_cast<std::size_t>(point)];
  if (m.is_zero() || m.dom_obj != p.vertex) return false;
  const RingData& ring = spec.rings[static_cast<std::size_t>(p.vertex)];
  const MorSet& atom = ring.atoms[static_cast<std::size_t>(p.atom)];
  for (std::size_t x = atom.find_first(); x != MorSet::npos; x = atom.find_next(x))
    if (m.img[x] < 0) return false;
  return true;
}

}  // namespace

int phi_point(const SmallCategory& cat, const SpectrumAll& spec, const Zigzag& z, int point) {
  return push_atom(spec, zigzag_map(cat, z), point);
}

bool germ_equal(const SmallCategory& cat, const SpectrumAll& spec, int index, const Zigzag& z1,
                const Zigzag& z2, int point) {
  if (index != 1 && index != 2) throw std::invalid_argument("germ_equal: index must be 1 or 2");
  const PartialInjection m1 = zigzag_map(cat, z1);
  const PartialInjection m2 = zigzag_map(cat, z2);
  if (!atom_in_domain(spec, m1, point) || !atom_in_domain(spec, m2, point))
    throw std::domain_error("germ_equal: point outside a domain");
  if (index == 1) return push_atom(spec, m1, point) == push_atom(spec, m2, point);
  const GroupoidPoint& p = spec.points[static_cast<std::size_t>(point)];
  const RingData& ring = spec.rings[static_cast<std::size_t>(p.vertex)];
  const MorSet& atom = ring.atoms[static_cast<std::size_t>(p.atom)];
  for (std::size_t x = atom.find_first(); x != MorSet::npos; x = atom.find_next(x))
    if (m1.img[x] != m2.img[x]) return false;
  return true;
}

std::vector<int> FiniteGroupoid::germ_key(int elem, int src) const {
  std::vector<int> key;
  if (src < 0 || src >= static_cast<int>(spec->points.size()) ||
      !active_point[static_cast<std::size_t>(src)])
    return key;
  const PartialInjection& m = sg->elems[static_cast<std::size_t>(elem)];
  if (!atom_in_domain(*spec, m, src)) return key;
  key.push_back(src);
  if (index == 1) {
    key.push_back(push_atom(*spec, m, src));
    return key;
  }
  const GroupoidPoint& p = spec->points[static_cast<std::size_t>(src)];
  const RingData& ring = spec->rings[static_cast<std::size_t>(p.vertex)];
  const MorSet& atom = ring.atoms[static_cast<std::size_t>(p.atom)];
  for (std::size_t x = atom.find_first(); x != MorSet::npos; x = atom.find_next(x)) {
    key.push_back(static_cast<int>(x));
    key.push_back(m.img[x]);
  }
  return key;
}

void FiniteGroupoid::insert_germ(const Germ& g, const std::vector<int>& key) {
  germ_index_.emplace(key, static_cast<int>(germs.size()));
  germs.push_back(g);
}

int FiniteGroupoid::find_germ(int elem, int src) const {
  const std::vector<int> key = germ_key(elem, src);
  if (key.empty()) return -1;
  auto it = germ_index_.find(key);
  return it == germ_index_.end() ? -1 : it->second;
}

int FiniteGroupoid::compose(int g2, int g1) const {
  const Germ& a = germs[static_cast<std::size_t>(g2)];
  const Germ& b = germs[static_cast<std::size_t>(g1)];
  if (b.dst != a.src) return -1;
  const int prod = sg->compose(a.elem, b.elem);
  const int g = find_germ(prod, b.src);
  if (g < 0) throw std::logic_error("FiniteGroupoid::compose: product germ missing");
  return g;
}

namespace {

FiniteGroupoid build_on_points(const SmallCategory& cat, const ZigzagSemigroup& sg,
                               const SpectrumAll& spec, int index,
                               const std::vector<bool>& active,
                               const std::vector<int>& elem_pool) {
  FiniteGroupoid g;
  g.index = index;
  g.cat = &cat;
  g.sg = &sg;
  g.spec = &spec;
  g.active_point = active;
  for (int e : elem_pool) {
    if (e == 0) continue;  // the zero map has no germs
    for (int p = 0; p < static_cast<int>(spec.points.size()); ++p) {
      if (!active[static_cast<std::size_t>(p)]) continue;
      std::vector<int> key = g.germ_key(e, p);
      if (key.empty() || g.find_germ(e, p) >= 0) continue;
      const int dst = push_atom(spec, sg.elems[static_cast<std::size_t>(e)], p);
      if (!active[static_cast<std::size_t>(dst)]) continue;
      g.insert_germ(Germ{p, dst, e}, key);
    }
  }
  g.unit_germ.assign(spec.points.size(), -1);
  for (int p = 0; p < static_cast<int>(spec.points.size()); ++p) {
    if (!active[static_cast<std::size_t>(p)]) continue;
    const Obj v = spec.points[static_cast<std::size_t>(p)].vertex;
    const int u = g.find_germ(sg.unit_of[static_cast<std::size_t>(v)], p);
    if (u < 0) throw std::logic_error("build_on_points: missing unit germ");
    g.unit_germ[static_cast<std::size_t>(p)] = u;
  }
  g.inv.assign(g.germs.size(), -1);
  for (int i = 0; i < g.size(); ++i) {
    const Germ& germ = g.germs[static_cast<std::size_t>(i)];
    const int j = g.find_germ(sg.rev[static_cast<std::size_t>(germ.elem)], germ.dst);
    if (j < 0) throw std::logic_error("build_on_points: missing inverse germ");
    g.inv[static_cast<std::size_t>(i)] = j;
  }
  return g;
}

std::vector<int> all_elems(const ZigzagSemigroup& sg) {
  std::vector<int> out(static_cast<std::size_t>(sg.size()));
  for (int i = 0; i < sg.size(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

}  // namespace

FiniteGroupoid build_groupoid(const SmallCategory& cat, const ZigzagSemigroup& sg,
                              const SpectrumAll& spec, int index) {
  if (index != 1 && index != 2)
    throw std::invalid_argument("build_groupoid: index must be 1 or 2");
  return build_on_points(cat, sg, spec, index, std::vector<bool>(spec.points.size(), true),
                         all_elems(sg));
}

HausdorffReport is_hausdorff(const FiniteGroupoid& g) {
  HausdorffReport rep;
  // Basic open sets B(elem, E) = { germ(elem, x) : atom of x inside E }. For
  // E the atom of a germ's own source, B is that germ alone, so any two
  // distinct germs are separated; the loop verifies this honestly.
  for (int a = 0; a < g.size() && rep.hausdorff; ++a)
    for (int b = a + 1; b < g.size() && rep.hausdorff; ++b) {
      const Germ& ga = g.germs[static_cast<std::size_t>(a)];
      const Germ& gb = g.germs[static_cast<std::size_t>(b)];
      bool separated = false;
      // Singleton base sets around each germ.
      std::vector<int> in_a, in_b;
      for (int p = 0; p < static_cast<int>(g.spec->points.size()); ++p) {
        if (g.spec->points[static_cast<std::size_t>(p)].atom >= 0) {
          if (p == ga.src) {
            const int x = g.find_germ(ga.elem, p);
            if (x >= 0) in_a.push_back(x);
          }
          if (p == gb.src) {
            const int x = g.find_germ(gb.elem, p);
            if (x >= 0) in_b.push_back(x);
          }
        }
      }
      separated = true;
      for (int x : in_a)
        for (int y : in_b)
          if (x == y) separated = false;
      if (!separated) {
        rep.hausdorff = false;
        rep.g = a;
        rep.h = b;
      }
    }
  return rep;
}

bool condition_two(const SmallCategory& cat, const SpectrumAll& spec) {
  for (Obj v = 0; v < cat.num_objects(); ++v) {
    const RingData& ring = spec.rings[static_cast<std::size_t>(v)];
    if (ring.atoms.size() > 16) throw std::runtime_error("condition_two: ring too large");
    const std::size_t masks = std::size_t{1} << ring.atoms.size();
    for (std::size_t mask = 1; mask < masks; ++mask) {
      MorSet e(static_cast<std::size_t>(cat.size()));
      for (std::size_t a = 0; a < ring.atoms.size(); ++a)
        if (mask & (std::size_t{1} << a)) e |= ring.atoms[a];
      for (std::size_t xa = e.find_first(); xa != MorSet::npos; xa = e.find_next(xa)) {
        const Mor alpha = static_cast<Mor>(xa);
        const Obj u = cat.src[alpha];
        const MorSet mus = cat.invertibles(u);
        for (std::size_t xm = mus.find_first(); xm != MorSet::npos; xm = mus.find_next(xm)) {
          const Mor mu = static_cast<Mor>(xm);
          if (cat.is_identity(mu)) continue;
          Mor mu_inv = kUndef;
          for (std::size_t xi = mus.find_first(); xi != MorSet::npos; xi = mus.find_next(xi))
            if (cat.compose(mu, static_cast<Mor>(xi)) == cat.identity[u] &&
                cat.compose(static_cast<Mor>(xi), mu) == cat.identity[u]) {
              mu_inv = static_cast<Mor>(xi);
              break;
            }
          if (mu_inv < 0) throw std::logic_error("condition_two: invertible without inverse");
          bool witness = false;
          const MorSet& ucone = cat.obj_cone(u);
          for (std::size_t xb = ucone.find_first(); xb != MorSet::npos && !witness;
               xb = ucone.find_next(xb)) {
            const Mor beta = static_cast<Mor>(xb);
            const Mor ab = cat.compose(alpha, beta);
            if (ab < 0 || !e.test(static_cast<std::size_t>(ab))) continue;
            const Mor mb = cat.compose(mu, beta);
            const Mor mib = cat.compose(mu_inv, beta);
            const bool mb_in = mb >= 0 && cat.cone(beta).test(static_cast<std::size_t>(mb));
            const bool mib_in = mib >= 0 && cat.cone(beta).test(static_cast<std::size_t>(mib));
            if (!mb_in || !mib_in) witness = true;
          }
          if (!witness) return false;
        }
      }
    }
  }
  return true;
}

FiniteGroupoid restrict_boundary(const FiniteGroupoid& g) {
  std::vector<bool> active(g.spec->points.size(), false);
  for (std::size_t p = 0; p < g.spec->points.size(); ++p)
    active[p] = g.active_point[p] && g.spec->boundary[p];
  // Invariance: germs leaving the boundary would be dropped silently, which
  // would break closure under composition; verify there are none.
  for (const Germ& germ : g.germs)
    if (active[static_cast<std::size_t>(germ.src)] != active[static_cast<std::size_t>(germ.dst)])
      throw std::logic_error("restrict_boundary: boundary is not invariant");
  std::vector<int> pool;
  for (const Germ& germ : g.germs)
    pool.push_back(germ.elem);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return build_on_points(*g.cat, *g.sg, *g.spec, g.index, active, pool);
}

MorSet close_subcategory(const SmallCategory& cat, const MorSet& generators) {
  MorSet s = generators;
  s.resize(static_cast<std::size_t>(cat.size()));
  for (std::size_t x = s.find_first(); x != MorSet::npos; x = s.find_next(x)) {
    s.set(static_cast<std::size_t>(cat.identity[cat.src[static_cast<Mor>(x)]]));
    s.set(static_cast<std::size_t>(cat.identity[cat.dst[static_cast<Mor>(x)]]));
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = s.find_first(); a != MorSet::npos; a = s.find_next(a))
      for (std::size_t b = s.find_first(); b != MorSet::npos; b = s.find_next(b)) {
        const Mor c = cat.compose(static_cast<Mor>(a), static_cast<Mor>(b));
        if (c >= 0 && !s.test(static_cast<std::size_t>(c))) {
          s.set(static_cast<std::size_t>(c));
          grew = true;
        }
      }
  }
  return s;
}

FiniteGroupoid restrict_subcategory(const SmallCategory& cat, const ZigzagSemigroup& sg,
                                    const SpectrumAll& spec, const MorSet& subcat, int index) {
  if (subcat.size() != static_cast<std::size_t>(cat.size()) || subcat.none())
    throw std::invalid_argument("restrict_subcategory: empty or missized subcategory");
  std::vector<bool> has_obj(static_cast<std::size_t>(cat.num_objects()), false);
  for (std::size_t a = subcat.find_first(); a != MorSet::npos; a = subcat.find_next(a)) {
    has_obj[static_cast<std::size_t>(cat.src[static_cast<Mor>(a)])] = true;
    has_obj[static_cast<std::size_t>(cat.dst[static_cast<Mor>(a)])] = true;
  }
  for (Obj v = 0; v < cat.num_objects(); ++v)
    if (has_obj[static_cast<std::size_t>(v)] &&
        !subcat.test(static_cast<std::size_t>(cat.identity[v])))
      throw std::invalid_argument("restrict_subcategory: missing identity at an object");
  for (std::size_t a = subcat.find_first(); a != MorSet::npos; a = subcat.find_next(a))
    for (std::size_t b = subcat.find_first(); b != MorSet::npos; b = subcat.find_next(b)) {
      const Mor c = cat.compose(static_cast<Mor>(a), static_cast<Mor>(b));
      if (c >= 0 && !subcat.test(static_cast<std::size_t>(c)))
        throw std::invalid_argument("restrict_subcategory: not closed under composition");
    }

  // Subsemigroup generated by the subcategory's shifts and units.
  std::vector<bool> in_pool(static_cast<std::size_t>(sg.size()), false);
  std::vector<int> pool;
  auto push = [&](int e) {
    if (!in_pool[static_cast<std::size_t>(e)]) {
      in_pool[static_cast<std::size_t>(e)] = true;
      pool.push_back(e);
    }
  };
  push(0);
  for (Obj v = 0; v < cat.num_objects(); ++v)
    if (has_obj[static_cast<std::size_t>(v)]) push(sg.unit_of[static_cast<std::size_t>(v)]);
  for (std::size_t a = subcat.find_first(); a != MorSet::npos; a = subcat.find_next(a)) {
    push(sg.tau_of[a]);
    push(sg.sigma_of[a]);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = pool.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        const int p = sg.compose(pool[i], pool[j]);
        if (!in_pool[static_cast<std::size_t>(p)]) {
          push(p);
          grew = true;
        }
      }
  }
  std::sort(pool.begin(), pool.end());

  std::vector<bool> active(spec.points.size(), false);
  for (std::size_t p = 0; p < spec.points.size(); ++p)
    active[p] = has_obj[static_cast<std::size_t>(spec.points[p].vertex)];
  return build_on_points(cat, sg, spec, index, active, pool);
}

bool verify_clopen_subgroupoid(const FiniteGroupoid& full, const FiniteGroupoid& sub) {
  if (full.index != sub.index || full.spec != sub.spec) return false;
  // Subset: every sub germ appears in full (same key), openness: each germ
  // is a basic open set of its own, so a subset is automatically open and
  // its complement likewise; closure under the groupoid operations makes it
  // a subgroupoid.
  for (const Germ& g : sub.germs)
    if (full.find_germ(g.elem, g.src) < 0) return false;
  for (int i = 0; i < sub.size(); ++i) {
    if (sub.inv[static_cast<std::size_t>(i)] < 0) return false;
    for (int j = 0; j < sub.size(); ++j) {
      const Germ& a = sub.germs[static_cast<std::size_t>(i)];
      const Germ& b = sub.germs[static_cast<std::size_t>(j)];
      if (b.dst == a.src && sub.compose(i, j) < 0) return false;
    }
  }
  return true;
}

}  // namespace lcsc
