#include "lcsc/set_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsc {

namespace {

// Witness whose action is the identity map on the domain of z.
Zigzag identity_witness(const SmallCategory& cat, const Zigzag& z) {
  return zigzag_concat(cat, zigzag_reverse(z), z);
}

}  // namespace

std::vector<DZeroFamily> build_dzero_all(const SmallCategory& cat) {
  if (cat.mode != CarrierMode::kTotal)
    throw std::domain_error("build_dzero_all: requires a total carrier");
  const int n = cat.size();
  std::vector<DZeroFamily> fam(static_cast<std::size_t>(cat.num_objects()));
  for (Obj v = 0; v < cat.num_objects(); ++v) fam[static_cast<std::size_t>(v)].vertex = v;

  auto add = [&fam](Obj v, const MorSet& s, const Zigzag& w) -> bool {
    if (s.none()) return false;
    DZeroFamily& f = fam[static_cast<std::size_t>(v)];
    if (f.index.count(s)) return false;
    f.index[s] = f.size();
    f.sets.push_back(s);
    f.witness.push_back(w);
    return true;
  };

  for (Obj v = 0; v < cat.num_objects(); ++v)
    add(v, cat.obj_cone(v), zigzag_unit(cat, v));

  for (bool grew = true; grew;) {
    grew = false;
    for (Obj v = 0; v < cat.num_objects(); ++v) {
      const std::size_t count = fam[static_cast<std::size_t>(v)].sets.size();
      for (std::size_t e = 0; e < count; ++e) {
        const MorSet E = fam[static_cast<std::size_t>(v)].sets[e];
        const Zigzag wE = fam[static_cast<std::size_t>(v)].witness[e];
        for (Mor g = 0; g < n; ++g) {
          if (cat.src[g] == v) {
            // Translate: gE lives at r(g); witnessed by following sigma^g
            // with the witness of E.
            MorSet gE(static_cast<std::size_t>(n));
            for (std::size_t x = E.find_first(); x != MorSet::npos; x = E.find_next(x)) {
              Mor y = cat.compose(g, static_cast<Mor>(x));
              if (y == kTrunc) throw std::logic_error("build_dzero_all: truncated product");
              if (y < 0) throw std::logic_error("build_dzero_all: missing product");
              gE.set(static_cast<std::size_t>(y));
            }
            grew |= add(cat.dst[g], gE, zigzag_concat(cat, wE, zigzag_sigma(cat, g)));
          }
          if (cat.dst[g] == v) {
            // Pullback: sigma^g(E cap gLambda) lives at s(g); witnessed by
            // following tau^g with the witness of E.
            MorSet pb(static_cast<std::size_t>(n));
            const MorSet& dom = cat.obj_cone(cat.src[g]);
            for (std::size_t x = dom.find_first(); x != MorSet::npos; x = dom.find_next(x)) {
              Mor y = cat.compose(g, static_cast<Mor>(x));
              if (y >= 0 && E.test(static_cast<std::size_t>(y))) pb.set(x);
            }
            grew |= add(cat.src[g], pb, zigzag_concat(cat, wE, zigzag_tau(cat, g)));
          }
        }
      }
      // Pairwise intersections (the family is intersection-closed in theory;
      // this keeps it constructively so, with explicit witnesses).
      DZeroFamily& f = fam[static_cast<std::size_t>(v)];
      const std::size_t sz = f.sets.size();
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j) {
          MorSet cap = f.sets[i] & f.sets[j];
          if (cap.none() || f.index.count(cap)) continue;
          grew |= add(v, cap,
                      zigzag_concat(cat, identity_witness(cat, f.witness[i]),
                                    identity_witness(cat, f.witness[j])));
        }
    }
  }
  return fam;
}

DZeroFamily build_dzero(const SmallCategory& cat, Obj v) {
  if (v < 0 || v >= cat.num_objects()) throw std::invalid_argument("build_dzero: bad object");
  return build_dzero_all(cat)[static_cast<std::size_t>(v)];
}

RingData build_ring_data(const SmallCategory& cat, DZeroFamily d0) {
  RingData ring;
  ring.vertex = d0.vertex;
  ring.d0 = std::move(d0);
  const int n = cat.size();
  ring.atom_of.assign(static_cast<std::size_t>(n), -1);

  std::map<std::vector<int>, int> classes;
  const MorSet& cone = cat.obj_cone(ring.vertex);
  for (std::size_t x = cone.find_first(); x != MorSet::npos; x = cone.find_next(x)) {
    std::vector<int> pat;
    for (int i = 0; i < ring.d0.size(); ++i)
      if (ring.d0.sets[static_cast<std::size_t>(i)].test(x)) pat.push_back(i);
    auto it = classes.find(pat);
    int a;
    if (it == classes.end()) {
      a = static_cast<int>(ring.atoms.size());
      classes.emplace(std::move(pat), a);
      ring.atoms.emplace_back(static_cast<std::size_t>(n));
    } else {
      a = it->second;
    }
    ring.atoms[static_cast<std::size_t>(a)].set(x);
    ring.atom_of[x] = a;
  }
  ring.pattern.resize(ring.atoms.size());
  ring.min_d0.assign(ring.atoms.size(), -1);
  for (const auto& [pat, a] : classes) {
    ring.pattern[static_cast<std::size_t>(a)] = pat;
    if (pat.empty()) throw std::logic_error("build_ring_data: atom outside vLambda");
    MorSet cap = ring.d0.sets[static_cast<std::size_t>(pat[0])];
    for (std::size_t k = 1; k < pat.size(); ++k)
      cap &= ring.d0.sets[static_cast<std::size_t>(pat[k])];
    int e = ring.d0.find(cap);
    if (e < 0) throw std::logic_error("build_ring_data: family not intersection-closed");
    ring.min_d0[static_cast<std::size_t>(a)] = e;
  }
  return ring;
}

bool RingData::in_ring(const MorSet& s) const {
  for (const MorSet& a : atoms) {
    MorSet cap = a & s;
    if (cap.any() && cap != a) return false;
  }
  MorSet covered(s.size());
  for (const MorSet& a : atoms) covered |= a;
  return (s - covered).none();
}

bool RingData::in_dv(const MorSet& s) const {
  if (s.none() || !in_ring(s)) return false;
  for (const MorSet& E : d0.sets) {
    if (!(s - E).none()) continue;  // need s inside E
    MorSet rest = E - s;
    MorSet removable(s.size());
    for (const MorSet& F : d0.sets)
      if ((F - E).none() && (F & s).none()) removable |= F;
    if ((rest - removable).none()) return true;
  }
  return false;
}

RingSet ring_normal_form(const SmallCategory& cat, const RingData& ring, const MorSet& s) {
  (void)cat;
  if (!ring.in_ring(s))
    throw std::invalid_argument("ring_normal_form: not a member of the ring");
  RingSet out;
  out.vertex = ring.vertex;
  out.elements = s;
  MorSet remaining = s;
  while (remaining.any()) {
    // Greedy: the D0 set taking the largest exact bite out of what remains.
    int best = -1;
    std::size_t best_size = 0;
    std::vector<int> best_removed;
    for (int e = 0; e < ring.d0.size(); ++e) {
      const MorSet& E = ring.d0.sets[static_cast<std::size_t>(e)];
      MorSet want = E & remaining;
      if (want.none() || want.count() <= best_size) continue;
      MorSet acc = E;
      std::vector<int> removed;
      for (int f = 0; f < ring.d0.size(); ++f) {
        const MorSet& F = ring.d0.sets[static_cast<std::size_t>(f)];
        if ((F - E).none() && (F & want).none()) {
          acc -= F;
          removed.push_back(f);
        }
      }
      if (acc == want) {
        best = e;
        best_size = want.count();
        best_removed = std::move(removed);
      }
    }
    if (best >= 0) {
      out.normal_form.push_back(DSetTerm{best, std::move(best_removed)});
      remaining -= ring.d0.sets[static_cast<std::size_t>(best)];
      continue;
    }
    // Fallback: peel off the lowest-index atom inside the remainder, which
    // is always expressible as min_d0 minus the sets missing it.
    int atom = -1;
    for (std::size_t a = 0; a < ring.atoms.size(); ++a)
      if ((ring.atoms[a] - remaining).none()) { atom = static_cast<int>(a); break; }
    if (atom < 0) throw std::logic_error("ring_normal_form: remainder without atoms");
    const int e = ring.min_d0[static_cast<std::size_t>(atom)];
    const MorSet& E = ring.d0.sets[static_cast<std::size_t>(e)];
    DSetTerm term{e, {}};
    MorSet acc = E;
    for (int f = 0; f < ring.d0.size(); ++f) {
      const MorSet& F = ring.d0.sets[static_cast<std::size_t>(f)];
      if ((F - E).none() && (F & ring.atoms[static_cast<std::size_t>(atom)]).none()) {
        acc -= F;
        term.F.push_back(f);
      }
    }
    if (acc != ring.atoms[static_cast<std::size_t>(atom)])
      throw std::logic_error("ring_normal_form: atom is not a difference form");
    out.normal_form.push_back(std::move(term));
    remaining -= ring.atoms[static_cast<std::size_t>(atom)];
  }
  return out;
}

std::vector<RingSet> generate_ring(const SmallCategory& cat, const RingData& ring,
                                   std::size_t max_atoms) {
  if (ring.atoms.size() > max_atoms) throw std::runtime_error("ring too large");
  const std::size_t n = static_cast<std::size_t>(cat.size());
  std::vector<RingSet> out;
  out.reserve(1u << ring.atoms.size());
  for (std::size_t mask = 0; mask < (1u << ring.atoms.size()); ++mask) {
    MorSet s(n);
    for (std::size_t a = 0; a < ring.atoms.size(); ++a)
      if (mask & (1u << a)) s |= ring.atoms[a];
    out.push_back(ring_normal_form(cat, ring, s));
  }
  return out;
}

std::vector<MorSet> cone_ring_atoms(const SmallCategory& cat, Obj v) {
  const int n = cat.size();
  const MorSet& cone = cat.obj_cone(v);
  std::map<std::vector<int>, MorSet> classes;
  for (std::size_t x = cone.find_first(); x != MorSet::npos; x = cone.find_next(x)) {
    std::vector<int> pat;
    for (std::size_t a = cone.find_first(); a != MorSet::npos; a = cone.find_next(a))
      if (cat.cone(static_cast<Mor>(a)).test(x)) pat.push_back(static_cast<int>(a));
    auto [it, fresh] = classes.try_emplace(std::move(pat), MorSet(static_cast<std::size_t>(n)));
    (void)fresh;
    it->second.set(x);
  }
  std::vector<MorSet> atoms;
  atoms.reserve(classes.size());
  for (auto& [pat, s] : classes) atoms.push_back(s);
  std::sort(atoms.begin(), atoms.end(),
            [](const MorSet& a, const MorSet& b) { return a.find_first() < b.find_first(); });
  return atoms;
}

RingHomCheck extend_to_ring_hom(const RingData& ring, const std::vector<MorSet>& mu,
                                std::size_t target_size) {
  RingHomCheck out;
  out.target_size = target_size;
  if (mu.size() != static_cast<std::size_t>(ring.d0.size()))
    throw std::invalid_argument("extend_to_ring_hom: one image per D0 set required");
  for (const MorSet& m : mu)
    if (m.size() != target_size)
      throw std::invalid_argument("extend_to_ring_hom: image universe size mismatch");

  // Condition on pairwise intersections.
  for (int i = 0; i < ring.d0.size(); ++i)
    for (int j = i; j < ring.d0.size(); ++j) {
      const MorSet cap = ring.d0.sets[static_cast<std::size_t>(i)] &
                         ring.d0.sets[static_cast<std::size_t>(j)];
      const MorSet want = mu[static_cast<std::size_t>(i)] & mu[static_cast<std::size_t>(j)];
      if (cap.none()) {
        if (want.any()) {
          out.violation = "intersection: disjoint sets with overlapping images (D0 #" +
                          std::to_string(i) + ", #" + std::to_string(j) + ")";
          return out;
        }
        continue;
      }
      const int k = ring.d0.find(cap);
      if (k < 0) throw std::logic_error("extend_to_ring_hom: family not intersection-closed");
      if (mu[static_cast<std::size_t>(k)] != want) {
        out.violation = "intersection: image of D0 #" + std::to_string(i) + " cap #" +
                        std::to_string(j) + " is not the intersection of images";
        return out;
      }
    }

  // Condition on exact finite unions, checked pointwise: a target point in
  // mu(E) must not have E covered by the D0 subsets of E missing it.
  for (int e = 0; e < ring.d0.size(); ++e) {
    const MorSet& E = ring.d0.sets[static_cast<std::size_t>(e)];
    const MorSet& im = mu[static_cast<std::size_t>(e)];
    for (std::size_t y = im.find_first(); y != MorSet::npos; y = im.find_next(y)) {
      MorSet covered(E.size());
      for (int f = 0; f < ring.d0.size(); ++f) {
        const MorSet& F = ring.d0.sets[static_cast<std::size_t>(f)];
        if ((F - E).none() && !mu[static_cast<std::size_t>(f)].test(y)) covered |= F;
      }
      if ((E - covered).none()) {
        out.violation = "union: D0 #" + std::to_string(e) +
                        " is an exact union whose images miss target point " + std::to_string(y);
        return out;
      }
    }
  }

  // The unique extension on atoms, plus internal consistency checks that are
  // forced once the two conditions hold.
  out.atom_image.resize(ring.atoms.size(), MorSet(target_size));
  for (std::size_t a = 0; a < ring.atoms.size(); ++a) {
    const int e = ring.min_d0[a];
    const MorSet& Ea = ring.d0.sets[static_cast<std::size_t>(e)];
    MorSet img = mu[static_cast<std::size_t>(e)];
    for (int f = 0; f < ring.d0.size(); ++f) {
      const MorSet& F = ring.d0.sets[static_cast<std::size_t>(f)];
      if ((F - Ea).none() && (F & ring.atoms[a]).none()) img -= mu[static_cast<std::size_t>(f)];
    }
    out.atom_image[a] = img;
  }
  for (std::size_t a = 0; a < ring.atoms.size(); ++a)
    for (std::size_t b = a + 1; b < ring.atoms.size(); ++b)
      if ((out.atom_image[a] & out.atom_image[b]).any())
        throw std::logic_error("extend_to_ring_hom: atom images overlap");
  for (int e = 0; e < ring.d0.size(); ++e) {
    MorSet u(target_size);
    for (std::size_t a = 0; a < ring.atoms.size(); ++a)
      if ((ring.atoms[a] - ring.d0.sets[static_cast<std::size_t>(e)]).none())
        u |= out.atom_image[a];
    if (u != mu[static_cast<std::size_t>(e)])
      throw std::logic_error("extend_to_ring_hom: extension disagrees on a D0 set");
  }
  out.ok = true;
  return out;
}

MorSet apply_ring_hom(const RingData& ring, const RingHomCheck& hom, const MorSet& s) {
  if (!hom.ok) throw std::invalid_argument("apply_ring_hom: extension did not succeed");
  if (!ring.in_ring(s)) throw std::invalid_argument("apply_ring_hom: not a ring member");
  MorSet out(hom.target_size);
  for (std::size_t a = 0; a < ring.atoms.size(); ++a)
    if ((ring.atoms[a] - s).none()) out |= hom.atom_image[a];
  return out;
}

}  // namespace lcsc
