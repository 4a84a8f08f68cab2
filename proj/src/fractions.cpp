#include "lcsc/fractions.hpp"

#include <stdexcept>

namespace lcsc {

namespace {

// Set of left multiples { x*a : x in carrier } of a.
MorSet left_multiples(const SmallCategory& cat, Mor a) {
  MorSet out(static_cast<std::size_t>(cat.size()));
  for (Mor x = 0; x < cat.size(); ++x)
    if (cat.src[x] == cat.dst[a]) {
      const Mor p = cat.compose(x, a);
      if (p >= 0) out.set(static_cast<std::size_t>(p));
    }
  return out;
}

void check_fraction(const SmallCategory& cat, FractionPair p, const char* who) {
  if (p.num < 0 || p.num >= cat.size() || p.den < 0 || p.den >= cat.size())
    throw std::invalid_argument(std::string(who) + ": morphism out of range");
  if (cat.dst[p.num] != cat.dst[p.den])
    throw std::invalid_argument(std::string(who) + ": legs do not share a range object");
}

}  // namespace

ReversibilityReport is_right_reversible(const SmallCategory& cat) {
  if (cat.mode != CarrierMode::kTotal)
    throw std::domain_error("is_right_reversible: requires a total carrier (use the bounded form)");
  ReversibilityReport rep;
  rep.method = "exhaustive left-multiple intersection";
  for (Mor a = 0; a < cat.size(); ++a) {
    const MorSet la = left_multiples(cat, a);
    for (Mor b = a + 1; b < cat.size(); ++b) {
      if (cat.src[a] != cat.src[b]) continue;
      if ((la & left_multiples(cat, b)).none()) {
        rep.verdict = Verdict::kFalse;
        rep.a = a;
        rep.b = b;
        return rep;
      }
    }
  }
  rep.verdict = Verdict::kTrue;
  return rep;
}

ReversibilityReport is_right_reversible_bounded(const SmallCategory& cat) {
  ReversibilityReport rep;
  rep.method = "carrier-witness search";
  for (Mor a = 0; a < cat.size(); ++a) {
    const MorSet la = left_multiples(cat, a);
    for (Mor b = a + 1; b < cat.size(); ++b) {
      if (cat.src[a] != cat.src[b]) continue;
      if ((la & left_multiples(cat, b)).none()) {
        // No witness inside the carrier; one may exist beyond it.
        rep.verdict = Verdict::kUnknown;
        rep.a = a;
        rep.b = b;
        return rep;
      }
    }
  }
  rep.verdict = Verdict::kTrue;
  return rep;
}

ReversibilityReport is_right_reversible(const GroupedMonoid& g) {
  ReversibilityReport rep;
  if (g.model.kind == GroupModel::kZk) {
    rep.verdict = Verdict::kTrue;
    rep.method = "abelian";
    return rep;
  }
  if (g.known_in.empty()) {
    // Free monoid on two letters: nonempty left multiples of distinct
    // letters end in those letters, so the letters a and b have none in
    // common.
    rep.verdict = Verdict::kFalse;
    rep.a = g.find(GroupElem{{1}});
    rep.b = g.find(GroupElem{{2}});
    rep.method = "terminal letter";
    return rep;
  }
  rep = is_right_reversible_bounded(g.cat);
  rep.method = "carrier-witness search";
  return rep;
}

FractionPair iota(const SmallCategory& cat, Mor a) {
  if (a < 0 || a >= cat.size()) throw std::invalid_argument("iota: morphism out of range");
  return FractionPair{cat.identity[cat.dst[a]], a};
}

namespace {

EquivResult equiv_search(const SmallCategory& cat, FractionPair p, FractionPair q) {
  check_fraction(cat, p, "fraction_equiv");
  check_fraction(cat, q, "fraction_equiv");
  if (cat.src[p.num] != cat.src[q.num] || cat.src[p.den] != cat.src[q.den])
    throw std::invalid_argument("fraction_equiv: fraction shapes do not match");
  EquivResult res;
  std::vector<Mor> xs, ys;
  for (Mor x = 0; x < cat.size(); ++x) {
    if (cat.src[x] == cat.dst[p.num]) xs.push_back(x);
    if (cat.src[x] == cat.dst[q.num]) ys.push_back(x);
  }
  // Index order: ascending index sum, then first index. The fixtures list
  // morphisms in size order, so small witnesses are found first.
  for (std::size_t total = 0; total < xs.size() + ys.size(); ++total)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::size_t j = total - i;
      if (i > total || j >= ys.size()) continue;
      const Mor x = xs[i], y = ys[j];
      const Mor a = cat.compose(x, p.num);
      if (a < 0 || a != cat.compose(y, q.num)) continue;
      const Mor c = cat.compose(x, p.den);
      if (c < 0 || c != cat.compose(y, q.den)) continue;
      res.verdict = Verdict::kTrue;
      res.x = x;
      res.y = y;
      return res;
    }
  res.verdict = cat.mode == CarrierMode::kTotal ? Verdict::kFalse : Verdict::kUnknown;
  return res;
}

}  // namespace

EquivResult fraction_equiv(const SmallCategory& cat, FractionPair p, FractionPair q) {
  return equiv_search(cat, p, q);
}

GroupElem fraction_invariant(const GroupedMonoid& g, FractionPair p) {
  check_fraction(g.cat, p, "fraction_invariant");
  return g.model.mul(g.model.inv(g.elem_of[static_cast<std::size_t>(p.num)]),
                     g.elem_of[static_cast<std::size_t>(p.den)]);
}

EquivResult fraction_equiv(const GroupedMonoid& g, FractionPair p, FractionPair q) {
  const GroupElem ip = fraction_invariant(g, p);
  const GroupElem iq = fraction_invariant(g, q);
  if (!(ip == iq)) {
    EquivResult res;
    res.verdict = Verdict::kFalse;  // distinct group elements can never merge
    return res;
  }
  EquivResult res = equiv_search(g.cat, p, q);
  if (g.model.kind == GroupModel::kZk && res.verdict != Verdict::kTrue)
    throw std::logic_error("fraction_equiv: matching invariants must have a box witness");
  return res;
}

ProductResult fraction_product(const SmallCategory& cat, FractionPair p, FractionPair q) {
  check_fraction(cat, p, "fraction_product");
  check_fraction(cat, q, "fraction_product");
  if (cat.src[p.den] != cat.src[q.num])
    throw std::invalid_argument("fraction_product: inner legs do not share a source");
  ProductResult out;
  std::vector<Mor> xs, ys;
  for (Mor x = 0; x < cat.size(); ++x) {
    if (cat.src[x] == cat.dst[p.den]) xs.push_back(x);
    if (cat.src[x] == cat.dst[q.num]) ys.push_back(x);
  }
  for (std::size_t total = 0; total < xs.size() + ys.size(); ++total)
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::size_t j = total - i;
      if (i > total || j >= ys.size()) continue;
      const Mor x = xs[i], y = ys[j];
      const Mor mid = cat.compose(x, p.den);
      if (mid < 0 || mid != cat.compose(y, q.num)) continue;
      const Mor num = cat.compose(x, p.num);
      const Mor den = cat.compose(y, q.den);
      if (num < 0 || den < 0) continue;
      if (!out.ok) {
        out.ok = true;
        out.rep = FractionPair{num, den};
        out.x = x;
        out.y = y;
        continue;
      }
      // Second witness: its result must represent the same class.
      const EquivResult eq = fraction_equiv(cat, out.rep, FractionPair{num, den});
      if (eq.verdict == Verdict::kFalse)
        throw std::logic_error("fraction_product: witnesses give inequivalent results");
      out.witness_independent_checked = eq.verdict == Verdict::kTrue;
      return out;
    }
  return out;
}

bool groupoid_all_invertible(const SmallCategory& h) {
  for (Mor m = 0; m < h.size(); ++m)
    if (h_inverse(h, m) < 0) return false;
  return true;
}

Mor h_inverse(const SmallCategory& h, Mor m) {
  if (m < 0 || m >= h.size()) throw std::invalid_argument("h_inverse: morphism out of range");
  for (Mor x = 0; x < h.size(); ++x)
    if (h.compose(m, x) == h.identity[h.dst[m]] && h.compose(x, m) == h.identity[h.src[m]])
      return x;
  return kUndef;
}

HomCheck validate_functor(const SmallCategory& cat, const FunctorToGroupoid& f) {
  HomCheck out;
  if (!f.target) {
    out.violation = "no target groupoid";
    return out;
  }
  const SmallCategory& h = *f.target;
  if (h.mode != CarrierMode::kTotal || !groupoid_all_invertible(h)) {
    out.violation = "target is not a groupoid (total with all morphisms invertible)";
    return out;
  }
  if (f.map.size() != static_cast<std::size_t>(cat.size())) {
    out.violation = "map size does not match the carrier";
    return out;
  }
  for (Mor a = 0; a < cat.size(); ++a)
    if (f.map[static_cast<std::size_t>(a)] < 0 || f.map[static_cast<std::size_t>(a)] >= h.size()) {
      out.violation = "image out of range at " + cat.names[static_cast<std::size_t>(a)];
      return out;
    }
  std::vector<Obj> obj_map(static_cast<std::size_t>(cat.num_objects()), -1);
  for (Obj v = 0; v < cat.num_objects(); ++v) {
    const Mor im = f.map[static_cast<std::size_t>(cat.identity[v])];
    if (h.identity_of[static_cast<std::size_t>(im)] < 0) {
      out.violation = "identity at " + cat.object_names[static_cast<std::size_t>(v)] +
                      " does not map to an identity";
      return out;
    }
    obj_map[static_cast<std::size_t>(v)] = h.identity_of[static_cast<std::size_t>(im)];
  }
  for (Mor a = 0; a < cat.size(); ++a) {
    const Mor im = f.map[static_cast<std::size_t>(a)];
    if (h.src[im] != obj_map[static_cast<std::size_t>(cat.src[a])] ||
        h.dst[im] != obj_map[static_cast<std::size_t>(cat.dst[a])]) {
      out.violation = "endpoints not respected at " + cat.names[static_cast<std::size_t>(a)];
      return out;
    }
  }
  for (Mor a = 0; a < cat.size(); ++a)
    for (Mor b = 0; b < cat.size(); ++b) {
      const Mor c = cat.compose(a, b);
      if (c < 0) continue;  // undefined or truncated products carry no constraint
      if (h.compose(f.map[static_cast<std::size_t>(a)], f.map[static_cast<std::size_t>(b)]) !=
          f.map[static_cast<std::size_t>(c)]) {
        out.violation = "multiplicativity fails at (" + cat.names[static_cast<std::size_t>(a)] +
                        ", " + cat.names[static_cast<std::size_t>(b)] + ")";
        return out;
      }
    }
  out.ok = true;
  return out;
}

Mor extend_hom_apply(const SmallCategory& cat, const FunctorToGroupoid& f, FractionPair p) {
  const HomCheck chk = validate_functor(cat, f);
  if (!chk.ok) throw std::invalid_argument("extend_hom_apply: " + chk.violation);
  check_fraction(cat, p, "extend_hom_apply");
  const SmallCategory& h = *f.target;
  const Mor num = f.map[static_cast<std::size_t>(p.num)];
  const Mor den = f.map[static_cast<std::size_t>(p.den)];
  const Mor out = h.compose(h_inverse(h, num), den);
  if (out < 0) throw std::logic_error("extend_hom_apply: target product undefined");
  return out;
}

}  // namespace lcsc
