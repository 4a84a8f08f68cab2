#include "lcsc/operator_lab.hpp"

#include "lcsc/alignment.hpp"
#include "lcsc/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lcsc {

namespace {

constexpr double kPi = 3.14159265358979323846;

int popcount32(unsigned m) {
  int c = 0;
  for (; m; m &= m - 1) ++c;
  return c;
}

std::vector<Mor> set_to_vector(const MorSet& s) {
  std::vector<Mor> out;
  for (std::size_t x = s.find_first(); x != MorSet::npos; x = s.find_next(x))
    out.push_back(static_cast<Mor>(x));
  return out;
}

std::string name_list(const SmallCategory& cat, const std::vector<Mor>& ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ",";
    out += cat.names[static_cast<std::size_t>(ms[i])];
  }
  return out + "}";
}

double op_norm_diff(const PartialPerm& a, const PartialPerm& b) {
  if (a.n == 0) return 0.0;
  Eigen::MatrixXd d = a.to_matrix() - b.to_matrix();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

// ---- partial permutation matrices ---------------------------------------

PartialPerm PartialPerm::zeros(int n) {
  PartialPerm p;
  p.n = n;
  p.img.assign(static_cast<std::size_t>(n), -1);
  return p;
}

PartialPerm PartialPerm::eye(int n) {
  PartialPerm p = zeros(n);
  for (int j = 0; j < n; ++j) p.img[static_cast<std::size_t>(j)] = j;
  return p;
}

PartialPerm PartialPerm::after(const PartialPerm& g) const {
  if (n != g.n) throw std::invalid_argument("PartialPerm::after: dimension mismatch");
  PartialPerm out = zeros(n);
  for (int j = 0; j < n; ++j) {
    const int mid = g.img[static_cast<std::size_t>(j)];
    if (mid >= 0) out.img[static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(mid)];
  }
  return out;
}

PartialPerm PartialPerm::adjoint() const {
  PartialPerm out = zeros(n);
  for (int j = 0; j < n; ++j) {
    const int i = img[static_cast<std::size_t>(j)];
    if (i >= 0) out.img[static_cast<std::size_t>(i)] = j;
  }
  return out;
}

bool PartialPerm::is_projection() const {
  for (int j = 0; j < n; ++j) {
    const int i = img[static_cast<std::size_t>(j)];
    if (i >= 0 && i != j) return false;
  }
  return true;
}

Eigen::MatrixXd PartialPerm::to_matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int i = img[static_cast<std::size_t>(j)];
    if (i >= 0) m(i, j) = 1.0;
  }
  return m;
}

PartialPerm perm_of_injection(const PartialInjection& m, int n) {
  PartialPerm p = PartialPerm::zeros(n);
  if (m.is_zero()) return p;
  if (static_cast<int>(m.img.size()) != n)
    throw std::invalid_argument("perm_of_injection: dimension mismatch");
  for (int j = 0; j < n; ++j)
    if (m.img[static_cast<std::size_t>(j)] >= 0)
      p.img[static_cast<std::size_t>(j)] = m.img[static_cast<std::size_t>(j)];
  return p;
}

PartialPerm join_projections(const PartialPerm& p, const PartialPerm& q) {
  if (p.n != q.n) throw std::invalid_argument("join_projections: dimension mismatch");
  if (!p.is_projection() || !q.is_projection())
    throw std::invalid_argument("join_projections: operand is not a projection");
  PartialPerm out = PartialPerm::zeros(p.n);
  for (int j = 0; j < p.n; ++j)
    if (p.img[static_cast<std::size_t>(j)] == j || q.img[static_cast<std::size_t>(j)] == j)
      out.img[static_cast<std::size_t>(j)] = j;
  return out;
}

Eigen::MatrixXd join_projections_spectral(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                                          double tol) {
  Eigen::MatrixXd sum = p + q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sum);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(sum.rows(), sum.cols());
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k) > tol) {
      Eigen::VectorXd v = es.eigenvectors().col(k);
      out += v * v.transpose();
    }
  }
  return out;
}

std::complex<double> pairing(const PartialPerm& t, const Eigen::VectorXcd& xi) {
  if (xi.size() != t.n) throw std::invalid_argument("pairing: dimension mismatch");
  std::complex<double> acc = 0.0;
  for (int j = 0; j < t.n; ++j) {
    const int i = t.img[static_cast<std::size_t>(j)];
    if (i >= 0) acc += xi(j) * std::conj(xi(i));
  }
  return acc;
}

// ---- operator families ----------------------------------------------------

OperatorFamily regular_rep(const SmallCategory& cat, const ZigzagSemigroup& sg) {
  OperatorFamily fam;
  fam.labels = cat.names;
  fam.sg = &sg;
  const int n = cat.size();
  fam.ops.reserve(sg.elems.size());
  for (const auto& m : sg.elems) fam.ops.push_back(perm_of_injection(m, n));
  return fam;
}

OperatorFamily induced_rep(const FiniteGroupoid& g, int x) {
  if (x < 0 || x >= static_cast<int>(g.active_point.size()) ||
      !g.active_point[static_cast<std::size_t>(x)])
    throw std::invalid_argument("induced_rep: not an active point");
  OperatorFamily fam;
  fam.sg = g.sg;

  std::vector<int> basis;  // germ indices with source x
  std::map<int, int> pos;  // germ index -> basis position
  for (int i = 0; i < g.size(); ++i) {
    if (g.germs[static_cast<std::size_t>(i)].src == x) {
      pos[i] = static_cast<int>(basis.size());
      basis.push_back(i);
    }
  }
  const int n = static_cast<int>(basis.size());
  for (int b = 0; b < n; ++b) {
    const Germ& h = g.germs[static_cast<std::size_t>(basis[static_cast<std::size_t>(b)])];
    fam.labels.push_back("m" + std::to_string(h.elem) + "@p" + std::to_string(h.src));
  }

  fam.ops.reserve(g.sg->elems.size());
  for (int t = 0; t < g.sg->size(); ++t) {
    PartialPerm op = PartialPerm::zeros(n);
    for (int b = 0; b < n; ++b) {
      const int gi = basis[static_cast<std::size_t>(b)];
      const int at = g.germs[static_cast<std::size_t>(gi)].dst;
      const int tg = g.find_germ(t, at);
      if (tg < 0) continue;
      const int prod = g.compose(tg, gi);
      if (prod < 0) throw std::logic_error("induced_rep: germ composition failed");
      auto it = pos.find(prod);
      if (it == pos.end()) throw std::logic_error("induced_rep: composed germ left the fiber");
      op.img[static_cast<std::size_t>(b)] = it->second;
    }
    fam.ops.push_back(std::move(op));
  }
  return fam;
}

OperatorFamily direct_sum(const std::vector<const OperatorFamily*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  const ZigzagSemigroup* sg = parts.front()->sg;
  for (const auto* p : parts)
    if (p->sg != sg) throw std::invalid_argument("direct_sum: mixed semigroups");

  OperatorFamily fam;
  fam.sg = sg;
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offset[k + 1] = offset[k] + (parts[k]->ops.empty() ? 0 : parts[k]->ops.front().n);
    for (const auto& lbl : parts[k]->labels)
      fam.labels.push_back(std::to_string(k) + ":" + lbl);
  }
  const int n = offset.back();
  for (std::size_t e = 0; e < sg->elems.size(); ++e) {
    PartialPerm op = PartialPerm::zeros(n);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const PartialPerm& blk = parts[k]->ops[e];
      for (int j = 0; j < blk.n; ++j) {
        const int i = blk.img[static_cast<std::size_t>(j)];
        if (i >= 0) op.img[static_cast<std::size_t>(offset[k] + j)] = offset[k] + i;
      }
    }
    fam.ops.push_back(std::move(op));
  }
  return fam;
}

OperatorFamily boundary_family(const FiniteGroupoid& g) {
  std::vector<OperatorFamily> parts;
  for (int p = 0; p < static_cast<int>(g.active_point.size()); ++p)
    if (g.active_point[static_cast<std::size_t>(p)] && g.spec->boundary[static_cast<std::size_t>(p)])
      parts.push_back(induced_rep(g, p));
  if (parts.empty()) throw std::logic_error("boundary_family: no boundary points");
  std::vector<const OperatorFamily*> ptrs;
  ptrs.reserve(parts.size());
  for (const auto& p : parts) ptrs.push_back(&p);
  return direct_sum(ptrs);
}

// ---- relation checking ------------------------------------------------------

namespace {

struct RelChecker {
  const SmallCategory& cat;
  const ZigzagSemigroup& sg;
  const SpectrumAll& spec;
  const OperatorFamily& fam;
  RelationResult res;

  RelChecker(const SmallCategory& c, const ZigzagSemigroup& s, const SpectrumAll& sp,
             const OperatorFamily& f, unsigned id, std::string name)
      : cat(c), sg(s), spec(sp), fam(f) {
    res.id = id;
    res.name = std::move(name);
  }

  void compare(const PartialPerm& lhs, const PartialPerm& rhs, const std::string& what) {
    ++res.instances;
    if (lhs == rhs) return;
    const double dev = op_norm_diff(lhs, rhs);
    if (res.pass) {
      res.pass = false;
      res.counterexample = what;
      for (int j = 0; j < lhs.n; ++j) {
        if (lhs.img[static_cast<std::size_t>(j)] != rhs.img[static_cast<std::size_t>(j)]) {
          res.witness_basis = j < static_cast<int>(fam.labels.size())
                                  ? fam.labels[static_cast<std::size_t>(j)]
                                  : std::to_string(j);
          break;
        }
      }
    }
    res.max_deviation = std::max(res.max_deviation, dev);
  }

  void fail_instance(const std::string& what) {
    ++res.instances;
    if (res.pass) {
      res.pass = false;
      res.counterexample = what;
    }
    res.max_deviation = std::max(res.max_deviation, 1.0);
  }

  // Join of adjoint(op)*op over the identity elements of the given D0 sets;
  // false if some operand fails to be a projection.
  bool join_domain_projections(const std::vector<int>& id_elems, PartialPerm* out,
                               std::string* bad) {
    PartialPerm acc = PartialPerm::zeros(fam.ops.front().n);
    for (int e : id_elems) {
      PartialPerm p = fam.ops[static_cast<std::size_t>(e)].adjoint().after(
          fam.ops[static_cast<std::size_t>(e)]);
      if (!p.is_projection()) {
        *bad = "T*T of identity element " + std::to_string(e) + " is not a projection";
        return false;
      }
      acc = join_projections(acc, p);
    }
    *out = acc;
    return true;
  }
};

// Index in the semigroup of the identity map on the set a at object v.
int id_elem_index(const SmallCategory& cat, const ZigzagSemigroup& sg, const MorSet& a, Obj v) {
  PartialInjection p;
  p.dom_obj = v;
  p.ran_obj = v;
  p.img.assign(static_cast<std::size_t>(cat.size()), kUndef);
  p.trunc.resize(static_cast<std::size_t>(cat.size()));
  for (std::size_t x = a.find_first(); x != MorSet::npos; x = a.find_next(x))
    p.img[x] = static_cast<Mor>(x);
  p.normalize_zero();
  return sg.find(p);
}

// Atom index of the setwise image of the atom under the element's map.
int image_atom(const SmallCategory& cat, const SpectrumAll& spec, const PartialInjection& m,
               const MorSet& atom) {
  const Mor first = static_cast<Mor>(atom.find_first());
  const Mor y = m.img[static_cast<std::size_t>(first)];
  if (y < 0) return -1;
  return spec.rings[static_cast<std::size_t>(m.ran_obj)].atom_of[static_cast<std::size_t>(y)];
}

}  // namespace

RelationReport check_relations(const SmallCategory& cat, const ZigzagSemigroup& sg,
                               const SpectrumAll& spec, const OperatorFamily& fam,
                               unsigned mask) {
  if (fam.sg != &sg || fam.ops.size() != sg.elems.size())
    throw std::invalid_argument("check_relations: family does not match the semigroup");
  if (cat.mode != CarrierMode::kTotal)
    throw std::domain_error("check_relations: requires a total carrier");
  const int nel = sg.size();

  RelationReport report;

  // Elements grouped by (object, exact domain), for the union/cover relations.
  std::map<std::pair<Obj, MorSet>, std::vector<int>> by_domain;
  if (mask & (kRelUnions | kRelCovers)) {
    for (int i = 1; i < nel; ++i) {
      const auto& m = sg.elems[static_cast<std::size_t>(i)];
      by_domain[{m.dom_obj, m.domain()}].push_back(i);
    }
  }

  if (mask & kRelProducts) {
    RelChecker c(cat, sg, spec, fam, kRelProducts, "products");
    for (int i = 0; i < nel; ++i) {
      for (int j = 0; j < nel; ++j) {
        const int k = sg.compose(i, j);
        c.compare(fam.ops[static_cast<std::size_t>(i)].after(fam.ops[static_cast<std::size_t>(j)]),
                  fam.ops[static_cast<std::size_t>(k)],
                  "T[" + std::to_string(i) + "] T[" + std::to_string(j) + "] vs T[" +
                      std::to_string(k) + "]");
      }
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelAdjoints) {
    RelChecker c(cat, sg, spec, fam, kRelAdjoints, "adjoints");
    for (int i = 0; i < nel; ++i) {
      c.compare(fam.ops[static_cast<std::size_t>(i)].adjoint(),
                fam.ops[static_cast<std::size_t>(sg.rev[static_cast<std::size_t>(i)])],
                "T[" + std::to_string(i) + "]* vs T[rev]");
    }
    report.results.push_back(c.res);
  }

  const bool unions = (mask & kRelUnions) != 0;
  const bool covers = (mask & kRelCovers) != 0;
  if (unions || covers) {
    RelChecker cu(cat, sg, spec, fam, kRelUnions, "domain unions");
    RelChecker cc(cat, sg, spec, fam, kRelCovers, "domain covers");
    for (Obj v = 0; v < cat.num_objects(); ++v) {
      const DZeroFamily& d0 = spec.rings[static_cast<std::size_t>(v)].d0;
      for (int e = 0; e < d0.size(); ++e) {
        const MorSet& A = d0.sets[static_cast<std::size_t>(e)];
        std::vector<int> sub;
        for (int d = 0; d < d0.size(); ++d)
          if (d0.sets[static_cast<std::size_t>(d)].is_subset_of(A)) sub.push_back(d);
        if (sub.size() > 16) {
          if (unions) ++cu.res.skipped;
          if (covers) ++cc.res.skipped;
          continue;
        }
        auto dit = by_domain.find({v, A});
        if (dit == by_domain.end()) throw std::logic_error("check_relations: domain without element");
        const std::vector<int>& lhs_elems = dit->second;

        for (unsigned m = 1; m < (1u << sub.size()); ++m) {
          std::vector<int> family;
          MorSet uni(A.size());
          for (std::size_t b = 0; b < sub.size(); ++b) {
            if (m & (1u << b)) {
              family.push_back(sub[b]);
              uni |= d0.sets[static_cast<std::size_t>(sub[b])];
            }
          }
          const bool exact = (uni == A);
          const bool is_cover = covers && covers_set(cat, d0, family, e);
          if (!(exact && unions) && !(is_cover && covers)) continue;

          std::vector<int> ids;
          ids.reserve(family.size());
          for (int d : family) {
            const int idd = id_elem_index(cat, sg, d0.sets[static_cast<std::size_t>(d)], v);
            if (idd < 0) throw std::logic_error("check_relations: identity element missing");
            ids.push_back(idd);
          }

          auto run = [&](RelChecker& c) {
            PartialPerm rhs;
            std::string bad;
            if (!c.join_domain_projections(ids, &rhs, &bad)) {
              c.fail_instance("object " + cat.object_names[static_cast<std::size_t>(v)] + ": " + bad);
              return;
            }
            for (int i : lhs_elems) {
              c.compare(
                  fam.ops[static_cast<std::size_t>(i)].adjoint().after(fam.ops[static_cast<std::size_t>(i)]),
                  rhs,
                  "object " + cat.object_names[static_cast<std::size_t>(v)] + ", element " +
                      std::to_string(i) + ", family of " + std::to_string(family.size()) +
                      " sets");
            }
          };
          if (exact && unions) run(cu);
          if (is_cover && covers) run(cc);
        }
      }
    }
    if (unions) report.results.push_back(cu.res);
    if (covers) report.results.push_back(cc.res);
  }

  if (mask & kRelPointCollapse) {
    RelChecker c(cat, sg, spec, fam, kRelPointCollapse, "point collapse");
    for (int i = 1; i < nel; ++i) {
      const auto& m = sg.elems[static_cast<std::size_t>(i)];
      const MorSet dom = m.domain();
      const RingData& ring = spec.rings[static_cast<std::size_t>(m.dom_obj)];
      bool fixes_all = true;
      bool any_atom = false;
      for (std::size_t a = 0; a < ring.atoms.size(); ++a) {
        if (!ring.atoms[a].is_subset_of(dom)) continue;
        any_atom = true;
        if (image_atom(cat, spec, m, ring.atoms[a]) != static_cast<int>(a) ||
            m.ran_obj != m.dom_obj) {
          fixes_all = false;
          break;
        }
      }
      if (!any_atom || !fixes_all) continue;
      const int idd = sg.compose(sg.rev[static_cast<std::size_t>(i)], i);
      c.compare(fam.ops[static_cast<std::size_t>(i)], fam.ops[static_cast<std::size_t>(idd)],
                "element " + std::to_string(i) + " fixes every point of its domain");
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelMapCollapse) {
    RelChecker c(cat, sg, spec, fam, kRelMapCollapse, "map collapse");
    for (int i = 1; i < nel; ++i) {
      if (!pinj_is_identity(sg.elems[static_cast<std::size_t>(i)])) continue;
      const int idd = sg.compose(sg.rev[static_cast<std::size_t>(i)], i);
      c.compare(fam.ops[static_cast<std::size_t>(i)], fam.ops[static_cast<std::size_t>(idd)],
                "element " + std::to_string(i) + " is an identity map");
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelGenIsometry) {
    RelChecker c(cat, sg, spec, fam, kRelGenIsometry, "generator isometries");
    for (Mor a = 0; a < cat.size(); ++a) {
      const int ta = sg.tau_of[static_cast<std::size_t>(a)];
      const int unit = sg.unit_of[static_cast<std::size_t>(cat.src[static_cast<std::size_t>(a)])];
      c.compare(fam.ops[static_cast<std::size_t>(ta)].adjoint().after(fam.ops[static_cast<std::size_t>(ta)]),
                fam.ops[static_cast<std::size_t>(unit)], "generator " + cat.names[static_cast<std::size_t>(a)]);
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelGenProducts) {
    RelChecker c(cat, sg, spec, fam, kRelGenProducts, "generator products");
    for (Mor a = 0; a < cat.size(); ++a) {
      for (Mor b = 0; b < cat.size(); ++b) {
        if (cat.src[static_cast<std::size_t>(a)] != cat.dst[static_cast<std::size_t>(b)]) continue;
        const Mor ab = cat.compose(a, b);
        c.compare(fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(a)])].after(
                      fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(b)])]),
                  fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(ab)])],
                  "pair (" + cat.names[static_cast<std::size_t>(a)] + ", " +
                      cat.names[static_cast<std::size_t>(b)] + ")");
      }
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelGenJoins) {
    RelChecker c(cat, sg, spec, fam, kRelGenJoins, "generator joins");
    for (Mor a = 0; a < cat.size(); ++a) {
      for (Mor b = a + 1; b < cat.size(); ++b) {
        if (cat.dst[static_cast<std::size_t>(a)] != cat.dst[static_cast<std::size_t>(b)]) continue;
        auto range_proj = [&](Mor g) {
          const auto& t = fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(g)])];
          return t.after(t.adjoint());
        };
        PartialPerm lhs = range_proj(a).after(range_proj(b));
        ExtensionReport ext = minimal_common_extensions(cat, {a, b});
        PartialPerm rhs = PartialPerm::zeros(lhs.n);
        bool ok = true;
        for (Mor g : ext.minimal) {
          PartialPerm p = range_proj(g);
          if (!p.is_projection()) {
            c.fail_instance("range of generator " + cat.names[static_cast<std::size_t>(g)] +
                            " is not a projection");
            ok = false;
            break;
          }
          rhs = join_projections(rhs, p);
        }
        if (!ok) continue;
        c.compare(lhs, rhs,
                  "pair (" + cat.names[static_cast<std::size_t>(a)] + ", " +
                      cat.names[static_cast<std::size_t>(b)] + ")");
      }
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelGermCollapse) {
    RelChecker c(cat, sg, spec, fam, kRelGermCollapse, "point-map collapse");
    for (Mor a = 0; a < cat.size(); ++a) {
      for (Mor b = 0; b < cat.size(); ++b) {
        if (a == b) continue;
        if (cat.src[static_cast<std::size_t>(a)] != cat.src[static_cast<std::size_t>(b)] ||
            cat.dst[static_cast<std::size_t>(a)] != cat.dst[static_cast<std::size_t>(b)])
          continue;
        const auto& ma = sg.elems[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(a)])];
        const auto& mb = sg.elems[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(b)])];
        const RingData& ring = spec.rings[static_cast<std::size_t>(cat.src[static_cast<std::size_t>(a)])];
        bool same_points = true;
        for (const auto& atom : ring.atoms) {
          if (image_atom(cat, spec, ma, atom) != image_atom(cat, spec, mb, atom)) {
            same_points = false;
            break;
          }
        }
        if (!same_points) continue;
        c.compare(fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(a)])],
                  fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(b)])],
                  "generators " + cat.names[static_cast<std::size_t>(a)] + " and " +
                      cat.names[static_cast<std::size_t>(b)] + " act identically on points");
      }
    }
    report.results.push_back(c.res);
  }

  if (mask & kRelExhaustive) {
    RelChecker c(cat, sg, spec, fam, kRelExhaustive, "exhaustive joins");
    for (Obj v = 0; v < cat.num_objects(); ++v) {
      const std::vector<Mor> cone = set_to_vector(cat.obj_cone(v));
      if (cone.size() > 16) {
        ++c.res.skipped;
        continue;
      }
      const unsigned full = 1u << cone.size();
      // Subsets by size, then numerically: the first failure is minimal.
      for (std::size_t want = 1; want <= cone.size(); ++want) {
        for (unsigned m = 1; m < full; ++m) {
          if (popcount32(m) != static_cast<int>(want)) continue;
          std::vector<Mor> F;
          for (std::size_t b = 0; b < cone.size(); ++b)
            if (m & (1u << b)) F.push_back(cone[b]);
          if (!is_exhaustive(cat, v, F)) continue;
          PartialPerm rhs = PartialPerm::zeros(fam.ops.front().n);
          bool ok = true;
          for (Mor g : F) {
            const auto& t = fam.ops[static_cast<std::size_t>(sg.tau_of[static_cast<std::size_t>(g)])];
            PartialPerm p = t.after(t.adjoint());
            if (!p.is_projection()) {
              c.fail_instance("range of generator " + cat.names[static_cast<std::size_t>(g)] +
                              " is not a projection");
              ok = false;
              break;
            }
            rhs = join_projections(rhs, p);
          }
          if (!ok) continue;
          c.compare(fam.ops[static_cast<std::size_t>(sg.unit_of[static_cast<std::size_t>(v)])], rhs,
                    "object " + cat.object_names[static_cast<std::size_t>(v)] + ", family " +
                        name_list(cat, F));
        }
      }
    }
    report.results.push_back(c.res);
  }

  return report;
}

// ---- spectral bound for the cyclic shift -----------------------------------

ShiftBound shift_spectral_bound(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("shift_spectral_bound: p must be odd and at least 3");
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  for (int j = 0; j < p; ++j) s((j + 1) % p, j) = 1.0;
  Eigen::MatrixXd re = (s + s.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re);
  ShiftBound out;
  out.p = p;
  out.min_eig = es.eigenvalues().minCoeff();
  out.c = (1.0 + out.min_eig) / 2.0;
  return out;
}

// ---- separation estimate ----------------------------------------------------

SeparationReport separation_test(int p, int M, std::uint64_t trials, std::uint64_t seed) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("separation_test: p must be odd and >= 3");
  if (M < 1) throw std::invalid_argument("separation_test: M must be positive");
  const SmallCategory cat = build_sep(p, M);
  const int n = cat.size();

  auto theta = [&](int k) {
    Zigzag z;
    z.pairs.push_back({cat.mor("alpha" + std::to_string(k)), cat.mor("beta" + std::to_string(k))});
    z.pairs.push_back({cat.mor("beta0"), cat.mor("alpha0")});
    return z;
  };
  std::vector<PartialPerm> T;
  std::vector<MorSet> doms;
  for (int k = 1; k <= 4; ++k) {
    PartialInjection m = zigzag_map(cat, theta(k));
    T.push_back(perm_of_injection(m, n));
    doms.push_back(m.domain());
  }

  // Structural sanity: the first three actions share the full grid as domain,
  // the fourth only the rows with i not divisible by 3.
  MorSet grid(static_cast<std::size_t>(n)), partial(static_cast<std::size_t>(n));
  for (int i = 0; i < 3 * M; ++i) {
    for (int j = 0; j < p; ++j) {
      const Mor g = cat.mor("gamma_" + std::to_string(i) + "_" + std::to_string(j));
      grid.set(static_cast<std::size_t>(g));
      if (i % 3 != 0) partial.set(static_cast<std::size_t>(g));
    }
  }
  if (doms[0] != grid || doms[1] != grid || doms[2] != grid || doms[3] != partial)
    throw std::logic_error("separation_test: unexpected action domains");

  SeparationReport rep;
  rep.p = p;
  rep.M = M;
  rep.trials = trials;
  rep.seed = seed;
  rep.c = (1.0 - std::cos(kPi / p)) / 2.0;

  auto lhs_of = [&](const Eigen::VectorXcd& xi, double* p1, double* p2, double* p3) {
    const std::complex<double> a = pairing(T[0], xi);
    const std::complex<double> b = pairing(T[1], xi);
    const std::complex<double> c = pairing(T[2], xi);
    if (p1) *p1 = std::abs(a);
    if (p2) *p2 = std::abs(b);
    if (p3) *p3 = c.real();
    return std::abs(a) + std::abs(b) + 1.0 - c.real();
  };

  rep.min_lhs = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    std::normal_distribution<double> nd(0.0, 1.0);
    Eigen::VectorXcd xi(n);
    for (int j = 0; j < n; ++j) xi(j) = std::complex<double>(nd(rng), nd(rng));
    const double norm = xi.norm();
    if (norm == 0.0) continue;
    xi /= norm;
    const double lhs = lhs_of(xi, nullptr, nullptr, nullptr);
    if (lhs < rep.min_lhs) {
      rep.min_lhs = lhs;
      rep.argmin_trial = t;
    }
  }
  rep.pass = rep.min_lhs >= rep.c - 1e-9;

  auto add_structured = [&](const std::string& name, const Eigen::VectorXcd& xi) {
    SeparationReport::Structured s;
    s.name = name;
    s.lhs = lhs_of(xi, &s.p1, &s.p2, &s.p3);
    rep.structured.push_back(s);
  };
  {
    Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(n);
    xi(cat.mor("gamma_0_0")) = 1.0;
    add_structured("basis:gamma_0_0", xi);
  }
  {
    Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(n);
    xi(cat.identity[static_cast<std::size_t>(cat.obj("v"))]) = 1.0;
    add_structured("basis:v", xi);
  }
  {
    Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(n);
    const double w = 1.0 / std::sqrt(static_cast<double>(partial.count()));
    for (std::size_t x = partial.find_first(); x != MorSet::npos; x = partial.find_next(x))
      xi(static_cast<Eigen::Index>(x)) = w;
    add_structured("uniform:partial-grid", xi);
  }

  return rep;
}

// ---- Wiener-Hopf operators ---------------------------------------------------

WHOperator wiener_hopf(const GroupedMonoid& g, const GroupElem& t) {
  const int n = g.cat.size();
  WHOperator w;
  w.op = PartialPerm::zeros(n);
  w.edge_rows.resize(static_cast<std::size_t>(n));
  w.unknown_rows.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const GroupElem tb = g.model.mul(t, g.elem_of[static_cast<std::size_t>(j)]);
    switch (g.membership(tb)) {
      case Membership::kInCarrier: {
        const Mor i = g.find(tb);
        if (i < 0) throw std::logic_error("wiener_hopf: carrier member without an index");
        w.op.img[static_cast<std::size_t>(j)] = i;
        break;
      }
      case Membership::kBeyondCarrier:
        w.edge_rows.set(static_cast<std::size_t>(j));
        break;
      case Membership::kOutside:
        break;
      case Membership::kUnknown:
        w.unknown_rows.set(static_cast<std::size_t>(j));
        break;
    }
  }
  return w;
}

WHCertificate wh_membership(const GroupedMonoid& g, const GroupElem& t) {
  const SmallCategory& cat = g.cat;
  const int n = cat.size();
  const WHOperator w = wiener_hopf(g, t);

  MorSet cover(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    if (w.op.img[static_cast<std::size_t>(j)] >= 0) cover.set(static_cast<std::size_t>(j));

  struct Cand {
    Zigzag z;
    std::string desc;
    PartialPerm op;
    MorSet dom;
  };
  std::vector<Cand> cands;
  const Mor id0 = cat.identity[0];

  auto push_candidate = [&](const Zigzag& z, const std::string& desc) {
    PartialInjection m = zigzag_map(cat, z);
    Cand c;
    c.z = z;
    c.desc = desc;
    c.op = perm_of_injection(m, n);
    c.dom = MorSet(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (c.op.img[static_cast<std::size_t>(j)] < 0) continue;
      // The action realizes left translation by t, so it must agree with the
      // operator wherever both are defined.
      if (c.op.img[static_cast<std::size_t>(j)] != w.op.img[static_cast<std::size_t>(j)])
        throw std::logic_error("wh_membership: certificate disagrees with the operator");
      c.dom.set(static_cast<std::size_t>(j));
    }
    if (c.dom.any()) cands.push_back(std::move(c));
  };

  for (Mor m = 0; m < n; ++m) {
    // t = gamma^{-1} delta with delta = gamma t.
    const GroupElem d = g.model.mul(g.elem_of[static_cast<std::size_t>(m)], t);
    if (g.membership(d) == Membership::kInCarrier) {
      Zigzag z;
      z.pairs.push_back({m, g.find(d)});
      push_candidate(z, "inv(" + cat.names[static_cast<std::size_t>(m)] + ") * " +
                            cat.names[static_cast<std::size_t>(g.find(d))]);
    }
    // t = mu nu^{-1} with mu = t nu.
    const GroupElem mu = g.model.mul(t, g.elem_of[static_cast<std::size_t>(m)]);
    if (g.membership(mu) == Membership::kInCarrier) {
      Zigzag z;
      z.pairs.push_back({id0, g.find(mu)});
      z.pairs.push_back({m, id0});
      push_candidate(z, cat.names[static_cast<std::size_t>(g.find(mu))] + " * inv(" +
                            cat.names[static_cast<std::size_t>(m)] + ")");
    }
  }

  WHCertificate cert;
  MorSet uncovered = cover;
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = cands.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const std::size_t gain = (cands[i].dom & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == cands.size()) break;
    chosen.push_back(best);
    uncovered -= cands[best].dom;
  }
  cert.found = !uncovered.any();
  if (!cert.found) return cert;

  PartialPerm join = PartialPerm::zeros(n);
  for (std::size_t i : chosen) {
    cert.family.push_back(cands[i].z);
    cert.description.push_back(cands[i].desc);
    for (int j = 0; j < n; ++j)
      if (cands[i].op.img[static_cast<std::size_t>(j)] >= 0)
        join.img[static_cast<std::size_t>(j)] = cands[i].op.img[static_cast<std::size_t>(j)];
  }
  cert.verified = (join == w.op);
  cert.deviation = cert.verified ? 0.0 : op_norm_diff(join, w.op);
  return cert;
}

// ---- linear span and vector states -------------------------------------------

int family_span_dimension(const OperatorFamily& fam) {
  if (fam.ops.empty()) return 0;
  const int n = fam.ops.front().n;
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(fam.ops.size()),
                       static_cast<Eigen::Index>(n) * n);
  for (std::size_t r = 0; r < fam.ops.size(); ++r) {
    Eigen::MatrixXd m = fam.ops[r].to_matrix();
    rows.row(static_cast<Eigen::Index>(r)) =
        Eigen::Map<Eigen::VectorXd>(m.data(), static_cast<Eigen::Index>(n) * n);
  }
  if (rows.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
  return static_cast<int>(qr.rank());
}

ShadowReport weak_containment_shadow(const SmallCategory& cat, const ZigzagSemigroup& sg,
                                     const FiniteGroupoid& g, const OperatorFamily& regular) {
  if (regular.sg != &sg) throw std::invalid_argument("weak_containment_shadow: family mismatch");
  ShadowReport rep;
  for (int x = 0; x < static_cast<int>(g.active_point.size()); ++x) {
    if (!g.active_point[static_cast<std::size_t>(x)]) continue;
    std::vector<char> s(static_cast<std::size_t>(sg.size()), 0);
    for (int t = 0; t < sg.size(); ++t)
      s[static_cast<std::size_t>(t)] =
          (g.find_germ(t, x) == g.unit_germ[static_cast<std::size_t>(x)] &&
           g.unit_germ[static_cast<std::size_t>(x)] >= 0)
              ? 1
              : 0;

    const GroupoidPoint& pt = g.spec->points[static_cast<std::size_t>(x)];
    const RingData& ring = g.spec->rings[static_cast<std::size_t>(pt.vertex)];
    std::vector<Mor> order = set_to_vector(ring.atoms[static_cast<std::size_t>(pt.atom)]);
    for (Mor m : set_to_vector(cat.obj_cone(pt.vertex)))
      if (!ring.atoms[static_cast<std::size_t>(pt.atom)].test(static_cast<std::size_t>(m)))
        order.push_back(m);

    std::string found;
    for (Mor eta : order) {
      bool match = true;
      for (int t = 0; t < sg.size() && match; ++t) {
        const bool r = regular.ops[static_cast<std::size_t>(t)].img[static_cast<std::size_t>(eta)] == eta;
        match = (r == (s[static_cast<std::size_t>(t)] != 0));
      }
      if (match) {
        found = cat.names[static_cast<std::size_t>(eta)];
        break;
      }
    }
    if (found.empty()) rep.ok = false;
    rep.eta_per_point.push_back({x, found});
  }
  return rep;
}

}  // namespace lcsc
