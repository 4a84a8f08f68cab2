#include "lcsc/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsc {

namespace {

constexpr std::size_t kMaxIssues = 100;

void add_issue(ValidationReport& rep, std::string kind, std::string detail) {
  if (rep.issues.size() < kMaxIssues) {
    rep.issues.push_back({std::move(kind), std::move(detail)});
  } else if (rep.issues.size() == kMaxIssues) {
    rep.issues.push_back({"meta", "further issues suppressed"});
  }
}

}  // namespace

Mor SmallCategory::sigma(Mor a, Mor c) const {
  if (a < 0 || c < 0) return kUndef;
  return ldiv_[static_cast<std::size_t>(a) * names.size() + c];
}

MorSet SmallCategory::initial_segments(Mor b) const {
  const int n = size();
  MorSet out(n);
  for (Mor x = 0; x < n; ++x) {
    if (dst[x] == dst[b] && cone_[x].test(b)) out.set(x);
  }
  return out;
}

bool SmallCategory::approx(Mor a, Mor b) const { return cone_[a] == cone_[b]; }

bool SmallCategory::cap(Mor a, Mor b) const { return cone_[a].intersects(cone_[b]); }

MorSet SmallCategory::invertibles(Obj v) const {
  const int n = size();
  MorSet out(n);
  const Mor e = identity[v];
  for (Mor g = 0; g < n; ++g) {
    if (src[g] != v || dst[g] != v) continue;
    for (Mor h = 0; h < n; ++h) {
      if (src[h] != v || dst[h] != v) continue;
      if (compose(g, h) == e && compose(h, g) == e) {
        out.set(g);
        break;
      }
    }
  }
  return out;
}

bool SmallCategory::has_nontrivial_invertibles() const {
  for (Obj v = 0; v < num_objects(); ++v) {
    if (invertibles(v).count() > 1) return true;
  }
  return false;
}

Mor SmallCategory::mor(const std::string& name) const {
  auto it = mor_index_.find(name);
  return it == mor_index_.end() ? -1 : it->second;
}

Obj SmallCategory::obj(const std::string& name) const {
  auto it = obj_index_.find(name);
  return it == obj_index_.end() ? -1 : it->second;
}

void SmallCategory::finalize() {
  const std::size_t n = names.size();
  mor_index_.clear();
  obj_index_.clear();
  for (std::size_t i = 0; i < n; ++i) mor_index_[names[i]] = static_cast<Mor>(i);
  for (std::size_t v = 0; v < object_names.size(); ++v) obj_index_[object_names[v]] = static_cast<Obj>(v);

  ldiv_.assign(n * n, kUndef);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Mor c = table_[a * n + b];
      if (c >= 0 && ldiv_[a * n + c] == kUndef) ldiv_[a * n + c] = static_cast<Mor>(b);
    }
  }

  cone_.assign(n, MorSet(n));
  cone_exact_.assign(n, true);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Mor c = table_[a * n + b];
      if (c >= 0) {
        cone_[a].set(static_cast<std::size_t>(c));
      } else if (c == kTrunc) {
        cone_exact_[a] = false;
      }
    }
  }

  obj_cone_.assign(object_names.size(), MorSet(n));
  for (std::size_t b = 0; b < n; ++b) obj_cone_[dst[b]].set(b);
}

ValidationReport SmallCategory::validate() const {
  ValidationReport rep;
  const int n = size();
  const int no = num_objects();

  // Structure: index ranges, identity wiring, name uniqueness.
  for (Mor a = 0; a < n; ++a) {
    if (src[a] < 0 || src[a] >= no || dst[a] < 0 || dst[a] >= no) {
      add_issue(rep, "structure", "morphism '" + names[a] + "' has out-of-range endpoints");
    }
  }
  for (Obj v = 0; v < no; ++v) {
    const Mor e = identity[v];
    if (e < 0 || e >= n || src[e] != v || dst[e] != v || identity_of[e] != v) {
      add_issue(rep, "structure", "object '" + object_names[v] + "' lacks a well-formed identity");
    }
  }
  if (static_cast<int>(mor_index_.size()) != n) {
    add_issue(rep, "structure", "duplicate morphism names");
  }

  // Composition table shape: defined exactly on composable pairs (kTrunc
  // allowed only in bounded mode), products with matching endpoints.
  for (Mor a = 0; a < n && rep.issues.size() <= kMaxIssues; ++a) {
    for (Mor b = 0; b < n; ++b) {
      const Mor c = compose(a, b);
      const bool composable = (src[a] == dst[b]);
      if (!composable) {
        if (c != kUndef) add_issue(rep, "structure", "product defined for non-composable pair (" + names[a] + ", " + names[b] + ")");
        continue;
      }
      if (c == kUndef) {
        add_issue(rep, "structure", "missing product for composable pair (" + names[a] + ", " + names[b] + ")");
      } else if (c == kTrunc) {
        if (mode == CarrierMode::kTotal) {
          add_issue(rep, "structure", "truncated product in a total carrier at (" + names[a] + ", " + names[b] + ")");
        }
      } else if (src[c] != src[b] || dst[c] != dst[a]) {
        add_issue(rep, "structure", "product (" + names[a] + ")(" + names[b] + ") = " + names[c] + " has wrong endpoints");
      }
    }
  }

  // Identity laws.
  for (Mor a = 0; a < n; ++a) {
    if (compose(identity[dst[a]], a) != a || compose(a, identity[src[a]]) != a) {
      add_issue(rep, "identity", "identity law fails at '" + names[a] + "'");
    }
  }

  // Associativity over composable chains. Bounded carriers may truncate one
  // bracketing but not the other; only two defined-and-unequal results count.
  constexpr std::uint64_t kTripleCap = 40'000'000;
  std::uint64_t checked = 0;
  bool capped = false;
  for (Mor a = 0; a < n && !capped; ++a) {
    for (Mor b = 0; b < n && !capped; ++b) {
      if (src[a] != dst[b]) continue;
      const Mor ab = compose(a, b);
      for (Mor c = 0; c < n; ++c) {
        if (src[b] != dst[c]) continue;
        if (++checked > kTripleCap) {
          capped = true;
          break;
        }
        const Mor bc = compose(b, c);
        const Mor lhs = ab < 0 ? ab : compose(ab, c);
        const Mor rhs = bc < 0 ? bc : compose(a, bc);
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) {
          add_issue(rep, "associativity",
                    "(" + names[a] + " " + names[b] + ") " + names[c] + " = " + names[lhs] + " but " + names[a] +
                        " (" + names[b] + " " + names[c] + ") = " + names[rhs]);
        }
      }
    }
  }
  rep.checked_triples = capped ? kTripleCap : checked;
  rep.exhaustive = !capped;

  // Left cancellation: b |-> ab is injective for each a (on defined products).
  std::vector<Mor> seen(n);
  for (Mor a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), kUndef);
    for (Mor b = 0; b < n; ++b) {
      const Mor c = compose(a, b);
      if (c < 0) continue;
      if (seen[c] != kUndef) {
        add_issue(rep, "left-cancellation",
                  "'" + names[a] + "' composed with both '" + names[seen[c]] + "' and '" + names[b] + "' gives '" +
                      names[c] + "'");
      } else {
        seen[c] = b;
      }
    }
  }

  return rep;
}

SmallCategory SmallCategory::Builder::build() const {
  SmallCategory cat;
  cat.mode = mode;
  cat.bound = bound;

  std::unordered_map<std::string, Obj> oidx;
  for (const auto& v : objects) {
    if (oidx.count(v)) throw std::runtime_error("duplicate object name '" + v + "'");
    oidx[v] = static_cast<Obj>(cat.object_names.size());
    cat.object_names.push_back(v);
  }

  std::unordered_map<std::string, Mor> midx;
  auto add_mor = [&](const std::string& name, Obj s, Obj r, Obj ident) {
    if (midx.count(name)) throw std::runtime_error("duplicate morphism name '" + name + "'");
    midx[name] = static_cast<Mor>(cat.names.size());
    cat.names.push_back(name);
    cat.src.push_back(s);
    cat.dst.push_back(r);
    cat.identity_of.push_back(ident);
  };

  cat.identity.resize(objects.size());
  for (Obj v = 0; v < static_cast<Obj>(objects.size()); ++v) {
    cat.identity[v] = static_cast<Mor>(cat.names.size());
    add_mor(cat.object_names[v], v, v, v);
  }
  for (const auto& [name, s, r] : morphisms) {
    auto si = oidx.find(s);
    auto ri = oidx.find(r);
    if (si == oidx.end() || ri == oidx.end()) {
      throw std::runtime_error("morphism '" + name + "' references unknown object");
    }
    add_mor(name, si->second, ri->second, -1);
  }

  const std::size_t n = cat.names.size();
  cat.table_.assign(n * n, kUndef);
  const Mor dflt = (mode == CarrierMode::kBounded) ? kTrunc : kUndef;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (cat.src[a] != cat.dst[b]) continue;
      if (cat.identity_of[a] >= 0) {
        cat.table_[a * n + b] = static_cast<Mor>(b);
      } else if (cat.identity_of[b] >= 0) {
        cat.table_[a * n + b] = static_cast<Mor>(a);
      } else {
        cat.table_[a * n + b] = dflt;
      }
    }
  }

  for (const auto& [an, bn, cn] : compositions) {
    auto ai = midx.find(an);
    auto bi = midx.find(bn);
    auto ci = midx.find(cn);
    if (ai == midx.end() || bi == midx.end() || ci == midx.end()) {
      throw std::runtime_error("composition (" + an + ", " + bn + ") -> " + cn + " references unknown morphism");
    }
    const Mor a = ai->second, b = bi->second, c = ci->second;
    if (cat.src[a] != cat.dst[b]) {
      throw std::runtime_error("composition given for non-composable pair (" + an + ", " + bn + ")");
    }
    if (cat.src[c] != cat.src[b] || cat.dst[c] != cat.dst[a]) {
      throw std::runtime_error("composition (" + an + ", " + bn + ") -> " + cn + " has mismatched endpoints");
    }
    Mor& slot = cat.table_[static_cast<std::size_t>(a) * n + b];
    if (slot >= 0 && slot != c) {
      throw std::runtime_error("conflicting products for (" + an + ", " + bn + ")");
    }
    slot = c;
  }

  cat.finalize();
  return cat;
}

}  // namespace lcsc
