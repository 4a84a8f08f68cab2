#include "lcsc/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <stdexcept>

namespace lcsc {

namespace {

std::string group_name(int i) { return i == 0 ? "e" : "g" + std::to_string(i); }

}  // namespace

SmallCategory build_group(int n) {
  if (n < 1) throw std::invalid_argument("build_group: n must be positive");
  SmallCategory::Builder b;
  b.mode = CarrierMode::kTotal;
  b.add_object("e");
  for (int i = 1; i < n; ++i) b.add_morphism(group_name(i), "e", "e");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      b.add_composition(group_name(i), group_name(j), group_name((i + j) % n));
  return b.build();
}

SmallCategory build_par() {
  SmallCategory::Builder b;
  b.mode = CarrierMode::kTotal;
  b.add_object("u");
  b.add_object("v");
  b.add_morphism("f", "v", "u");
  b.add_morphism("g", "v", "u");
  return b.build();
}

SmallCategory build_kg(int n) {
  if (n < 1) throw std::invalid_argument("build_kg: n must be positive");
  SmallCategory::Builder b;
  b.mode = CarrierMode::kTotal;
  for (const char* o : {"u", "x", "y", "v"}) b.add_object(o);
  b.add_morphism("alpha", "x", "u");
  b.add_morphism("beta", "y", "u");
  for (int i = 1; i <= n; ++i) b.add_morphism("gamma" + std::to_string(i), "v", "x");
  for (int i = 1; i <= n; ++i) b.add_morphism("delta" + std::to_string(i), "v", "y");
  for (int i = 1; i <= n; ++i) b.add_morphism("eps" + std::to_string(i), "v", "u");
  for (int i = 1; i <= n; ++i) {
    b.add_composition("alpha", "gamma" + std::to_string(i), "eps" + std::to_string(i));
    b.add_composition("beta", "delta" + std::to_string(i), "eps" + std::to_string(i));
  }
  return b.build();
}

SmallCategory build_sep(int p, int M) {
  if (p < 3 || p % 2 == 0 || M < 1)
    throw std::invalid_argument("build_sep: p must be odd and >= 3, M positive");
  const int rows = 3 * M;
  SmallCategory::Builder b;
  b.mode = CarrierMode::kTotal;
  auto uname = [](int k) { return "u" + std::to_string(k); };
  // Sources of the lower (grid) arrows. The twisted matchings below equate
  // composite arrows, which forces their sources to coincide: rows i = 1, 2
  // mod 3 collapse to one object per i, and the i = 0 mod 3 cells collapse to
  // one object per j.
  auto zname = [](int i, int j) {
    return i % 3 == 0 ? "zcol_" + std::to_string(j) : "zrow_" + std::to_string(i);
  };
  auto gname = [](int i, int j) { return "gamma_" + std::to_string(i) + "_" + std::to_string(j); };
  auto dname = [](int i, int j) { return "delta_" + std::to_string(i) + "_" + std::to_string(j); };
  auto cname = [&](int k, int i, int j) { return "alpha" + std::to_string(k) + "." + gname(i, j); };
  auto bown = [&](int i, int j) { return "beta4." + dname(i, j); };

  for (int k = 0; k < 5; ++k) b.add_object(uname(k));
  b.add_object("v");
  b.add_object("w");
  for (int i = 1; i < rows; ++i)
    if (i % 3 != 0) b.add_object("zrow_" + std::to_string(i));
  for (int j = 0; j < p; ++j) b.add_object("zcol_" + std::to_string(j));

  for (int k = 0; k < 5; ++k) b.add_morphism("alpha" + std::to_string(k), "v", uname(k));
  for (int k = 0; k < 5; ++k) b.add_morphism("beta" + std::to_string(k), "w", uname(k));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < p; ++j) {
      b.add_morphism(gname(i, j), zname(i, j), "v");
      b.add_morphism(dname(i, j), zname(i, j), "w");
    }
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p; ++j) b.add_morphism(cname(k, i, j), zname(i, j), uname(k));
  for (int i = 0; i < rows; i += 3)
    for (int j = 0; j < p; ++j) b.add_morphism(bown(i, j), zname(i, j), uname(4));

  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p; ++j)
        b.add_composition("alpha" + std::to_string(k), gname(i, j), cname(k, i, j));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < p; ++j) {
      const int jm = (j - 1 + p) % p;
      const int im = (i - 3 + rows) % rows;
      b.add_composition("beta0", dname(i, j), cname(0, i, j));
      b.add_composition("beta1", dname(i, j), i % 3 == 1 ? cname(1, i, jm) : cname(1, i, j));
      b.add_composition("beta2", dname(i, j), i % 3 == 2 ? cname(2, i, jm) : cname(2, i, j));
      b.add_composition("beta3", dname(i, j), i % 3 == 0 ? cname(3, im, j) : cname(3, i, j));
      b.add_composition("beta4", dname(i, j), i % 3 != 0 ? cname(4, i, j) : bown(i, j));
    }
  return b.build();
}

namespace {

std::string tuple_name(const std::vector<std::int32_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::vector<std::vector<std::int32_t>> box_tuples(int dim, int L) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> cur(static_cast<std::size_t>(dim), 0);
  while (true) {
    out.push_back(cur);
    int i = dim - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == L) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

GroupedMonoid nbox_core(int dim, int L) {
  if (dim < 1 || L < 1) throw std::invalid_argument("build_nbox: need dim >= 1 and L >= 1");
  GroupedMonoid g;
  g.model.kind = GroupModel::kZk;
  g.model.rank = dim;
  g.box_bound = L;
  auto tuples = box_tuples(dim, L);
  SmallCategory::Builder b;
  b.mode = CarrierMode::kBounded;
  b.bound = L;
  b.add_object(tuple_name(tuples.front()));
  for (std::size_t i = 1; i < tuples.size(); ++i)
    b.add_morphism(tuple_name(tuples[i]), tuple_name(tuples.front()), tuple_name(tuples.front()));
  for (const auto& s : tuples)
    for (const auto& t : tuples) {
      std::vector<std::int32_t> sum(s.size());
      bool in = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        sum[i] = s[i] + t[i];
        in = in && sum[i] <= L;
      }
      if (in) b.add_composition(tuple_name(s), tuple_name(t), tuple_name(sum));
    }
  g.cat = b.build();
  g.elem_of.resize(static_cast<std::size_t>(g.cat.size()));
  for (const auto& t : tuples) {
    const Mor m = g.cat.mor(tuple_name(t));
    g.elem_of[static_cast<std::size_t>(m)] = GroupElem{t};
    g.lookup[GroupElem{t}] = m;
  }
  return g;
}

void reduce_append(std::vector<std::int32_t>& w, std::int32_t letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

std::vector<std::int32_t> word_mul(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b) {
  std::vector<std::int32_t> out = a;
  for (std::int32_t l : b) reduce_append(out, l);
  return out;
}

std::string letter_token(std::int32_t l) {
  const std::int32_t k = l > 0 ? l : -l;
  std::string t = k == 1 ? "a" : k == 2 ? "b" : "c" + std::to_string(k - 2);
  return l > 0 ? t : "~" + t;
}

std::string word_name(const std::vector<std::int32_t>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += letter_token(w[i]);
  }
  return s;
}

GroupedMonoid free_core(int rank, int L, const std::vector<std::vector<std::int32_t>>& generators,
                        bool positive_only) {
  GroupedMonoid g;
  g.model.kind = GroupModel::kFree;
  g.model.rank = rank;
  g.box_bound = L;

  std::set<std::vector<std::int32_t>> seen;
  std::deque<std::vector<std::int32_t>> queue;
  const std::size_t radius = static_cast<std::size_t>(L + 4);
  // Brace-init here would pick set::insert(initializer_list) and insert nothing.
  seen.insert(std::vector<std::int32_t>{});
  queue.push_back({});
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      auto nw = word_mul(w, s);
      if (nw.size() > radius || seen.count(nw)) continue;
      seen.insert(nw);
      queue.push_back(nw);
    }
  }
  std::vector<std::vector<std::int32_t>> carrier;
  for (const auto& w : seen) {
    g.known_in.insert(GroupElem{w});
    if (w.size() <= static_cast<std::size_t>(L)) carrier.push_back(w);
  }
  std::sort(carrier.begin(), carrier.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : word_name(a) < word_name(b);
  });

  SmallCategory::Builder b;
  b.mode = CarrierMode::kBounded;
  b.bound = L;
  b.add_object("e");
  for (const auto& w : carrier)
    if (!w.empty()) b.add_morphism(word_name(w), "e", "e");
  std::set<std::vector<std::int32_t>> in_carrier(carrier.begin(), carrier.end());
  for (const auto& x : carrier)
    for (const auto& y : carrier) {
      auto prod = word_mul(x, y);
      if (in_carrier.count(prod)) b.add_composition(word_name(x), word_name(y), word_name(prod));
    }
  g.cat = b.build();
  g.elem_of.resize(static_cast<std::size_t>(g.cat.size()));
  for (const auto& w : carrier) {
    const Mor m = g.cat.mor(word_name(w));
    g.elem_of[static_cast<std::size_t>(m)] = GroupElem{w};
    g.lookup[GroupElem{w}] = m;
  }
  if (positive_only) g.known_in.clear();  // membership decided syntactically
  return g;
}

}  // namespace

SmallCategory build_nbox(int dim, int L) { return nbox_core(dim, L).cat; }

GroupedMonoid build_nbox_grouped(int dim, int L) { return nbox_core(dim, L); }

GroupedMonoid build_free2_grouped(int L) {
  if (L < 1) throw std::invalid_argument("build_free2: L must be positive");
  return free_core(2, L, {{1}, {2}}, true);
}

SmallCategory build_free2(int L) { return build_free2_grouped(L).cat; }

GroupedMonoid build_fg_grouped(int n, int L) {
  if (n < 1 || L < 1) throw std::invalid_argument("build_fg: need n >= 1 and L >= 1");
  std::vector<std::vector<std::int32_t>> gens = {{1}, {2}};
  for (int i = 1; i <= n; ++i) gens.push_back({static_cast<std::int32_t>(2 + i)});
  for (int i = 1; i <= n; ++i) gens.push_back({-2, 1, static_cast<std::int32_t>(2 + i)});
  return free_core(2 + n, L, gens, false);
}

SmallCategory build_fg(int n, int L) { return build_fg_grouped(n, L).cat; }

SmallCategory build_fixture(const std::string& name) {
  auto args = [&name](const char* head) -> std::vector<int> {
    const std::string h(head);
    if (name.compare(0, h.size(), h) != 0 || name.size() < h.size() + 2 ||
        name[h.size()] != '(' || name.back() != ')')
      return {};
    std::vector<int> out;
    std::string inner = name.substr(h.size() + 1, name.size() - h.size() - 2);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t comma = inner.find(',', pos);
      if (comma == std::string::npos) comma = inner.size();
      try {
        out.push_back(std::stoi(inner.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        return {};
      }
      pos = comma + 1;
      if (comma == inner.size()) break;
    }
    return out;
  };
  if (name == "PAR") return build_par();
  if (auto a = args("GROUP"); a.size() == 1) return build_group(a[0]);
  if (auto a = args("KG"); a.size() == 1) return build_kg(a[0]);
  if (auto a = args("SEP"); a.size() == 2) return build_sep(a[0], a[1]);
  if (auto a = args("NSQ"); a.size() == 1) return build_nbox(2, a[0]);
  if (auto a = args("NBOX"); a.size() == 2) return build_nbox(a[0], a[1]);
  if (auto a = args("FREE2"); a.size() == 1) return build_free2(a[0]);
  if (auto a = args("FG"); a.size() == 2) return build_fg(a[0], a[1]);
  throw std::invalid_argument("build_fixture: unknown fixture '" + name + "'");
}

GroupElem GroupModel::identity() const {
  if (kind == kZk) return GroupElem{std::vector<std::int32_t>(static_cast<std::size_t>(rank), 0)};
  return GroupElem{};
}

GroupElem GroupModel::mul(const GroupElem& x, const GroupElem& y) const {
  if (kind == kZk) {
    GroupElem out = x;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += y.v[i];
    return out;
  }
  return GroupElem{word_mul(x.v, y.v)};
}

GroupElem GroupModel::inv(const GroupElem& x) const {
  GroupElem out;
  if (kind == kZk) {
    out.v.resize(x.v.size());
    for (std::size_t i = 0; i < x.v.size(); ++i) out.v[i] = -x.v[i];
    return out;
  }
  out.v.reserve(x.v.size());
  for (auto it = x.v.rbegin(); it != x.v.rend(); ++it) out.v.push_back(-*it);
  return out;
}

std::string GroupModel::name(const GroupElem& x) const {
  if (kind == kZk) return tuple_name(x.v);
  return word_name(x.v);
}

GroupElem GroupModel::parse(const std::string& s) const {
  if (kind == kZk) {
    std::string inner = s;
    if (!inner.empty() && inner.front() == '(' && inner.back() == ')')
      inner = inner.substr(1, inner.size() - 2);
    GroupElem out;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t comma = inner.find(',', pos);
      if (comma == std::string::npos) comma = inner.size();
      try {
        out.v.push_back(std::stoi(inner.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        throw std::invalid_argument("GroupModel::parse: bad coordinate in '" + s + "'");
      }
      pos = comma + 1;
      if (comma == inner.size()) break;
    }
    if (out.v.size() != static_cast<std::size_t>(rank))
      throw std::invalid_argument("GroupModel::parse: expected " + std::to_string(rank) +
                                  " coordinates");
    return out;
  }
  GroupElem out;
  if (s == "e" || s.empty()) return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of(". *", pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    pos = end + 1;
    if (tok.empty()) continue;
    bool inv_tok = false;
    if (tok[0] == '~') {
      inv_tok = true;
      tok = tok.substr(1);
    }
    std::int32_t letter;
    if (tok == "a")
      letter = 1;
    else if (tok == "b")
      letter = 2;
    else if (tok.size() >= 2 && tok[0] == 'c') {
      try {
        letter = static_cast<std::int32_t>(2 + std::stoi(tok.substr(1)));
      } catch (const std::exception&) {
        throw std::invalid_argument("GroupModel::parse: bad letter '" + tok + "'");
      }
    } else {
      throw std::invalid_argument("GroupModel::parse: bad letter '" + tok + "'");
    }
    if (letter > rank)
      throw std::invalid_argument("GroupModel::parse: letter beyond rank in '" + s + "'");
    reduce_append(out.v, inv_tok ? -letter : letter);
  }
  return out;
}

Membership GroupedMonoid::membership(const GroupElem& e) const {
  if (model.kind == GroupModel::kZk) {
    bool carrier = true;
    for (std::int32_t x : e.v) {
      if (x < 0) return Membership::kOutside;
      carrier = carrier && x <= box_bound;
    }
    return carrier ? Membership::kInCarrier : Membership::kBeyondCarrier;
  }
  if (known_in.empty()) {
    // Free monoid on a, b: membership is syntactic.
    for (std::int32_t l : e.v)
      if (l < 0) return Membership::kOutside;
    return e.v.size() <= static_cast<std::size_t>(box_bound) ? Membership::kInCarrier
                                                             : Membership::kBeyondCarrier;
  }
  if (known_in.count(e))
    return find(e) >= 0 ? Membership::kInCarrier : Membership::kBeyondCarrier;
  // Degree obstructions: letter a and each c_i occur with nonnegative total
  // degree in every product of the generators.
  long a_deg = 0;
  std::vector<long> c_deg(static_cast<std::size_t>(model.rank > 2 ? model.rank - 2 : 0), 0);
  for (std::int32_t l : e.v) {
    const std::int32_t k = l > 0 ? l : -l;
    const int sgn = l > 0 ? 1 : -1;
    if (k == 1) a_deg += sgn;
    if (k >= 3) c_deg[static_cast<std::size_t>(k - 3)] += sgn;
  }
  if (a_deg < 0) return Membership::kOutside;
  for (long d : c_deg)
    if (d < 0) return Membership::kOutside;
  return Membership::kUnknown;
}

}  // namespace lcsc
