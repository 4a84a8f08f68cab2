#include "lcsc/lcsc.h"

#include "lcsc/alignment.hpp"
#include "lcsc/category.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/json_io.hpp"
#include "lcsc/operator_lab.hpp"
#include "lcsc/report.hpp"
#include "lcsc/spectrum.hpp"
#include "lcsc/zigzag.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#define LCSC_EXPORT __attribute__((visibility("default")))

using nlohmann::json;

extern "C" struct lcsc_category {
  lcsc::SmallCategory cat;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* alloc_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Map library exceptions onto status codes. invalid_argument and
// domain_error must be tested before their base logic_error.
template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const lcsc::ParseError& e) {
    return fail(LCSC_ERR_PARSE, e.what());
  } catch (const lcsc::BuildError& e) {
    return fail(LCSC_ERR_BUILD, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LCSC_ERR_ARG, e.what());
  } catch (const std::domain_error& e) {
    return fail(LCSC_ERR_ARG, e.what());
  } catch (const std::logic_error& e) {
    return fail(LCSC_ERR_INTERNAL, e.what());
  } catch (const std::runtime_error& e) {
    return fail(LCSC_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(LCSC_ERR_INTERNAL, e.what());
  }
}

double round12(double x) { return std::round(x * 1e12) / 1e12; }

json base_report(const std::string& input_for_hash) {
  json j;
  j["tool"] = std::string(lcsc::kToolVersion);
  j["input_hash"] = lcsc::hash_hex(input_for_hash);
  return j;
}

lcsc::GroupedMonoid grouped_from_name(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')')
    throw std::invalid_argument("monoid names look like NBOX(2,20), NSQ(20), FREE2(4), FG(2,4)");
  const std::string head = name.substr(0, open);
  std::vector<int> args;
  std::string body = name.substr(open + 1, name.size() - open - 2);
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    const auto comma = body.find(',', pos);
    const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    args.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (head == "NBOX" && args.size() == 2) return lcsc::build_nbox_grouped(args[0], args[1]);
  if (head == "NSQ" && args.size() == 1) return lcsc::build_nbox_grouped(2, args[0]);
  if (head == "FREE2" && args.size() == 1) return lcsc::build_free2_grouped(args[0]);
  if (head == "FG" && args.size() == 2) return lcsc::build_fg_grouped(args[0], args[1]);
  throw std::invalid_argument("unknown monoid: " + name);
}

json analyze_json(const lcsc::SmallCategory& cat, const char* options_json) {
  bool want_semigroup = false, want_spectrum = false, want_alignment = false;
  int groupoid_index = 0;
  const bool total = cat.mode == lcsc::CarrierMode::kTotal;

  if (options_json == nullptr || *options_json == '\0') {
    want_semigroup = want_spectrum = want_alignment = total;
    groupoid_index = total ? 2 : 0;
  } else {
    json opts;
    try {
      opts = json::parse(options_json);
    } catch (const json::exception& e) {
      throw lcsc::ParseError(std::string("invalid options: ") + e.what());
    }
    if (!opts.is_object()) throw lcsc::ParseError("options must be a JSON object");
    want_semigroup = opts.value("semigroup", false);
    want_spectrum = opts.value("spectrum", false);
    want_alignment = opts.value("alignment", false);
    if (opts.contains("groupoid")) {
      if (!opts.at("groupoid").is_number_integer())
        throw lcsc::ParseError("groupoid option must be 1 or 2");
      groupoid_index = opts.at("groupoid").get<int>();
      if (groupoid_index != 1 && groupoid_index != 2)
        throw lcsc::ParseError("groupoid option must be 1 or 2");
    }
  }

  if (!total && (want_semigroup || want_spectrum || want_alignment || groupoid_index))
    throw std::invalid_argument("analysis beyond validation requires a total carrier");

  json j = base_report(lcsc::category_to_json(cat));
  j["mode"] = total ? "total" : "bounded";
  j["objects"] = cat.num_objects();
  j["morphisms"] = cat.size();

  const lcsc::ValidationReport val = cat.validate();
  j["validation"] = json::parse(lcsc::validation_report_to_json(val));

  if (want_alignment) {
    const lcsc::AlignReport a = lcsc::is_finitely_aligned(cat);
    j["alignment"] = {{"finitely_aligned", a.finitely_aligned}, {"max_join", a.max_join}};
  }

  if (want_semigroup || want_spectrum || groupoid_index) {
    const lcsc::ZigzagSemigroup sg = lcsc::generate_semigroup(cat);
    if (want_semigroup) j["semigroup"] = {{"size", sg.size()}};

    if (want_spectrum || groupoid_index) {
      const lcsc::SpectrumAll spec = lcsc::build_spectrum_all(cat);
      if (want_spectrum) {
        json per_object = json::array(), boundary_per_object = json::array();
        int total_points = 0, total_max = 0, total_boundary = 0;
        for (lcsc::Obj v = 0; v < cat.num_objects(); ++v) {
          int count = 0, bnd = 0;
          for (std::size_t p = 0; p < spec.points.size(); ++p) {
            if (spec.points[p].vertex != v) continue;
            ++count;
            if (spec.boundary[p]) ++bnd;
          }
          per_object.push_back(count);
          boundary_per_object.push_back(bnd);
          total_points += count;
          total_boundary += bnd;
        }
        for (std::size_t p = 0; p < spec.points.size(); ++p)
          if (spec.maximal[p]) ++total_max;
        j["spectrum"] = {{"points", total_points},
                         {"per_object", per_object},
                         {"maximal", total_max},
                         {"boundary", total_boundary},
                         {"boundary_per_object", boundary_per_object}};
      }
      if (groupoid_index) {
        const lcsc::FiniteGroupoid g = lcsc::build_groupoid(cat, sg, spec, groupoid_index);
        const lcsc::HausdorffReport h = lcsc::is_hausdorff(g);
        j["groupoid"] = {{"index", groupoid_index},
                         {"germ_count", g.size()},
                         {"hausdorff", h.hausdorff}};
      }
    }
  }
  return j;
}

json numerics_json(const char* request_json) {
  if (request_json == nullptr) throw lcsc::ParseError("missing request");
  json req;
  try {
    req = json::parse(request_json);
  } catch (const json::exception& e) {
    throw lcsc::ParseError(std::string("invalid request: ") + e.what());
  }
  if (!req.is_object() || !req.contains("op") || !req.at("op").is_string())
    throw lcsc::ParseError("request needs a string \"op\" field");
  const std::string op = req.at("op").get<std::string>();

  json j = base_report(request_json);
  j["op"] = op;

  if (op == "shift-bound") {
    if (!req.contains("p") || !req.at("p").is_number_integer())
      throw lcsc::ParseError("shift-bound needs an integer p");
    const lcsc::ShiftBound b = lcsc::shift_spectral_bound(req.at("p").get<int>());
    j["p"] = b.p;
    j["min_eig"] = round12(b.min_eig);
    j["c"] = round12(b.c);
    return j;
  }

  if (op == "separation") {
    for (const char* k : {"p", "M", "trials", "seed"})
      if (!req.contains(k) || !req.at(k).is_number_integer())
        throw lcsc::ParseError(std::string("separation needs an integer ") + k);
    const lcsc::SeparationReport r =
        lcsc::separation_test(req.at("p").get<int>(), req.at("M").get<int>(),
                              req.at("trials").get<std::uint64_t>(),
                              req.at("seed").get<std::uint64_t>());
    j["p"] = r.p;
    j["M"] = r.M;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["c"] = r.c;
    j["min_lhs"] = r.min_lhs;
    j["argmin_trial"] = r.argmin_trial;
    j["pass"] = r.pass;
    json structured = json::array();
    for (const auto& s : r.structured)
      structured.push_back({{"name", s.name},
                            {"pairings", {round12(s.p1), round12(s.p2), round12(s.p3)}},
                            {"lhs", round12(s.lhs)}});
    j["structured"] = structured;
    return j;
  }

  if (op == "wiener-hopf") {
    if (!req.contains("monoid") || !req.at("monoid").is_string() || !req.contains("t") ||
        !req.at("t").is_string())
      throw lcsc::ParseError("wiener-hopf needs string fields \"monoid\" and \"t\"");
    const lcsc::GroupedMonoid g = grouped_from_name(req.at("monoid").get<std::string>());
    const lcsc::GroupElem t = g.model.parse(req.at("t").get<std::string>());
    const lcsc::WHOperator w = lcsc::wiener_hopf(g, t);
    const lcsc::WHCertificate cert = lcsc::wh_membership(g, t);
    j["monoid"] = req.at("monoid");
    j["t"] = g.model.name(t);
    j["carrier"] = g.cat.size();
    j["defined_rows"] =
        static_cast<int>(std::count_if(w.op.img.begin(), w.op.img.end(), [](int i) { return i >= 0; }));
    j["edge_rows"] = static_cast<int>(w.edge_rows.count());
    j["unknown_rows"] = static_cast<int>(w.unknown_rows.count());
    j["found"] = cert.found;
    j["verified"] = cert.verified;
    j["deviation"] = cert.deviation;
    j["certificates"] = cert.description;
    return j;
  }

  throw std::invalid_argument("unknown op: " + op);
}

}  // namespace

extern "C" {

LCSC_EXPORT const char* lcsc_version(void) { return "lcsc 1.0.0"; }

LCSC_EXPORT int lcsc_category_from_json(const char* json_text, lcsc_category** out) {
  if (out == nullptr) return fail(LCSC_ERR_ARG, "out must not be NULL");
  *out = nullptr;
  if (json_text == nullptr) return fail(LCSC_ERR_ARG, "json_text must not be NULL");
  return guarded([&] {
    auto cat = new lcsc_category{lcsc::category_from_json(json_text)};
    *out = cat;
    return LCSC_OK;
  });
}

LCSC_EXPORT int lcsc_fixture(const char* name, lcsc_category** out) {
  if (out == nullptr) return fail(LCSC_ERR_ARG, "out must not be NULL");
  *out = nullptr;
  if (name == nullptr) return fail(LCSC_ERR_ARG, "name must not be NULL");
  return guarded([&] {
    auto cat = new lcsc_category{lcsc::build_fixture(name)};
    *out = cat;
    return LCSC_OK;
  });
}

LCSC_EXPORT void lcsc_category_free(lcsc_category* cat) { delete cat; }

LCSC_EXPORT int lcsc_validate(const lcsc_category* cat, char** report_json) {
  if (cat == nullptr || report_json == nullptr)
    return fail(LCSC_ERR_ARG, "cat and report_json must not be NULL");
  *report_json = nullptr;
  return guarded([&] {
    *report_json = alloc_string(lcsc::validation_report_to_json(cat->cat.validate()));
    return *report_json ? LCSC_OK : fail(LCSC_ERR_INTERNAL, "out of memory");
  });
}

LCSC_EXPORT int lcsc_analyze(const lcsc_category* cat, const char* options_json, char** report_json) {
  if (cat == nullptr || report_json == nullptr)
    return fail(LCSC_ERR_ARG, "cat and report_json must not be NULL");
  *report_json = nullptr;
  return guarded([&] {
    *report_json = alloc_string(analyze_json(cat->cat, options_json).dump(2));
    return *report_json ? LCSC_OK : fail(LCSC_ERR_INTERNAL, "out of memory");
  });
}

LCSC_EXPORT int lcsc_numerics(const char* request_json, char** report_json) {
  if (report_json == nullptr) return fail(LCSC_ERR_ARG, "report_json must not be NULL");
  *report_json = nullptr;
  return guarded([&] {
    *report_json = alloc_string(numerics_json(request_json).dump(2));
    return *report_json ? LCSC_OK : fail(LCSC_ERR_INTERNAL, "out of memory");
  });
}

LCSC_EXPORT const char* lcsc_last_error(void) { return g_last_error.c_str(); }

LCSC_EXPORT void lcsc_string_free(char* s) { std::free(s); }

}  // extern "C"
