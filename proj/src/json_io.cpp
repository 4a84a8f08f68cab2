#include "lcsc/json_io.hpp"

#include "lcsc/fixtures.hpp"
#include "lcsc/report.hpp"

#include <json.hpp>

namespace lcsc {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxMorphisms = 4096;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key))
    throw ParseError(std::string("missing required key '") + key + "'");
  return node.at(key);
}

std::string require_string(const json& node, const char* what) {
  if (!node.is_string()) throw ParseError(std::string(what) + " must be a string");
  return node.get<std::string>();
}

SmallCategory category_from_node(const json& j) {
  if (!j.is_object()) throw ParseError("category description must be a JSON object");

  SmallCategory::Builder b;
  std::string mode = j.contains("mode") ? require_string(j.at("mode"), "mode") : "total";
  if (mode == "total") {
    b.mode = CarrierMode::kTotal;
  } else if (mode == "bounded") {
    b.mode = CarrierMode::kBounded;
    b.bound = require(j, "bound").is_number_integer() ? j.at("bound").get<std::int64_t>()
                                                      : throw ParseError("bound must be an integer");
  } else {
    throw ParseError("mode must be \"total\" or \"bounded\"");
  }

  const json& objects = require(j, "objects");
  if (!objects.is_array() || objects.empty())
    throw ParseError("objects must be a nonempty array");
  for (const auto& v : objects) b.add_object(require_string(v, "object name"));

  const json& morphisms = require(j, "morphisms");
  if (!morphisms.is_array()) throw ParseError("morphisms must be an array");
  if (objects.size() + morphisms.size() > kMaxMorphisms)
    throw ParseError("input too large: more than 4096 morphisms");
  for (const auto& m : morphisms) {
    if (!m.is_object()) throw ParseError("each morphism must be an object");
    b.add_morphism(require_string(require(m, "id"), "morphism id"),
                   require_string(require(m, "src"), "morphism src"),
                   require_string(require(m, "dst"), "morphism dst"));
  }

  if (j.contains("compose")) {
    const json& table = j.at("compose");
    if (!table.is_array()) throw ParseError("compose must be an array");
    for (const auto& row : table) {
      if (!row.is_array() || row.size() != 3)
        throw ParseError("each compose entry must be a triple [a, b, ab]");
      b.add_composition(require_string(row.at(0), "compose entry"),
                        require_string(row.at(1), "compose entry"),
                        require_string(row.at(2), "compose entry"));
    }
  }

  try {
    return b.build();
  } catch (const std::runtime_error& e) {
    throw BuildError(e.what());
  }
}

}  // namespace

SmallCategory category_from_json(const std::string& text) {
  return category_from_node(parse_text(text));
}

std::string category_to_json(const SmallCategory& cat) {
  json j;
  j["mode"] = cat.mode == CarrierMode::kTotal ? "total" : "bounded";
  if (cat.mode == CarrierMode::kBounded) j["bound"] = cat.bound;
  j["objects"] = cat.object_names;

  json morphisms = json::array();
  for (Mor a = 0; a < cat.size(); ++a) {
    if (cat.is_identity(a)) continue;
    morphisms.push_back({{"id", cat.names[static_cast<std::size_t>(a)]},
                         {"src", cat.object_names[static_cast<std::size_t>(cat.src[static_cast<std::size_t>(a)])]},
                         {"dst", cat.object_names[static_cast<std::size_t>(cat.dst[static_cast<std::size_t>(a)])]}});
  }
  j["morphisms"] = std::move(morphisms);

  json table = json::array();
  for (Mor a = 0; a < cat.size(); ++a) {
    for (Mor b = 0; b < cat.size(); ++b) {
      if (cat.is_identity(a) || cat.is_identity(b)) continue;
      const Mor c = cat.compose(a, b);
      if (c < 0) continue;
      table.push_back({cat.names[static_cast<std::size_t>(a)], cat.names[static_cast<std::size_t>(b)],
                       cat.names[static_cast<std::size_t>(c)]});
    }
  }
  j["compose"] = std::move(table);
  return j.dump(2);
}

std::string validation_report_to_json(const ValidationReport& rep) {
  json j;
  j["tool"] = std::string(kToolVersion);
  j["ok"] = rep.ok();
  j["checked_triples"] = rep.checked_triples;
  j["exhaustive"] = rep.exhaustive;
  json issues = json::array();
  for (const auto& issue : rep.issues)
    issues.push_back({{"kind", issue.kind}, {"detail", issue.detail}});
  j["issues"] = std::move(issues);
  return j.dump(2);
}

AmalgamRequest amalgam_request_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw ParseError("amalgam request must be a JSON object");

  AmalgamRequest req;
  const json& comps = require(j, "components");
  if (!comps.is_array() || comps.empty())
    throw ParseError("components must be a nonempty array");
  for (const auto& c : comps) {
    if (c.is_string()) {
      try {
        req.components.push_back(build_fixture(c.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("unknown fixture: ") + e.what());
      }
    } else {
      req.components.push_back(category_from_node(c));
    }
  }

  const json& partition = require(j, "partition");
  if (!partition.is_array()) throw ParseError("partition must be an array");
  for (const auto& block : partition) {
    if (!block.is_array()) throw ParseError("each partition block must be an array");
    std::vector<std::pair<int, std::string>> out;
    for (const auto& entry : block) {
      const std::string s = require_string(entry, "partition entry");
      const auto colon = s.find(':');
      if (colon == std::string::npos)
        throw ParseError("partition entries look like \"componentIndex:objectName\"");
      int idx = 0;
      try {
        idx = std::stoi(s.substr(0, colon));
      } catch (const std::exception&) {
        throw ParseError("partition entry has a non-numeric component index: " + s);
      }
      out.emplace_back(idx, s.substr(colon + 1));
    }
    req.partition.push_back(std::move(out));
  }

  const json& bound = require(j, "bound");
  if (!bound.is_number_integer()) throw ParseError("bound must be an integer");
  req.bound = bound.get<int>();
  return req;
}

}  // namespace lcsc
