#pragma once

// JSON input/output for categories, validation reports, and amalgam requests.

#include "lcsc/category.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcsc {

// Malformed JSON or a schema violation in the input text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Well-formed input that describes an inconsistent category.
struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Schema:
//   {
//     "objects":   ["u", ...],
//     "morphisms": [{"id": "f", "src": "v", "dst": "u"}, ...],
//     "compose":   [["a", "b", "ab"], ...],
//     "mode":      "total" | "bounded",      (optional, default "total")
//     "bound":     7                          (bounded mode only)
//   }
// Identity morphisms are implied, named after their object, and must not be
// re-declared. Redundant but consistent compose entries are accepted;
// conflicting ones are a BuildError. Inputs past 4096 morphisms are refused.
SmallCategory category_from_json(const std::string& text);
std::string category_to_json(const SmallCategory& cat);

std::string validation_report_to_json(const ValidationReport& rep);

// Amalgam request: components are fixture names or inline category objects;
// the partition lists vertex classes as "componentIndex:objectName" strings;
// bound is the word-length cutoff for the assembled carrier.
struct AmalgamRequest {
  std::vector<SmallCategory> components;
  std::vector<std::vector<std::pair<int, std::string>>> partition;
  int bound = 0;
};
AmalgamRequest amalgam_request_from_json(const std::string& text);

}  // namespace lcsc
