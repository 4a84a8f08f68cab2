// Command-line front end. Talks to the library exclusively through the C API
// in lcsc/lcsc.h; everything here is argument plumbing and JSON assembly.

#include "lcsc/lcsc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// 0 = success, 1 = operation failed, 2 = usage/parse error.
int exit_code_for(int status) {
  switch (status) {
    case LCSC_OK:
      return 0;
    case LCSC_ERR_PARSE:
    case LCSC_ERR_ARG:
      return 2;
    default:
      return 1;
  }
}

int report_failure(int status) {
  std::cerr << "error: " << lcsc_last_error() << "\n";
  return exit_code_for(status);
}

// Build a category handle from --fixture or --input. Returns an exit code
// through *cli_exit when the failure happened before reaching the library.
int load_category(const std::string& fixture, const std::string& input, lcsc_category** out,
                  int* cli_exit) {
  *cli_exit = -1;
  if (!fixture.empty()) return lcsc_fixture(fixture.c_str(), out);
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    *cli_exit = 2;
    return LCSC_ERR_ARG;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return lcsc_category_from_json(text.c_str(), out);
}

int print_and_free(char* report) {
  std::cout << report << "\n";
  lcsc_string_free(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"category analysis tool"};
  app.require_subcommand(1);

  std::string fixture, input;

  auto* validate = app.add_subcommand("validate", "check the axioms of a category description");
  auto* vf = validate->add_option("--fixture", fixture, "built-in fixture name");
  auto* vi = validate->add_option("--input", input, "JSON file describing the category");
  vf->excludes(vi);

  auto* analyze = app.add_subcommand("analyze", "run analyses on a category");
  auto* af = analyze->add_option("--fixture", fixture, "built-in fixture name");
  auto* ai = analyze->add_option("--input", input, "JSON file describing the category");
  af->excludes(ai);
  bool opt_spectrum = false, opt_alignment = false, opt_semigroup = false;
  int opt_groupoid = 0;
  analyze->add_flag("--spectrum", opt_spectrum, "count filter points, maximal and boundary ones");
  analyze->add_flag("--alignment", opt_alignment, "check finite alignment and join sizes");
  analyze->add_flag("--semigroup", opt_semigroup, "size of the zigzag action semigroup");
  analyze->add_option("--groupoid", opt_groupoid, "build the germ groupoid for index 1 or 2");

  auto* numerics = app.add_subcommand("numerics", "numeric experiments");
  int shift_p = 0;
  std::vector<std::int64_t> separation;
  std::vector<std::string> wiener;
  auto* ns = numerics->add_option("--shift-bound", shift_p,
                                  "smallest eigenvalue of the symmetrized cyclic shift (odd p)");
  auto* nsep = numerics->add_option("--separation", separation,
                                    "P M TRIALS SEED: random-vector separation estimate");
  nsep->expected(4);
  auto* nwh = numerics->add_option("--wiener-hopf", wiener,
                                   "MONOID T: translation compression and its certificate");
  nwh->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (validate->parsed() || analyze->parsed()) {
    if (fixture.empty() && input.empty()) {
      std::cerr << "error: one of --fixture or --input is required\n";
      return 2;
    }
    lcsc_category* cat = nullptr;
    int cli_exit = -1;
    int status = load_category(fixture, input, &cat, &cli_exit);
    if (status != LCSC_OK) return cli_exit >= 0 ? cli_exit : report_failure(status);

    char* report = nullptr;
    if (validate->parsed()) {
      status = lcsc_validate(cat, &report);
      lcsc_category_free(cat);
      if (status != LCSC_OK) return report_failure(status);
      const bool ok = nlohmann::json::parse(report).value("ok", false);
      print_and_free(report);
      return ok ? 0 : 1;
    }

    nlohmann::json opts = nlohmann::json::object();
    if (opt_spectrum) opts["spectrum"] = true;
    if (opt_alignment) opts["alignment"] = true;
    if (opt_semigroup) opts["semigroup"] = true;
    if (opt_groupoid) opts["groupoid"] = opt_groupoid;
    const std::string opts_text = opts.empty() ? std::string() : opts.dump();
    status = lcsc_analyze(cat, opts_text.c_str(), &report);
    lcsc_category_free(cat);
    if (status != LCSC_OK) return report_failure(status);
    return print_and_free(report);
  }

  // numerics
  nlohmann::json req;
  if (ns->count()) {
    req = {{"op", "shift-bound"}, {"p", shift_p}};
  } else if (nsep->count()) {
    req = {{"op", "separation"},
           {"p", separation[0]},
           {"M", separation[1]},
           {"trials", separation[2]},
           {"seed", separation[3]}};
  } else if (nwh->count()) {
    req = {{"op", "wiener-hopf"}, {"monoid", wiener[0]}, {"t", wiener[1]}};
  } else {
    std::cerr << "error: numerics needs one of --shift-bound, --separation, --wiener-hopf\n";
    return 2;
  }
  char* report = nullptr;
  const int status = lcsc_numerics(req.dump().c_str(), &report);
  if (status != LCSC_OK) return report_failure(status);
  return print_and_free(report);
}
