#include "covlift/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace covlift;
namespace fs = std::filesystem;

namespace {

// 0 ok, 1 parse error, 2 domain error, 3 expectation mismatch
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;

void emit(const Report& rep, bool as_json) {
  std::cout << (as_json ? rep.json() : rep.text());
  if (as_json) std::cout << "\n";
}

// compare the report against the file's `expected:` block
int check_expected(const Report& rep, const std::string& path) {
  auto expected = parse_expected_block(path);
  int bad = 0;
  for (const auto& [key, want] : expected) {
    const std::string* got = rep.find(key);
    if (!got) {
      std::cerr << "check failed: missing key '" << key << "'\n";
      ++bad;
    } else if (*got != want) {
      std::cerr << "check failed: " << key << " = " << *got << ", expected "
                << want << "\n";
      ++bad;
    }
  }
  if (bad) return kExitMismatch;
  std::cerr << "check passed: " << expected.size() << " expectation(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Legendrian / surgery / covering invariants"};
  app.require_subcommand(1);
  bool as_json = false;
  bool check = false;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_flag("--check", check,
               "verify the file's expected: block; exit 3 on mismatch");

  std::string file;
  auto* cmd_grid = app.add_subcommand("grid", "classical invariants of a grid");
  cmd_grid->add_option("file", file)->required();
  auto* cmd_d3 = app.add_subcommand("d3", "d3 of a surgery presentation");
  cmd_d3->add_option("file", file)->required();
  auto* cmd_spin = app.add_subcommand("spin", "spin structures / Kirby scripts");
  cmd_spin->add_option("file", file)->required();
  auto* cmd_cover = app.add_subcommand("cover", "branched covering lift");
  cmd_cover->add_option("file", file)->required();
  auto* cmd_seifert = app.add_subcommand("seifert", "Seifert invariants");
  cmd_seifert->add_option("file", file)->required();
  auto* cmd_pipeline =
      app.add_subcommand("pipeline", "grid -> cover -> verdict");
  cmd_pipeline->add_option("file", file)->required();

  long long p = 2, total = 0, fixed = 0, lo = 0, hi = -1;
  auto* cmd_loc = app.add_subcommand("localize", "restriction rank table");
  cmd_loc->add_option("--p", p, "coefficient prime")->required();
  cmd_loc->add_option("--dim", total, "total real dimension")->required();
  cmd_loc->add_option("--fixed", fixed, "fixed real dimension")->required();
  cmd_loc->add_option("--lo", lo, "first degree");
  cmd_loc->add_option("--hi", hi, "one past the last degree");

  CLI11_PARSE(app, argc, argv);

  try {
    Report rep;
    std::string check_path = file;
    if (cmd_grid->parsed()) {
      rep = run_grid(parse_grid_file(file));
    } else if (cmd_d3->parsed()) {
      rep = run_d3(parse_presentation_file(file));
    } else if (cmd_spin->parsed()) {
      rep = run_spin(parse_presentation_file(file));
    } else if (cmd_cover->parsed()) {
      rep = run_cover(parse_scene_file(file));
    } else if (cmd_seifert->parsed()) {
      rep = run_seifert(parse_seifert_file(file));
    } else if (cmd_pipeline->parsed()) {
      PipelineFile pf = parse_pipeline_file(file);
      fs::path base = fs::path(file).parent_path();
      GridDiagram g = parse_grid_file((base / pf.grid_path).string());
      CoveringScene sc = parse_scene_file((base / pf.scene_path).string());
      rep = run_pipeline(g, sc);
    } else if (cmd_loc->parsed()) {
      if (hi < 0) hi = total + 2;
      rep = run_localize(p, total, fixed, lo, hi);
      check_path.clear();
    }
    emit(rep, as_json);
    if (check) {
      if (check_path.empty()) {
        std::cerr << "--check needs a file-based subcommand\n";
        return kExitParse;
      }
      return check_expected(rep, check_path);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == "Parse" ? kExitParse : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
