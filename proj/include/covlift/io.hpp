#pragma once

#include "covlift/covering.hpp"
#include "covlift/grid.hpp"
#include "covlift/localization.hpp"
#include "covlift/seifert.hpp"

#include <map>
#include <string>
#include <vector>

namespace covlift {

// Ordered key/value report; serialized as text or JSON (rationals as "p/q").
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  void add(const std::string& key, const Rat& r) { add(key, rat_str(r)); }
  void add(const std::string& key, const Int& v) { add(key, v.str()); }
  const std::string* find(const std::string& key) const;
  std::string text() const;
  std::string json() const;
};

struct ParsedPresentation {
  Presentation p;
  std::optional<SpinAssignment> spin;
  MoveScript script;
};

struct SeifertFile {
  SeifertData data;
  std::optional<long long> cover_n;
  std::vector<Int> degrees;
};

struct PipelineFile {
  std::string grid_path;
  std::string scene_path;
};

GridDiagram parse_grid_file(const std::string& path);
ParsedPresentation parse_presentation_file(const std::string& path);
MoveScript parse_move_script(const std::string& bracket_text, bool brackets = true);
CoveringScene parse_scene_file(const std::string& path);
SeifertFile parse_seifert_file(const std::string& path);
PipelineFile parse_pipeline_file(const std::string& path);

// optional `expected:` block (key: value lines) used by --check
std::map<std::string, std::string> parse_expected_block(const std::string& path);

Report run_grid(const GridDiagram& g);
Report run_d3(const ParsedPresentation& pp);
Report run_spin(const ParsedPresentation& pp);
Report run_cover(const CoveringScene& scene);
Report run_seifert(const SeifertFile& sf);
Report run_localize(long long p, long long total, long long fixed, long long lo,
                    long long hi);
Report run_pipeline(const GridDiagram& g, const CoveringScene& scene);

std::string mat_str(const IntMat& M);
std::string spin_str(const SpinAssignment& s);
std::string vec_str(const IntVec& v);

}  // namespace covlift
