#include "covlift/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace covlift {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("Parse", "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(strip_comment(line));
  return lines;
}

// whitespace / comma separated tokens
std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Int parse_int(const std::string& t) {
  try {
    std::string s = t;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    return Int(s);
  } catch (const std::exception&) {
    fail("Parse", "bad integer '" + t + "'");
  }
}

long long parse_ll(const std::string& t) {
  return parse_int(t).convert_to<long long>();
}

bool parse_bool(const std::string& t) {
  if (t == "true") return true;
  if (t == "false") return false;
  fail("Parse", "expected true/false, got '" + t + "'");
}

// does the line look like `key: ...` for an identifier key?
bool key_line(const std::string& line, std::string* key, std::string* rest) {
  std::string t = trim(line);
  auto pos = t.find(':');
  if (pos == std::string::npos) return false;
  std::string k = trim(t.substr(0, pos));
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  if (key) *key = k;
  if (rest) *rest = trim(t.substr(pos + 1));
  return true;
}

// `value` may open a [...] list continued over following lines
std::string gather_brackets(const std::vector<std::string>& lines, size_t& i,
                            std::string value) {
  auto balance = [](const std::string& s) {
    long b = 0;
    for (char c : s) {
      if (c == '[') ++b;
      if (c == ']') --b;
    }
    return b;
  };
  long b = balance(value);
  while (b > 0) {
    if (++i >= lines.size()) fail("Parse", "unterminated '['");
    value += " " + lines[i];
    b = balance(value);
  }
  if (b < 0) fail("Parse", "unbalanced ']'");
  return value;
}

std::string strip_brackets(const std::string& s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail("Parse", "expected a [...] list, got '" + t + "'");
  return t.substr(1, t.size() - 2);
}

IntVec parse_int_list(const std::string& bracket) {
  auto ts = tokens(strip_brackets(bracket));
  IntVec v(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) v(i) = parse_int(ts[i]);
  return v;
}

// split on commas at paren depth 0
std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  long depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::string t = trim(cur);
  if (!t.empty() || !out.empty()) out.push_back(t);
  return out;
}

// top-level `(...)` groups of a string
std::vector<std::string> paren_groups(const std::string& s) {
  std::vector<std::string> out;
  long depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') {
      if (depth++ == 0) {
        cur.clear();
        continue;
      }
    } else if (c == ')') {
      if (--depth == 0) {
        out.push_back(cur);
        continue;
      }
      if (depth < 0) fail("Parse", "unbalanced ')'");
    }
    if (depth > 0) cur += c;
  }
  if (depth != 0) fail("Parse", "unbalanced '('");
  return out;
}

SpinAssignment parse_bits(const std::string& s) {
  SpinAssignment bits;
  for (const auto& t : tokens(s)) {
    Int b = parse_int(t);
    if (b != 0 && b != 1) fail("Parse", "spin bits must be 0/1");
    bits.push_back(b == 1 ? 1 : 0);
  }
  return bits;
}

struct PresentationFields {
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> rows;
  std::optional<IntVec> rot;
  std::optional<SpinAssignment> spin;
  MoveScript script;
};

// consumes `components/L/rot/spin/script` keys starting at lines[i]; leaves i
// at the first line it does not own
PresentationFields parse_presentation_fields(const std::vector<std::string>& lines,
                                             size_t& i) {
  PresentationFields f;
  bool in_matrix = false;
  for (; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::string key, rest;
    if (key_line(line, &key, &rest)) {
      in_matrix = false;
      if (key == "components") {
        f.labels = tokens(strip_brackets(gather_brackets(lines, i, rest)));
      } else if (key == "L") {
        if (!rest.empty()) fail("Parse", "matrix rows start on the next line");
        in_matrix = true;
      } else if (key == "rot") {
        f.rot = parse_int_list(gather_brackets(lines, i, rest));
      } else if (key == "spin") {
        f.spin = parse_bits(strip_brackets(gather_brackets(lines, i, rest)));
      } else if (key == "script") {
        f.script = parse_move_script(gather_brackets(lines, i, rest));
      } else {
        return f;  // not ours
      }
      continue;
    }
    if (!in_matrix) return f;
    auto ts = tokens(line);
    std::vector<Int> row;
    for (const auto& t : ts) row.push_back(parse_int(t));
    f.rows.push_back(std::move(row));
  }
  return f;
}

Presentation build_presentation(const PresentationFields& f) {
  const size_t n = f.rows.size();
  IntMat L(n, n);
  for (size_t r = 0; r < n; ++r) {
    if (f.rows[r].size() != n) fail("Parse", "linking matrix must be square");
    for (size_t c = 0; c < n; ++c) L(r, c) = f.rows[r][c];
  }
  return Presentation::make(std::move(L), f.rot, f.labels);
}

Rat parse_rat_tok(const std::string& t) { return parse_rat(t); }

std::string bits_str(const SpinAssignment& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i)
    out += (i ? " " : "") + std::to_string(s[i]);
  return out + ")";
}

}  // namespace

std::string spin_str(const SpinAssignment& s) { return bits_str(s); }

std::string vec_str(const IntVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + v(i).str();
  return out + ")";
}

std::string mat_str(const IntMat& M) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    out += r ? ",[" : "[";
    for (Eigen::Index c = 0; c < M.cols(); ++c)
      out += (c ? "," : "") + M(r, c).str();
    out += "]";
  }
  return out + "]";
}

const std::string* Report::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& [k, v] : fields) {
    if (k == "verdict")
      os << "verdict: " << v << "\n";
    else
      os << k << " = " << v << "\n";
  }
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump(2);
}

MoveScript parse_move_script(const std::string& text, bool brackets) {
  std::string body = brackets ? strip_brackets(text) : trim(text);
  MoveScript script;
  size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < body.size() && (std::isalnum(static_cast<unsigned char>(body[j]))
                               || body[j] == '_'))
      ++j;
    std::string name = body.substr(i, j - i);
    if (j >= body.size() || body[j] != '(')
      fail("Parse", "expected '(' after move name '" + name + "'");
    size_t k = j;
    long depth = 0;
    do {
      if (body[k] == '(') ++depth;
      if (body[k] == ')') --depth;
      ++k;
    } while (k < body.size() && depth > 0);
    if (depth != 0) fail("Parse", "unterminated move arguments");
    std::string args = body.substr(j + 1, k - j - 2);
    i = k;

    Move m{};
    if (name == "blowup") {
      m.kind = Move::BlowUp;
      // blowup(sign; l1,...,ln): the sign is separated by ';'
      auto semi = args.find(';');
      std::string sign_s, rest;
      if (semi != std::string::npos) {
        sign_s = trim(args.substr(0, semi));
        rest = args.substr(semi + 1);
      } else {
        sign_s = trim(args);
      }
      Int sg = parse_int(sign_s);
      if (sg != 1 && sg != -1) fail("Parse", "blowup sign must be +1 or -1");
      m.sign = sg == 1 ? 1 : -1;
      auto ls = tokens(rest);
      m.l = IntVec(ls.size());
      for (size_t t = 0; t < ls.size(); ++t) m.l(t) = parse_int(ls[t]);
    } else if (name == "slide") {
      m.kind = Move::Slide;
      auto parts = split_top_commas(args);
      if (parts.size() != 3) fail("Parse", "slide takes (i, j, sign)");
      m.i = static_cast<int>(parse_ll(parts[0])) - 1;
      m.j = static_cast<int>(parse_ll(parts[1])) - 1;
      Int sg = parse_int(parts[2]);
      if (sg != 1 && sg != -1) fail("Parse", "slide sign must be +1 or -1");
      m.sign = sg == 1 ? 1 : -1;
    } else if (name == "blowdown") {
      m.kind = Move::BlowDown;
      m.k = static_cast<int>(parse_ll(trim(args))) - 1;
    } else if (name == "contract") {
      m.kind = Move::Contract;
      m.k = static_cast<int>(parse_ll(trim(args))) - 1;
    } else {
      fail("Parse", "unknown move '" + name + "'");
    }
    script.push_back(std::move(m));
  }
  return script;
}

GridDiagram parse_grid_file(const std::string& path) {
  auto raw = read_lines(path);
  std::vector<std::string> lines;
  for (auto& l : raw)
    if (!trim(l).empty()) lines.push_back(trim(l));
  if (lines.size() < 3) fail("Parse", "grid file needs n, X row and O row");
  long long n = parse_ll(lines[0]);
  if (n < 2) fail("Parse", "grid size must be >= 2");
  auto read_perm = [&](const std::string& line) {
    auto ts = tokens(line);
    if (static_cast<long long>(ts.size()) != n)
      fail("Parse", "marker row needs exactly n entries");
    std::vector<int> p;
    for (const auto& t : ts) p.push_back(static_cast<int>(parse_ll(t)));
    return p;
  };
  auto x = read_perm(lines[1]);
  auto o = read_perm(lines[2]);
  bool legendrian = false;
  std::optional<std::vector<Int>> framings;
  for (size_t i = 3; i < lines.size(); ++i) {
    std::string key, rest;
    if (!key_line(lines[i], &key, &rest))
      fail("Parse", "unexpected grid file line '" + lines[i] + "'");
    if (key == "legendrian") {
      legendrian = parse_bool(rest);
    } else if (key == "framings") {
      std::vector<Int> f;
      for (const auto& t : tokens(rest)) f.push_back(parse_int(t));
      framings = std::move(f);
    } else {
      fail("Parse", "unknown grid file key '" + key + "'");
    }
  }
  return GridDiagram::make(std::move(x), std::move(o), legendrian,
                           std::move(framings));
}

ParsedPresentation parse_presentation_file(const std::string& path) {
  auto lines = read_lines(path);
  size_t i = 0;
  auto f = parse_presentation_fields(lines, i);
  for (; i < lines.size(); ++i)
    if (!trim(lines[i]).empty())
      fail("Parse", "unexpected line '" + trim(lines[i]) + "'");
  ParsedPresentation pp{build_presentation(f), f.spin, f.script};
  if (pp.spin && pp.spin->size() != static_cast<size_t>(pp.p.size()))
    fail("Parse", "spin bits must match the number of components");
  return pp;
}

CoveringScene parse_scene_file(const std::string& path) {
  auto lines = read_lines(path);
  CoveringScene sc;
  std::optional<PresentationFields> down, up;
  std::map<int, std::vector<int>> corr;
  size_t i = 0;
  while (i < lines.size()) {
    std::string line = trim(lines[i]);
    if (line.empty()) {
      ++i;
      continue;
    }
    std::string key, rest;
    if (!key_line(line, &key, &rest))
      fail("Parse", "unexpected scene line '" + line + "'");
    if (key == "m") {
      sc.m = parse_ll(rest);
    } else if (key == "s_dot_s") {
      sc.s_dot_s = parse_int(rest);
    } else if (key == "sigma_up") {
      sc.sigma_up = static_cast<int>(parse_ll(rest));
    } else if (key == "sigma_down") {
      sc.sigma_down = static_cast<int>(parse_ll(rest));
    } else if (key == "branch") {
      IntVec b = parse_int_list(gather_brackets(lines, i, rest));
      for (Eigen::Index t = 0; t < b.size(); ++t)
        sc.branch.push_back(b(t).convert_to<int>() - 1);
    } else if (key == "correspondence") {
      // i -> [j1 ... jm], 1-based on both sides
      auto arrow = rest.find("->");
      if (arrow == std::string::npos)
        fail("Parse", "correspondence needs 'i -> [...]'");
      int di = static_cast<int>(parse_ll(trim(rest.substr(0, arrow)))) - 1;
      IntVec lifts = parse_int_list(
          gather_brackets(lines, i, trim(rest.substr(arrow + 2))));
      std::vector<int> ls;
      for (Eigen::Index t = 0; t < lifts.size(); ++t)
        ls.push_back(lifts(t).convert_to<int>() - 1);
      if (corr.count(di)) fail("Parse", "duplicate correspondence entry");
      corr[di] = std::move(ls);
    } else if (key == "downstairs") {
      ++i;
      down = parse_presentation_fields(lines, i);
      continue;
    } else if (key == "upstairs") {
      ++i;
      up = parse_presentation_fields(lines, i);
      continue;
    } else if (key == "known_tight") {
      std::string body = strip_brackets(gather_brackets(lines, i, rest));
      for (const auto& entry : paren_groups(body)) {
        auto parts = split_top_commas(entry);
        if (parts.size() != 4)
          fail("Parse", "known_tight entry needs (label, d3, bits, delta)");
        KnownTight kt;
        kt.label = parts[0];
        kt.d3 = parse_rat_tok(parts[1]);
        auto bg = paren_groups(parts[2]);
        auto dg = paren_groups(parts[3]);
        if (bg.size() != 1 || dg.size() != 1)
          fail("Parse", "known_tight bits / delta must be (...) groups");
        kt.spinc.base = parse_bits(bg[0]);
        auto dts = tokens(dg[0]);
        kt.spinc.delta = IntVec(dts.size());
        for (size_t t = 0; t < dts.size(); ++t)
          kt.spinc.delta(t) = parse_int(dts[t]);
        sc.known_tight.push_back(std::move(kt));
      }
    } else if (key == "complete") {
      sc.known_complete = parse_bool(rest);
    } else if (key == "d_invariant") {
      sc.d_invariant = parse_rat_tok(rest);
    } else {
      fail("Parse", "unknown scene key '" + key + "'");
    }
    ++i;
  }
  if (!down || !up) fail("Parse", "scene needs downstairs and upstairs blocks");
  sc.downstairs = build_presentation(*down);
  sc.downstairs_spin = down->spin;
  sc.downstairs_script = down->script;
  sc.upstairs = build_presentation(*up);
  sc.upstairs_script = up->script;
  if (up->spin) fail("Parse", "upstairs spin bits are derived, not declared");
  sc.correspondence.assign(sc.downstairs.size(), {});
  for (auto& [di, ls] : corr) {
    if (di < 0 || di >= static_cast<int>(sc.downstairs.size()))
      fail("Parse", "correspondence index out of range");
    sc.correspondence[di] = std::move(ls);
  }
  validate_scene(sc);
  return sc;
}

SeifertFile parse_seifert_file(const std::string& path) {
  auto lines = read_lines(path);
  SeifertFile sf;
  long long genus = 0;
  std::vector<std::pair<Int, Int>> pairs;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::string key, rest;
    if (!key_line(line, &key, &rest))
      fail("Parse", "unexpected line '" + line + "'");
    if (key == "genus") {
      genus = parse_ll(rest);
    } else if (key == "pairs") {
      std::string body = strip_brackets(gather_brackets(lines, i, rest));
      for (const auto& g : paren_groups(body)) {
        auto ts = tokens(g);
        if (ts.size() != 2) fail("Parse", "pair needs (alpha, beta)");
        pairs.emplace_back(parse_int(ts[0]), parse_int(ts[1]));
      }
    } else if (key == "cover") {
      // cover: n, degrees: [d1 ... dk]
      auto dpos = rest.find("degrees");
      if (dpos == std::string::npos)
        fail("Parse", "cover line needs 'cover: n, degrees: [...]'");
      sf.cover_n = parse_ll(tokens(rest.substr(0, dpos))[0]);
      auto bpos = rest.find(':', dpos);
      IntVec d = parse_int_list(
          gather_brackets(lines, i, trim(rest.substr(bpos + 1))));
      for (Eigen::Index t = 0; t < d.size(); ++t) sf.degrees.push_back(d(t));
    } else {
      fail("Parse", "unknown key '" + key + "'");
    }
  }
  sf.data = SeifertData::make(genus, std::move(pairs));
  return sf;
}

PipelineFile parse_pipeline_file(const std::string& path) {
  auto lines = read_lines(path);
  PipelineFile pf;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::string key, rest;
    if (!key_line(line, &key, &rest))
      fail("Parse", "unexpected pipeline line '" + line + "'");
    if (key == "grid") {
      pf.grid_path = rest;
    } else if (key == "scene") {
      pf.scene_path = rest;
    } else if (key == "expected") {
      break;  // handled by parse_expected_block
    } else {
      fail("Parse", "unknown pipeline key '" + key + "'");
    }
  }
  if (pf.grid_path.empty() || pf.scene_path.empty())
    fail("Parse", "pipeline needs grid: and scene: entries");
  return pf;
}

std::map<std::string, std::string> parse_expected_block(const std::string& path) {
  auto lines = read_lines(path);
  std::map<std::string, std::string> out;
  bool in_block = false;
  for (const auto& raw : lines) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    std::string key, rest;
    bool kl = key_line(line, &key, &rest);
    if (!in_block) {
      if (kl && key == "expected") in_block = true;
      continue;
    }
    // split at the FIRST colon only; values may contain colons
    auto pos = line.find(':');
    if (pos == std::string::npos)
      fail("Parse", "expected block line needs 'key: value'");
    out[trim(line.substr(0, pos))] = trim(line.substr(pos + 1));
  }
  return out;
}

Report run_grid(const GridDiagram& g) {
  Report rep;
  rep.add("n", Int(g.n));
  rep.add("components", Int(g.ncomp));
  for (int c = 0; c < g.ncomp; ++c) {
    std::string lbl = "K" + std::to_string(c + 1);
    if (g.legendrian) {
      auto inv = classical_invariants(g, c);
      rep.add(lbl + ".tb", inv.tb);
      rep.add(lbl + ".rot", inv.rot);
      rep.add(lbl + ".writhe", inv.writhe);
      rep.add(lbl + ".cusps",
              "(" + inv.cusps_up.str() + " " + inv.cusps_down.str() + ")");
    } else {
      rep.add(lbl + ".writhe", writhe(g, c));
    }
  }
  for (int a = 0; a < g.ncomp; ++a)
    for (int b = a + 1; b < g.ncomp; ++b)
      rep.add("lk(K" + std::to_string(a + 1) + ",K" + std::to_string(b + 1) + ")",
              linking_number(g, a, b));
  if (g.legendrian) {
    Presentation p = to_presentation(g, FramingMode::LegendrianSurgery);
    rep.add("L", mat_str(p.L));
    rep.add("rot", vec_str(*p.rot));
  } else if (g.framings) {
    Presentation p = to_presentation(g, FramingMode::Explicit);
    rep.add("L", mat_str(p.L));
  }
  return rep;
}

Report run_d3(const ParsedPresentation& pp) {
  Report rep;
  rep.add("n", Int(pp.p.size()));
  rep.add("det", det(pp.p.L));
  rep.add("sigma", Int(signature(pp.p.L)));
  Rat d3 = d3_legendrian(pp.p);
  rep.add("d3", d3);
  rep.add("deg_psi", contact_class_degree(d3));
  if (pp.spin) {
    SpinCClass sc = spinc_difference(pp.p, *pp.spin);
    rep.add("spin", bits_str(sc.base));
    rep.add("spinc_delta", vec_str(sc.delta));
  }
  return rep;
}

Report run_spin(const ParsedPresentation& pp) {
  Report rep;
  rep.add("n", Int(pp.p.size()));
  auto spins = enumerate_spin(pp.p);
  rep.add("spin_count", Int(spins.size()));
  for (size_t i = 0; i < spins.size(); ++i)
    rep.add("spin_" + std::to_string(i + 1), bits_str(spins[i]));
  if (pp.spin) {
    rep.add("spin", bits_str(*pp.spin));
    rep.add("characteristic",
            is_characteristic(pp.p.L, *pp.spin) ? "true" : "false");
  }
  if (!pp.script.empty()) {
    auto [q, sp] = apply_script(pp.p, pp.spin, pp.script);
    rep.add("final_L", mat_str(q.L));
    if (sp) rep.add("final_spin", bits_str(*sp));
    rep.add("fillability_lost", q.fillability_lost ? "true" : "false");
  }
  return rep;
}

namespace {

// shared tail of `cover` and `pipeline`: d3 / Spin lifting + verdict
void cover_tail(Report& rep, const CoveringScene& scene) {
  validate_scene(scene);
  rep.add("m", Int(scene.m));
  rep.add("sigma_down", Int(scene.sigma_downstairs()));
  rep.add("sigma_up", Int(scene.sigma_upstairs()));
  rep.add("s_dot_s", scene.s_dot_s);
  rep.add("cosecant_sum", cosecant_sum(scene.m));

  Rat d3_down = d3_legendrian(scene.downstairs);
  rep.add("d3_down", d3_down);
  rep.add("deg_psi_down", contact_class_degree(d3_down));

  if (!scene.downstairs_spin)
    fail("Parse", "scene needs downstairs spin bits for the lift");
  const SpinAssignment& spin_down = *scene.downstairs_spin;
  rep.add("spin_down", bits_str(spin_down));
  SpinCClass sc_down = spinc_difference(scene.downstairs, spin_down);
  rep.add("spinc_delta_down", vec_str(sc_down.delta));
  // the contact Spin^C class must agree with the chosen Spin structure,
  // otherwise the lifted class below would not be the contact one
  IntVec zero = IntVec::Zero(scene.downstairs.size());
  if (!integer_coset_equal(scene.downstairs.L, sc_down.delta, zero))
    fail("NotCharacteristic",
         "downstairs Spin^C class does not match the chosen spin structure");

  Rat d3_up = d3_lift(d3_down, scene);
  rep.add("d3_up", d3_up);
  rep.add("deg_psi_up", contact_class_degree(d3_up));

  SpinAssignment spin_up = spin_lift(scene, spin_down);
  rep.add("spin_up", bits_str(spin_up));

  auto [red, red_spin] = apply_script(scene.upstairs, spin_up,
                                      scene.upstairs_script);
  rep.add("cover_L", mat_str(red.L));
  if (!red_spin) fail("Parse", "reduction script lost the spin bits");
  rep.add("spin_reduced", bits_str(*red_spin));
  rep.add("fillability_lost", red.fillability_lost ? "true" : "false");

  SpinCClass spinc_up{*red_spin, IntVec::Zero(red.size())};

  TightnessVerdict v;
  if (!scene.known_tight.empty()) {
    std::string cands;
    for (size_t i = 0; i < scene.known_tight.size(); ++i)
      cands += (i ? ", " : "") + scene.known_tight[i].label + ": " +
               rat_str(scene.known_tight[i].d3);
    rep.add("candidates", cands);
    v = verdict_elliptic(red, d3_up, spinc_up, scene.known_tight,
                         scene.known_complete);
  } else if (scene.d_invariant) {
    rep.add("d_invariant", *scene.d_invariant);
    v = verdict_minimal_L(d3_up, *scene.d_invariant);
  } else {
    v.verdict = TightnessVerdict::Inconclusive;
    v.reasons.push_back("no candidate list or correction term supplied");
  }
  for (size_t i = 0; i < v.reasons.size(); ++i)
    rep.add("reason_" + std::to_string(i + 1), v.reasons[i]);
  std::string vs = verdict_str(v.verdict);
  if (!v.matched.empty()) vs += " (matched: " + v.matched + ")";
  rep.add("verdict", vs);
}

}  // namespace

Report run_cover(const CoveringScene& scene) {
  Report rep;
  cover_tail(rep, scene);
  return rep;
}

Report run_pipeline(const GridDiagram& g, const CoveringScene& scene) {
  if (!g.legendrian) fail("Parse", "pipeline needs a Legendrian grid");
  if (g.ncomp != 1) fail("Parse", "pipeline expects a knot diagram");
  Report rep;
  auto inv = classical_invariants(g, 0);
  rep.add("tb", inv.tb);
  rep.add("rot", inv.rot);
  rep.add("writhe", inv.writhe);
  rep.add("cusps",
          "(" + inv.cusps_up.str() + " " + inv.cusps_down.str() + ")");

  // the scene's downstairs presentation must extend the grid's surgery
  // description (extra components = blow-ups done on the way to the scene)
  Presentation from_grid = to_presentation(g, FramingMode::LegendrianSurgery);
  const auto k = from_grid.size();
  if (scene.downstairs.size() < k ||
      scene.downstairs.L.topLeftCorner(k, k) != from_grid.L ||
      !scene.downstairs.rot ||
      scene.downstairs.rot->head(k) != *from_grid.rot)
    fail("Parse", "scene downstairs does not extend the grid presentation");

  cover_tail(rep, scene);
  return rep;
}

Report run_seifert(const SeifertFile& sf) {
  Report rep;
  const SeifertData& s = sf.data;
  rep.add("seifert", seifert_str(s));
  rep.add("normalized", seifert_str(normalize(s)));
  rep.add("euler", euler_number(s));
  if (s.genus == 0 && euler_number(s) != 0) {
    rep.add("h1", h1_order(s));
    SeifertData ns = normalize(s);
    size_t big = 0;
    for (const auto& [a, b] : ns.pairs)
      if (a > 1) ++big;
    if (big <= 2) {
      LensSpace l = lens_from_two_fiber_seifert(s);
      rep.add("lens", "L(" + l.p.str() + "," + l.q.str() + ")");
    }
  }
  if (sf.cover_n) {
    SeifertData c = horizontal_cyclic_cover(s, *sf.cover_n, sf.degrees);
    rep.add("cover", seifert_str(c));
    rep.add("cover_genus", Int(c.genus));
    rep.add("cover_euler", euler_number(c));
    if (c.genus == 0 && euler_number(c) != 0) {
      rep.add("cover_h1", h1_order(c));
      SeifertData nc = normalize(c);
      size_t big = 0;
      for (const auto& [a, b] : nc.pairs)
        if (a > 1) ++big;
      if (big <= 2) {
        LensSpace l = lens_from_two_fiber_seifert(c);
        rep.add("cover_lens", "L(" + l.p.str() + "," + l.q.str() + ")");
      }
    }
  }
  return rep;
}

Report run_localize(long long p, long long total, long long fixed, long long lo,
                    long long hi) {
  Report rep;
  auto ring = CoefficientRing::make(p);
  auto rep_datum = RepresentationDatum::make(ring, total, fixed);
  rep.add("p", Int(p));
  rep.add("total_dim", Int(total));
  rep.add("fixed_dim", Int(fixed));
  auto plain = restriction_rank_table(ring, rep_datum, lo, hi, false);
  auto loc = restriction_rank_table(ring, rep_datum, lo, hi, true);
  for (long long d = lo; d < hi; ++d) {
    rep.add("deg_" + std::to_string(d),
            std::string(restriction_str(plain[d - lo])) + " | localized " +
                restriction_str(loc[d - lo]));
  }
  rep.add("euler_class_zero",
          euler_class_is_zero(ring, total - fixed) ? "true" : "false");
  return rep;
}

}  // namespace covlift
