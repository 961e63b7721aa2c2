#include "tight/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tight/classify.hpp"
#include "tight/dividing_sets.hpp"
#include "tight/farey.hpp"
#include "tight/legendrian.hpp"
#include "tight/state_traversal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tight::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxTraversalP = 12;
constexpr int kMaxEnumerateN = 12;

// A usage problem detected after CLI11 accepted the arguments.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool debug_logging() {
  const char* level = std::getenv("TIGHT_LOG");
  return level != nullptr && std::string(level) == "debug";
}

json slope_json(const Slope& s) { return s.to_string(); }

json slopes_json(const std::vector<Slope>& path) {
  json out = json::array();
  for (const auto& s : path) out.push_back(slope_json(s));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& values, const std::string& sep) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

std::string path_text(const std::vector<Slope>& path) {
  std::vector<std::string> parts;
  for (const auto& s : path) parts.push_back(s.to_string());
  return join(parts, " ");
}

void check_traversal_size(int p) {
  if (p > kMaxTraversalP) {
    throw std::invalid_argument("traversal is limited to p <= " + std::to_string(kMaxTraversalP) +
                                " (Catalan(p) states)");
  }
}

// Output of one subcommand: the JSON result plus its plain-text rendering.
struct Rendered {
  json result;
  std::string text;
  std::optional<std::string> raw;  // emitted verbatim regardless of --format
  int exit_code = 0;
};

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass()) return false;
  }
  return true;
}

VerifyReport verify(int p_max) {
  if (p_max < 2) throw std::invalid_argument("verify needs p_max >= 2");
  check_traversal_size(p_max);
  VerifyReport report;
  for (int p = 2; p <= p_max; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) report.rows.push_back({p, q, 0, 0});
    }
  }
  const int count = static_cast<int>(report.rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) {
    auto& row = report.rows[static_cast<std::size_t>(k)];
    SolidTorusProblem prob{row.p, row.q};
    row.traversal = tight_count_traversal(prob, Execution::serial);
    row.formula = solid_torus_count_formula(row.p, row.q);
  }
  return report;
}

CommandResult run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight contact structure counts, Farey slopes and dividing sets"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output", output_path, "Write output to this file instead of stdout");

  std::string command_name;
  std::function<Rendered()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Rendered()> fn) {
    sub->callback([&command_name, &action, name = std::move(name), fn = std::move(fn)] {
      command_name = name;
      action = fn;
    });
  };

  // farey -------------------------------------------------------------------
  auto* farey = app.add_subcommand("farey", "Farey tessellation and bypass slopes");
  farey->require_subcommand(1);

  std::string edge_a, edge_b;
  auto* farey_edge = farey->add_subcommand("edge", "Do two slopes span a Farey edge?");
  farey_edge->add_option("a", edge_a)->required();
  farey_edge->add_option("b", edge_b)->required();
  bind(farey_edge, "farey edge", [&] {
    auto a = Slope::parse(edge_a), b = Slope::parse(edge_b);
    bool edge = is_farey_edge(a, b);
    Rendered r;
    r.result = {{"a", slope_json(a)}, {"b", slope_json(b)}, {"det", farey_det(a, b)}, {"edge", edge}};
    r.text = edge ? "true" : "false";
    return r;
  });

  std::string bypass_s, bypass_attach;
  auto* farey_bypass = farey->add_subcommand("bypass", "Slope after a bypass on a torus with two curves");
  farey_bypass->add_option("--slope", bypass_s, "Dividing slope")->required();
  farey_bypass->add_option("--attach", bypass_attach, "Slope of the attaching curve")->required();
  bind(farey_bypass, "farey bypass", [&] {
    auto s = Slope::parse(bypass_s), attach = Slope::parse(bypass_attach);
    auto result = bypass_slope(s, attach);
    Rendered r;
    r.result = {{"slope", slope_json(s)}, {"attach", slope_json(attach)}, {"result", slope_json(result)}};
    r.text = result.to_string();
    return r;
  });

  std::int64_t path_p = 0, path_q = 0;
  auto* farey_path = farey->add_subcommand("path", "Peeling path from -p/q to -1");
  farey_path->add_option("p", path_p)->required();
  farey_path->add_option("q", path_q)->required();
  bind(farey_path, "farey path", [&] {
    auto path = peel_path(path_p, path_q);
    Rendered r;
    r.result = {{"p", path_p}, {"q", path_q}, {"path", slopes_json(path)}};
    r.text = path_text(path);
    return r;
  });

  // cf ----------------------------------------------------------------------
  auto* cf = app.add_subcommand("cf", "Negative continued fractions");
  cf->require_subcommand(1);

  std::int64_t cf_p = 0, cf_q = 0;
  auto* cf_exp = cf->add_subcommand("expand", "Expand -p/q");
  cf_exp->add_option("p", cf_p)->required();
  cf_exp->add_option("q", cf_q)->required();
  bind(cf_exp, "cf expand", [&] {
    auto expansion = cf_expand(cf_p, cf_q);
    std::vector<std::int64_t> coeffs(expansion.coeffs().begin(), expansion.coeffs().end());
    Rendered r;
    r.result = {{"p", cf_p}, {"q", cf_q}, {"coeffs", coeffs}};
    r.text = join_numbers(coeffs, " ");
    return r;
  });

  std::vector<std::int64_t> cf_coeffs;
  auto* cf_ev = cf->add_subcommand("eval", "Evaluate r_0 - 1/(r_1 - ...)");
  cf_ev->add_option("coeffs", cf_coeffs)->required();
  bind(cf_ev, "cf eval", [&] {
    auto slope = cf_to_slope(ContinuedFraction(cf_coeffs));
    Rendered r;
    r.result = {{"coeffs", cf_coeffs}, {"slope", slope_json(slope)}};
    r.text = slope.to_string();
    return r;
  });

  // lens --------------------------------------------------------------------
  auto* lens = app.add_subcommand("lens", "Lens spaces L(p, q)");
  lens->require_subcommand(1);

  std::int64_t lens_p = 0, lens_q = 0;
  auto* lens_count = lens->add_subcommand("count", "Number of tight contact structures");
  lens_count->add_option("p", lens_p)->required();
  lens_count->add_option("q", lens_q)->required();
  bind(lens_count, "lens count", [&] {
    auto count = lens_count_formula(lens_p, lens_q);
    Rendered r;
    r.result = {{"p", lens_p}, {"q", lens_q}, {"count", count}};
    r.text = std::to_string(count);
    return r;
  });

  auto* lens_matrix = lens->add_subcommand("matrix", "Gluing matrix in -SL(2,Z)");
  lens_matrix->add_option("p", lens_p)->required();
  lens_matrix->add_option("q", lens_q)->required();
  bind(lens_matrix, "lens matrix", [&] {
    auto a = lens_gluing_matrix(lens_p, lens_q);
    Rendered r;
    r.result = {{"p", lens_p}, {"q", lens_q}, {"matrix", a.entries}, {"det", a.det()}};
    r.text = std::to_string(a.entries[0][0]) + " " + std::to_string(a.entries[0][1]) + "\n" +
             std::to_string(a.entries[1][0]) + " " + std::to_string(a.entries[1][1]);
    return r;
  });

  auto* lens_rot = lens->add_subcommand("rotations", "Rotation numbers of the Legendrian surgery link");
  lens_rot->add_option("p", lens_p)->required();
  lens_rot->add_option("q", lens_q)->required();
  bind(lens_rot, "lens rotations", [&] {
    auto tuples = surgery_rotation_tuples(lens_p, lens_q);
    Rendered r;
    r.result = {{"p", lens_p}, {"q", lens_q}, {"count", tuples.size()}, {"tuples", tuples}};
    std::vector<std::string> lines;
    for (const auto& t : tuples) lines.push_back(join_numbers(t, " "));
    r.text = join(lines, "\n");
    return r;
  });

  // solidtorus --------------------------------------------------------------
  auto* solid = app.add_subcommand("solidtorus", "Solid torus with two boundary curves of slope -p/q");
  solid->require_subcommand(1);

  int st_p = 0, st_q = 0;
  std::string method = "formula";
  auto* st_count = solid->add_subcommand("count", "Number of tight contact structures");
  st_count->add_option("p", st_p)->required();
  st_count->add_option("q", st_q)->required();
  st_count->add_option("--method", method)->check(CLI::IsMember({"formula", "traversal"}));
  bind(st_count, "solidtorus count", [&] {
    SolidTorusProblem prob{st_p, st_q};
    prob.validate();
    std::int64_t count = 0;
    if (method == "formula") {
      count = solid_torus_count_formula(st_p, st_q);
    } else {
      check_traversal_size(st_p);
      count = tight_count_traversal(prob);
    }
    Rendered r;
    r.result = {{"p", st_p}, {"q", st_q}, {"method", method}, {"count", count}};
    r.text = std::to_string(count);
    return r;
  });

  auto* st_graph = solid->add_subcommand("graph", "State transition graph (DOT or JSON)");
  st_graph->add_option("p", st_p)->required();
  st_graph->add_option("q", st_q)->required();
  bind(st_graph, "solidtorus graph", [&] {
    SolidTorusProblem prob{st_p, st_q};
    prob.validate();
    check_traversal_size(st_p);
    auto g = build_state_graph(prob);
    Rendered r;
    r.raw = export_graph(g, format == "json" ? GraphFormat::json : GraphFormat::dot);
    return r;
  });

  auto* st_deco = solid->add_subcommand("decorations", "Basic-slice decorations and half-Euler classes");
  st_deco->add_option("p", st_p)->required();
  st_deco->add_option("q", st_q)->required();
  bind(st_deco, "solidtorus decorations", [&] {
    auto blocks = block_decompose(st_p, st_q);
    auto decos = enumerate_tight_decorations(st_p, st_q);
    Rendered r;
    json list = json::array();
    std::vector<std::string> lines;
    lines.push_back("blocks: " + join_numbers(blocks.block_edge_counts, " "));
    for (const auto& d : decos) {
      auto e = decoration_half_euler(blocks, d);
      list.push_back({{"plus_counts", d.plus_counts}, {"half_euler", e.vector}});
      lines.push_back(join_numbers(d.plus_counts, " ") + " -> (" + std::to_string(e.vector[0]) + ", " +
                      std::to_string(e.vector[1]) + ")");
    }
    r.result = {{"p", st_p},
                {"q", st_q},
                {"path", slopes_json(blocks.path)},
                {"block_edge_counts", blocks.block_edge_counts},
                {"count", decos.size()},
                {"decorations", std::move(list)}};
    r.text = join(lines, "\n");
    return r;
  });

  // front -------------------------------------------------------------------
  FrontCounts counts;
  auto add_front_options = [&counts](CLI::App* sub) {
    sub->add_option("--up", counts.up_cusps, "Upward cusps")->required();
    sub->add_option("--down", counts.down_cusps, "Downward cusps")->required();
    sub->add_option("--pos", counts.pos_crossings, "Positive crossings");
    sub->add_option("--neg", counts.neg_crossings, "Negative crossings");
  };
  auto* front = app.add_subcommand("front", "Classical invariants of a front projection");
  front->require_subcommand(1);
  auto* front_tb_cmd = front->add_subcommand("tb", "Thurston-Bennequin invariant");
  add_front_options(front_tb_cmd);
  bind(front_tb_cmd, "front tb", [&] {
    auto tb = front_tb(counts);
    Rendered r;
    r.result = {{"tb", tb}};
    r.text = std::to_string(tb);
    return r;
  });
  auto* front_r_cmd = front->add_subcommand("r", "Rotation number");
  add_front_options(front_r_cmd);
  bind(front_r_cmd, "front r", [&] {
    counts.validate();
    auto rot = front_r(counts);
    Rendered r;
    r.result = {{"r", rot}};
    r.text = std::to_string(rot);
    return r;
  });

  // unknot ------------------------------------------------------------------
  auto unknot_json = [](std::int64_t tb, std::int64_t rot) {
    auto form = unknot_from_invariants(tb, rot);
    json result = {{"tb", tb}, {"r", rot}};
    std::string text;
    if (form) {
      result["form"] = {{"k_plus", form->k_plus}, {"k_minus", form->k_minus}};
      text = "S+^" + std::to_string(form->k_plus) + " S-^" + std::to_string(form->k_minus) + " (L0)";
    } else {
      result["form"] = nullptr;
      text = "none";
    }
    return std::make_pair(result, text);
  };

  auto* unknot = app.add_subcommand("unknot", "Legendrian unknots in the tight three-sphere");
  unknot->require_subcommand(1);
  auto* unknot_classify = unknot->add_subcommand("classify", "Classify the unknot with this front");
  add_front_options(unknot_classify);
  bind(unknot_classify, "unknot classify", [&] {
    auto tb = front_tb(counts);
    auto rot = front_r(counts);
    auto [result, text] = unknot_json(tb, rot);
    Rendered r;
    r.result = result;
    r.text = "tb=" + std::to_string(tb) + " r=" + std::to_string(rot) + " " + text;
    return r;
  });

  std::int64_t inv_tb = 0, inv_r = 0;
  auto* unknot_inv = unknot->add_subcommand("from-invariants", "Stabilization form with given tb and r");
  unknot_inv->add_option("tb", inv_tb)->required();
  unknot_inv->add_option("r", inv_r)->required();
  bind(unknot_inv, "unknot from-invariants", [&] {
    auto [result, text] = unknot_json(inv_tb, inv_r);
    Rendered r;
    r.result = result;
    r.text = text;
    return r;
  });

  // bennequin ---------------------------------------------------------------
  std::int64_t ben_tb = 0, ben_r = 0, ben_chi = 1;
  auto* ben = app.add_subcommand("bennequin", "Check tb +- r <= -chi");
  ben->add_option("tb", ben_tb)->required();
  ben->add_option("r", ben_r)->required();
  ben->add_option("chi", ben_chi)->required();
  bind(ben, "bennequin", [&] {
    bool holds = bennequin_check(ben_tb, ben_r, ben_chi);
    Rendered r;
    r.result = {{"tb", ben_tb}, {"r", ben_r}, {"chi", ben_chi}, {"holds", holds}};
    r.text = holds ? "true" : "false";
    return r;
  });

  // chords ------------------------------------------------------------------
  auto* chords = app.add_subcommand("chords", "Dividing sets on a disk");
  chords->require_subcommand(1);

  int chords_n = 0;
  auto* chords_enum = chords->add_subcommand("enumerate", "All non-crossing matchings of 2n points");
  chords_enum->add_option("n", chords_n)->required();
  bind(chords_enum, "chords enumerate", [&] {
    if (chords_n > kMaxEnumerateN) {
      throw std::invalid_argument("enumeration is limited to n <= " + std::to_string(kMaxEnumerateN));
    }
    auto all = enumerate_disk_diagrams(chords_n);
    Rendered r;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& d : all) {
      list.push_back(std::vector<int>(d.match().begin(), d.match().end()));
      lines.push_back(d.encode());
    }
    r.result = {{"n", chords_n}, {"count", all.size()}, {"diagrams", std::move(list)}};
    r.text = join(lines, "\n");
    return r;
  });

  std::string diagram_text;
  int triple = 0;
  std::string side_text = "front";
  auto* chords_bypass = chords->add_subcommand("bypass", "Bypass along points i, i+1, i+2");
  chords_bypass->add_option("diagram", diagram_text, "Canonical encoding, e.g. \"3 2 1 0\"")->required();
  chords_bypass->add_option("--triple", triple)->required();
  chords_bypass->add_option("--side", side_text)->check(CLI::IsMember({"front", "back"}));
  bind(chords_bypass, "chords bypass", [&] {
    auto d = DiskDiagram::parse(diagram_text);
    auto outcome = disk_bypass_move(d, triple, parse_side(side_text));
    Rendered r;
    r.result = {{"input", std::vector<int>(d.match().begin(), d.match().end())},
                {"triple", triple},
                {"side", side_text},
                {"kind", std::string(to_string(outcome.kind))}};
    if (outcome.diagram) {
      r.result["result"] = std::vector<int>(outcome.diagram->match().begin(), outcome.diagram->match().end());
      r.text = std::string(to_string(outcome.kind)) + ": " + outcome.diagram->encode();
    } else {
      r.result["result"] = nullptr;
      r.text = std::string(to_string(outcome.kind));
    }
    return r;
  });

  // verify ------------------------------------------------------------------
  int p_max = 10;
  auto* verify_cmd = app.add_subcommand("verify", "Compare traversal counts with the formula");
  verify_cmd->add_option("p_max", p_max)->required();
  bind(verify_cmd, "verify", [&] {
    if (p_max < 2) throw UsageError("verify needs p_max >= 2");
    auto report = verify(p_max);
    Rendered r;
    json rows = json::array();
    std::vector<std::string> lines;
    for (const auto& row : report.rows) {
      rows.push_back({{"p", row.p},
                      {"q", row.q},
                      {"traversal", row.traversal},
                      {"formula", row.formula},
                      {"pass", row.pass()}});
      lines.push_back(std::to_string(row.p) + " " + std::to_string(row.q) + " traversal=" +
                      std::to_string(row.traversal) + " formula=" + std::to_string(row.formula) + " " +
                      (row.pass() ? "PASS" : "FAIL"));
    }
    r.result = {{"p_max", p_max}, {"pairs", std::move(rows)}, {"all_pass", report.all_pass()}};
    lines.push_back(std::to_string(report.rows.size()) + " pairs: " + (report.all_pass() ? "PASS" : "FAIL"));
    r.text = join(lines, "\n");
    r.exit_code = report.all_pass() ? 0 : 1;
    return r;
  });

  CommandResult result;
  auto fail = [&](int code, const std::string& message) {
    result.status = Status::error;
    result.exit_code = code;
    result.message = message;
    result.payload = {{"schema_version", kSchemaVersion}, {"status", "error"}, {"message", message}};
    if (format == "json") {
      out << result.payload.dump(2) << "\n";
    } else {
      err << "error: " << message << "\n";
    }
    return result;
  };

  std::vector<const char*> cargs;
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }

  if (debug_logging()) err << "[debug] command: " << command_name << "\n";

  Rendered rendered;
  try {
    rendered = action();
  } catch (const UsageError& e) {
    return fail(2, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(1, e.what());
  } catch (const std::overflow_error& e) {
    return fail(1, e.what());
  }

  result.exit_code = rendered.exit_code;
  result.status = Status::ok;
  result.payload = {{"schema_version", kSchemaVersion},
                    {"command", command_name},
                    {"status", rendered.exit_code == 0 ? "ok" : "fail"},
                    {"result", rendered.result}};

  std::string body;
  if (rendered.raw) {
    body = *rendered.raw;
  } else if (format == "json") {
    body = result.payload.dump(2) + "\n";
  } else {
    body = rendered.text + "\n";
  }

  if (output_path.empty()) {
    out << body;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) return fail(1, "cannot open output file '" + output_path + "'");
    file << body;
  }
  return result;
}

}  // namespace tight::cli
