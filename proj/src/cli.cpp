#include "nielsen/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "nielsen/documents.hpp"

namespace nielsen {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<Rational>> parse_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  for (const std::string& row : split(text, ';')) {
    std::vector<Rational> r;
    for (const std::string& x : split(row, ',')) r.push_back(parse_rational(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntegerMatrix parse_int_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : parse_rows(text)) {
    std::vector<Integer> r;
    for (const Rational& x : row) {
      if (x.get_den() != 1) throw Error(ErrorCode::ParseError, "matrix entries must be integers: " + text);
      r.push_back(x.get_num());
    }
    rows.push_back(std::move(r));
  }
  try {
    return IntegerMatrix::from_rows(rows);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "matrix rows have different lengths: " + text);
  }
}

SplitPart parse_part(const std::string& text) {
  const std::vector<std::string> halves = split(text, '|');
  if (halves.size() != 2) throw Error(ErrorCode::ParseError, "a part is written \"A|b\": " + text);
  SplitPart p;
  p.a = parse_int_matrix(halves[0]);
  const auto b = parse_rows(halves[1]);
  if (b.size() != 1) throw Error(ErrorCode::ParseError, "offset b is a single comma-separated row: " + text);
  p.b = b.front();
  return p;
}

struct Options {
  std::string format = "text";
  std::string path;
  std::size_t n = 0;
  long d = 0;
  std::string matrix;
  std::vector<std::string> parts;
  bool with_oracle = false;
  std::int64_t box = 10;
  std::int64_t word = 10;
};

int emit_analysis(const LiftSystem& sys, const Options& o, bool oracle, std::ostream& out) {
  std::optional<OracleConfig> cfg;
  if (oracle) cfg = OracleConfig{o.box, o.word};
  const AnalysisReport report = analyze(sys, cfg);
  if (o.format == "structured")
    out << to_json(report).dump(2) << "\n";
  else
    out << render_text(report);
  if (report.index_uniform == false) return 1;
  if (report.oracle && !report.oracle->passed()) return 1;
  return 0;
}

int emit_plan(const Options& o, std::ostream& out) {
  const GraphDocument doc = load_graph(o.path);
  const Plan p = plan(doc.graph, doc.goal);
  TokenGraph replay = p.layout.graph;
  replay.placement = doc.graph.placement;
  const std::vector<std::size_t> final_placement = simulate(replay, p.moves);
  if (o.format == "structured") {
    out << plan_to_json(p, final_placement).dump(2) << "\n";
  } else {
    out << "junction " << p.layout.vertex << ", " << p.layout.graph.vertex_count << " vertices after subdivision\n";
    out << p.moves.size() << " moves (bound " << p.length_bound << ")\n";
    out << format_schedule(p.moves);
  }
  return final_placement == doc.goal ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed point invariants of n-valued maps on tori, and a token planner for graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a map document");
  analyze_cmd->add_option("file", o.path, "Map document")->required();

  auto* circle_cmd = app.add_subcommand("circle", "Circle map z -> n-th roots of z^d");
  circle_cmd->add_option("--n", o.n, "Number of values")->required();
  circle_cmd->add_option("--d", o.d, "Degree")->required();

  auto* linear_cmd = app.add_subcommand("linear", "Linear n-valued torus map given by A");
  linear_cmd->add_option("--n", o.n, "Number of values")->required();
  linear_cmd->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();

  auto* split_cmd = app.add_subcommand("split", "Split torus map built from affine parts");
  split_cmd->add_option("--part", o.parts, "One branch as \"A|b\", e.g. \"2,0;0,2|0,1/2\"")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Plan collision-free token moves on a graph");
  plan_cmd->add_option("file", o.path, "Graph document")->required();

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the class engine with brute force");
  oracle_cmd->add_option("file", o.path, "Map document")->required();
  oracle_cmd->add_option("--box", o.box, "Box bound B")->capture_default_str();
  oracle_cmd->add_option("--word", o.word, "Word bound G")->capture_default_str();

  for (auto* cmd : {analyze_cmd, circle_cmd, linear_cmd, split_cmd}) {
    cmd->add_flag("--oracle", o.with_oracle, "Also run the brute-force oracle");
    cmd->add_option("--box", o.box, "Oracle box bound")->capture_default_str();
    cmd->add_option("--word", o.word, "Oracle word bound")->capture_default_str();
  }
  for (auto* cmd : {analyze_cmd, circle_cmd, linear_cmd, split_cmd, plan_cmd, oracle_cmd})
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return emit_analysis(load_map(o.path), o, o.with_oracle, out);
    if (circle_cmd->parsed()) return emit_analysis(make_circle(o.n, Integer(o.d)), o, o.with_oracle, out);
    if (linear_cmd->parsed())
      return emit_analysis(make_linear(o.n, parse_int_matrix(o.matrix)), o, o.with_oracle, out);
    if (split_cmd->parsed()) {
      std::vector<SplitPart> parts;
      for (const std::string& p : o.parts) parts.push_back(parse_part(p));
      return emit_analysis(make_split(parts), o, o.with_oracle, out);
    }
    if (plan_cmd->parsed()) return emit_plan(o, out);
    if (oracle_cmd->parsed()) return emit_analysis(load_map(o.path), o, true, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 2;
}

}  // namespace nielsen
