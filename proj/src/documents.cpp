#include "nielsen/documents.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nielsen/fixed_points.hpp"
#include "nielsen/reidemeister.hpp"

namespace nielsen {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

void require_keys(const Json& doc, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& where) {
  if (!doc.is_object()) fail(where + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!doc.contains(k)) fail(where + " is missing \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!allowed.count(it.key())) fail(where + " has unknown field \"" + it.key() + "\"");
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

std::size_t size_from_json(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(what + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    Rational r = rational_from_json(v);
    if (r.get_den() != 1) fail("expected an integer, got " + v.get<std::string>());
    return r.get_num();
  }
  fail("expected an integer");
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

IntVector int_vector_from_json(const Json& v) {
  if (!v.is_array()) fail("expected an array of integers");
  IntVector out;
  for (const Json& x : v) out.push_back(integer_from_json(x));
  return out;
}

Json int_vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::vector<IntVector> int_rows_from_json(const Json& v) {
  if (!v.is_array()) fail("expected a list of integer vectors");
  std::vector<IntVector> out;
  for (const Json& row : v) out.push_back(int_vector_from_json(row));
  return out;
}

Json int_rows_to_json(const std::vector<IntVector>& rows) {
  Json out = Json::array();
  for (const IntVector& r : rows) out.push_back(int_vector_to_json(r));
  return out;
}

RatVector rat_vector_from_json(const Json& v) {
  if (!v.is_array()) fail("expected an array of rationals");
  RatVector out;
  for (const Json& x : v) out.push_back(rational_from_json(x));
  return out;
}

Json rat_vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& v, F&& entry) {
  if (!v.is_array() || v.empty()) fail("expected a nonempty list of matrix rows");
  std::vector<std::vector<T>> rows;
  for (const Json& row : v) {
    if (!row.is_array()) fail("matrix row must be an array");
    std::vector<T> r;
    for (const Json& x : row) r.push_back(entry(x));
    rows.push_back(std::move(r));
  }
  try {
    return Matrix<T>::from_rows(rows);
  } catch (const Error&) {
    fail("matrix rows have different lengths");
  }
}

IntegerMatrix int_matrix_from_json(const Json& v) {
  return matrix_from_json<Integer>(v, [](const Json& x) { return integer_from_json(x); });
}

RationalMatrix rat_matrix_from_json(const Json& v) {
  return matrix_from_json<Rational>(v, [](const Json& x) { return rational_from_json(x); });
}

std::vector<IntVector> basis_rows(const Sublattice& lattice) {
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < lattice.rank(); ++k) out.push_back(lattice.basis().row(k));
  return out;
}

Json count_to_json(const Count& c) {
  if (!c.is_finite()) return Json("infinite");
  return integer_to_json(c.value());
}

Count count_from_json(const Json& v) {
  if (v.is_string() && v.get<std::string>() == "infinite") return Count::infinite();
  return Count(integer_from_json(v));
}

std::string status_name(PointStatus s) {
  switch (s) {
    case PointStatus::Isolated: return "isolated";
    case PointStatus::Empty: return "empty";
    case PointStatus::Degenerate: return "degenerate";
  }
  return "?";
}

template <class T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < items.size(); ++k) out << (k ? sep : "") << items[k];
  return out.str();
}

std::string rows_text(const std::vector<IntVector>& rows) {
  if (rows.empty()) return "(none)";
  std::vector<std::string> parts;
  for (const IntVector& r : rows) parts.push_back(vector_text(r));
  return join(parts, " ");
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  fail("expected a rational as \"p/q\" or an integer");
}

std::string vector_text(const IntVector& v) {
  std::vector<std::string> parts;
  for (const Integer& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string vector_text(const RatVector& v) {
  std::vector<std::string> parts;
  for (const Rational& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

LiftSystem map_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail("map document needs a string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "custom") {
    require_keys(doc, {"kind", "n", "q", "factors"}, {"description"}, "custom map");
    const std::size_t n = size_from_json(doc["n"], "n");
    const std::size_t q = size_from_json(doc["q"], "q");
    if (!doc["factors"].is_array()) fail("\"factors\" must be a list");
    std::vector<AffineLiftFactor> factors;
    for (const Json& f : doc["factors"]) {
      require_keys(f, {"linear", "offset"}, {}, "factor");
      factors.push_back({rat_matrix_from_json(f["linear"]), rat_vector_from_json(f["offset"])});
    }
    if (factors.size() != n) fail("custom map lists " + std::to_string(factors.size()) + " factors, n = " + std::to_string(n));
    return LiftSystem(q, std::move(factors));
  }
  if (kind == "linear") {
    require_keys(doc, {"kind", "n", "A"}, {"q", "description"}, "linear map");
    const IntegerMatrix a = int_matrix_from_json(doc["A"]);
    if (doc.contains("q") && size_from_json(doc["q"], "q") != a.rows()) fail("q differs from the size of A");
    return make_linear(size_from_json(doc["n"], "n"), a);
  }
  if (kind == "circle") {
    require_keys(doc, {"kind", "n", "d"}, {"q", "description"}, "circle map");
    if (doc.contains("q") && size_from_json(doc["q"], "q") != 1) fail("circle maps have q = 1");
    return make_circle(size_from_json(doc["n"], "n"), integer_from_json(doc["d"]));
  }
  if (kind == "split") {
    require_keys(doc, {"kind", "parts"}, {"n", "q", "description"}, "split map");
    if (!doc["parts"].is_array()) fail("\"parts\" must be a list");
    std::vector<SplitPart> parts;
    for (const Json& p : doc["parts"]) {
      require_keys(p, {"A", "b"}, {}, "split part");
      parts.push_back({int_matrix_from_json(p["A"]), rat_vector_from_json(p["b"])});
    }
    if (doc.contains("n") && size_from_json(doc["n"], "n") != parts.size()) fail("n differs from the number of parts");
    LiftSystem sys = make_split(parts);
    if (doc.contains("q") && size_from_json(doc["q"], "q") != sys.q()) fail("q differs from the part size");
    return sys;
  }
  fail("unknown map kind \"" + kind + "\"");
}

LiftSystem load_map(const std::string& path) { return map_from_json(read_file(path)); }

GraphDocument graph_from_json(const Json& doc) {
  require_keys(doc, {"vertices", "edges", "start", "goal"}, {"description"}, "graph document");
  GraphDocument out;
  out.graph.vertex_count = size_from_json(doc["vertices"], "vertices");
  if (!doc["edges"].is_array()) fail("\"edges\" must be a list of pairs");
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) fail("each edge is a pair of vertices");
    out.graph.edges.emplace_back(size_from_json(e[0], "edge endpoint"), size_from_json(e[1], "edge endpoint"));
  }
  for (const Json& v : doc["start"]) out.graph.placement.push_back(size_from_json(v, "start vertex"));
  for (const Json& v : doc["goal"]) out.goal.push_back(size_from_json(v, "goal vertex"));
  return out;
}

GraphDocument load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

AnalysisReport analyze(const LiftSystem& sys, const std::optional<OracleConfig>& oracle) {
  const PsiData psi = validate(sys);
  const ReidemeisterReport reid = reidemeister_from_psi(psi);
  AnalysisReport out;
  out.n = sys.n();
  out.q = sys.q();
  out.reidemeister = reid.total;
  for (const ClassBlock& b : reid.blocks) {
    BlockSummary s;
    s.members = b.sigma.members;
    s.representative = b.sigma.representative;
    for (const auto& [j, t] : b.sigma.transversal) s.transversal.emplace_back(j, t);
    s.stabilizer = basis_rows(b.sigma.stabilizer);
    s.phi_on_stabilizer = b.phi_images;
    s.image_lattice = basis_rows(b.image_lattice);
    s.count = b.count;
    s.representatives = b.representatives;
    out.blocks.push_back(std::move(s));
  }

  if (!reid.total.is_finite()) {
    out.nielsen_note = "Reidemeister number is infinite";
    if (oracle) throw Error(ErrorCode::InfiniteClasses, "oracle cannot certify an infinite Reidemeister number");
    return out;
  }

  NielsenReport nr;
  nr.reidemeister = reid.total;
  nr.classes = fixed_point_classes(sys, reid);
  bool defined = true;
  for (const FixedPointClass& c : nr.classes) {
    out.fixed_point_classes.push_back(
        {c.label.factor, c.label.alpha, status_name(c.status), c.point, c.index});
    if (!c.index) {
      if (defined) out.nielsen_note = "factor " + std::to_string(c.label.factor) + " has a degenerate fixed point set";
      defined = false;
    } else if (*c.index != 0) {
      ++nr.nielsen;
    }
  }
  if (defined) {
    out.nielsen = nr.nielsen;
    out.index_uniform = index_uniformity(nr, sigma_classes(psi));
  }

  if (oracle) {
    const OracleVerdict v = compare_with_engine(psi, reid, brute_classes(psi, *oracle));
    out.oracle = OracleSummary{oracle->box_bound, oracle->word_bound, v.sound, v.complete,
                               v.count_matches, v.oracle_classes, v.coverage_threshold};
  }
  return out;
}

Json to_json(const AnalysisReport& r) {
  Json doc;
  doc["n"] = r.n;
  doc["q"] = r.q;
  Json blocks = Json::array();
  for (const BlockSummary& b : r.blocks) {
    Json j;
    j["members"] = b.members;
    j["representative"] = b.representative;
    Json tr = Json::array();
    for (const auto& [member, t] : b.transversal) tr.push_back({{"member", member}, {"vector", int_vector_to_json(t)}});
    j["transversal"] = std::move(tr);
    j["stabilizer"] = int_rows_to_json(b.stabilizer);
    j["phi_on_stabilizer"] = int_rows_to_json(b.phi_on_stabilizer);
    j["image_lattice"] = int_rows_to_json(b.image_lattice);
    j["count"] = count_to_json(b.count);
    j["representatives"] = int_rows_to_json(b.representatives);
    blocks.push_back(std::move(j));
  }
  doc["sigma_classes"] = std::move(blocks);
  doc["reidemeister"] = count_to_json(r.reidemeister);
  Json points = Json::array();
  for (const PointSummary& p : r.fixed_point_classes) {
    Json j;
    j["factor"] = p.factor;
    j["alpha"] = int_vector_to_json(p.alpha);
    j["status"] = p.status;
    j["point"] = p.point.empty() ? Json(nullptr) : rat_vector_to_json(p.point);
    j["index"] = p.index ? Json(*p.index) : Json(nullptr);
    points.push_back(std::move(j));
  }
  doc["fixed_point_classes"] = std::move(points);
  doc["nielsen"] = r.nielsen ? integer_to_json(*r.nielsen) : Json(nullptr);
  if (!r.nielsen_note.empty()) doc["nielsen_note"] = r.nielsen_note;
  doc["index_uniform"] = r.index_uniform ? Json(*r.index_uniform) : Json(nullptr);
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    doc["oracle"] = {{"box", o.box_bound},
                     {"word", o.word_bound},
                     {"sound", o.sound},
                     {"complete", o.complete},
                     {"count_matches", o.count_matches},
                     {"oracle_classes", o.oracle_classes},
                     {"coverage_threshold", o.coverage_threshold},
                     {"passed", o.passed()}};
  }
  return doc;
}

AnalysisReport report_from_json(const Json& doc) {
  require_keys(doc, {"n", "q", "sigma_classes", "reidemeister", "fixed_point_classes", "nielsen", "index_uniform"},
               {"nielsen_note", "oracle"}, "report");
  AnalysisReport r;
  r.n = size_from_json(doc["n"], "n");
  r.q = size_from_json(doc["q"], "q");
  for (const Json& j : doc["sigma_classes"]) {
    BlockSummary b;
    for (const Json& m : j.at("members")) b.members.push_back(size_from_json(m, "member"));
    b.representative = size_from_json(j.at("representative"), "representative");
    for (const Json& t : j.at("transversal"))
      b.transversal.emplace_back(size_from_json(t.at("member"), "member"), int_vector_from_json(t.at("vector")));
    b.stabilizer = int_rows_from_json(j.at("stabilizer"));
    b.phi_on_stabilizer = int_rows_from_json(j.at("phi_on_stabilizer"));
    b.image_lattice = int_rows_from_json(j.at("image_lattice"));
    b.count = count_from_json(j.at("count"));
    b.representatives = int_rows_from_json(j.at("representatives"));
    r.blocks.push_back(std::move(b));
  }
  r.reidemeister = count_from_json(doc["reidemeister"]);
  for (const Json& j : doc["fixed_point_classes"]) {
    PointSummary p;
    p.factor = size_from_json(j.at("factor"), "factor");
    p.alpha = int_vector_from_json(j.at("alpha"));
    p.status = j.at("status").get<std::string>();
    if (!j.at("point").is_null()) p.point = rat_vector_from_json(j.at("point"));
    if (!j.at("index").is_null()) p.index = j.at("index").get<int>();
    r.fixed_point_classes.push_back(std::move(p));
  }
  if (!doc["nielsen"].is_null()) r.nielsen = integer_from_json(doc["nielsen"]);
  if (doc.contains("nielsen_note")) r.nielsen_note = doc["nielsen_note"].get<std::string>();
  if (!doc["index_uniform"].is_null()) r.index_uniform = doc["index_uniform"].get<bool>();
  if (doc.contains("oracle")) {
    const Json& o = doc["oracle"];
    r.oracle = OracleSummary{o.at("box").get<std::int64_t>(),   o.at("word").get<std::int64_t>(),
                             o.at("sound").get<bool>(),         o.at("complete").get<bool>(),
                             o.at("count_matches").get<bool>(), o.at("oracle_classes").get<std::size_t>(),
                             o.at("coverage_threshold").get<std::int64_t>()};
  }
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", q = " << r.q << "\n";
  for (const BlockSummary& b : r.blocks) {
    out << "sigma-class {" << join(b.members, ",") << "}, representative " << b.representative << "\n";
    std::vector<std::string> tr;
    for (const auto& [j, t] : b.transversal) tr.push_back(std::to_string(j) + ":" + vector_text(t));
    out << "  transversal        " << join(tr, " ") << "\n";
    out << "  stabilizer         " << rows_text(b.stabilizer) << "\n";
    out << "  phi on stabilizer  " << rows_text(b.phi_on_stabilizer) << "\n";
    out << "  image lattice      " << rows_text(b.image_lattice) << "\n";
    out << "  classes            " << b.count.to_string() << "\n";
    if (!b.representatives.empty()) out << "  representatives    " << rows_text(b.representatives) << "\n";
  }
  out << "R = " << r.reidemeister.to_string() << "\n";
  if (!r.fixed_point_classes.empty()) {
    out << "fixed point classes:\n";
    for (const PointSummary& p : r.fixed_point_classes) {
      out << "  " << vector_text(p.alpha) << " * f" << p.factor << "  ";
      if (p.status == "isolated")
        out << "point " << vector_text(p.point);
      else
        out << p.status;
      out << "  index ";
      if (p.index)
        out << (*p.index > 0 ? "+" : "") << *p.index;
      else
        out << "undefined";
      out << "\n";
    }
  }
  if (r.nielsen)
    out << "N = " << to_string(*r.nielsen) << "\n";
  else
    out << "N = undefined (" << r.nielsen_note << ")\n";
  if (r.index_uniform) out << "index uniform within sigma-classes: " << (*r.index_uniform ? "yes" : "no") << "\n";
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    out << "oracle (box " << o.box_bound << ", word " << o.word_bound << "): " << (o.passed() ? "pass" : "FAIL")
        << " [sound " << (o.sound ? "yes" : "no") << ", complete " << (o.complete ? "yes" : "no")
        << ", classes " << o.oracle_classes << ", coverage threshold " << o.coverage_threshold << "]\n";
  }
  return out.str();
}

Json plan_to_json(const Plan& plan, const std::vector<std::size_t>& final_placement) {
  const JunctionLayout& l = plan.layout;
  Json doc;
  doc["junction"] = l.vertex;
  doc["vertices"] = l.graph.vertex_count;
  Json edges = Json::array();
  for (auto [a, b] : l.graph.edges) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  Json branches = Json::array();
  for (const auto& br : l.branches) branches.push_back(br);
  doc["branches"] = std::move(branches);
  Json moves = Json::array();
  for (const Move& m : plan.moves) moves.push_back({m.token, m.from, m.to});
  doc["moves"] = std::move(moves);
  doc["length"] = plan.moves.size();
  doc["length_bound"] = plan.length_bound;
  doc["final"] = final_placement;
  return doc;
}

}  // namespace nielsen
