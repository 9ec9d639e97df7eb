#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nielsen/exact_linalg.hpp"
#include "nielsen/map_model.hpp"
#include "nielsen/oracle.hpp"
#include "nielsen/planner.hpp"

namespace nielsen {

using Json = nlohmann::ordered_json;

/// Map specification documents. Throws ParseError on malformed input and
/// unknown fields; construction errors from the map model propagate.
LiftSystem map_from_json(const Json& doc);
LiftSystem load_map(const std::string& path);

struct GraphDocument {
  TokenGraph graph;
  std::vector<std::size_t> goal;
};
GraphDocument graph_from_json(const Json& doc);
GraphDocument load_graph(const std::string& path);

struct BlockSummary {
  std::vector<std::size_t> members;
  std::size_t representative = 0;
  std::vector<std::pair<std::size_t, IntVector>> transversal;
  std::vector<IntVector> stabilizer;
  std::vector<IntVector> phi_on_stabilizer;
  std::vector<IntVector> image_lattice;
  Count count;
  std::vector<IntVector> representatives;
  friend bool operator==(const BlockSummary&, const BlockSummary&) = default;
};

struct PointSummary {
  std::size_t factor = 0;
  IntVector alpha;
  std::string status;     // "isolated", "empty" or "degenerate"
  RatVector point;        // empty unless isolated
  std::optional<int> index;
  friend bool operator==(const PointSummary&, const PointSummary&) = default;
};

struct OracleSummary {
  std::int64_t box_bound = 0;
  std::int64_t word_bound = 0;
  bool sound = false;
  bool complete = false;
  bool count_matches = false;
  std::size_t oracle_classes = 0;
  std::int64_t coverage_threshold = 0;
  bool passed() const { return sound && complete && count_matches; }
  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

/// Everything the analyze command reports about one lift system.
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<BlockSummary> blocks;
  Count reidemeister;
  std::vector<PointSummary> fixed_point_classes;  // empty when R is infinite
  std::optional<Integer> nielsen;
  std::string nielsen_note;  // why nielsen is absent
  std::optional<bool> index_uniform;
  std::optional<OracleSummary> oracle;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs validation, the class engine and the fixed point engine; with an
/// oracle configuration, also the brute-force comparison.
AnalysisReport analyze(const LiftSystem& sys, const std::optional<OracleConfig>& oracle = std::nullopt);

Json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& doc);
std::string render_text(const AnalysisReport& report);

Json plan_to_json(const Plan& plan, const std::vector<std::size_t>& final_placement);

/// "2", "-1/3"; also accepts JSON integers.
Rational rational_from_json(const Json& value);
std::string vector_text(const IntVector& v);
std::string vector_text(const RatVector& v);

}  // namespace nielsen
