#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "gl3/oracle.hpp"
#include "gl3/poset.hpp"
#include "gl3/qpoly.hpp"
#include "gl3/support.hpp"

namespace gl3 {

inline constexpr const char* kSchemaTag = "gl3branch/1";

nlohmann::json to_json(const QPoly& p);       // coefficient array, low to high
nlohmann::json to_json(const Triple& t);      // [c1, c2, c3]
nlohmann::json to_json(const Int& v);         // number, or string when too wide
nlohmann::json to_json(const XClassLabel& x);
nlohmann::json to_json(const CosetRep& rep);
nlohmann::json to_json(const IntertwiningReport& rep);
nlohmann::json to_json(const IrreducibilityReport& rep);
nlohmann::json to_json(const oracle::VerifyReport& rep);

// Semantic content of the reducibility diagram over a bounded window of T_m.
struct DiagramNode {
  Triple c;
  QPoly i_vv;
};
struct DiagramData {
  std::vector<DiagramNode> nodes;  // lexicographic
  // covering relations, emitted upper -> lower
  std::vector<std::pair<Triple, Triple>> covers;
  // distinct nodes with equal third coordinate and nonzero intertwining
  std::vector<std::tuple<Triple, Triple, QPoly>> equivalences;
};
DiagramData diagram_data(const ConductorData& cd, const TmBound& bound);

// DOT rendering of diagram_data; byte-identical across runs.
std::string diagram_emit(const ConductorData& cd, const TmBound& bound);

struct TableRow {
  Triple c;
  QPoly dim;
};
// Quotient dimensions over the window, ordered by descending degree then
// lexicographic triple.
std::vector<TableRow> table_rows(const ConductorData& cd, const TmBound& bound);

// CSV with header "triple,dim_poly,dim_at_q0" (last column blank without q0).
std::string table_emit(const ConductorData& cd, const TmBound& bound,
                       std::optional<long long> q0);

}  // namespace gl3
