#include "gl3/emit.hpp"

#include <algorithm>
#include <sstream>

namespace gl3 {

using nlohmann::json;

json to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

json to_json(const QPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const Triple& t) { return json::array({t.c1, t.c2, t.c3}); }

json to_json(const XClassLabel& x) {
  json j;
  j["kind"] = x.one_plus_pi ? "one_plus_pi" : "unit";
  j["residue_precision"] = x.precision;
  if (x.one_plus_pi) {
    if (x.val) {
      j["val_x_minus_1"] = *x.val;
      j["representative_residue"] = *x.val == 0 ? "u" : "1+pi^" + std::to_string(*x.val);
    } else {
      j["val_x_minus_1"] = "inf";
      j["representative_residue"] = "1";
    }
  } else {
    j["val_x_minus_1"] = nullptr;
    j["representative_residue"] = "u";
  }
  return j;
}

json to_json(const CosetRep& rep) {
  json j;
  j["family"] = weyl_name(rep.family);
  json params = json::object();
  switch (rep.family) {
    case Weyl::One:
      params["a"] = to_json(rep.a);
      params["x_class"] = to_json(rep.xclass);
      break;
    case Weyl::S1:
    case Weyl::S2:
      params["alpha"] = rep.alpha;
      params["beta"] = rep.beta;
      break;
    case Weyl::S1S2:
    case Weyl::S2S1:
      params["alpha"] = rep.alpha;
      break;
    case Weyl::W0:
      break;
  }
  j["params"] = params;
  return j;
}

json to_json(const IntertwiningReport& rep) {
  json j;
  j["schema"] = kSchemaTag;
  j["c"] = to_json(rep.c);
  j["d"] = to_json(rep.d);
  j["i_UU"] = to_json(rep.i_UU);
  j["i_VV"] = to_json(rep.i_VV);
  j["i_VV_str"] = rep.i_VV.str();
  json terms = json::array();
  for (const auto& [key, poly] : rep.subset_terms) {
    json t;
    t["I"] = key.first;
    t["J"] = key.second;
    t["count_S"] = to_json(poly);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const IrreducibilityReport& rep) {
  json j;
  j["schema"] = kSchemaTag;
  j["c"] = to_json(rep.c);
  j["i_VV"] = to_json(rep.i_vv);
  j["i_VV_str"] = rep.i_vv.str();
  j["irreducible"] = rep.irreducible;
  if (!rep.irreducible)
    j["note"] = "multiplicity count only; the number of irreducible summands "
                "is not determined by I(V,V)";
  json tags = json::array();
  for (const ClosedFormCheck& t : rep.tags) {
    json jt;
    jt["tag"] = t.tag;
    jt["predicted"] = to_json(t.predicted);
    jt["matches"] = t.matches;
    tags.push_back(std::move(jt));
  }
  j["closed_forms"] = std::move(tags);
  return j;
}

json to_json(const oracle::VerifyReport& rep) {
  json j;
  j["schema"] = kSchemaTag;
  j["p"] = rep.p;
  j["level"] = rep.level;
  j["M"] = rep.M;
  j["N"] = rep.N;
  j["status"] = rep.all_ok ? "pass" : "fail";
  json pairs = json::array();
  for (const auto& pc : rep.pairs) {
    json pj;
    pj["c"] = to_json(pc.c);
    pj["d"] = to_json(pc.d);
    pj["expected_R"] = to_json(pc.expected_R);
    pj["oracle_R"] = pc.oracle_R;
    pj["expected_S"] = to_json(pc.expected_S);
    pj["oracle_S"] = pc.oracle_S;
    pj["mode"] = pc.sampled ? "sampled" : "exact";
    if (pc.sampled) pj["min_hits"] = pc.min_hits;
    pj["status"] = pc.ok ? "ok" : "mismatch";
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  json idx = json::array();
  for (const auto& ic : rep.index_checks) {
    json ij;
    ij["c"] = to_json(ic.c);
    ij["expected_dim_U"] = to_json(ic.expected_index);
    ij["closed_form_index"] = to_json(ic.closed_form);
    ij["oracle_index"] = ic.oracle_index;
    ij["status"] = ic.ok ? "ok" : "mismatch";
    idx.push_back(std::move(ij));
  }
  j["index_checks"] = std::move(idx);
  return j;
}

DiagramData diagram_data(const ConductorData& cd, const TmBound& bound) {
  DiagramData data;
  std::vector<Triple> nodes = enumerate_Tm(cd.m, bound);
  for (const Triple& c : nodes)
    data.nodes.push_back({c, intertwine_V(c, c, cd).i_VV});
  for (const Triple& hi : nodes)
    for (const Triple& lo : nodes)
      if (covers(hi, lo, cd.m)) data.covers.emplace_back(hi, lo);
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].c3 != nodes[j].c3) continue;
      QPoly cross = intertwine_V(nodes[i], nodes[j], cd).i_VV;
      if (!cross.is_zero())
        data.equivalences.emplace_back(nodes[i], nodes[j], cross);
    }
  return data;
}

namespace {

std::string node_id(const Triple& t) {
  std::ostringstream s;
  s << "c" << t.c1 << "_" << t.c2 << "_" << t.c3;
  return s.str();
}

std::string triple_str(const Triple& t) {
  std::ostringstream s;
  s << "(" << t.c1 << "," << t.c2 << "," << t.c3 << ")";
  return s.str();
}

}  // namespace

std::string diagram_emit(const ConductorData& cd, const TmBound& bound) {
  DiagramData data = diagram_data(cd, bound);
  std::ostringstream out;
  out << "digraph Tm {\n";
  out << "  node [shape=box];\n";
  for (const DiagramNode& n : data.nodes)
    out << "  " << node_id(n.c) << " [label=\"" << triple_str(n.c)
        << "\\nI(V,V)=" << n.i_vv.str() << "\"];\n";
  for (const auto& [hi, lo] : data.covers)
    out << "  " << node_id(hi) << " -> " << node_id(lo) << ";\n";
  for (const auto& [a, b, poly] : data.equivalences)
    out << "  " << node_id(a) << " -> " << node_id(b)
        << " [dir=none, style=dashed, label=\"" << poly.str() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<TableRow> table_rows(const ConductorData& cd, const TmBound& bound) {
  std::vector<TableRow> rows;
  for (const Triple& c : enumerate_Tm(cd.m, bound)) rows.push_back({c, dim_V(c, cd)});
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.dim.degree() != b.dim.degree()) return a.dim.degree() > b.dim.degree();
    return a.c < b.c;
  });
  return rows;
}

std::string table_emit(const ConductorData& cd, const TmBound& bound,
                       std::optional<long long> q0) {
  std::ostringstream out;
  out << "triple,dim_poly,dim_at_q0\n";
  for (const TableRow& row : table_rows(cd, bound)) {
    out << "\"" << row.c.c1 << "," << row.c.c2 << "," << row.c.c3 << "\",\""
        << row.dim.str() << "\",";
    if (q0) out << poly_eval(row.dim, *q0).str();
    out << "\n";
  }
  return out.str();
}

}  // namespace gl3
