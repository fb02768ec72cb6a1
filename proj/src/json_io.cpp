#include "fwps/json_io.hpp"

#include <nlohmann/json.hpp>

namespace fwps {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Int int_field(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer (64-bit in input files)");
  return Int(j.get<std::int64_t>());
}

IntVec int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  IntVec v;
  for (const auto& c : j) v.push_back(int_field(c, what));
  return v;
}

std::string vec_json(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i].str() + (i + 1 < v.size() ? "," : "");
  return s + "]";
}

std::string vec_list_json(const std::vector<IntVec>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += vec_json(vs[i]) + (i + 1 < vs.size() ? "," : "");
  return s + "]";
}

std::string size_list_json(const std::vector<std::size_t>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += std::to_string(vs[i]) + (i + 1 < vs.size() ? "," : "");
  return s + "]";
}

}  // namespace

std::vector<LatticeVector> parse_simplex_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("simplex JSON needs \"dim\" and \"vertices\"");
  Int dim = int_field(j["dim"], "dim");
  if (dim < 1 || dim > 16) throw ParseError("dim out of range");
  std::vector<LatticeVector> verts;
  if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
  for (const auto& row : j["vertices"]) {
    IntVec v = int_vector(row, "vertex");
    if (Int(v.size()) != dim) throw ParseError("vertex length disagrees with dim");
    verts.emplace_back(std::move(v));
  }
  return verts;
}

WeightSystem parse_weights_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("weights"))
    throw ParseError("weight JSON needs \"weights\"");
  WeightSystem ws;
  ws.weights = int_vector(j["weights"], "weights");
  ws.multiplicity = j.contains("multiplicity") ? int_field(j["multiplicity"], "multiplicity") : Int(1);
  if (ws.weights.size() < 2) throw ParseError("need at least two weights");
  for (const Int& w : ws.weights)
    if (w <= 0) throw ParseError("weights must be positive");
  if (ws.multiplicity < 1) throw ParseError("multiplicity must be positive");
  return ws;
}

MoveSpec parse_move_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("w") || !j.contains("factor_vertices"))
    throw ParseError("move JSON needs \"w\" and \"factor_vertices\"");
  MoveSpec spec;
  spec.w = DualVector(int_vector(j["w"], "w"));
  if (!j["factor_vertices"].is_array()) throw ParseError("\"factor_vertices\" must be an array");
  for (const auto& row : j["factor_vertices"])
    spec.factor_vertices.push_back(int_vector(row, "factor vertex"));
  if (j.contains("apex")) {
    Int a = int_field(j["apex"], "apex");
    if (a < 0) throw ParseError("apex must be nonnegative");
    spec.apex = static_cast<std::size_t>(a.convert_to<std::int64_t>());
  }
  if (j.contains("min_face"))
    for (const auto& c : j["min_face"]) {
      Int s = int_field(c, "min_face");
      if (s < 0) throw ParseError("min_face indices must be nonnegative");
      spec.min_face.push_back(static_cast<std::size_t>(s.convert_to<std::int64_t>()));
    }
  return spec;
}

std::string simplex_to_json(const std::vector<IntVec>& vertices) {
  std::size_t dim = vertices.empty() ? 0 : vertices[0].size();
  return "{\"dim\":" + std::to_string(dim) + ",\"vertices\":" + vec_list_json(vertices) + "}";
}

std::string simplex_to_json(const FanoSimplex& p) { return simplex_to_json(p.vertex_set()); }

std::string weights_to_json(const WeightSystem& ws) {
  return "{\"multiplicity\":" + ws.multiplicity.str() + ",\"weights\":" + vec_json(ws.sorted()) + "}";
}

std::string move_to_json(const MutationMove& mv) {
  return "{\"apex\":" + std::to_string(mv.apex) +
         ",\"factor_vertices\":" + vec_list_json(mv.factor_vertices) +
         ",\"min_face\":" + size_list_json(mv.min_face) + ",\"w\":" + vec_json(mv.w.x) + "}";
}

std::string moves_to_json(const std::vector<MutationMove>& moves) {
  std::string s = "[";
  for (std::size_t i = 0; i < moves.size(); ++i) s += move_to_json(moves[i]) + (i + 1 < moves.size() ? "," : "");
  return s + "]";
}

std::string report_to_json(const SingularityReport& rep) {
  std::string s = "{\"canonical\":";
  s += rep.canonical ? "true" : "false";
  s += ",\"gorenstein\":";
  s += rep.gorenstein ? "true" : "false";
  s += ",\"terminal\":";
  s += rep.terminal ? "true" : "false";
  s += ",\"witness_kappa\":";
  s += rep.witness_kappa ? rep.witness_kappa->str() : "null";
  return s + "}";
}

std::string degree_to_json(const Rat& deg) { return "{\"degree\":\"" + rat_str(deg) + "\"}"; }

std::string tower_to_json(const std::vector<TowerEntry>& entries) {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const TowerState& st = entries[i].state;
    s += "{\"a\":" + std::to_string(st.a) + ",\"h\":" + st.h.str() +
         ",\"lambda\":" + vec_json(st.lambda) + ",\"m\":" + std::to_string(st.m) +
         ",\"n\":" + std::to_string(st.n) + ",\"variant\":\"" + to_string(st.variant) + "\"";
    s += ",\"witness\":";
    if (entries[i].witness) {
      const KappaWitness& w = *entries[i].witness;
      s += "{\"in_range\":";
      s += w.in_range ? "true" : "false";
      s += ",\"kappa\":" + w.kappa.str() + ",\"sum\":\"" + rat_str(w.sum) + "\",\"verdict\":\"" +
           w.verdict + "\"}";
    } else {
      s += "null";
    }
    s += "}";
    if (i + 1 < entries.size()) s += ",";
  }
  return s + "]";
}

std::string graph_to_json(const MutationGraph& g,
                          const std::vector<std::optional<SingularityReport>>& reports) {
  std::string s = "{\"depth_counts\":" + size_list_json(g.depth_counts) + ",\"edges\":[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    s += "{\"a\":" + std::to_string(e.a) + ",\"b\":" + std::to_string(e.b) +
         ",\"d\":" + e.d.str() + ",\"k\":" + std::to_string(e.k) + "}";
    if (i + 1 < g.edges.size()) s += ",";
  }
  s += "],\"nodes\":[";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& node = g.nodes[i];
    s += "{\"depth\":" + std::to_string(node.depth) + ",\"id\":" + std::to_string(i) +
         ",\"multiplicity\":" + node.multiplicity.str() + ",\"singularity\":";
    s += (i < reports.size() && reports[i]) ? report_to_json(*reports[i]) : "null";
    s += ",\"weights\":" + vec_json(node.weights) + "}";
    if (i + 1 < g.nodes.size()) s += ",";
  }
  s += "],\"structure\":{\"checked\":";
  s += g.structure_checked ? "true" : "false";
  s += ",\"ok\":";
  s += g.structure_checked ? (g.structure_ok ? "true" : "false") : "null";
  return s + "}}";
}

}  // namespace fwps
