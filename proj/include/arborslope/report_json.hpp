#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arborslope/solver.hpp"

namespace arborslope {

inline constexpr int kSchemaVersion = 1;

struct EdgepathDoc {
  int leaf = 0;
  std::string tangle;
  std::string kind;                   // "constant" or "path"
  std::vector<std::string> vertices;  // path only
  std::string final_fraction = "1";
  std::optional<WeightState> point;   // constant only
  std::int64_t sheets = 1;
  std::int64_t effective_sheets = 1;
  WeightState endpoint;
  std::string tau;

  friend bool operator==(const EdgepathDoc&, const EdgepathDoc&) = default;
};

struct TransformDoc {
  int case_id = 1;
  std::int64_t m = 0;
  std::string tau_prime;
  WeightState state;

  friend bool operator==(const TransformDoc&, const TransformDoc&) = default;
};

struct NodeDoc {
  int id = 0;
  std::string kind;
  std::string expr;
  WeightState state;
  std::string tau;
  std::int64_t scale = 1;
  std::optional<TransformDoc> transform;

  friend bool operator==(const NodeDoc&, const NodeDoc&) = default;
};

struct SystemDoc {
  std::string expr;
  bool via_achirality = false;
  std::optional<std::string> u;
  std::vector<EdgepathDoc> edgepaths;
  std::vector<NodeDoc> nodes;
  WeightState closure;
  std::string tau;
  std::optional<std::string> seifert_tau;
  std::optional<std::string> slope;

  friend bool operator==(const SystemDoc&, const SystemDoc&) = default;
};

struct TraceDoc {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;

  friend bool operator==(const TraceDoc&, const TraceDoc&) = default;
};

struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string expr;
  std::string solver;
  std::vector<std::string> slopes;
  std::vector<std::string> certified;
  std::optional<std::string> diameter;
  std::int64_t crossings = 0;
  std::string crossings_source;
  std::optional<std::string> ratio;
  std::int64_t c_bound = 0;
  std::int64_t scale_bound = 0;
  std::vector<SystemDoc> systems;
  std::vector<TraceDoc> trace;
  std::vector<std::string> diagnostics;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Sum: return "sum";
    case NodeKind::Product: return "product";
  }
  return "leaf";
}

inline SystemDoc to_document(const CandidateSystem& s) {
  SystemDoc d;
  d.expr = render(s.expr);
  d.via_achirality = s.via_achirality;
  if (s.u) d.u = s.u->str();
  for (int i = 0; i < s.expr.leaf_count(); ++i) {
    const Edgepath& e = s.assignment[static_cast<std::size_t>(i)];
    EdgepathDoc ed;
    ed.leaf = i;
    ed.tangle = e.start.str();
    ed.kind = e.is_constant() ? "constant" : "path";
    for (Fraction v : e.vertices) ed.vertices.push_back(v.str());
    ed.final_fraction = e.final_fraction.str();
    if (e.is_constant()) ed.point = e.point;
    ed.sheets = e.sheets;
    ed.effective_sheets = s.effective_sheets(i);
    ed.endpoint = endpoint_weights(e);
    ed.tau = tau(e).str();
    d.edgepaths.push_back(std::move(ed));
  }
  for (int id = 0; id < s.expr.size(); ++id) {
    const auto i = static_cast<std::size_t>(id);
    NodeDoc n;
    n.id = id;
    n.kind = to_string(s.expr.node(id).kind);
    n.expr = render(s.expr, id);
    n.state = s.states[i];
    n.tau = s.taus[i].str();
    n.scale = s.scale[i];
    if (const auto& t = s.transforms[i]) n.transform = TransformDoc{t->case_id, t->m, t->tau_prime.str(), t->state};
    d.nodes.push_back(std::move(n));
  }
  d.closure = s.final_state();
  d.tau = s.tau().str();
  if (s.seifert_tau) d.seifert_tau = s.seifert_tau->str();
  if (s.slope) d.slope = s.slope->str();
  return d;
}

inline ReportDocument to_document(const SlopeReport& r) {
  ReportDocument d;
  d.expr = render(r.expr);
  d.solver = r.solver;
  for (Fraction s : r.slopes) d.slopes.push_back(s.str());
  for (Fraction s : r.certified) d.certified.push_back(s.str());
  if (r.diameter) d.diameter = r.diameter->str();
  d.crossings = r.crossings;
  d.crossings_source = to_string(r.crossing_source);
  if (r.ratio) d.ratio = r.ratio->str();
  d.c_bound = r.bounds.c_bound;
  d.scale_bound = r.bounds.scale_bound;
  for (const auto& s : r.systems) d.systems.push_back(to_document(s));
  d.diagnostics = r.diagnostics;
  return d;
}

inline std::vector<TraceDoc> to_document(const std::vector<TraceCheck>& trace) {
  std::vector<TraceDoc> out;
  for (const auto& c : trace) out.push_back({c.name, c.expected, c.actual, c.ok});
  return out;
}

namespace detail {

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) v.reset();
  else v = j.at(key).get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const WeightState& w) {
  j = {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"n_inf", w.n_inf}, {"has_zero", w.has_zero}};
}

inline void from_json(const nlohmann::json& j, WeightState& w) {
  j.at("a").get_to(w.a);
  j.at("b").get_to(w.b);
  j.at("c").get_to(w.c);
  j.at("n_inf").get_to(w.n_inf);
  j.at("has_zero").get_to(w.has_zero);
}

inline void to_json(nlohmann::json& j, const EdgepathDoc& e) {
  j = {{"leaf", e.leaf},         {"tangle", e.tangle}, {"kind", e.kind},
       {"vertices", e.vertices}, {"final_fraction", e.final_fraction},
       {"sheets", e.sheets},     {"effective_sheets", e.effective_sheets},
       {"endpoint", e.endpoint}, {"tau", e.tau}};
  detail::put_optional(j, "point", e.point);
}

inline void from_json(const nlohmann::json& j, EdgepathDoc& e) {
  j.at("leaf").get_to(e.leaf);
  j.at("tangle").get_to(e.tangle);
  j.at("kind").get_to(e.kind);
  j.at("vertices").get_to(e.vertices);
  j.at("final_fraction").get_to(e.final_fraction);
  detail::get_optional(j, "point", e.point);
  j.at("sheets").get_to(e.sheets);
  j.at("effective_sheets").get_to(e.effective_sheets);
  j.at("endpoint").get_to(e.endpoint);
  j.at("tau").get_to(e.tau);
}

inline void to_json(nlohmann::json& j, const TransformDoc& t) {
  j = {{"case", t.case_id}, {"m", t.m}, {"tau_prime", t.tau_prime}, {"state", t.state}};
}

inline void from_json(const nlohmann::json& j, TransformDoc& t) {
  j.at("case").get_to(t.case_id);
  j.at("m").get_to(t.m);
  j.at("tau_prime").get_to(t.tau_prime);
  j.at("state").get_to(t.state);
}

inline void to_json(nlohmann::json& j, const NodeDoc& n) {
  j = {{"id", n.id}, {"kind", n.kind}, {"expr", n.expr}, {"state", n.state}, {"tau", n.tau}, {"scale", n.scale}};
  detail::put_optional(j, "transform", n.transform);
}

inline void from_json(const nlohmann::json& j, NodeDoc& n) {
  j.at("id").get_to(n.id);
  j.at("kind").get_to(n.kind);
  j.at("expr").get_to(n.expr);
  j.at("state").get_to(n.state);
  j.at("tau").get_to(n.tau);
  j.at("scale").get_to(n.scale);
  detail::get_optional(j, "transform", n.transform);
}

inline void to_json(nlohmann::json& j, const SystemDoc& s) {
  j = {{"expr", s.expr}, {"via_achirality", s.via_achirality}, {"edgepaths", s.edgepaths},
       {"nodes", s.nodes}, {"closure", s.closure},               {"tau", s.tau}};
  detail::put_optional(j, "u", s.u);
  detail::put_optional(j, "seifert_tau", s.seifert_tau);
  detail::put_optional(j, "slope", s.slope);
}

inline void from_json(const nlohmann::json& j, SystemDoc& s) {
  j.at("expr").get_to(s.expr);
  j.at("via_achirality").get_to(s.via_achirality);
  detail::get_optional(j, "u", s.u);
  j.at("edgepaths").get_to(s.edgepaths);
  j.at("nodes").get_to(s.nodes);
  j.at("closure").get_to(s.closure);
  j.at("tau").get_to(s.tau);
  detail::get_optional(j, "seifert_tau", s.seifert_tau);
  detail::get_optional(j, "slope", s.slope);
}

inline void to_json(nlohmann::json& j, const TraceDoc& t) {
  j = {{"name", t.name}, {"expected", t.expected}, {"actual", t.actual}, {"ok", t.ok}};
}

inline void from_json(const nlohmann::json& j, TraceDoc& t) {
  j.at("name").get_to(t.name);
  j.at("expected").get_to(t.expected);
  j.at("actual").get_to(t.actual);
  j.at("ok").get_to(t.ok);
}

inline void to_json(nlohmann::json& j, const ReportDocument& d) {
  j = {{"schema_version", d.schema_version},
       {"expr", d.expr},
       {"solver", d.solver},
       {"slopes", d.slopes},
       {"certified", d.certified},
       {"crossings", {{"value", d.crossings}, {"source", d.crossings_source}}},
       {"bounds", {{"c_bound", d.c_bound}, {"scale_bound", d.scale_bound}}},
       {"systems", d.systems},
       {"trace", d.trace},
       {"diagnostics", d.diagnostics}};
  detail::put_optional(j, "diameter", d.diameter);
  detail::put_optional(j, "ratio", d.ratio);
}

inline void from_json(const nlohmann::json& j, ReportDocument& d) {
  j.at("schema_version").get_to(d.schema_version);
  j.at("expr").get_to(d.expr);
  j.at("solver").get_to(d.solver);
  j.at("slopes").get_to(d.slopes);
  j.at("certified").get_to(d.certified);
  detail::get_optional(j, "diameter", d.diameter);
  j.at("crossings").at("value").get_to(d.crossings);
  j.at("crossings").at("source").get_to(d.crossings_source);
  detail::get_optional(j, "ratio", d.ratio);
  j.at("bounds").at("c_bound").get_to(d.c_bound);
  j.at("bounds").at("scale_bound").get_to(d.scale_bound);
  j.at("systems").get_to(d.systems);
  j.at("trace").get_to(d.trace);
  j.at("diagnostics").get_to(d.diagnostics);
}

inline std::string dump(const ReportDocument& d) { return nlohmann::json(d).dump(2) + "\n"; }

inline ReportDocument load_report(const std::string& text) { return nlohmann::json::parse(text).get<ReportDocument>(); }

}  // namespace arborslope
