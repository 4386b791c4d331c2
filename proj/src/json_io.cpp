#include "matlis/json_io.hpp"

namespace matlis {

Json ring_to_json(const RingPtr& ring) {
  Json j;
  j["field"] = ring->field().to_string();
  j["vars"] = ring->vars();
  Json gens = Json::array();
  for (const Polynomial& g : ring->defining_ideal().gens())
    if (!g.is_zero()) gens.push_back(g.to_string(ring->vars()));
  j["defining_ideal"] = gens;
  return j;
}

RingPtr ring_from_json(const Json& j) {
  std::string fs = j.at("field").get<std::string>();
  FieldSpec field;
  if (fs == "q") {
    field = FieldSpec::rationals();
  } else if (fs.rfind("p:", 0) == 0) {
    field = FieldSpec::prime_field(std::stol(fs.substr(2)));
  } else {
    fail(Errc::parse_error, "unknown field spec '" + fs + "'");
  }
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<std::string> gens = j.at("defining_ideal").get<std::vector<std::string>>();
  return make_quotient_ring(field, vars, gens);
}

Json module_to_json(const GradedModule& m) {
  Json j;
  j["ring"] = ring_to_json(m.ring());
  j["generator_degrees"] = m.gen_degrees();
  Json rels = Json::array();
  const auto& vars = m.ring()->vars();
  for (const VecPoly& r : m.relations()) {
    Json col = Json::array();
    for (int row = 0; row < m.rank0(); ++row)
      col.push_back(vp_component(r, row, m.ring()->field(), m.ring()->nvars()).to_string(vars));
    rels.push_back(col);
  }
  j["relations"] = rels;
  return j;
}

GradedModule module_from_json(const Json& j) {
  RingPtr ring = ring_from_json(j.at("ring"));
  std::vector<int> degs = j.at("generator_degrees").get<std::vector<int>>();
  std::vector<VecPoly> rels;
  ModLayout L = ModLayout::plain(degs);
  for (const Json& col : j.at("relations")) {
    std::vector<Polynomial> entries;
    for (const Json& e : col)
      entries.push_back(parse_polynomial(ring->field(), ring->vars(), e.get<std::string>()));
    rels.push_back(vp_from_columns(L, entries));
  }
  return GradedModule(ring, degs, rels);
}

Json artinian_to_json(const ArtinianModule& a) {
  Json j;
  j["dual_of"] = module_to_json(a.witness);
  j["shift"] = a.shift;
  return j;
}

ArtinianModule artinian_from_json(const Json& j) {
  return ArtinianModule{module_from_json(j.at("dual_of")), j.at("shift").get<int>()};
}

Json finite_summary(const FiniteLengthModule& v) {
  Json j;
  j["length"] = v.dim();
  Json h = Json::object();
  for (const auto& [d, c] : v.hilbert()) h[std::to_string(d)] = c;
  j["hilbert"] = h;
  j["min_generators"] = v.min_generators();
  if (v.dual_shift != 0) j["shift"] = v.dual_shift;
  j["module"] = module_to_json(v.base);
  return j;
}

Json module_summary(const GradedModule& m, int hilbert_window) {
  Json j;
  const auto& fin = m.finite_data();
  if (fin.finite) {
    j["length"] = fin.length;
    Json h = Json::object();
    for (const auto& [d, c] : fin.hilbert) h[std::to_string(d)] = c;
    j["hilbert"] = h;
  } else {
    j["length"] = "infinite";
    Json h = Json::object();
    auto [lo, hi] = degree_window(m);
    for (int d = lo; d <= hi + hilbert_window; ++d) h[std::to_string(d)] = m.hilbert(d);
    j["hilbert"] = h;
  }
  j["module"] = module_to_json(m);
  return j;
}

Json stage_sequence_to_json(const StageSequence& s) {
  Json j;
  j["op"] = s.op == StageOp::tor_artinian_pair ? "tor_artinian_pair" : "ext_artinian_to_fg";
  j["index"] = s.index;
  j["direction"] = s.direct ? "direct" : "inverse";
  Json stages = Json::array();
  for (const FiniteLengthModule& w : s.stages) stages.push_back(finite_summary(w));
  j["stages"] = stages;
  Json trans = Json::array();
  for (const FLMap& t : s.transitions) {
    Json m;
    m["rows"] = t.mat.rows;
    m["cols"] = t.mat.cols;
    Json entries = Json::array();
    for (int r = 0; r < t.mat.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < t.mat.cols; ++c) row.push_back(t.mat.at(r, c).to_string());
      entries.push_back(row);
    }
    m["entries"] = entries;
    m["injective"] = t.is_injective();
    m["isomorphism"] = t.is_isomorphism();
    trans.push_back(m);
  }
  j["transitions"] = trans;
  if (s.detected_from) {
    j["detected_limit"] = module_to_json(*s.detected_limit);
    j["detected_from_stage"] = *s.detected_from;
  }
  return j;
}

Json primes_to_json(const PrimeSet& ps, const RingPtr& ring) {
  Json arr = Json::array();
  for (const PrimeIdeal& p : ps) arr.push_back(p.to_string(ring->vars()));
  return arr;
}

Json vanishing_to_json(const VanishingReport& r) {
  Json j;
  Json cl = Json::array();
  for (const Clause& c : r.clauses) {
    Json cj;
    cj["id"] = c.id;
    cj["paper_tag"] = c.paper_tag;
    cj["applicable"] = c.applicable;
    cj["value"] = c.value;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cl.push_back(cj);
  }
  j["clauses"] = cl;
  j["tensor_biconditional"] = r.tensor_biconditional;
  j["hom_ann_biconditional"] = r.hom_ann_biconditional;
  j["hom_att_biconditional"] = r.hom_att_biconditional;
  j["verdict"] = r.all_ok() ? "pass" : "fail";
  return j;
}

Json depth_formulas_to_json(const DepthFormulaReport& r) {
  Json j;
  Json rows = Json::array();
  for (const DepthFormulaRow& row : r.rows) {
    Json rj;
    rj["id"] = row.id;
    rj["lhs"] = row.lhs.to_string();
    rj["rhs"] = row.rhs.to_string();
    rj["agree"] = row.agree;
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["verdict"] = r.all_agree() ? "pass" : "fail";
  return j;
}

}  // namespace matlis
