#include "starcount/report.hpp"

#include <cmath>

namespace starcount {

namespace {

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const DegreeProfile& profile) {
  Json classes = Json::array();
  for (const auto& [d, c] : profile.classes()) classes.push_back(Json::array({d, c}));
  Json j;
  j["vertices"] = profile.vertex_count();
  j["edges"] = profile.edge_count();
  j["max_degree"] = profile.max_degree();
  j["classes"] = std::move(classes);
  return j;
}

Json to_json(const StarCriterion& stars) {
  Json per_t = Json::array();
  for (const auto& s : stars.per_t) {
    Json t;
    t["t"] = s.t;
    t["exact_adv"] = num(s.exact_adv);
    t["aut_rescaled_adv"] = num(s.aut_rescaled_adv);
    t["ff_surrogate"] = num(s.ff_surrogate);
    t["surrogate"] = num(s.surrogate);
    t["log_exact_adv"] = num(s.log_exact_adv);
    t["log_surrogate"] = num(s.log_surrogate);
    per_t.push_back(std::move(t));
  }
  Json j;
  j["t_star"] = stars.t_star;
  j["log_space"] = stars.log_space;
  j["per_t"] = std::move(per_t);
  return j;
}

Json to_json(const RegimeLabel& label) {
  Json j;
  j["regime"] = regime_name(label.regime);
  j["t_suggest"] = label.regime == Regime::LargeStarsOptimal ? Json(label.t_suggest) : Json(nullptr);
  j["max_degree"] = num(label.max_degree);
  j["edge_threshold"] = num(label.edge_threshold);
  j["edge_count"] = num(label.edge_count);
  j["edge_boundary"] = num(label.edge_boundary);
  j["eps_hat"] = num(label.eps_hat);
  j["max_surrogate"] = num(label.max_surrogate);
  j["surrogate_argmax"] = label.surrogate_argmax;
  j["endpoint_property"] = label.endpoint_property;
  j["margins"] = Json{{"c_edge", num(label.margins.c_edge)},
                      {"eps_min", num(label.margins.eps_min)},
                      {"tau", num(label.margins.tau)}};
  return j;
}

Json to_json(const AdvantageReport& report) {
  Json j;
  j["kind"] = "analyze";
  j["n"] = report.n;
  j["p"] = num(report.p);
  j["D"] = report.D;
  j["profile"] = to_json(report.profile);
  j["stars"] = to_json(report.stars);
  j["total_adv"] = report.total_adv ? num(*report.total_adv) : Json(nullptr);
  j["total_status"] = report.total_status;
  j["regime"] = to_json(report.regime);
  return j;
}

Json to_json(const MomentEstimate& m) {
  Json j;
  j["mean"] = num(m.mean);
  j["mean_se"] = num(m.mean_se);
  j["var"] = num(m.var);
  j["var_se"] = num(m.var_se);
  j["second"] = num(m.second);
  j["second_se"] = num(m.second_se);
  return j;
}

Json to_json(const MCReport& r) {
  Json j;
  j["kind"] = "simulate";
  j["statistic"] = r.statistic;
  j["model"] = r.model;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["null"] = to_json(r.q);
  j["planted"] = to_json(r.p);
  j["separation_ratio"] = num(r.separation_ratio);
  j["ratio_flagged"] = r.ratio_flagged;
  j["separating"] = r.separating;
  j["separating_ratio"] = num(r.separating_ratio);
  j["type1"] = num(r.errors.type1);
  j["type2"] = num(r.errors.type2);
  j["threshold"] = num(r.errors.threshold);
  j["threshold_degenerate"] = r.errors.degenerate;
  j["partial"] = r.partial;
  j["null_completed"] = r.null_completed;
  j["planted_completed"] = r.planted_completed;
  if (r.partial) j["abort_reason"] = r.abort_reason;
  return j;
}

Json to_json(const RatioEstimate& r) {
  Json j;
  j["ratio"] = num(r.ratio);
  j["se"] = num(r.se);
  j["mean"] = num(r.mean);
  j["mean_se"] = num(r.mean_se);
  j["unstable"] = r.unstable;
  return j;
}

Json to_json(const ConcentrationResult& r) {
  Json j;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["pass_rate"] = num(r.pass_rate);
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace starcount
