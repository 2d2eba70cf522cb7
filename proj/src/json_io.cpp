#include "hqcf/json_io.hpp"

namespace hqcf {

ojson expansion_to_json(const Expansion& e) {
  ojson j;
  j["p"] = e.spec->p;
  j["n"] = e.spec->n;
  ojson qs = ojson::array();
  for (const TPoly& q : e.quotients) qs.push_back(q.to_string());
  j["quotients"] = std::move(qs);
  j["certified"] = e.certified;
  j["degrees"] = e.degrees;
  j["stopped"] = to_string(e.stopped);
  return j;
}

ojson quad_expansion_to_json(const FieldSpec* spec, const QuadExpansion& q) {
  ojson j;
  j["p"] = spec->p;
  j["n"] = spec->n;
  ojson pre = ojson::array(), per = ojson::array();
  for (const TPoly& x : q.preperiod) pre.push_back(x.to_string());
  for (const TPoly& x : q.period) per.push_back(x.to_string());
  j["preperiod"] = std::move(pre);
  j["period"] = std::move(per);
  return j;
}

ojson scan_report_to_json(const ScanReport& r) {
  ojson j;
  j["p_max"] = r.p_max;
  j["count"] = r.entries.size();
  j["all_ok"] = r.all_ok;
  ojson entries = ojson::array();
  for (const ScanEntry& e : r.entries) {
    ojson je;
    je["p"] = e.p;
    je["divides"] = e.divides;
    je["remul_ok"] = e.remul_ok;
    je["raw_hypothesis_holds"] = e.raw_hypothesis_holds;
    je["millis"] = e.millis;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

ojson growth_to_json(const GrowthCheck& g) {
  ojson j;
  j["target"] = g.target.to_string();
  j["window_sup"] = g.window_valid ? g.window_sup.to_string() : "undefined";
  j["attained"] = g.attained;
  return j;
}

ojson pattern_report_to_json(const PatternReport& r, const GrowthCheck* growth) {
  ojson j;
  j["p"] = r.p;
  j["checked"] = r.checked;
  j["all_shapes_ok"] = r.all_shapes_ok;
  j["all_degrees_ok"] = r.all_degrees_ok;
  j["lambda_law_ok"] = r.lambda_law_ok;
  j["u_law_ok"] = r.u_law_ok;
  j["condition_star_ok"] = r.condition_star_ok;
  j["ok"] = r.ok();
  if (!r.first_mismatch.empty()) j["first_mismatch"] = r.first_mismatch;
  if (growth) j["growth"] = growth_to_json(*growth);
  ojson entries = ojson::array();
  for (const PatternEntry& e : r.entries) {
    ojson je;
    je["n"] = e.n;
    je["i"] = e.i;
    je["deg"] = e.actual_degree;
    je["lambda"] = e.lambda[0];
    je["ok"] = e.shape_ok && e.degree_ok;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace hqcf
