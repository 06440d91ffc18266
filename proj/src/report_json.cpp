#include "sdt/report_json.hpp"

#include "sdt/error.hpp"

namespace sdt {
namespace json_out {

json subset(const Subset& s) { return s.elements(); }

json subset_list(const std::vector<Subset>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(subset(s));
  return out;
}

json function_values(const GroupFunction& f) {
  json out = json::array();
  for (const auto& v : f.values()) out.push_back(v.str());
  return out;
}

json cover(const GroupTable& g, const CoverCertificate& c) {
  json labels = json::array();
  for (Element r : c.representatives) labels.push_back(g.label(r));
  return {{"subgroup", subset(c.subgroup)},
          {"side", side_name(c.side)},
          {"representatives", c.representatives},
          {"representative_labels", labels},
          {"covered", subset(c.covered)},
          {"size", c.size()}};
}

json doubling(const DoublingReport& r) {
  return {{"product", subset(r.product)},
          {"product_size", r.product.size()},
          {"ratio", rational(r.ratio)},
          {"epsilon", rational(r.epsilon)}};
}

json connectivity(const GroupTable& g, const ConnectivityResult& r) {
  json j = {{"S", subset(r.params.S)},
            {"K", rational(r.params.K)},
            {"kappa", rational(r.kappa)},
            {"identity_atom", subset(r.identity_atom)},
            {"identity_atom_labels", json::array()},
            {"atom_is_subgroup", r.atom_is_subgroup},
            {"identity_atom_unique", r.identity_atom_unique},
            {"solver", solver_name(r.solver)},
            {"candidates_examined", r.candidates_examined}};
  r.identity_atom.for_each([&](Element x) { j["identity_atom_labels"].push_back(g.label(x)); });
  if (r.fragments) {
    j["fragments"] = subset_list(*r.fragments);
    j["fragments_truncated"] = r.fragments_truncated;
  }
  return j;
}

json atoms(const AtomPropositionReport& r) {
  return {{"S", subset(r.params.S)},
          {"K", rational(r.params.K)},
          {"kappa", rational(r.kappa)},
          {"identity_atom", subset(r.identity_atom)},
          {"atom_is_subgroup", r.atom_is_subgroup},
          {"identity_atom_unique", r.identity_atom_unique},
          {"atoms", subset_list(r.atoms)},
          {"left_cosets", subset_list(r.left_cosets)},
          {"atoms_are_left_cosets", r.atoms_are_left_cosets},
          {"atoms_disjoint", r.atoms_disjoint},
          {"holds", r.holds}};
}

json kneser(const KneserReport& r) {
  return {{"A", subset(r.A)},     {"B", subset(r.B)},     {"sum", subset(r.sum)},
          {"H", subset(r.H)},     {"lhs", r.lhs},         {"rhs", r.rhs},
          {"holds", r.holds},     {"equality", r.equality}};
}

json corollary(const GroupTable& g, const CorollaryReport& r) {
  return {{"A", subset(r.A)},
          {"epsilon", rational(r.epsilon)},
          {"sumset", subset(r.sumset)},
          {"sumset_size", r.sumset.size()},
          {"hypothesis_bound", rational(r.hypothesis_bound)},
          {"H", subset(r.H)},
          {"H_size", r.H.size()},
          {"H_bound", rational(r.H_bound)},
          {"H_bound_ok", r.H_bound_ok},
          {"H_lower_bound", rational(r.H_lower_bound)},
          {"H_lower_bound_ok", r.H_lower_bound_ok},
          {"cover", cover(g, r.cover)},
          {"cover_bound", rational(r.cover_bound)},
          {"cover_bound_ok", r.cover_bound_ok},
          {"cover_is_exact_quotient", r.cover_is_exact_quotient},
          {"holds", r.holds}};
}

json main_theorem(const GroupTable& g, const MainTheoremReport& r) {
  json j = {{"A", subset(r.A)},
            {"S", subset(r.S)},
            {"epsilon", rational(r.epsilon)},
            {"K", rational(r.K)},
            {"hypotheses_ok", r.hypotheses_ok},
            {"product_bound", rational(r.product_bound)},
            {"atom", subset(r.atom)},
            {"atom_size", r.atom.size()},
            {"kappa", rational(r.kappa)},
            {"cost_A", rational(r.cost_A)},
            {"cost_bound", rational(r.cost_bound)},
            {"right_cosets_meeting_S", r.right_cosets_meeting_S},
            {"branch", branch_name(r.branch)},
            {"bound_H_size", rational(r.bound_H_size)},
            {"cover_bound", rational(r.cover_bound)},
            {"sharp_H_bound", rational(r.sharp_H_bound)},
            {"sharp_H_bound_ok", r.sharp_H_bound_ok},
            {"violations", r.violations}};
  j["cover"] = r.cover ? cover(g, *r.cover) : json(nullptr);
  return j;
}

json petridis(const PetridisVerification& v) {
  const PetridisResult& r = v.result;
  return {{"A", subset(r.A)},
          {"S", subset(r.S)},
          {"X", subset(r.X)},
          {"K", rational(r.K)},
          {"ratio_A", rational(r.ratio_A)},
          {"verified_C_count", r.verified_C_count},
          {"exhaustive", r.exhaustive},
          {"mode", verify_mode_name(v.mode)},
          {"budget", v.budget},
          {"seed", v.seed},
          {"equality_at_identity", v.equality_at_identity},
          {"violation_count", v.violation_count},
          {"violations", subset_list(v.violations)},
          {"holds", v.holds}};
}

json gap(const GapReport& r) {
  return {{"A", subset(r.A)},
          {"inverse_product", subset(r.inverse_product)},
          {"inverse_product_size", r.inverse_product.size()},
          {"epsilon_star", rational(r.epsilon_star)},
          {"hypothesis_vacuous", r.hypothesis_vacuous},
          {"support", subset(r.support)},
          {"f", function_values(r.f)},
          {"min_on_support", rational(r.min_on_support)},
          {"gap_holds", r.gap_holds},
          {"forbidden_interval_clean", r.forbidden_interval_clean}};
}

json kneser_search(const KneserSearchReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(kneser(f));
  return {{"strategy", strategy_name(r.strategy)},
          {"seed", r.seed},
          {"budget", r.budget},
          {"pairs_examined", r.pairs_examined},
          {"budget_exhausted", r.budget_exhausted},
          {"finding_count", r.findings.size()},
          {"findings", findings}};
}

}  // namespace json_out

GroupFunction function_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "group function must be an array of \"p/q\" strings");
  std::vector<Rational> values;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, "group function values must be \"p/q\" strings");
    values.push_back(Rational::parse(v.get<std::string>()));
  }
  return GroupFunction(std::move(values));
}

}  // namespace sdt
