#include "dualrisk/serialization.hpp"

#include <vector>

#include "json.hpp"

namespace dualrisk {

namespace {

using nlohmann::json;

json atoms_json(const std::vector<Atom>& atoms) {
  json arr = json::array();
  for (const Atom& a : atoms) {
    arr.push_back(json::array({a.outcome, a.probability}));
  }
  return json{{"atoms", arr}};
}

std::vector<Atom> atoms_from(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParamOutOfRange, std::string("bad risk JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("atoms") ||
      !parsed["atoms"].is_array()) {
    fail(ErrorCode::ParamOutOfRange, "risk JSON needs an \"atoms\" array");
  }
  std::vector<Atom> atoms;
  for (const json& entry : parsed["atoms"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      fail(ErrorCode::ParamOutOfRange, "each atom must be [outcome, probability]");
    }
    atoms.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return atoms;
}

json moments_json(const MomentSet& ms) {
  return json{{"mean", ms.mean},
              {"variance", ms.variance},
              {"maxiance", ms.maxiance},
              {"miniance", ms.miniance},
              {"total_mass", ms.total_mass}};
}

}  // namespace

std::string to_json(const Lottery& lottery) {
  return atoms_json(lottery.atoms()).dump();
}

std::string to_json(const SpreadRisk& risk) {
  return atoms_json(risk.atoms()).dump();
}

std::string to_json(const MomentSet& moments) {
  return moments_json(moments).dump();
}

std::string to_json(const PremiumResult& result) {
  return json{{"exact", result.exact},
              {"approx", result.approx},
              {"variance_term", result.variance_term},
              {"maxiance_term", result.maxiance_term},
              {"moments", moments_json(result.moments)},
              {"solver_iterations", result.solver_iterations}}
      .dump();
}

std::string to_json(const DominanceReport& report) {
  return json{
      {"condition_i",
       {{"holds", report.condition_i.holds},
        {"worst_violation", report.condition_i.worst_violation}}},
      {"condition_ii",
       {{"holds", report.condition_ii.holds},
        {"worst_violation", report.condition_ii.worst_violation}}},
      {"condition_iv", report.condition_iv},
      {"condition_v", report.condition_v},
      {"all_four_equal", report.all_four_equal},
      {"consistent", report.consistent},
      {"w_grid_size", report.w_grid_size},
      {"p_grid_size", report.p_grid_size},
      {"n_queries", report.n_queries},
      {"n_boundary_queries", report.n_boundary_queries}}
      .dump();
}

std::string to_json(const oracle::McEstimate& estimate) {
  return json{{"estimate", estimate.estimate},
              {"std_error", estimate.std_error},
              {"n_samples", estimate.n_samples},
              {"seed", estimate.seed}}
      .dump();
}

Lottery lottery_from_json(const std::string& text) {
  return build_lottery(atoms_from(text));
}

SpreadRisk spread_risk_from_json(const std::string& text) {
  return build_spread_risk(atoms_from(text));
}

}  // namespace dualrisk
