#ifndef DUALRISK_COMPARATIVE_HPP
#define DUALRISK_COMPARATIVE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dualrisk/evaluation.hpp"
#include "dualrisk/preference_functions.hpp"

// Numeric verification of the equivalent characterizations of "agent 2 is
// more risk averse than agent 1" for rank-dependent preferences:
//   (i)  local-index dominance in both the payoff and probability planes,
//   (ii) premium dominance over sampled problem parameters,
//   (iv) concavity of the composed transforms U2(U1^-1), h2(h1^-1),
//   (v)  outcome-ratio dominance over ordered quadruples.
// Quantifiers over the reals are checked on finite grids; dominance checks
// allow -1e-10 slack so exact-equality cases pass under floating point.

namespace dualrisk {

struct Agent {
  UtilityFunction utility;
  WeightingFunction weighting;
  std::string label;
};

struct DominanceCheck {
  bool holds;
  double worst_violation;  // largest margin by which the inequality fails, >= 0
};

/// Ordered quadruple v < w <= x < y for the ratio condition.
struct Quadruple {
  double v;
  double w;
  double x;
  double y;
};

struct DominanceReport {
  DominanceCheck condition_i;
  DominanceCheck condition_ii;
  bool condition_iv;
  bool condition_v;
  bool all_four_equal;
  /// The relation the equivalence theorem pins down on finite samples:
  /// (iv) and (v) match (i), and (i) implies (ii). When (i) fails, sampled
  /// queries need not expose a premium violation, so (ii) is unconstrained.
  bool consistent;
  std::size_t w_grid_size;
  std::size_t p_grid_size;
  std::size_t n_queries;
  std::size_t n_boundary_queries;  // queries with eps1 = min(p0, 1-p0)
};

/// Condition (i): both local indices of a2 dominate a1 at every grid point.
DominanceCheck index_dominance(const Agent& a1, const Agent& a2,
                               const std::vector<double>& w_grid,
                               const std::vector<double>& p_grid);

/// Condition (iv): f2 composed with f1^-1 is concave, checked through
/// divided differences on the image grid {f1(x)}. RangeViolation if f1 is
/// not strictly increasing on the grid.
bool concave_transform_check(const UtilityFunction& f1,
                             const UtilityFunction& f2,
                             const std::vector<double>& grid);
bool concave_transform_check(const WeightingFunction& f1,
                             const WeightingFunction& f2,
                             const std::vector<double>& grid);

/// Condition (v): [f2(y)-f2(x)]/[f2(w)-f2(v)] <= [f1(y)-f1(x)]/[f1(w)-f1(v)]
/// for every quadruple. BadQuadruple unless v < w <= x < y.
bool cross_ratio_check(const UtilityFunction& f1, const UtilityFunction& f2,
                       const std::vector<Quadruple>& quadruples);
bool cross_ratio_check(const WeightingFunction& f1, const WeightingFunction& f2,
                       const std::vector<Quadruple>& quadruples);

/// Condition (ii): lambda_2 >= lambda_1 on every query, with the exact RDU
/// premium evaluated under each agent's own preferences (the preference
/// fields of the queries are overridden).
DominanceCheck premium_dominance(const Agent& a1, const Agent& a2,
                                 const std::vector<PremiumQuery>& queries);

/// Evaluates (i), (ii), (iv), (v); quadruples for (v) are drawn
/// deterministically from the grids.
DominanceReport proposition1_report(const Agent& a1, const Agent& a2,
                                    const std::vector<double>& w_grid,
                                    const std::vector<double>& p_grid,
                                    const std::vector<PremiumQuery>& queries);

}  // namespace dualrisk

#endif  // DUALRISK_COMPARATIVE_HPP
