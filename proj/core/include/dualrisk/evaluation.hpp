#ifndef DUALRISK_EVALUATION_HPP
#define DUALRISK_EVALUATION_HPP

#include "dualrisk/preference_functions.hpp"
#include "dualrisk/risk_model.hpp"

namespace dualrisk {

/// Parameters of the canonical binary premium problem: a lottery paying
/// w0 - eps2 with probability p0 and w0 + eps2 otherwise, contracted onto an
/// intermediate branch of width 2*eps1.
struct PremiumQuery {
  double w0;
  double p0;
  double eps1;
  double eps2;
  UtilityFunction utility;
  WeightingFunction weighting;

  /// ParamOutOfRange unless 0 < eps1 <= min(p0, 1-p0) < 1 and eps2 > 0;
  /// DomainViolation unless w0 +/- eps2 lie in the utility domain.
  void validate() const;
};

/// A premium evaluation: the exact indifference solution next to the local
/// approximation and its variance/maxiance decomposition.
struct PremiumResult {
  double exact;
  double approx;          // variance_term + maxiance_term
  double variance_term;   // m2/(2 Pr) * (-U''(w0)/U'(w0))
  double maxiance_term;   // mbar2/(2 Pr) * (-h''(p0)/h'(p0))
  MomentSet moments;
  int solver_iterations;  // 0 when the utility inversion is closed-form
};

/// Dual-theory evaluation: sum of x_i * (h(F_i) - h(F_{i-1})), outcomes
/// ascending, F the CDF.
double dt_value(const WeightingFunction& h, const Lottery& lottery);

/// Rank-dependent evaluation: sum of U(x_i) * (h(F_i) - h(F_{i-1})).
/// Nests expected utility (h identity) and the dual theory (U linear).
double rdu_value(const UtilityFunction& u, const WeightingFunction& h,
                 const Lottery& lottery);

/// Classical risk premium: pi with U(w0 - pi) = E[U(w0 + risk)] for a
/// zero-mean full-mass risk. Errors: NotZeroMean, DomainViolation.
double eu_premium_exact(const UtilityFunction& u, double w0,
                        const Lottery& risk);

/// Local approximation (m2/2) * (-U''(w0)/U'(w0)).
double eu_premium_approx(const UtilityFunction& u, double w0,
                         const Lottery& risk);

/// Exact DT premium of the binary problem:
/// rho = [(h(p0)-h(p0-e1)) - (h(p0+e1)-h(p0))] / (h(p0+e1)-h(p0-e1)),
/// always in (-1, 1). eps2 and the utility in the query are unused.
double dt_premium_exact(const PremiumQuery& q);

/// Exact DT premium for an n-state spread with outcomes in [-1, 1]:
/// rho = -sum_i dh_i x_i / (h(p0+e1)-h(p0-e1)) with dh_i the weighting
/// increments over the sub-CDF boundaries and e1 = total_mass/2.
/// Errors: ParamOutOfRange (p0 +/- e1 infeasible), OrderingViolated
/// (outcomes outside [-1, 1]).
double dt_premium_general(const WeightingFunction& h, double p0,
                          const SpreadRisk& risk);

/// Local DT approximation mbar2/(2 Pr) * (-h''(p0)/h'(p0)). The exact field
/// is filled by dt_premium_general when the spread outcomes allow it (NaN
/// otherwise).
PremiumResult dt_premium_approx(const WeightingFunction& h, double p0,
                                const SpreadRisk& risk);

/// Exact RDU premium: lambda solving
///   (h(p0+e1)-h(p0-e1)) U(w0-lambda)
///     = (h(p0)-h(p0-e1)) U(w0-e2) + (h(p0+e1)-h(p0)) U(w0+e2),
/// via utility inversion; always in (-eps2, eps2).
double rdu_premium_exact(const PremiumQuery& q);

/// Exact RDU premium for an n-state spread attached at w0 (outcomes within
/// the utility domain around w0).
double rdu_premium_general(const UtilityFunction& u, const WeightingFunction& h,
                           double w0, double p0, const SpreadRisk& risk);

/// Local RDU approximation: variance and maxiance terms as in PremiumResult;
/// the exact field is filled by rdu_premium_general.
PremiumResult rdu_premium_approx(const UtilityFunction& u,
                                 const WeightingFunction& h, double w0,
                                 double p0, const SpreadRisk& risk);

/// Sensitivity d(lambda)/d(eps2) of the exact RDU premium, from the total
/// differential of the indifference equation:
///   [h(p0)-h(p0-e1)]/D * U'(w0-e2)/U'(w0-lambda)
///   - [h(p0+e1)-h(p0)]/D * U'(w0+e2)/U'(w0-lambda),  D = h(p0+e1)-h(p0-e1).
/// `lambda` must satisfy the indifference equation within 1e-9
/// (InconsistentLambda otherwise).
double premium_sensitivity(const PremiumQuery& q, double lambda);

}  // namespace dualrisk

#endif  // DUALRISK_EVALUATION_HPP
