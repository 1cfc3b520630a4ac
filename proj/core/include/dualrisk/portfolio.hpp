#ifndef DUALRISK_PORTFOLIO_HPP
#define DUALRISK_PORTFOLIO_HPP

#include "dualrisk/preference_functions.hpp"

namespace dualrisk {

/// Two-asset problem: a safe asset with zero return and a risky asset
/// returning -R0 with probability p0 and +R1 otherwise. `share` below is the
/// amount invested in the risky asset.
struct PortfolioProblem {
  double w0;
  double p0;
  double R0;  // loss return, > 0
  double R1;  // gain return, >= R0
  UtilityFunction utility;
  WeightingFunction weighting;

  /// ParamOutOfRange on nonpositive returns, R0 > R1, or p0 outside (0, 1).
  void validate() const;

  /// Whether the risky asset has a strictly positive expected return,
  /// R1/(R0+R1) > p0. Advisory only; a violation is not an error.
  bool positive_expected_return() const;
};

struct OptimalShare {
  double share;
  double foc_residual;  // first-order condition value at `share`
  bool interior;        // root strictly inside (0, search upper bound)
  /// Set when the utility is not strictly concave and the optimum was
  /// resolved by comparing the objective at the interval boundaries.
  bool nonconcave_warning;
  int iterations;
};

/// Maximizes h(p0) U(w0 - a R0) + (1 - h(p0)) U(w0 + a R1) over the share
/// a in [0, upper], where upper keeps terminal wealth inside the utility
/// domain (w0/R0 - 1e-9 when unconstrained). Interior roots of the FOC
///   -R0 h(p0) U'(w0 - a R0) + R1 (1 - h(p0)) U'(w0 + a R1) = 0
/// are bisected to 1e-12; when the FOC has no interior root the share is
/// clipped to the boundary.
OptimalShare optimal_share(const PortfolioProblem& prob);

/// The weighting level at which zero participation solves the FOC:
/// h(p0) = R1/(R0+R1). Requires 0 < R0 < R1 strictly.
double zero_participation_weight(double R0, double R1);

/// Reduction of the intermediate return (R1-R0)/2 of the mean-preserving
/// contraction (-R0 w.p. p0-eps1, (R1-R0)/2 - sigma w.p. 2 eps1, R1 w.p.
/// 1-p0-eps1) that keeps zero participation optimal:
///   sigma = [-R0 h(p0-e1) + (R1-R0)/2 (h(p0+e1)-h(p0-e1))
///            + R1 (1-h(p0+e1))] / (h(p0+e1)-h(p0-e1)).
/// Requires h(p0) = R1/(R0+R1) within 1e-9 (NotAtZeroParticipation).
double contraction_reduction_exact(const PortfolioProblem& prob, double eps1);

/// Local approximation of the reduction: the maxiance term of the premium
/// of a risk taking +/-(R0+R1)/2 each with probability eps1, i.e.
/// mbar2/(2 Pr) * (-h''(p0)/h'(p0)) = eps1 (R0+R1)/4 * (-h''(p0)/h'(p0)).
double contraction_reduction_approx(const PortfolioProblem& prob, double eps1);

}  // namespace dualrisk

#endif  // DUALRISK_PORTFOLIO_HPP
