#include "dualrisk/portfolio.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dualrisk/risk_model.hpp"

namespace dualrisk {

namespace {

constexpr double kBoundaryGap = 1e-9;

double foc(const PortfolioProblem& prob, double h_p0, double share) {
  return -prob.R0 * h_p0 * prob.utility.d1(prob.w0 - share * prob.R0) +
         prob.R1 * (1.0 - h_p0) * prob.utility.d1(prob.w0 + share * prob.R1);
}

double objective(const PortfolioProblem& prob, double h_p0, double share) {
  return h_p0 * prob.utility.value(prob.w0 - share * prob.R0) +
         (1.0 - h_p0) * prob.utility.value(prob.w0 + share * prob.R1);
}

// Largest share keeping both terminal wealth levels strictly inside the
// utility domain; w0/R0 - 1e-9 when the domain is unbounded.
double search_upper(const PortfolioProblem& prob) {
  double upper = prob.w0 / prob.R0 - kBoundaryGap;
  const double lo = prob.utility.domain_lo();
  const double hi = prob.utility.domain_hi();
  if (std::isfinite(lo)) {
    upper = std::min(upper, (prob.w0 - lo) / prob.R0 - kBoundaryGap);
  }
  if (std::isfinite(hi)) {
    upper = std::min(upper, (hi - prob.w0) / prob.R1 - kBoundaryGap);
  }
  return upper;
}

void check_contraction_inputs(const PortfolioProblem& prob, double eps1) {
  prob.validate();
  const double target = prob.R1 / (prob.R0 + prob.R1);
  if (std::abs(prob.weighting.value(prob.p0) - target) > kBuildTol) {
    fail(ErrorCode::NotAtZeroParticipation,
         "h(p0) = " + std::to_string(prob.weighting.value(prob.p0)) +
             " but zero participation needs " + std::to_string(target));
  }
  if (!(eps1 > 0.0) || eps1 > std::min(prob.p0, 1.0 - prob.p0) + 1e-15) {
    fail(ErrorCode::ParamOutOfRange, "eps1 must lie in (0, min(p0, 1-p0)]");
  }
}

}  // namespace

void PortfolioProblem::validate() const {
  if (!(R0 > 0.0) || !(R1 > 0.0) || R0 > R1) {
    fail(ErrorCode::ParamOutOfRange, "returns must satisfy 0 < R0 <= R1");
  }
  if (!(p0 > 0.0) || !(p0 < 1.0)) {
    fail(ErrorCode::ParamOutOfRange, "p0 must lie in (0, 1)");
  }
  if (!utility.in_domain(w0)) {
    fail(ErrorCode::DomainViolation, "w0 outside the domain of " + utility.spec());
  }
}

bool PortfolioProblem::positive_expected_return() const {
  return R1 / (R0 + R1) > p0;
}

OptimalShare optimal_share(const PortfolioProblem& prob) {
  prob.validate();
  const double h_p0 = prob.weighting.value(prob.p0);
  const double upper = search_upper(prob);
  if (!(upper > 0.0)) {
    fail(ErrorCode::DomainViolation, "empty share search interval");
  }

  OptimalShare result{};
  if (!prob.utility.strictly_concave()) {
    // Linear or convex utility: the objective has no interior maximum, so
    // pick the better corner.
    result.nonconcave_warning = true;
    result.share =
        objective(prob, h_p0, upper) > objective(prob, h_p0, 0.0) ? upper : 0.0;
    result.foc_residual = foc(prob, h_p0, result.share);
    result.interior = false;
    return result;
  }

  double f_lo = foc(prob, h_p0, 0.0);
  if (f_lo <= 0.0) {
    // Participation undesirable from the start: corner at zero.
    result.share = 0.0;
    result.foc_residual = f_lo;
    result.interior = false;
    return result;
  }
  double f_hi = foc(prob, h_p0, upper);
  if (f_hi >= 0.0) {
    result.share = upper;
    result.foc_residual = f_hi;
    result.interior = false;
    return result;
  }

  double lo = 0.0;
  double hi = upper;
  int iter = 0;
  while (hi - lo > 1e-12 && iter < 200) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = foc(prob, h_p0, mid);
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    ++iter;
  }
  result.share = 0.5 * (lo + hi);
  result.foc_residual = foc(prob, h_p0, result.share);
  result.interior = true;
  result.iterations = iter;
  return result;
}

double zero_participation_weight(double R0, double R1) {
  if (!(R0 > 0.0) || !(R1 > R0)) {
    fail(ErrorCode::ParamOutOfRange, "requires 0 < R0 < R1");
  }
  return R1 / (R0 + R1);
}

double contraction_reduction_exact(const PortfolioProblem& prob, double eps1) {
  check_contraction_inputs(prob, eps1);
  const double h_lo = prob.weighting.value(prob.p0 - eps1);
  const double h_hi = prob.weighting.value(prob.p0 + eps1);
  const double mid_return = 0.5 * (prob.R1 - prob.R0);
  // FOC of the contracted asset at share 0, solved for the reduction.
  return (-prob.R0 * h_lo + mid_return * (h_hi - h_lo) +
          prob.R1 * (1.0 - h_hi)) /
         (h_hi - h_lo);
}

double contraction_reduction_approx(const PortfolioProblem& prob, double eps1) {
  check_contraction_inputs(prob, eps1);
  const MomentSet ms = moments(binary_spread(eps1, 0.5 * (prob.R0 + prob.R1)));
  return ms.maxiance / (2.0 * ms.total_mass) *
         prob.weighting.local_index(prob.p0);
}

}  // namespace dualrisk
