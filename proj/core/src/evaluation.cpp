#include "dualrisk/evaluation.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dualrisk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_probability_window(double p0, double eps1) {
  if (!(p0 > 0.0) || !(p0 < 1.0)) {
    fail(ErrorCode::ParamOutOfRange, "p0 must lie in (0, 1)");
  }
  if (!(eps1 > 0.0) || eps1 > std::min(p0, 1.0 - p0) + 1e-15) {
    fail(ErrorCode::ParamOutOfRange,
         "eps1 must lie in (0, min(p0, 1-p0)]");
  }
}

// Closed-form inversion with a defensive bisection fallback on the open
// bracket (-eps2, eps2); the indifference equation is monotone in lambda
// because U' > 0, so the root is unique.
double solve_indifference(const UtilityFunction& u, double w0, double target,
                          double eps2, int* iterations) {
  if (iterations) *iterations = 0;
  try {
    return w0 - u.inverse(target);
  } catch (const Error&) {
    double lo = -eps2 + 1e-15;
    double hi = eps2 - 1e-15;
    double f_lo = u.value(w0 - lo) - target;
    double f_hi = u.value(w0 - hi) - target;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
      fail(ErrorCode::NoBracket, "indifference equation has no root in (-eps2, eps2)");
    }
    double mid = 0.0;
    int iter = 0;
    for (; iter < 200; ++iter) {
      mid = 0.5 * (lo + hi);
      const double f_mid = u.value(w0 - mid) - target;
      if (std::abs(f_mid) < 1e-12) break;
      if ((f_mid > 0.0) == (f_lo > 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    if (iterations) *iterations = iter;
    return mid;
  }
}

}  // namespace

void PremiumQuery::validate() const {
  check_probability_window(p0, eps1);
  if (!(eps2 > 0.0)) {
    fail(ErrorCode::ParamOutOfRange, "eps2 must be positive");
  }
  if (!utility.in_domain(w0 - eps2) || !utility.in_domain(w0 + eps2)) {
    fail(ErrorCode::DomainViolation,
         "w0 +/- eps2 outside the domain of " + utility.spec());
  }
}

double dt_value(const WeightingFunction& h, const Lottery& lottery) {
  const std::vector<Atom>& atoms = lottery.atoms();
  double cdf = 0.0;
  double h_prev = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cdf = (i + 1 == atoms.size()) ? 1.0 : cdf + atoms[i].probability;
    const double h_cur = h.value(cdf);
    total += atoms[i].outcome * (h_cur - h_prev);
    h_prev = h_cur;
  }
  return total;
}

double rdu_value(const UtilityFunction& u, const WeightingFunction& h,
                 const Lottery& lottery) {
  const std::vector<Atom>& atoms = lottery.atoms();
  double cdf = 0.0;
  double h_prev = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cdf = (i + 1 == atoms.size()) ? 1.0 : cdf + atoms[i].probability;
    const double h_cur = h.value(cdf);
    total += u.value(atoms[i].outcome) * (h_cur - h_prev);
    h_prev = h_cur;
  }
  return total;
}

double eu_premium_exact(const UtilityFunction& u, double w0,
                        const Lottery& risk) {
  const MomentSet ms = moments(risk);
  if (std::abs(ms.mean) > kBuildTol) {
    fail(ErrorCode::NotZeroMean, "risk mean " + std::to_string(ms.mean));
  }
  double eu = 0.0;
  for (const Atom& a : risk.atoms()) {
    eu += a.probability * u.value(w0 + a.outcome);
  }
  return w0 - u.inverse(eu);
}

double eu_premium_approx(const UtilityFunction& u, double w0,
                         const Lottery& risk) {
  const MomentSet ms = moments(risk);
  if (std::abs(ms.mean) > kBuildTol) {
    fail(ErrorCode::NotZeroMean, "risk mean " + std::to_string(ms.mean));
  }
  return 0.5 * ms.variance * u.local_index(w0);
}

double dt_premium_exact(const PremiumQuery& q) {
  check_probability_window(q.p0, q.eps1);
  const double h_lo = q.weighting.value(q.p0 - q.eps1);
  const double h_mid = q.weighting.value(q.p0);
  const double h_hi = q.weighting.value(q.p0 + q.eps1);
  return ((h_mid - h_lo) - (h_hi - h_mid)) / (h_hi - h_lo);
}

double dt_premium_general(const WeightingFunction& h, double p0,
                          const SpreadRisk& risk) {
  const double eps1 = 0.5 * risk.total_mass();
  check_probability_window(p0, eps1);
  for (const Atom& a : risk.atoms()) {
    if (a.outcome < -1.0 - kInternalTol || a.outcome > 1.0 + kInternalTol) {
      fail(ErrorCode::OrderingViolated,
           "spread outcome " + std::to_string(a.outcome) +
               " outside [-1, 1]");
    }
  }
  const double h_lo = h.value(p0 - eps1);
  const double h_hi = h.value(p0 + eps1);
  const std::vector<Atom>& atoms = risk.atoms();
  double boundary = p0 - eps1;
  double h_prev = h_lo;
  double weighted = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    boundary = (i + 1 == atoms.size()) ? p0 + eps1
                                       : boundary + atoms[i].probability;
    const double h_cur = h.value(boundary);
    weighted += (h_cur - h_prev) * atoms[i].outcome;
    h_prev = h_cur;
  }
  return -weighted / (h_hi - h_lo);
}

PremiumResult dt_premium_approx(const WeightingFunction& h, double p0,
                                const SpreadRisk& risk) {
  const MomentSet ms = moments(risk);
  check_probability_window(p0, 0.5 * ms.total_mass);
  PremiumResult r{};
  r.moments = ms;
  r.variance_term = 0.0;
  r.maxiance_term = ms.maxiance / (2.0 * ms.total_mass) * h.local_index(p0);
  r.approx = r.variance_term + r.maxiance_term;
  r.solver_iterations = 0;
  try {
    r.exact = dt_premium_general(h, p0, risk);
  } catch (const Error&) {
    r.exact = kNan;  // outcomes not confined to [-1, 1]
  }
  return r;
}

double rdu_premium_exact(const PremiumQuery& q) {
  q.validate();
  const double h_lo = q.weighting.value(q.p0 - q.eps1);
  const double h_mid = q.weighting.value(q.p0);
  const double h_hi = q.weighting.value(q.p0 + q.eps1);
  const double denom = h_hi - h_lo;
  const double target = ((h_mid - h_lo) * q.utility.value(q.w0 - q.eps2) +
                         (h_hi - h_mid) * q.utility.value(q.w0 + q.eps2)) /
                        denom;
  return solve_indifference(q.utility, q.w0, target, q.eps2, nullptr);
}

double rdu_premium_general(const UtilityFunction& u, const WeightingFunction& h,
                           double w0, double p0, const SpreadRisk& risk) {
  const double eps1 = 0.5 * risk.total_mass();
  check_probability_window(p0, eps1);
  const double h_lo = h.value(p0 - eps1);
  const double h_hi = h.value(p0 + eps1);
  const std::vector<Atom>& atoms = risk.atoms();
  double boundary = p0 - eps1;
  double h_prev = h_lo;
  double weighted = 0.0;
  double span = 0.0;  // max |x_i|, bounds the root bracket
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    boundary = (i + 1 == atoms.size()) ? p0 + eps1
                                       : boundary + atoms[i].probability;
    const double h_cur = h.value(boundary);
    weighted += (h_cur - h_prev) * u.value(w0 + atoms[i].outcome);
    h_prev = h_cur;
    span = std::max(span, std::abs(atoms[i].outcome));
  }
  return solve_indifference(u, w0, weighted / (h_hi - h_lo), span, nullptr);
}

PremiumResult rdu_premium_approx(const UtilityFunction& u,
                                 const WeightingFunction& h, double w0,
                                 double p0, const SpreadRisk& risk) {
  const MomentSet ms = moments(risk);
  check_probability_window(p0, 0.5 * ms.total_mass);
  PremiumResult r{};
  r.moments = ms;
  r.variance_term = ms.variance / (2.0 * ms.total_mass) * u.local_index(w0);
  r.maxiance_term = ms.maxiance / (2.0 * ms.total_mass) * h.local_index(p0);
  r.approx = r.variance_term + r.maxiance_term;
  r.solver_iterations = 0;
  try {
    r.exact = rdu_premium_general(u, h, w0, p0, risk);
  } catch (const Error&) {
    r.exact = kNan;
  }
  return r;
}

double premium_sensitivity(const PremiumQuery& q, double lambda) {
  q.validate();
  const double h_lo = q.weighting.value(q.p0 - q.eps1);
  const double h_mid = q.weighting.value(q.p0);
  const double h_hi = q.weighting.value(q.p0 + q.eps1);
  const double denom = h_hi - h_lo;
  const double target = ((h_mid - h_lo) * q.utility.value(q.w0 - q.eps2) +
                         (h_hi - h_mid) * q.utility.value(q.w0 + q.eps2)) /
                        denom;
  if (std::abs(q.utility.value(q.w0 - lambda) - target) > 1e-9) {
    fail(ErrorCode::InconsistentLambda,
         "lambda does not satisfy the indifference equation");
  }
  const double u1_at_lambda = q.utility.d1(q.w0 - lambda);
  return (h_mid - h_lo) / denom * q.utility.d1(q.w0 - q.eps2) / u1_at_lambda -
         (h_hi - h_mid) / denom * q.utility.d1(q.w0 + q.eps2) / u1_at_lambda;
}

}  // namespace dualrisk
