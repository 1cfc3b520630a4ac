#ifndef DUALRISK_ORACLE_HPP
#define DUALRISK_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "dualrisk/preference_functions.hpp"
#include "dualrisk/risk_model.hpp"

// Independent brute-force and Monte Carlo validators. Everything here is
// deliberately computed by a different route than the analytic module it
// cross-checks.

namespace dualrisk::oracle {

/// A Monte Carlo estimate with its standard error.
struct McEstimate {
  double estimate;
  double std_error;  // sample standard deviation / sqrt(n_samples)
  std::int64_t n_samples;
  std::uint64_t seed;
};

/// Maxiance by explicit O(n^2) pair enumeration:
/// sum_i sum_j p_i p_j max(x_i - c, x_j - c), with c the mean for lotteries
/// and 0 for sub-probability spread risks.
double maxiance_pairs(const Lottery& lottery);
double maxiance_pairs(const SpreadRisk& risk);

/// Estimates E[max of two draws] - mean by inverse-CDF sampling from a
/// counter-based generator. Sample i derives from (seed, counter i), so the
/// result is bit-exact for a fixed seed and count regardless of how samples
/// are chunked across threads. Errors: BadSampleCount (n < 100).
McEstimate maxiance_mc(const Lottery& lottery, std::int64_t n_samples,
                       std::uint64_t seed);

/// Central finite-difference derivative of order 1, 2, or 3.
/// Steps: max(1e-6, 1e-6 |x|) for orders 1-2 and 1e-4 max(1, |x|) for order 3.
double fd_derivative(const std::function<double(double)>& f, double x,
                     int order);

/// Solves lhs_weight * U(w0 - lambda) = rhs_value for lambda by bisection
/// over `bracket`. Residual < 1e-12 in at most 200 iterations.
/// Errors: NoBracket.
double indifference_bisect(double lhs_weight, double rhs_value,
                           const UtilityFunction& u, double w0,
                           std::pair<double, double> bracket,
                           int* iterations = nullptr);

/// Counter-based generator (splitmix64 over a golden-ratio stream): the
/// substream mechanism behind maxiance_mc, exposed for deterministic
/// sampling in tests.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter);

/// Uniform double in [0, 1) from (seed, counter).
double uniform01(std::uint64_t seed, std::uint64_t counter);

}  // namespace dualrisk::oracle

#endif  // DUALRISK_ORACLE_HPP
