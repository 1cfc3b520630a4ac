#include "dualrisk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dualrisk::oracle {

namespace {

double pair_sum(const std::vector<Atom>& atoms, double center) {
  double total = 0.0;
  for (const Atom& a : atoms) {
    for (const Atom& b : atoms) {
      total += a.probability * b.probability *
               std::max(a.outcome - center, b.outcome - center);
    }
  }
  return total;
}

}  // namespace

double maxiance_pairs(const Lottery& lottery) {
  double mean = 0.0;
  for (const Atom& a : lottery.atoms()) mean += a.probability * a.outcome;
  return pair_sum(lottery.atoms(), mean);
}

double maxiance_pairs(const SpreadRisk& risk) {
  // Sub-probabilities enter directly; centering at the (zero) mean.
  return pair_sum(risk.atoms(), 0.0);
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix64(seed, counter) >> 11) * 0x1.0p-53;
}

McEstimate maxiance_mc(const Lottery& lottery, std::int64_t n_samples,
                       std::uint64_t seed) {
  if (n_samples < 100) {
    fail(ErrorCode::BadSampleCount,
         "need at least 100 samples, got " + std::to_string(n_samples));
  }
  const std::vector<Atom>& atoms = lottery.atoms();
  std::vector<double> cum(atoms.size());
  double mean = 0.0;
  double running = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    running += atoms[i].probability;
    cum[i] = running;
    mean += atoms[i].probability * atoms[i].outcome;
  }
  cum.back() = 1.0;

  auto quantile = [&](double u) {
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::size_t idx = std::min<std::size_t>(it - cum.begin(), atoms.size() - 1);
    return atoms[idx].outcome;
  };

  // Welford accumulation of max(X1, X2) - mean.
  double avg = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const std::uint64_t c = static_cast<std::uint64_t>(i);
    const double x1 = quantile(uniform01(seed, 2 * c));
    const double x2 = quantile(uniform01(seed, 2 * c + 1));
    const double y = std::max(x1, x2) - mean;
    const double delta = y - avg;
    avg += delta / static_cast<double>(i + 1);
    m2 += delta * (y - avg);
  }
  McEstimate est{};
  est.estimate = avg;
  est.std_error = n_samples > 1
                      ? std::sqrt(m2 / static_cast<double>(n_samples - 1) /
                                  static_cast<double>(n_samples))
                      : 0.0;
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     int order) {
  switch (order) {
    case 1: {
      const double h = std::max(1e-6, 1e-6 * std::abs(x));
      return (f(x + h) - f(x - h)) / (2.0 * h);
    }
    case 2: {
      const double h = std::max(1e-6, 1e-6 * std::abs(x));
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    }
    case 3: {
      const double h = 1e-4 * std::max(1.0, std::abs(x));
      return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) -
              f(x - 2.0 * h)) /
             (2.0 * h * h * h);
    }
    default:
      fail(ErrorCode::ParamOutOfRange, "derivative order must be 1, 2, or 3");
  }
}

double indifference_bisect(double lhs_weight, double rhs_value,
                           const UtilityFunction& u, double w0,
                           std::pair<double, double> bracket, int* iterations) {
  if (!(lhs_weight > 0.0)) {
    fail(ErrorCode::ParamOutOfRange, "lhs_weight must be positive");
  }
  auto residual = [&](double lambda) {
    return lhs_weight * u.value(w0 - lambda) - rhs_value;
  };
  double lo = bracket.first;
  double hi = bracket.second;
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  if (f_lo == 0.0) {
    if (iterations) *iterations = 0;
    return lo;
  }
  if (f_hi == 0.0) {
    if (iterations) *iterations = 0;
    return hi;
  }
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    fail(ErrorCode::NoBracket, "no sign change over [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]");
  }
  double mid = 0.5 * (lo + hi);
  int iter = 0;
  for (; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
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

}  // namespace dualrisk::oracle
