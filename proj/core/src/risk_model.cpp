#include "dualrisk/risk_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dualrisk {

namespace {

void check_atoms_finite(const std::vector<Atom>& pairs) {
  for (const Atom& a : pairs) {
    if (!std::isfinite(a.outcome)) {
      fail(ErrorCode::ParamOutOfRange, "non-finite outcome");
    }
    if (!(a.probability > 0.0) || !std::isfinite(a.probability)) {
      fail(ErrorCode::NonPositiveProbability,
           "probability " + std::to_string(a.probability) + " at outcome " +
               std::to_string(a.outcome));
    }
  }
}

// Sorts by outcome and merges atoms with identical outcomes. Merging cannot
// change any dual moment because max over ties is symmetric.
std::vector<Atom> sort_and_merge(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.outcome < b.outcome; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!merged.empty() && merged.back().outcome == a.outcome) {
      merged.back().probability += a.probability;
    } else {
      merged.push_back(a);
    }
  }
  return merged;
}

double mass_of(const std::vector<Atom>& atoms) {
  double sum = 0.0;
  for (const Atom& a : atoms) sum += a.probability;
  return sum;
}

double mean_of(const std::vector<Atom>& atoms) {
  double m = 0.0;
  for (const Atom& a : atoms) m += a.probability * a.outcome;
  return m;
}

// Shared moment kernel. `center` is the mean for full-mass lotteries and 0
// for sub-probability spread risks; `total_mass` caps the running CDF so the
// top increment telescopes exactly.
MomentSet compute_moments(const std::vector<Atom>& atoms, double total_mass,
                          double center) {
  MomentSet ms{};
  ms.total_mass = total_mass;
  ms.mean = mean_of(atoms);

  double variance = 0.0;
  double maxiance = 0.0;
  double miniance = 0.0;
  double cdf = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double x = atoms[i].outcome - center;
    const double prev = cdf;
    cdf = (i + 1 == atoms.size()) ? total_mass : cdf + atoms[i].probability;
    variance += atoms[i].probability * x * x;
    maxiance += x * (cdf * cdf - prev * prev);
    // survival form: (Pr - F) decreasing; equals E[min] - mean at Pr = 1
    const double sprev = total_mass - prev;
    const double scur = total_mass - cdf;
    miniance += x * (sprev * sprev - scur * scur);
  }
  ms.variance = variance;
  ms.maxiance = maxiance;
  ms.miniance = miniance;
  return ms;
}

}  // namespace

Lottery build_lottery(const std::vector<Atom>& pairs) {
  if (pairs.empty()) fail(ErrorCode::EmptyLottery, "no atoms");
  check_atoms_finite(pairs);
  std::vector<Atom> atoms = sort_and_merge(pairs);
  const double mass = mass_of(atoms);
  if (std::abs(mass - 1.0) > kBuildTol) {
    fail(ErrorCode::MassNotOne, "probabilities sum to " + std::to_string(mass));
  }
  if (mass != 1.0) {
    for (Atom& a : atoms) a.probability /= mass;
    // Pin the last atom so the left-to-right sum is exactly 1.
    double head = 0.0;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
      head += atoms[i].probability;
    }
    atoms.back().probability = 1.0 - head;
    if (!(atoms.back().probability > 0.0)) {
      fail(ErrorCode::NonPositiveProbability, "renormalization underflow");
    }
  }
  return Lottery(std::move(atoms));
}

SpreadRisk build_spread_risk(const std::vector<Atom>& pairs) {
  if (pairs.empty()) fail(ErrorCode::EmptyLottery, "no atoms");
  check_atoms_finite(pairs);
  std::vector<Atom> atoms = sort_and_merge(pairs);
  const double mass = mass_of(atoms);
  if (mass > 1.0 + kInternalTol) {
    fail(ErrorCode::MassExceedsOne, "total mass " + std::to_string(mass));
  }
  const double mean = mean_of(atoms);
  if (std::abs(mean) > kBuildTol) {
    fail(ErrorCode::NotZeroMean, "unconditional mean " + std::to_string(mean));
  }
  return SpreadRisk(std::move(atoms), std::min(mass, 1.0));
}

SpreadRisk binary_spread(double eps1, double eps2) {
  if (!(eps1 > 0.0) || eps1 > 0.5) {
    fail(ErrorCode::ParamOutOfRange, "eps1 must lie in (0, 1/2]");
  }
  if (!(eps2 > 0.0) || !std::isfinite(eps2)) {
    fail(ErrorCode::ParamOutOfRange, "eps2 must be positive");
  }
  return build_spread_risk({{-eps2, eps1}, {eps2, eps1}});
}

SpreadRisk nstate_spread(double eps1, const std::vector<double>& outcomes) {
  const std::size_t n = outcomes.size();
  if (n < 2) fail(ErrorCode::ParamOutOfRange, "need at least 2 states");
  if (!(eps1 > 0.0) || eps1 > 0.5) {
    fail(ErrorCode::ParamOutOfRange, "eps1 must lie in (0, 1/2]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && outcomes[i] < outcomes[i - 1]) {
      fail(ErrorCode::ParamOutOfRange, "outcomes must be ascending");
    }
    sum += outcomes[i];
  }
  if (std::abs(sum) > kBuildTol) {
    fail(ErrorCode::NotZeroMean, "outcomes sum to " + std::to_string(sum));
  }
  const double p = 2.0 * eps1 / static_cast<double>(n);
  std::vector<Atom> atoms;
  atoms.reserve(n);
  for (double x : outcomes) atoms.push_back({x, p});
  return build_spread_risk(atoms);
}

Lottery apply_spread(const Lottery& base, double branch_outcome,
                     const SpreadRisk& risk) {
  const std::vector<Atom>& atoms = base.atoms();
  const double match_tol = kInternalTol * std::max(1.0, std::abs(branch_outcome));
  std::size_t idx = atoms.size();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (std::abs(atoms[i].outcome - branch_outcome) <= match_tol) {
      idx = i;
      break;
    }
  }
  if (idx == atoms.size()) {
    fail(ErrorCode::InsufficientBranchMass, "no atom at branch outcome");
  }
  const double branch_mass = atoms[idx].probability;
  if (branch_mass + kInternalTol < risk.total_mass()) {
    fail(ErrorCode::InsufficientBranchMass,
         "branch mass " + std::to_string(branch_mass) + " < spread mass " +
             std::to_string(risk.total_mass()));
  }

  const double lower = idx > 0 ? atoms[idx - 1].outcome
                               : -std::numeric_limits<double>::infinity();
  const double upper = idx + 1 < atoms.size()
                           ? atoms[idx + 1].outcome
                           : std::numeric_limits<double>::infinity();
  for (const Atom& a : risk.atoms()) {
    const double shifted = branch_outcome + a.outcome;
    if (shifted < lower || shifted > upper) {
      fail(ErrorCode::OrderingViolated,
           "shifted outcome " + std::to_string(shifted) +
               " crosses a neighboring branch");
    }
  }

  // Mass landing back exactly on the branch never leaves it, so the
  // degenerate spread {0} reproduces the base bit-for-bit.
  double net_out = 0.0;
  for (const Atom& a : risk.atoms()) {
    if (a.outcome != 0.0) net_out += a.probability;
  }

  std::vector<Atom> result;
  result.reserve(atoms.size() + risk.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i == idx) {
      const double remainder = branch_mass - net_out;
      if (remainder > kInternalTol) result.push_back({branch_outcome, remainder});
    } else {
      result.push_back(atoms[i]);
    }
  }
  for (const Atom& a : risk.atoms()) {
    if (a.outcome != 0.0) {
      result.push_back({branch_outcome + a.outcome, a.probability});
    }
  }
  return Lottery(sort_and_merge(std::move(result)));
}

MomentSet moments(const Lottery& lottery) {
  const double mean = mean_of(lottery.atoms());
  return compute_moments(lottery.atoms(), 1.0, mean);
}

MomentSet moments(const SpreadRisk& risk) {
  // Zero-mean enforced at construction: unconditional moments center at 0.
  return compute_moments(risk.atoms(), risk.total_mass(), 0.0);
}

double dual_moment(const Lottery& lottery, int n) {
  if (n < 1) fail(ErrorCode::BadOrder, "order must be >= 1");
  const std::vector<Atom>& atoms = lottery.atoms();
  const double mean = mean_of(atoms);
  double cdf = 0.0;
  double result = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double prev = cdf;
    cdf = (i + 1 == atoms.size()) ? 1.0 : cdf + atoms[i].probability;
    result += (atoms[i].outcome - mean) *
              (std::pow(cdf, n) - std::pow(prev, n));
  }
  return result;
}

double gini(const Lottery& lottery) {
  const MomentSet ms = moments(lottery);
  if (std::abs(ms.mean) <= kInternalTol) {
    fail(ErrorCode::ZeroMeanGini, "mean is zero");
  }
  return ms.maxiance / ms.mean;
}

}  // namespace dualrisk
