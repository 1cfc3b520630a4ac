#ifndef DUALRISK_RISK_MODEL_HPP
#define DUALRISK_RISK_MODEL_HPP

#include <cstddef>
#include <vector>

#include "dualrisk/errors.hpp"

namespace dualrisk {

/// One outcome of a discrete risk together with its probability mass.
struct Atom {
  double outcome;
  double probability;
};

// Construction-time tolerance for user input; internal identities are held
// to 1e-12 (all arithmetic here is closed-form).
inline constexpr double kBuildTol = 1e-9;
inline constexpr double kInternalTol = 1e-12;

class SpreadRisk;

/// A finite discrete probability distribution over monetary outcomes.
/// Invariants: outcomes strictly ascending, all probabilities positive,
/// probabilities sum to one (the builder renormalizes to a machine-exact
/// left-to-right sum of 1).
class Lottery {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  explicit Lottery(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  friend Lottery build_lottery(const std::vector<Atom>& pairs);
  friend Lottery apply_spread(const Lottery& base, double branch_outcome,
                              const SpreadRisk& risk);

  std::vector<Atom> atoms_;
};

/// A zero-mean sub-probability risk: total mass Pr <= 1, unconditional mean
/// zero. Models a mean-preserving spread effective on one lottery branch.
class SpreadRisk {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const { return total_mass_; }

 private:
  SpreadRisk(std::vector<Atom> atoms, double total_mass)
      : atoms_(std::move(atoms)), total_mass_(total_mass) {}
  friend SpreadRisk build_spread_risk(const std::vector<Atom>& pairs);

  std::vector<Atom> atoms_;
  double total_mass_;
};

/// Primal and dual second-order moments of a risk.
///
/// For a full-mass lottery the centering constant is the mean; for a
/// sub-probability spread risk it is 0 and all moments are "unconditional",
/// i.e. Stieltjes integrals against the sub-CDF with F(inf) = total_mass.
struct MomentSet {
  double mean;
  double variance;
  double maxiance;  // E[max of two independent copies] - mean
  double miniance;  // E[min of two independent copies] - mean
  double total_mass;
};

/// Validates, sorts, merges duplicate outcomes, and renormalizes so the
/// probabilities sum to exactly 1.
/// Errors: NonPositiveProbability, MassNotOne (|sum-1| > 1e-9), EmptyLottery.
Lottery build_lottery(const std::vector<Atom>& pairs);

/// Builds a zero-mean sub-probability risk. Total mass is the probability
/// sum (must be <= 1); the unconditional mean must vanish within 1e-9.
/// Errors: NonPositiveProbability, MassExceedsOne, NotZeroMean, EmptyLottery.
SpreadRisk build_spread_risk(const std::vector<Atom>& pairs);

/// The canonical symmetric binary spread: outcomes -eps2/+eps2, each with
/// probability eps1, total mass 2*eps1. Requires 0 < eps1 <= 1/2, eps2 > 0.
SpreadRisk binary_spread(double eps1, double eps2);

/// An n-state spread with equal unconditional state probabilities 2*eps1/n
/// over ascending outcomes summing to zero. Equal adjacent outcomes are
/// permitted and merged.
/// Errors: ParamOutOfRange (n < 2, eps1 outside (0,1/2], outcomes not
/// ascending), NotZeroMean.
SpreadRisk nstate_spread(double eps1, const std::vector<double>& outcomes);

/// Attaches a spread risk to the branch of `base` at `branch_outcome`:
/// removes risk.total_mass() from that atom and redistributes it to
/// branch_outcome + x_i. The mean is preserved. Spread outcomes may touch
/// the neighboring branch outcomes (masses merge) but must not cross them.
/// Errors: InsufficientBranchMass, OrderingViolated.
Lottery apply_spread(const Lottery& base, double branch_outcome,
                     const SpreadRisk& risk);

MomentSet moments(const Lottery& lottery);
MomentSet moments(const SpreadRisk& risk);

/// n-th dual moment about the mean: E[max of n independent copies] - mean,
/// n >= 1 (n = 1 gives 0, n = 2 the maxiance). Errors: BadOrder.
double dual_moment(const Lottery& lottery, int n);

/// Gini coefficient as maxiance / mean; identical to the normalized expected
/// absolute difference E|X1-X2| / (2 E[X]). Errors: ZeroMeanGini.
double gini(const Lottery& lottery);

}  // namespace dualrisk

#endif  // DUALRISK_RISK_MODEL_HPP
