#ifndef DUALRISK_SERIALIZATION_HPP
#define DUALRISK_SERIALIZATION_HPP

#include <string>

#include "dualrisk/comparative.hpp"
#include "dualrisk/evaluation.hpp"
#include "dualrisk/oracle.hpp"
#include "dualrisk/risk_model.hpp"

// JSON wire formats. Risks serialize as {"atoms":[[outcome,probability],...]}
// with outcomes ascending; doubles use shortest round-trip form, so an
// emit/parse cycle reproduces atom lists bit-for-bit.

namespace dualrisk {

std::string to_json(const Lottery& lottery);
std::string to_json(const SpreadRisk& risk);
std::string to_json(const MomentSet& moments);
std::string to_json(const PremiumResult& result);
std::string to_json(const DominanceReport& report);
std::string to_json(const oracle::McEstimate& estimate);

/// Parses and validates through build_lottery. Malformed JSON raises
/// ParamOutOfRange; invariant violations raise the builder's own errors.
Lottery lottery_from_json(const std::string& text);
SpreadRisk spread_risk_from_json(const std::string& text);

}  // namespace dualrisk

#endif  // DUALRISK_SERIALIZATION_HPP
