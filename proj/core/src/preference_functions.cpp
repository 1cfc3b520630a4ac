#include "dualrisk/preference_functions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace dualrisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointClamp = 1e-9;

double parse_param(const std::string& spec, std::size_t colon) {
  if (colon == std::string::npos || colon + 1 >= spec.size()) {
    fail(ErrorCode::ParamOutOfRange, "missing parameter in spec '" + spec + "'");
  }
  const std::string tail = spec.substr(colon + 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tail, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::ParamOutOfRange, "bad parameter in spec '" + spec + "'");
  }
  if (used != tail.size()) {
    fail(ErrorCode::ParamOutOfRange, "bad parameter in spec '" + spec + "'");
  }
  return value;
}

std::string format_spec(const char* name, double param) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s:%.17g", name, param);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// UtilityFunction

UtilityFunction UtilityFunction::linear() {
  return UtilityFunction(UtilityFamily::linear, 0.0);
}

UtilityFunction UtilityFunction::power(double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0) {
    fail(ErrorCode::ParamOutOfRange, "power utility needs 0 < gamma <= 1");
  }
  return UtilityFunction(UtilityFamily::power, gamma);
}

UtilityFunction UtilityFunction::exponential(double a) {
  if (a == 0.0 || !std::isfinite(a)) {
    fail(ErrorCode::ParamOutOfRange, "exponential utility needs a != 0");
  }
  return UtilityFunction(UtilityFamily::exponential, a);
}

UtilityFunction UtilityFunction::quadratic(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    fail(ErrorCode::ParamOutOfRange, "quadratic utility needs b > 0");
  }
  return UtilityFunction(UtilityFamily::quadratic, b);
}

bool UtilityFunction::in_domain(double w) const {
  return w > domain_lo() && w < domain_hi();
}

double UtilityFunction::domain_lo() const {
  return family_ == UtilityFamily::power ? 0.0 : -kInf;
}

double UtilityFunction::domain_hi() const {
  return family_ == UtilityFamily::quadratic ? 1.0 / (2.0 * param_) : kInf;
}

bool UtilityFunction::strictly_concave() const {
  switch (family_) {
    case UtilityFamily::linear: return false;
    case UtilityFamily::power: return param_ < 1.0;
    case UtilityFamily::exponential: return param_ > 0.0;
    case UtilityFamily::quadratic: return true;
  }
  return false;
}

double UtilityFunction::value(double w) const {
  if (!in_domain(w)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at w = " + std::to_string(w));
  }
  switch (family_) {
    case UtilityFamily::linear: return w;
    case UtilityFamily::power: return std::pow(w, param_);
    case UtilityFamily::exponential: return -std::expm1(-param_ * w) / param_;
    case UtilityFamily::quadratic: return w - param_ * w * w;
  }
  return 0.0;
}

double UtilityFunction::d1(double w) const {
  if (!in_domain(w)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at w = " + std::to_string(w));
  }
  switch (family_) {
    case UtilityFamily::linear: return 1.0;
    case UtilityFamily::power: return param_ * std::pow(w, param_ - 1.0);
    case UtilityFamily::exponential: return std::exp(-param_ * w);
    case UtilityFamily::quadratic: return 1.0 - 2.0 * param_ * w;
  }
  return 0.0;
}

double UtilityFunction::d2(double w) const {
  if (!in_domain(w)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at w = " + std::to_string(w));
  }
  switch (family_) {
    case UtilityFamily::linear: return 0.0;
    case UtilityFamily::power:
      return param_ * (param_ - 1.0) * std::pow(w, param_ - 2.0);
    case UtilityFamily::exponential:
      return -param_ * std::exp(-param_ * w);
    case UtilityFamily::quadratic: return -2.0 * param_;
  }
  return 0.0;
}

double UtilityFunction::local_index(double w) const {
  if (!in_domain(w)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at w = " + std::to_string(w));
  }
  switch (family_) {
    case UtilityFamily::linear: return 0.0;
    case UtilityFamily::power: return (1.0 - param_) / w;
    case UtilityFamily::exponential: return param_;
    case UtilityFamily::quadratic:
      return 2.0 * param_ / (1.0 - 2.0 * param_ * w);
  }
  return 0.0;
}

double UtilityFunction::inverse(double v) const {
  switch (family_) {
    case UtilityFamily::linear:
      return v;
    case UtilityFamily::power:
      if (!(v > 0.0)) {
        fail(ErrorCode::RangeViolation,
             spec() + " has no preimage for v = " + std::to_string(v));
      }
      return std::pow(v, 1.0 / param_);
    case UtilityFamily::exponential: {
      const double arg = -param_ * v;  // exp(-a w) = 1 - a v
      if (!(arg > -1.0)) {
        fail(ErrorCode::RangeViolation,
             spec() + " has no preimage for v = " + std::to_string(v));
      }
      return -std::log1p(arg) / param_;
    }
    case UtilityFamily::quadratic: {
      const double disc = 1.0 - 4.0 * param_ * v;
      if (disc <= 0.0) {
        fail(ErrorCode::RangeViolation,
             spec() + " has no preimage for v = " + std::to_string(v));
      }
      // increasing branch of b w^2 - w + v = 0
      return 2.0 * v / (1.0 + std::sqrt(disc));
    }
  }
  return 0.0;
}

std::string UtilityFunction::spec() const {
  switch (family_) {
    case UtilityFamily::linear: return "linear";
    case UtilityFamily::power: return format_spec("power", param_);
    case UtilityFamily::exponential: return format_spec("exp", param_);
    case UtilityFamily::quadratic: return format_spec("quad", param_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// WeightingFunction

WeightingFunction WeightingFunction::identity() {
  return WeightingFunction(WeightingFamily::identity, 0.0, false);
}

WeightingFunction WeightingFunction::power(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    fail(ErrorCode::ParamOutOfRange, "power weighting needs k > 0");
  }
  WeightingFunction h(WeightingFamily::power, k, false);
  h.check_monotone_grid();
  return h;
}

WeightingFunction WeightingFunction::quadratic(double c) {
  if (!(std::abs(c) <= 1.0)) {
    fail(ErrorCode::ParamOutOfRange, "quadratic weighting needs |c| <= 1");
  }
  WeightingFunction h(WeightingFamily::quadratic, c, false);
  h.check_monotone_grid();
  return h;
}

WeightingFunction WeightingFunction::prelec(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    fail(ErrorCode::ParamOutOfRange, "prelec needs 0 < alpha < 1");
  }
  WeightingFunction h(WeightingFamily::prelec, alpha, false);
  h.check_monotone_grid();
  return h;
}

WeightingFunction WeightingFunction::tk(double beta) {
  // The functional form loses monotonicity for small beta; 0.28 is a safe
  // lower bound, well below the empirically reported range.
  if (!(beta >= 0.28) || !(beta < 1.0)) {
    fail(ErrorCode::ParamOutOfRange, "tk needs 0.28 <= beta < 1");
  }
  WeightingFunction h(WeightingFamily::tk, beta, false);
  h.check_monotone_grid();
  return h;
}

void WeightingFunction::check_monotone_grid() const {
  for (int i = 1; i < 1000; ++i) {
    const double p = static_cast<double>(i) / 1000.0;
    if (!(base_d1(p) > 0.0)) {
      fail(ErrorCode::ParamOutOfRange,
           spec() + " is not increasing at p = " + std::to_string(p));
    }
  }
}

double WeightingFunction::base_value(double p) const {
  switch (family_) {
    case WeightingFamily::identity:
      return p;
    case WeightingFamily::power:
      return std::pow(p, param_);
    case WeightingFamily::quadratic:
      return p + param_ * p * (1.0 - p);
    case WeightingFamily::prelec: {
      if (p <= 0.0) return 0.0;
      if (p >= 1.0) return 1.0;
      const double log_surv = -std::log1p(-p);  // -log(1-p) > 0
      return -std::expm1(-std::pow(log_surv, param_));
    }
    case WeightingFamily::tk: {
      if (p <= 0.0) return 0.0;
      if (p >= 1.0) return 1.0;
      const double q = 1.0 - p;
      const double s = std::pow(q, param_) + std::pow(p, param_);
      return 1.0 - std::pow(q, param_) * std::pow(s, -1.0 / param_);
    }
  }
  return 0.0;
}

double WeightingFunction::base_d1(double p) const {
  switch (family_) {
    case WeightingFamily::identity:
      return 1.0;
    case WeightingFamily::power:
      return param_ * std::pow(p, param_ - 1.0);
    case WeightingFamily::quadratic:
      return 1.0 + param_ * (1.0 - 2.0 * p);
    case WeightingFamily::prelec: {
      const double pc = std::min(std::max(p, kEndpointClamp), 1.0 - kEndpointClamp);
      const double log_surv = -std::log1p(-pc);
      return param_ * std::pow(log_surv, param_ - 1.0) *
             std::exp(-std::pow(log_surv, param_)) / (1.0 - pc);
    }
    case WeightingFamily::tk: {
      const double pc = std::min(std::max(p, kEndpointClamp), 1.0 - kEndpointClamp);
      const double q = 1.0 - pc;
      const double qb = std::pow(q, param_);
      const double pb = std::pow(pc, param_);
      const double s = qb + pb;
      const double g = qb * std::pow(s, -1.0 / param_);
      const double psi1 = -param_ / q -
                          (std::pow(pc, param_ - 1.0) - std::pow(q, param_ - 1.0)) / s;
      return -g * psi1;
    }
  }
  return 0.0;
}

double WeightingFunction::base_d2(double p) const {
  switch (family_) {
    case WeightingFamily::identity:
      return 0.0;
    case WeightingFamily::power:
      return param_ * (param_ - 1.0) * std::pow(p, param_ - 2.0);
    case WeightingFamily::quadratic:
      return -2.0 * param_;
    case WeightingFamily::prelec: {
      const double pc = std::min(std::max(p, kEndpointClamp), 1.0 - kEndpointClamp);
      const double log_surv = -std::log1p(-pc);
      // h''/h' = [(alpha-1)/L - alpha L^{alpha-1} + 1] / (1-p), L = -log(1-p)
      const double ratio = ((param_ - 1.0) / log_surv -
                            param_ * std::pow(log_surv, param_ - 1.0) + 1.0) /
                           (1.0 - pc);
      return base_d1(pc) * ratio;
    }
    case WeightingFamily::tk: {
      const double pc = std::min(std::max(p, kEndpointClamp), 1.0 - kEndpointClamp);
      const double q = 1.0 - pc;
      const double qb = std::pow(q, param_);
      const double pb = std::pow(pc, param_);
      const double s = qb + pb;
      const double g = qb * std::pow(s, -1.0 / param_);
      const double pb1 = std::pow(pc, param_ - 1.0);
      const double qb1 = std::pow(q, param_ - 1.0);
      const double s1 = param_ * (pb1 - qb1);
      // psi = log g; h = 1 - e^psi, h'' = -g (psi'^2 + psi'')
      const double psi1 = -param_ / q - (pb1 - qb1) / s;
      const double psi2 =
          -param_ / (q * q) -
          ((param_ - 1.0) * (std::pow(pc, param_ - 2.0) + std::pow(q, param_ - 2.0)) * s -
           (pb1 - qb1) * s1) /
              (s * s);
      return -g * (psi1 * psi1 + psi2);
    }
  }
  return 0.0;
}

double WeightingFunction::value(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at p = " + std::to_string(p));
  }
  return reflected_ ? 1.0 - base_value(1.0 - p) : base_value(p);
}

double WeightingFunction::d1(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at p = " + std::to_string(p));
  }
  return reflected_ ? base_d1(1.0 - p) : base_d1(p);
}

double WeightingFunction::d2(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::DomainViolation,
         spec() + " undefined at p = " + std::to_string(p));
  }
  return reflected_ ? -base_d2(1.0 - p) : base_d2(p);
}

double WeightingFunction::local_index(double p) const {
  return -d2(p) / d1(p);
}

WeightingFunction WeightingFunction::reflected() const {
  return WeightingFunction(family_, param_, !reflected_);
}

std::string WeightingFunction::spec() const {
  std::string base;
  switch (family_) {
    case WeightingFamily::identity: base = "identity"; break;
    case WeightingFamily::power: base = format_spec("pow", param_); break;
    case WeightingFamily::quadratic: base = format_spec("quad", param_); break;
    case WeightingFamily::prelec: base = format_spec("prelec", param_); break;
    case WeightingFamily::tk: base = format_spec("tk", param_); break;
  }
  return reflected_ ? base + " (decumulative)" : base;
}

// ---------------------------------------------------------------------------
// Free functions

EvalResult utility_eval(const UtilityFunction& u, double w) {
  EvalResult r{};
  r.value = u.value(w);
  r.d1 = u.d1(w);
  r.d2 = u.d2(w);
  r.local_index = u.local_index(w);
  return r;
}

EvalResult weighting_eval(const WeightingFunction& h, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::DomainViolation,
         h.spec() + " undefined at p = " + std::to_string(p));
  }
  EvalResult r{};
  r.value = h.value(p);
  r.d1 = h.d1(p);
  r.d2 = h.d2(p);
  r.local_index = -r.d2 / r.d1;
  return r;
}

double invert_utility(const UtilityFunction& u, double v) { return u.inverse(v); }

WeightingFunction decumulative_transform(const WeightingFunction& h) {
  return h.reflected();
}

UtilityFunction parse_utility(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "linear") {
    if (colon != std::string::npos) {
      fail(ErrorCode::ParamOutOfRange, "linear takes no parameter");
    }
    return UtilityFunction::linear();
  }
  if (name == "power") return UtilityFunction::power(parse_param(spec, colon));
  if (name == "exp") return UtilityFunction::exponential(parse_param(spec, colon));
  if (name == "quad") return UtilityFunction::quadratic(parse_param(spec, colon));
  fail(ErrorCode::ParamOutOfRange, "unknown utility spec '" + spec + "'");
}

WeightingFunction parse_weighting(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "identity") {
    if (colon != std::string::npos) {
      fail(ErrorCode::ParamOutOfRange, "identity takes no parameter");
    }
    return WeightingFunction::identity();
  }
  if (name == "pow") return WeightingFunction::power(parse_param(spec, colon));
  if (name == "quad") return WeightingFunction::quadratic(parse_param(spec, colon));
  if (name == "prelec") return WeightingFunction::prelec(parse_param(spec, colon));
  if (name == "tk") return WeightingFunction::tk(parse_param(spec, colon));
  fail(ErrorCode::ParamOutOfRange, "unknown weighting spec '" + spec + "'");
}

}  // namespace dualrisk
