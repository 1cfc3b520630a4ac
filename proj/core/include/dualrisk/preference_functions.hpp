#ifndef DUALRISK_PREFERENCE_FUNCTIONS_HPP
#define DUALRISK_PREFERENCE_FUNCTIONS_HPP

#include <string>

#include "dualrisk/errors.hpp"

namespace dualrisk {

/// Value, first/second derivative, and local index -d2/d1 at one point.
struct EvalResult {
  double value;
  double d1;
  double d2;
  double local_index;
};

enum class UtilityFamily { linear, power, exponential, quadratic };

/// A twice-differentiable increasing utility of wealth with analytic
/// derivatives. Families:
///   linear          U(w) = w
///   power(g)        U(w) = w^g,              0 < g <= 1, domain w > 0
///   exponential(a)  U(w) = (1 - e^{-a w})/a, a != 0
///   quadratic(b)    U(w) = w - b w^2,        b > 0, domain w < 1/(2b)
class UtilityFunction {
 public:
  static UtilityFunction linear();
  static UtilityFunction power(double gamma);
  static UtilityFunction exponential(double a);
  static UtilityFunction quadratic(double b);

  double value(double w) const;  // DomainViolation outside the domain
  double d1(double w) const;
  double d2(double w) const;
  double local_index(double w) const;  // -U''(w)/U'(w)
  double inverse(double v) const;      // RangeViolation outside the range

  bool in_domain(double w) const;
  double domain_lo() const;  // open lower bound (-inf if unbounded)
  double domain_hi() const;  // open upper bound (+inf if unbounded)
  bool strictly_concave() const;

  UtilityFamily family() const { return family_; }
  double param() const { return param_; }
  std::string spec() const;

 private:
  UtilityFunction(UtilityFamily family, double param)
      : family_(family), param_(param) {}

  UtilityFamily family_;
  double param_;
};

enum class WeightingFamily { identity, power, quadratic, prelec, tk };

/// A twice-differentiable increasing probability distortion on [0,1] with
/// h(0) = 0, h(1) = 1, stored in the cumulative convention. Families:
///   identity       h(p) = p
///   power(k)       h(p) = p^k,                     k > 0
///   quadratic(c)   h(p) = p + c p (1-p),           |c| <= 1
///   prelec(alpha)  h(p) = 1 - exp{-(-log(1-p))^alpha},  0 < alpha < 1
///   tk(beta)       h(p) = 1 - (1-p)^b / ((1-p)^b + p^b)^{1/b},
///                  0.28 <= beta < 1 (monotonicity-safe range)
///
/// Values are exact at the endpoints (h(0)=0, h(1)=1). Derivatives of the
/// endpoint-singular families (prelec, tk) are evaluated with p clamped to
/// [1e-9, 1-1e-9]. Monotonicity h' > 0 is verified on a 1e3-point grid at
/// construction.
class WeightingFunction {
 public:
  static WeightingFunction identity();
  static WeightingFunction power(double k);
  static WeightingFunction quadratic(double c);
  static WeightingFunction prelec(double alpha);
  static WeightingFunction tk(double beta);

  double value(double p) const;  // DomainViolation outside [0,1]
  double d1(double p) const;
  double d2(double p) const;
  double local_index(double p) const;  // -h''(p)/h'(p)

  /// The decumulative-convention counterpart 1 - h(1-p). Applying it twice
  /// returns the original function.
  WeightingFunction reflected() const;
  bool is_reflected() const { return reflected_; }

  WeightingFamily family() const { return family_; }
  double param() const { return param_; }
  std::string spec() const;

 private:
  WeightingFunction(WeightingFamily family, double param, bool reflected)
      : family_(family), param_(param), reflected_(reflected) {}
  void check_monotone_grid() const;

  double base_value(double p) const;
  double base_d1(double p) const;
  double base_d2(double p) const;

  WeightingFamily family_;
  double param_;
  bool reflected_;
};

/// Value, analytic derivatives, and local index -U''/U' at w.
EvalResult utility_eval(const UtilityFunction& u, double w);

/// Value, analytic derivatives, and local index -h''/h' at p. For the
/// endpoint-singular families the whole tuple is evaluated at p clamped to
/// [1e-9, 1-1e-9].
EvalResult weighting_eval(const WeightingFunction& h, double p);

/// Solves U(w) = v. Analytic per family. Errors: RangeViolation.
double invert_utility(const UtilityFunction& u, double v);

/// h_bar(p) = 1 - h(1-p); derivatives map as h_bar'(p) = h'(1-p),
/// h_bar''(p) = -h''(1-p).
WeightingFunction decumulative_transform(const WeightingFunction& h);

/// Parses "linear", "power:0.5", "exp:1.0", "quad:0.3".
UtilityFunction parse_utility(const std::string& spec);

/// Parses "identity", "pow:2", "quad:0.5", "prelec:0.65", "tk:0.61".
WeightingFunction parse_weighting(const std::string& spec);

}  // namespace dualrisk

#endif  // DUALRISK_PREFERENCE_FUNCTIONS_HPP
