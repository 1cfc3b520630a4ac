#include "dualrisk/comparative.hpp"

#include <algorithm>
#include <cmath>

namespace dualrisk {

namespace {

constexpr double kDominanceSlack = 1e-10;

template <class Fn1, class Fn2>
DominanceCheck dominance_on_grid(const Fn1& index1, const Fn2& index2,
                                 const std::vector<double>& grid) {
  DominanceCheck check{true, 0.0};
  for (double x : grid) {
    const double gap = index2(x) - index1(x);
    if (gap < -kDominanceSlack) {
      check.holds = false;
      check.worst_violation = std::max(check.worst_violation, -gap);
    }
  }
  return check;
}

DominanceCheck merge(const DominanceCheck& a, const DominanceCheck& b) {
  return {a.holds && b.holds, std::max(a.worst_violation, b.worst_violation)};
}

// Concavity of f2 composed with f1^-1 through divided differences: slopes
// (f2 steps over f1 steps) must be nonincreasing along the image grid.
template <class F>
bool concave_transform_impl(const F& f1, const F& f2,
                            const std::vector<double>& grid) {
  std::vector<double> points(grid);
  std::sort(points.begin(), points.end());
  if (points.size() < 3) {
    fail(ErrorCode::RangeViolation, "grid needs at least 3 points");
  }
  double prev_slope = 0.0;
  bool have_prev = false;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double dt = f1.value(points[i + 1]) - f1.value(points[i]);
    if (!(dt > 0.0)) {
      fail(ErrorCode::RangeViolation, "inner function not strictly increasing");
    }
    const double slope = (f2.value(points[i + 1]) - f2.value(points[i])) / dt;
    if (have_prev &&
        slope > prev_slope + kDominanceSlack * std::max(1.0, std::abs(prev_slope))) {
      ok = false;
    }
    prev_slope = slope;
    have_prev = true;
  }
  return ok;
}

template <class F>
bool cross_ratio_impl(const F& f1, const F& f2,
                      const std::vector<Quadruple>& quadruples) {
  bool ok = true;
  for (const Quadruple& q : quadruples) {
    if (!(q.v < q.w && q.w <= q.x && q.x < q.y)) {
      fail(ErrorCode::BadQuadruple, "need v < w <= x < y");
    }
    const double r1 = (f1.value(q.y) - f1.value(q.x)) /
                      (f1.value(q.w) - f1.value(q.v));
    const double r2 = (f2.value(q.y) - f2.value(q.x)) /
                      (f2.value(q.w) - f2.value(q.v));
    if (r2 > r1 + kDominanceSlack * std::max(1.0, std::abs(r1))) ok = false;
  }
  return ok;
}

// Deterministic quadruples from a grid: index combinations i < j <= k < l
// over a coarse subsample, including the j == k touching case.
std::vector<Quadruple> quadruples_from_grid(const std::vector<double>& grid) {
  std::vector<double> points(grid);
  std::sort(points.begin(), points.end());
  std::vector<double> sub;
  const std::size_t stride = std::max<std::size_t>(1, points.size() / 9);
  for (std::size_t i = 0; i < points.size(); i += stride) sub.push_back(points[i]);
  if (sub.back() != points.back()) sub.push_back(points.back());
  std::vector<Quadruple> quads;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      for (std::size_t k = j; k < sub.size(); ++k) {
        for (std::size_t l = k + 1; l < sub.size(); ++l) {
          quads.push_back({sub[i], sub[j], sub[k], sub[l]});
        }
      }
    }
  }
  return quads;
}

}  // namespace

DominanceCheck index_dominance(const Agent& a1, const Agent& a2,
                               const std::vector<double>& w_grid,
                               const std::vector<double>& p_grid) {
  const auto u_index1 = [&](double w) { return a1.utility.local_index(w); };
  const auto u_index2 = [&](double w) { return a2.utility.local_index(w); };
  const auto h_index1 = [&](double p) { return a1.weighting.local_index(p); };
  const auto h_index2 = [&](double p) { return a2.weighting.local_index(p); };
  return merge(dominance_on_grid(u_index1, u_index2, w_grid),
               dominance_on_grid(h_index1, h_index2, p_grid));
}

bool concave_transform_check(const UtilityFunction& f1,
                             const UtilityFunction& f2,
                             const std::vector<double>& grid) {
  return concave_transform_impl(f1, f2, grid);
}

bool concave_transform_check(const WeightingFunction& f1,
                             const WeightingFunction& f2,
                             const std::vector<double>& grid) {
  return concave_transform_impl(f1, f2, grid);
}

bool cross_ratio_check(const UtilityFunction& f1, const UtilityFunction& f2,
                       const std::vector<Quadruple>& quadruples) {
  return cross_ratio_impl(f1, f2, quadruples);
}

bool cross_ratio_check(const WeightingFunction& f1, const WeightingFunction& f2,
                       const std::vector<Quadruple>& quadruples) {
  return cross_ratio_impl(f1, f2, quadruples);
}

DominanceCheck premium_dominance(const Agent& a1, const Agent& a2,
                                 const std::vector<PremiumQuery>& queries) {
  DominanceCheck check{true, 0.0};
  for (const PremiumQuery& q : queries) {
    PremiumQuery q1{q.w0, q.p0, q.eps1, q.eps2, a1.utility, a1.weighting};
    PremiumQuery q2{q.w0, q.p0, q.eps1, q.eps2, a2.utility, a2.weighting};
    const double gap = rdu_premium_exact(q2) - rdu_premium_exact(q1);
    if (gap < -kDominanceSlack) {
      check.holds = false;
      check.worst_violation = std::max(check.worst_violation, -gap);
    }
  }
  return check;
}

DominanceReport proposition1_report(const Agent& a1, const Agent& a2,
                                    const std::vector<double>& w_grid,
                                    const std::vector<double>& p_grid,
                                    const std::vector<PremiumQuery>& queries) {
  DominanceReport report{};
  report.w_grid_size = w_grid.size();
  report.p_grid_size = p_grid.size();
  report.n_queries = queries.size();
  for (const PremiumQuery& q : queries) {
    if (q.eps1 >= std::min(q.p0, 1.0 - q.p0) - 1e-15) ++report.n_boundary_queries;
  }

  report.condition_i = index_dominance(a1, a2, w_grid, p_grid);
  report.condition_ii = premium_dominance(a1, a2, queries);
  report.condition_iv = concave_transform_check(a1.utility, a2.utility, w_grid) &&
                        concave_transform_check(a1.weighting, a2.weighting, p_grid);
  report.condition_v =
      cross_ratio_check(a1.utility, a2.utility, quadruples_from_grid(w_grid)) &&
      cross_ratio_check(a1.weighting, a2.weighting, quadruples_from_grid(p_grid));

  const bool i = report.condition_i.holds;
  report.all_four_equal = i == report.condition_ii.holds &&
                          i == report.condition_iv && i == report.condition_v;
  report.consistent = report.condition_iv == i && report.condition_v == i &&
                      (!i || report.condition_ii.holds);
  return report;
}

}  // namespace dualrisk
