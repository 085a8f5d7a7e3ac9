#pragma once

#include <optional>
#include <vector>

#include "phm/core.hpp"

namespace phm {

/// One weighted coefficient contribution to a membership sum.
struct TermContribution {
  int k;
  int j;
  double contribution;
};

/// Outcome of a coefficient-functional membership test: sum against budget.
struct MembershipReport {
  double sum_value = 0.0;
  double budget = 0.0;
  double margin = 0.0;  // budget - sum_value; member iff margin >= 0
  int truncation_order = 0;
  std::vector<TermContribution> breakdown;

  bool member() const { return margin >= 0.0; }
};

/// HS_p^0: sum (2(k-1)+j)(|a_{k,j}|+|b_{k,j}|) <= 2.
MembershipReport hs_membership(const PolyharmonicMap& f);

/// HC_p^0: sum (2(k-1)+j^2)(|a_{k,j}|+|b_{k,j}|) <= 2.
MembershipReport hc_membership(const PolyharmonicMap& f);

/// Sufficient condition for starlikeness of order alpha: weighted sum over
/// j >= 2 with weights (2(k-1)+j-alpha)/(1-alpha) on |a| and
/// (2(k-1)+j+alpha)/(1-alpha) on |b|, budget 1.
MembershipReport starlike_order_margin(const PolyharmonicMap& f, double alpha);

/// Sufficient condition for convexity of order beta, weights
/// (2(k-1)+j^2 -+ beta)/(1-beta), budget 1.
MembershipReport convex_order_margin(const PolyharmonicMap& f, double beta);

/// Supremum order in [0,1) at which the respective margin stays >= 0, by
/// bisection to 1e-10. Empty when the margin is already negative at order 0;
/// 1.0 when it never goes negative (open-interval cap).
std::optional<double> max_starlike_order(const PolyharmonicMap& f);
std::optional<double> max_convex_order(const PolyharmonicMap& f);

}  // namespace phm
