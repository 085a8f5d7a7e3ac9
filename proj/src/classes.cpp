#include "phm/classes.hpp"

#include <cmath>
#include <functional>

namespace phm {

namespace {

MembershipReport weighted_sum(const PolyharmonicMap& f, double budget, int j_min,
                              const std::function<double(int, int)>& wa,
                              const std::function<double(int, int)>& wb) {
  f.require_normalized();
  MembershipReport rep;
  rep.budget = budget;
  rep.truncation_order = f.truncation_order();
  for (int k = 1; k <= f.p(); ++k) {
    for (int j = j_min; j <= f.truncation_order(); ++j) {
      const double contrib = wa(k, j) * std::abs(f.a(k, j)) + wb(k, j) * std::abs(f.b(k, j));
      if (contrib != 0.0) rep.breakdown.push_back({k, j, contrib});
      rep.sum_value += contrib;
    }
  }
  rep.margin = rep.budget - rep.sum_value;
  return rep;
}

}  // namespace

MembershipReport hs_membership(const PolyharmonicMap& f) {
  auto w = [](int k, int j) { return 2.0 * (k - 1) + j; };
  return weighted_sum(f, 2.0, 1, w, w);
}

MembershipReport hc_membership(const PolyharmonicMap& f) {
  auto w = [](int k, int j) { return 2.0 * (k - 1) + double(j) * j; };
  return weighted_sum(f, 2.0, 1, w, w);
}

MembershipReport starlike_order_margin(const PolyharmonicMap& f, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("starlike_order_margin: alpha must be in [0,1)");
  auto wa = [alpha](int k, int j) { return (2.0 * (k - 1) + j - alpha) / (1.0 - alpha); };
  auto wb = [alpha](int k, int j) { return (2.0 * (k - 1) + j + alpha) / (1.0 - alpha); };
  return weighted_sum(f, 1.0, 2, wa, wb);
}

MembershipReport convex_order_margin(const PolyharmonicMap& f, double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("convex_order_margin: beta must be in [0,1)");
  auto wa = [beta](int k, int j) { return (2.0 * (k - 1) + double(j) * j - beta) / (1.0 - beta); };
  auto wb = [beta](int k, int j) { return (2.0 * (k - 1) + double(j) * j + beta) / (1.0 - beta); };
  return weighted_sum(f, 1.0, 2, wa, wb);
}

namespace {

std::optional<double> max_order(const std::function<double(double)>& margin_at) {
  constexpr double kTop = 1.0 - 1e-12;
  if (margin_at(0.0) < 0.0) return std::nullopt;
  if (margin_at(kTop) >= 0.0) return 1.0;  // capped at the open-interval limit
  double lo = 0.0, hi = kTop;  // margin(lo) >= 0 > margin(hi); strictly decreasing
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (margin_at(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<double> max_starlike_order(const PolyharmonicMap& f) {
  return max_order([&](double a) { return starlike_order_margin(f, a).margin; });
}

std::optional<double> max_convex_order(const PolyharmonicMap& f) {
  return max_order([&](double b) { return convex_order_margin(f, b).margin; });
}

}  // namespace phm
