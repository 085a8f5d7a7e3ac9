#pragma once

#include <array>
#include <vector>

#include "phm/core.hpp"

namespace phm {

enum class RadiusFamily {
  StarlikeKoebeBound,   // coefficients dominated by the harmonic-Koebe growth
  ConvexKoebeBound,
  StarlikeUniformBound, // |a_{k,j}| + |b_{k,j}| <= C for j >= 2
  ConvexUniformBound,
};

RadiusFamily radius_family_from_string(const std::string& name);
std::string to_string(RadiusFamily family);

struct RadiusProblem {
  RadiusFamily family;
  double order = 0.0;  // alpha or beta, in [0,1)
  int p = 1;
  double C = 1.0;      // uniform-bound families only
};

/// Real polynomial in r, coefficients on r^0..r^d, trailing coefficient kept
/// nonzero.
class RealPolynomial {
public:
  explicit RealPolynomial(std::vector<double> coeffs);
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator()(double r) const;
  double max_coeff_magnitude() const;

private:
  std::vector<double> coeffs_;
};

/// Expands the family's radius equation into monomial coefficients. Integer
/// polynomial arithmetic internally; order and C enter linearly at the end,
/// so each emitted coefficient carries at most one rounding.
RealPolynomial build_radius_polynomial(const RadiusProblem& prob);

struct RootResult {
  double r = 0.0;
  double bracket_lo = 0.0;  // poly(lo) > 0
  double bracket_hi = 0.0;  // poly(hi) < 0
};

/// First sign change of poly on (0,1) located by a 1e-3 scan, then bisection
/// to bracket width 1e-12. Requires poly(0) > 0.
RootResult smallest_root(const RealPolynomial& poly);

/// Partial sums sum_{j<=J} j^m r^{j-1}, m = 0..4, with their closed forms.
struct PowerSumCheck {
  std::array<double, 5> partial;
  std::array<double, 5> closed;
};
PowerSumCheck power_sum_closed_forms(double r, int J);

struct RadiusTableRow {
  double order;
  RootResult root;
};

/// smallest_root per order; orders must be strictly increasing in [0,1).
std::vector<RadiusTableRow> radius_vs_order_table(RadiusFamily family, int p, double C,
                                                  const std::vector<double>& orders);

}  // namespace phm
