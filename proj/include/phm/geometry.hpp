#pragma once

#include <vector>

#include "phm/core.hpp"

namespace phm {

class SingularPointError : public std::runtime_error {
public:
  explicit SingularPointError(const std::string& what) : std::runtime_error(what) {}
};

class PointOnCurveError : public std::runtime_error {
public:
  explicit PointOnCurveError(const std::string& what) : std::runtime_error(what) {}
};

class GridTooCoarseError : public std::runtime_error {
public:
  explicit GridTooCoarseError(const std::string& what) : std::runtime_error(what) {}
};

/// Sample grid (r_i, theta_m) over the disk.
struct PolarGrid {
  std::vector<double> radii;  // strictly increasing, all < 1
  int n_theta = 0;            // equally spaced angles in [0, 2*pi)

  /// n_r radii concentrated near r_max (distances to r_max decay
  /// geometrically down to r_max/1000), n_theta angles.
  static PolarGrid geometric(int n_r, int n_theta, double r_max);

  double theta(int m) const;
};

/// Outcome of a grid verification: minimum of the indicator minus the order.
struct VerificationReport {
  double min_value = 0.0;
  double witness_r = 0.0;
  double witness_theta = 0.0;
  bool passed = false;
  double tolerance = 0.0;
};

/// Re{(z F_z - zbar F_zbar) / F(z)}; returns the limit value 1 at z = 0.
double starlike_quantity(const PolyharmonicMap& f, Complex z);

/// Re{(z F_z + z^2 F_zz - 2|z|^2 F_zzbar + zbar F_zbar + zbar^2 F_zbarzbar)
///     / (z F_z - zbar F_zbar)}; limit value 1 at z = 0.
double convex_quantity(const PolyharmonicMap& f, Complex z);

VerificationReport verify_starlike(const PolyharmonicMap& f, double r_max, double alpha,
                                   const PolarGrid& grid, double tolerance = 1e-9);
VerificationReport verify_convex(const PolyharmonicMap& f, double r_max, double beta,
                                 const PolarGrid& grid, double tolerance = 1e-9);

VerificationReport verify_starlike(const PolyharmonicMap& f, double r_max, double alpha,
                                   double tolerance = 1e-9);
VerificationReport verify_convex(const PolyharmonicMap& f, double r_max, double beta,
                                 double tolerance = 1e-9);

/// F(r e^{i theta_m}) for n equally spaced angles; a closed polyline.
std::vector<Complex> boundary_curve(const PolyharmonicMap& f, double r, int n);

/// Winding number of the closed polyline around w via summed argument
/// increments. Errors when w sits on the curve (distance <= 1e-12) or when
/// any per-segment increment reaches pi/2.
int winding_number(const std::vector<Complex>& curve, Complex w);

/// Coverage check of the disk |w| <= rho against the image of |z| = r: the
/// winding number must be 1 at every sample point. Requires F in HC_p^0.
/// Samples: half the points on the rim |w| = rho, the rest on an interior
/// spiral.
VerificationReport covers_disk(const PolyharmonicMap& f, double r, double rho, int n_w,
                               int n_curve = 8192);

}  // namespace phm
