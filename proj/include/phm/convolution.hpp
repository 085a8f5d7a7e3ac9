#pragma once

#include <vector>

#include "phm/core.hpp"
#include "phm/geometry.hpp"

namespace phm {

/// Taylor weights of the two convolution kernels at one (order, xi).
struct KernelPair {
  std::vector<Complex> analytic_coeffs;    // c_1..c_J, weights on a_{k,j}
  std::vector<Complex> coanalytic_coeffs;  // d_1..d_J, weights on b_{k,j}
  double order = 0.0;
  Complex xi;
};

/// Term-wise (Hadamard) product of a coefficient series with a weight vector.
AnalyticCoeffs hadamard(const AnalyticCoeffs& a, std::span<const Complex> weights);

/// Starlike kernel of the order-alpha characterization: with
/// lambda = (alpha xi + alpha + xi - 1)/(2 - alpha - alpha xi) and
/// mu = (2 xi + alpha + alpha xi)/(2 - alpha - alpha xi),
/// c_j = j + lambda (j-1), d_j = mu j - lambda (j-1). The g-side enters the
/// scan with a minus sign.
KernelPair starlike_kernel(double alpha, Complex xi, int J);

/// Convex kernel: with A = 2 - beta xi - beta, B = 2 xi + beta xi + beta,
/// c_j = A j(j+1)/2 + B j(j-1)/2, d_j = B j(j+1)/2 + A j(j-1)/2. The g-side
/// enters with a plus sign.
KernelPair convex_kernel(double beta, Complex xi, int J);

/// The kernel-weighted double series at (z, xi), computed from the
/// coefficients only (independent of core::wirtinger).
Complex scan_value_starlike(const PolyharmonicMap& f, double alpha, Complex z, Complex xi);
Complex scan_value_convex(const PolyharmonicMap& f, double beta, Complex z, Complex xi);

/// Nonvanishing scan over the grid and xi_count-th roots of unity. The scan
/// value is linear in xi, so the sampled loop determines both the minimum
/// modulus over the xi-circle and the signed order margin at each z; the
/// report carries the minimum margin (min_value, with witness) and the
/// minimum sampled modulus. Passed iff the margin stays above -tolerance and
/// the modulus above the nonzero threshold.
struct ScanReport {
  double min_value = 0.0;  // minimum signed order margin over the grid
  double witness_r = 0.0;
  double witness_theta = 0.0;
  double min_modulus = 0.0;  // minimum |scan value| over sampled (z, xi)
  double modulus_witness_r = 0.0;
  double modulus_witness_theta = 0.0;
  bool passed = false;
  bool warn_near_zero = false;  // min_modulus in the [1e-9, 1e-6] band
  double tolerance = 0.0;
};

ScanReport convolution_scan_starlike(const PolyharmonicMap& f, double alpha,
                                     const PolarGrid& grid, int xi_count = 64,
                                     double tolerance = 1e-9);
ScanReport convolution_scan_convex(const PolyharmonicMap& f, double beta, const PolarGrid& grid,
                                   int xi_count = 64, double tolerance = 1e-9);

}  // namespace phm
