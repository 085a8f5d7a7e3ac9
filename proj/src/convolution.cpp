#include "phm/convolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace phm {

namespace {
constexpr double kNonzeroThreshold = 1e-9;
constexpr double kWarnBand = 1e-6;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_modulus(Complex xi) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-12)
    throw std::invalid_argument("kernel: |xi| must equal 1");
}
}  // namespace

AnalyticCoeffs hadamard(const AnalyticCoeffs& a, std::span<const Complex> weights) {
  if (static_cast<int>(weights.size()) != a.truncation_order())
    throw std::invalid_argument("hadamard: length mismatch");
  std::vector<Complex> out(weights.size());
  for (int j = 1; j <= a.truncation_order(); ++j)
    out[static_cast<size_t>(j - 1)] = a.at(j) * weights[static_cast<size_t>(j - 1)];
  return AnalyticCoeffs(std::move(out));
}

KernelPair starlike_kernel(double alpha, Complex xi, int J) {
  require_unit_modulus(xi);
  const Complex den = 2.0 - alpha - alpha * xi;
  if (std::abs(den) < 1e-14)
    throw std::invalid_argument("starlike_kernel: degenerate denominator 2 - alpha - alpha*xi");
  const Complex lambda = (alpha * xi + alpha + xi - 1.0) / den;
  const Complex mu = (2.0 * xi + alpha + alpha * xi) / den;
  KernelPair k;
  k.order = alpha;
  k.xi = xi;
  k.analytic_coeffs.reserve(static_cast<size_t>(J));
  k.coanalytic_coeffs.reserve(static_cast<size_t>(J));
  for (int j = 1; j <= J; ++j) {
    k.analytic_coeffs.push_back(double(j) + lambda * double(j - 1));
    k.coanalytic_coeffs.push_back(mu * double(j) - lambda * double(j - 1));
  }
  return k;
}

KernelPair convex_kernel(double beta, Complex xi, int J) {
  require_unit_modulus(xi);
  const Complex A = 2.0 - beta * xi - beta;
  const Complex B = 2.0 * xi + beta * xi + beta;
  KernelPair k;
  k.order = beta;
  k.xi = xi;
  k.analytic_coeffs.reserve(static_cast<size_t>(J));
  k.coanalytic_coeffs.reserve(static_cast<size_t>(J));
  for (int j = 1; j <= J; ++j) {
    const double t = j * (j + 1.0) / 2.0;  // z/(1-z)^3 weights
    const double s = j * (j - 1.0) / 2.0;  // z^2/(1-z)^3 weights
    k.analytic_coeffs.push_back(A * t + B * s);
    k.coanalytic_coeffs.push_back(B * t + A * s);
  }
  return k;
}

namespace {

// Per-point coefficient sums S[m] = sum_k |z|^{2(k-1)} sum_j j^m a_{k,j} z^j
// (and the same on the conjugated g side), m = 0..2, plus the triangular
// weights j(j+1)/2 and j(j-1)/2 used by the convex kernel.
struct SeriesSums {
  Complex a0, a1, a2, at, as;
  Complex b0, b1, b2, bt, bs;  // already conjugated: sum conj(b_{k,j}) zbar^j
};

SeriesSums series_sums(const PolyharmonicMap& f, Complex z) {
  detail::require_in_disk(z);
  SeriesSums s{};
  const double u = std::norm(z);
  double upow = 1.0;
  const Complex zb = std::conj(z);
  for (const auto& layer : f.layers()) {
    Complex zp = 1.0, zbp = 1.0;
    const int J = layer.h.truncation_order();
    for (int j = 1; j <= J; ++j) {
      zp *= z;
      zbp *= zb;
      const Complex aterm = upow * layer.h.at(j) * zp;
      const Complex bterm = upow * std::conj(layer.g.at(j)) * zbp;
      const double t = j * (j + 1.0) / 2.0;
      const double q = j * (j - 1.0) / 2.0;
      s.a0 += aterm;
      s.a1 += double(j) * aterm;
      s.a2 += double(j) * j * aterm;
      s.at += t * aterm;
      s.as += q * aterm;
      s.b0 += bterm;
      s.b1 += double(j) * bterm;
      s.b2 += double(j) * j * bterm;
      s.bt += t * bterm;
      s.bs += q * bterm;
    }
    upow *= u;
  }
  return s;
}

Complex starlike_value_from_sums(const SeriesSums& s, double alpha, Complex xi) {
  const Complex den = 2.0 - alpha - alpha * xi;
  if (std::abs(den) < 1e-14)
    throw std::invalid_argument("starlike scan: degenerate denominator");
  const Complex lambda = (alpha * xi + alpha + xi - 1.0) / den;
  const Complex mu = (2.0 * xi + alpha + alpha * xi) / den;
  // sum c_j a_j z^j - sum d_j conj(b_j) zbar^j with c_j = j + lambda(j-1),
  // d_j = mu j - lambda(j-1).
  return s.a1 + lambda * (s.a1 - s.a0) - mu * s.b1 + lambda * (s.b1 - s.b0);
}

Complex convex_value_from_sums(const SeriesSums& s, double beta, Complex xi) {
  const Complex A = 2.0 - beta * xi - beta;
  const Complex B = 2.0 * xi + beta * xi + beta;
  return A * s.at + B * s.as + B * s.bt + A * s.bs;
}

struct MarginAtPoint {
  double margin;
  bool singular;
};

// The scan value is (xi u + v) / normalizer with u = N - (order+1) D and
// v = N - (order-1) D, where D is the first angular-derivative series and
// N the order-weighted numerator series. Then
// (|v|^2 - |u|^2) / |v - u|^2 = Re(N/D) - order exactly, which is the signed
// geometric margin recovered from the coefficient route alone.
MarginAtPoint starlike_margin(const SeriesSums& s, double alpha) {
  const Complex W = s.a1 - s.b1;  // z F_z - zbar F_zbar as a coefficient sum
  const Complex F = s.a0 + s.b0;
  const Complex u = W - (alpha + 1.0) * F;
  const Complex v = W - (alpha - 1.0) * F;
  const double den = std::norm(v - u);
  if (den < 1e-28) return {0.0, true};
  return {(std::norm(v) - std::norm(u)) / den, false};
}

MarginAtPoint convex_margin(const SeriesSums& s, double beta) {
  const Complex N = s.a2 + s.b2;  // theta-second-derivative series
  const Complex D = s.a1 - s.b1;
  const Complex u = N - (beta + 1.0) * D;
  const Complex v = N - (beta - 1.0) * D;
  const double den = std::norm(v - u);
  if (den < 1e-28)
    throw SingularPointError("convolution scan: z F_z - zbar F_zbar vanishes");
  return {(std::norm(v) - std::norm(u)) / den, false};
}

enum class ScanKind { Starlike, Convex };

ScanReport scan(const PolyharmonicMap& f, double order, const PolarGrid& grid, int xi_count,
                double tolerance, ScanKind kind) {
  f.require_normalized();
  if (xi_count < 8) throw std::invalid_argument("convolution scan: xi_count must be >= 8");
  std::vector<Complex> xis;
  xis.reserve(static_cast<size_t>(xi_count));
  for (int m = 0; m < xi_count; ++m) xis.push_back(std::polar(1.0, kTwoPi * m / xi_count));

  ScanReport rep;
  rep.tolerance = tolerance;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.min_modulus = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int m = 0; m < grid.n_theta; ++m) {
      const double th = grid.theta(m);
      const Complex z = std::polar(r, th);
      const SeriesSums s = series_sums(f, z);
      for (const Complex& xi : xis) {
        const Complex value = (kind == ScanKind::Starlike)
                                  ? starlike_value_from_sums(s, order, xi)
                                  : convex_value_from_sums(s, order, xi);
        const double mod = std::abs(value);
        if (mod < rep.min_modulus) {
          rep.min_modulus = mod;
          rep.modulus_witness_r = r;
          rep.modulus_witness_theta = th;
        }
      }
      const MarginAtPoint mp = (kind == ScanKind::Starlike) ? starlike_margin(s, order)
                                                            : convex_margin(s, order);
      if (mp.singular) continue;  // F(z) = 0; skip, the modulus track still sees it
      if (mp.margin < rep.min_value) {
        rep.min_value = mp.margin;
        rep.witness_r = r;
        rep.witness_theta = th;
      }
    }
  }
  rep.warn_near_zero = rep.min_modulus >= kNonzeroThreshold && rep.min_modulus < kWarnBand;
  rep.passed = rep.min_value > -tolerance && rep.min_modulus > kNonzeroThreshold;
  return rep;
}

}  // namespace

Complex scan_value_starlike(const PolyharmonicMap& f, double alpha, Complex z, Complex xi) {
  require_unit_modulus(xi);
  return starlike_value_from_sums(series_sums(f, z), alpha, xi);
}

Complex scan_value_convex(const PolyharmonicMap& f, double beta, Complex z, Complex xi) {
  require_unit_modulus(xi);
  return convex_value_from_sums(series_sums(f, z), beta, xi);
}

ScanReport convolution_scan_starlike(const PolyharmonicMap& f, double alpha,
                                     const PolarGrid& grid, int xi_count, double tolerance) {
  return scan(f, alpha, grid, xi_count, tolerance, ScanKind::Starlike);
}

ScanReport convolution_scan_convex(const PolyharmonicMap& f, double beta, const PolarGrid& grid,
                                   int xi_count, double tolerance) {
  return scan(f, beta, grid, xi_count, tolerance, ScanKind::Convex);
}

}  // namespace phm
