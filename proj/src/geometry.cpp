#include "phm/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "phm/classes.hpp"

namespace phm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOriginEps = 1e-15;
}  // namespace

PolarGrid PolarGrid::geometric(int n_r, int n_theta, double r_max) {
  if (n_r < 1 || n_theta < 16) throw std::invalid_argument("PolarGrid: need n_r >= 1, n_theta >= 16");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("PolarGrid: r_max must be in (0,1)");
  PolarGrid grid;
  grid.n_theta = n_theta;
  const double lambda = std::pow(1e-3, 1.0 / n_r);
  grid.radii.reserve(static_cast<size_t>(n_r));
  for (int i = 1; i <= n_r; ++i) grid.radii.push_back(r_max * (1.0 - std::pow(lambda, i)));
  return grid;
}

double PolarGrid::theta(int m) const { return kTwoPi * m / n_theta; }

double starlike_quantity(const PolyharmonicMap& f, Complex z) {
  detail::require_in_disk(z);
  if (std::abs(z) < kOriginEps) return 1.0;  // documented limit at the origin
  const WirtingerBundle w = wirtinger(f, z);
  if (std::abs(w.value) < 1e-14)
    throw SingularPointError("starlike_quantity: F(z) = 0 away from the origin");
  const Complex num = z * w.dz - std::conj(z) * w.dzbar;
  return std::real(num / w.value);
}

double convex_quantity(const PolyharmonicMap& f, Complex z) {
  detail::require_in_disk(z);
  if (std::abs(z) < kOriginEps) return 1.0;
  const WirtingerBundle w = wirtinger(f, z);
  const Complex zb = std::conj(z);
  const Complex den = z * w.dz - zb * w.dzbar;
  if (std::abs(den) < 1e-14)
    throw SingularPointError("convex_quantity: z F_z - zbar F_zbar vanishes");
  const Complex num =
      z * w.dz + z * z * w.dz2 - 2.0 * std::norm(z) * w.dzdzbar + zb * w.dzbar + zb * zb * w.dzbar2;
  return std::real(num / den);
}

namespace {

template <typename Quantity>
VerificationReport grid_minimum(const PolyharmonicMap& f, double r_max, double order,
                                const PolarGrid& grid, double tolerance, Quantity quantity) {
  for (double r : grid.radii)
    if (r > r_max) throw std::invalid_argument("verification grid radius exceeds r_max");
  VerificationReport rep;
  rep.tolerance = tolerance;
  rep.min_value = std::numeric_limits<double>::infinity();
  // Deterministic reduction: lexicographic (r, theta) scan order, strict <.
  for (double r : grid.radii) {
    for (int m = 0; m < grid.n_theta; ++m) {
      const double th = grid.theta(m);
      const Complex z = std::polar(r, th);
      double q;
      try {
        q = quantity(f, z) - order;
      } catch (const SingularPointError& e) {
        throw SingularPointError(std::string(e.what()) + " at r=" + std::to_string(r) +
                                 " theta=" + std::to_string(th));
      }
      if (q < rep.min_value) {
        rep.min_value = q;
        rep.witness_r = r;
        rep.witness_theta = th;
      }
    }
  }
  rep.passed = rep.min_value > -tolerance;
  return rep;
}

}  // namespace

VerificationReport verify_starlike(const PolyharmonicMap& f, double r_max, double alpha,
                                   const PolarGrid& grid, double tolerance) {
  return grid_minimum(f, r_max, alpha, grid, tolerance,
                      [](const PolyharmonicMap& g, Complex z) { return starlike_quantity(g, z); });
}

VerificationReport verify_convex(const PolyharmonicMap& f, double r_max, double beta,
                                 const PolarGrid& grid, double tolerance) {
  return grid_minimum(f, r_max, beta, grid, tolerance,
                      [](const PolyharmonicMap& g, Complex z) { return convex_quantity(g, z); });
}

VerificationReport verify_starlike(const PolyharmonicMap& f, double r_max, double alpha,
                                   double tolerance) {
  return verify_starlike(f, r_max, alpha, PolarGrid::geometric(64, 512, r_max), tolerance);
}

VerificationReport verify_convex(const PolyharmonicMap& f, double r_max, double beta,
                                 double tolerance) {
  return verify_convex(f, r_max, beta, PolarGrid::geometric(64, 512, r_max), tolerance);
}

std::vector<Complex> boundary_curve(const PolyharmonicMap& f, double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("boundary_curve: r must be in (0,1)");
  if (n < 16) throw std::invalid_argument("boundary_curve: n must be >= 16");
  std::vector<Complex> curve;
  curve.reserve(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) curve.push_back(evaluate(f, std::polar(r, kTwoPi * m / n)));
  return curve;
}

namespace {

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

int winding_number(const std::vector<Complex>& curve, Complex w) {
  if (curve.size() < 3) throw std::invalid_argument("winding_number: need at least 3 vertices");
  const size_t n = curve.size();
  for (size_t i = 0; i < n; ++i) {
    if (distance_to_segment(w, curve[i], curve[(i + 1) % n]) <= 1e-12)
      throw PointOnCurveError("winding_number: sample point lies on the curve");
  }
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Complex a = curve[i] - w;
    const Complex b = curve[(i + 1) % n] - w;
    const double inc = std::arg(b / a);
    if (std::abs(inc) >= std::numbers::pi / 2.0)
      throw GridTooCoarseError("winding_number: argument increment >= pi/2, refine the curve");
    total += inc;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

VerificationReport covers_disk(const PolyharmonicMap& f, double r, double rho, int n_w,
                               int n_curve) {
  if (!(rho > 0.0)) throw std::invalid_argument("covers_disk: rho must be positive");
  if (n_w < 1) throw std::invalid_argument("covers_disk: n_w must be >= 1");
  if (!hc_membership(f).member())
    throw NormalizationError("covers_disk: map is not in HC_p^0");

  const std::vector<Complex> curve = boundary_curve(f, r, n_curve);

  // Half the budget on the rim (the binding part of the coverage claim), the
  // rest on a golden-angle spiral in the interior.
  std::vector<Complex> samples;
  samples.reserve(static_cast<size_t>(n_w));
  const int n_rim = (n_w + 1) / 2;
  for (int m = 0; m < n_rim; ++m) samples.push_back(std::polar(rho, kTwoPi * (m + 0.5) / n_rim));
  const int n_in = n_w - n_rim;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < n_in; ++m) {
    const double rr = rho * 0.95 * std::sqrt((m + 0.5) / n_in);
    samples.push_back(std::polar(rr, golden * m));
  }

  VerificationReport rep;
  rep.tolerance = 0.0;
  rep.passed = true;
  rep.min_value = 1.0;
  for (const Complex& w : samples) {
    const int wn = winding_number(curve, w);
    if (wn != 1) {
      rep.passed = false;
      rep.min_value = 0.0;
      rep.witness_r = std::abs(w);
      rep.witness_theta = std::arg(w);
      break;
    }
  }
  return rep;
}

}  // namespace phm
