#include "phm/radii.hpp"

#include <algorithm>
#include <cmath>

namespace phm {

RadiusFamily radius_family_from_string(const std::string& name) {
  if (name == "starlike-koebe") return RadiusFamily::StarlikeKoebeBound;
  if (name == "convex-koebe") return RadiusFamily::ConvexKoebeBound;
  if (name == "starlike-bounded") return RadiusFamily::StarlikeUniformBound;
  if (name == "convex-bounded") return RadiusFamily::ConvexUniformBound;
  throw std::invalid_argument("unknown radius family: " + name);
}

std::string to_string(RadiusFamily family) {
  switch (family) {
    case RadiusFamily::StarlikeKoebeBound: return "starlike-koebe";
    case RadiusFamily::ConvexKoebeBound: return "convex-koebe";
    case RadiusFamily::StarlikeUniformBound: return "starlike-bounded";
    case RadiusFamily::ConvexUniformBound: return "convex-bounded";
  }
  return "?";
}

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("RealPolynomial: empty coefficients");
}

double RealPolynomial::operator()(double r) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * r + *it;
  return v;
}

double RealPolynomial::max_coeff_magnitude() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

// Exact polynomial arithmetic on integer coefficients; the radius equations
// stay well inside the long long range for any sane p.
using IntPoly = std::vector<long long>;

IntPoly ip_const(long long c) { return {c}; }

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

IntPoly ip_scale(const IntPoly& a, long long s) {
  IntPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly ip_pow(const IntPoly& a, int n) {
  IntPoly r = ip_const(1);
  for (int i = 0; i < n; ++i) r = ip_mul(r, a);
  return r;
}

// r^e shift
IntPoly ip_shift(const IntPoly& a, int e) {
  IntPoly r(a.size() + static_cast<size_t>(e), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(e)] = a[i];
  return r;
}

const IntPoly kOneMinusR = {1, -1};
const IntPoly kOnePlusR = {1, 1};

struct FamilyParts {
  IntPoly base;       // order- and C-free part
  IntPoly order_part; // multiplies the order
  IntPoly c_part;     // multiplies C
  IntPoly c_order;    // multiplies C * order
};

FamilyParts starlike_koebe_parts(int p) {
  // 6(1-a)(1-r)^4 - sum_k r^{2k-2} (3(1+r)^2 - 3a(1-r)^2 + 2(k-1)(r^2+3)(1-r))
  FamilyParts parts;
  parts.base = ip_scale(ip_pow(kOneMinusR, 4), 6);
  parts.order_part = ip_scale(ip_pow(kOneMinusR, 4), -6);
  parts.c_part = ip_const(0);
  parts.c_order = ip_const(0);
  const IntPoly r2p3 = {3, 0, 1};  // r^2 + 3
  for (int k = 1; k <= p; ++k) {
    const int shift = 2 * (k - 1);
    IntPoly bracket = ip_scale(ip_pow(kOnePlusR, 2), 3);
    bracket = ip_add(bracket, ip_scale(ip_mul(r2p3, kOneMinusR), 2LL * (k - 1)));
    parts.base = ip_add(parts.base, ip_shift(ip_scale(bracket, -1), shift));
    parts.order_part = ip_add(parts.order_part, ip_shift(ip_scale(ip_pow(kOneMinusR, 2), 3), shift));
  }
  return parts;
}

FamilyParts convex_koebe_parts(int p) {
  // 6(1-b)(1-r)^5 - sum_k r^{2k-2} ((8k-6-6b)(1+r)(1-r)^2 + 4(k-1)(1-r)^4
  //   + 4(1+r)(1+10r+r^2) - 6(2k-1-b)(1-r)^5)
  FamilyParts parts;
  parts.base = ip_scale(ip_pow(kOneMinusR, 5), 6);
  parts.order_part = ip_scale(ip_pow(kOneMinusR, 5), -6);
  parts.c_part = ip_const(0);
  parts.c_order = ip_const(0);
  const IntPoly quad = {1, 10, 1};  // 1 + 10r + r^2
  const IntPoly p1m2 = ip_mul(kOnePlusR, ip_pow(kOneMinusR, 2));
  for (int k = 1; k <= p; ++k) {
    const int shift = 2 * (k - 1);
    IntPoly bracket = ip_scale(p1m2, 8LL * k - 6);
    bracket = ip_add(bracket, ip_scale(ip_pow(kOneMinusR, 4), 4LL * (k - 1)));
    bracket = ip_add(bracket, ip_scale(ip_mul(kOnePlusR, quad), 4));
    bracket = ip_add(bracket, ip_scale(ip_pow(kOneMinusR, 5), -6LL * (2 * k - 1)));
    parts.base = ip_add(parts.base, ip_shift(ip_scale(bracket, -1), shift));
    // beta part inside the bracket: -6(1+r)(1-r)^2 + 6(1-r)^5, negated
    IntPoly obracket = ip_add(ip_scale(p1m2, -6), ip_scale(ip_pow(kOneMinusR, 5), 6));
    parts.order_part = ip_add(parts.order_part, ip_shift(ip_scale(obracket, -1), shift));
  }
  return parts;
}

FamilyParts starlike_uniform_parts(int p) {
  // (1-a)(1-r)^2 - C sum_k r^{2k-2} ((2k-2+a)(1-r) + 1 - (2k+a-1)(1-r)^2)
  FamilyParts parts;
  parts.base = ip_pow(kOneMinusR, 2);
  parts.order_part = ip_scale(ip_pow(kOneMinusR, 2), -1);
  parts.c_part = ip_const(0);
  parts.c_order = ip_const(0);
  for (int k = 1; k <= p; ++k) {
    const int shift = 2 * (k - 1);
    IntPoly bracket = ip_scale(kOneMinusR, 2LL * k - 2);
    bracket = ip_add(bracket, ip_const(1));
    bracket = ip_add(bracket, ip_scale(ip_pow(kOneMinusR, 2), -(2LL * k - 1)));
    parts.c_part = ip_add(parts.c_part, ip_shift(ip_scale(bracket, -1), shift));
    IntPoly obracket = ip_add(kOneMinusR, ip_scale(ip_pow(kOneMinusR, 2), -1));
    parts.c_order = ip_add(parts.c_order, ip_shift(ip_scale(obracket, -1), shift));
  }
  return parts;
}

FamilyParts convex_uniform_parts(int p) {
  // (1-b)(1-r)^3 - C sum_k r^{2k-2} ((2k-2)(1-r)^2 + 1 + r + b(1-r)
  //   - (2k+b-1)(1-r)^3)
  FamilyParts parts;
  parts.base = ip_pow(kOneMinusR, 3);
  parts.order_part = ip_scale(ip_pow(kOneMinusR, 3), -1);
  parts.c_part = ip_const(0);
  parts.c_order = ip_const(0);
  for (int k = 1; k <= p; ++k) {
    const int shift = 2 * (k - 1);
    IntPoly bracket = ip_scale(ip_pow(kOneMinusR, 2), 2LL * k - 2);
    bracket = ip_add(bracket, kOnePlusR);  // 1 + r
    bracket = ip_add(bracket, ip_scale(ip_pow(kOneMinusR, 3), -(2LL * k - 1)));
    parts.c_part = ip_add(parts.c_part, ip_shift(ip_scale(bracket, -1), shift));
    IntPoly obracket = ip_add(kOneMinusR, ip_scale(ip_pow(kOneMinusR, 3), -1));
    parts.c_order = ip_add(parts.c_order, ip_shift(ip_scale(obracket, -1), shift));
  }
  return parts;
}

}  // namespace

RealPolynomial build_radius_polynomial(const RadiusProblem& prob) {
  if (!(prob.order >= 0.0 && prob.order < 1.0))
    throw std::invalid_argument("build_radius_polynomial: order must be in [0,1)");
  if (prob.p < 1) throw std::invalid_argument("build_radius_polynomial: p must be >= 1");
  const bool uses_c = prob.family == RadiusFamily::StarlikeUniformBound ||
                      prob.family == RadiusFamily::ConvexUniformBound;
  if (uses_c && !(prob.C > 0.0))
    throw std::invalid_argument("build_radius_polynomial: C must be positive");

  FamilyParts parts;
  switch (prob.family) {
    case RadiusFamily::StarlikeKoebeBound: parts = starlike_koebe_parts(prob.p); break;
    case RadiusFamily::ConvexKoebeBound: parts = convex_koebe_parts(prob.p); break;
    case RadiusFamily::StarlikeUniformBound: parts = starlike_uniform_parts(prob.p); break;
    case RadiusFamily::ConvexUniformBound: parts = convex_uniform_parts(prob.p); break;
  }
  const size_t n = std::max({parts.base.size(), parts.order_part.size(), parts.c_part.size(),
                             parts.c_order.size()});
  std::vector<double> coeffs(n, 0.0);
  const double C = uses_c ? prob.C : 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double b = i < parts.base.size() ? double(parts.base[i]) : 0.0;
    const double o = i < parts.order_part.size() ? double(parts.order_part[i]) : 0.0;
    const double cp = i < parts.c_part.size() ? double(parts.c_part[i]) : 0.0;
    const double co = i < parts.c_order.size() ? double(parts.c_order[i]) : 0.0;
    coeffs[i] = b + prob.order * o + C * (cp + prob.order * co);
  }
  return RealPolynomial(std::move(coeffs));
}

RootResult smallest_root(const RealPolynomial& poly) {
  if (!(poly(0.0) > 0.0)) throw std::runtime_error("smallest_root: poly(0) must be positive");
  constexpr double kStep = 1e-3;
  double lo = 0.0, hi = 0.0;
  for (double t = kStep; t < 1.0 + kStep / 2; t += kStep) {
    const double rt = std::min(t, 1.0);
    if (poly(rt) < 0.0) {
      hi = rt;
      lo = rt - kStep;
      break;
    }
  }
  if (hi == 0.0) throw std::runtime_error("smallest_root: no sign change located in (0,1)");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double v = poly(mid);
    if (v > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  RootResult res;
  res.r = 0.5 * (lo + hi);
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  if (!(poly(lo) > 0.0 && poly(hi) < 0.0))
    throw std::runtime_error("smallest_root: bracket certificate failed (tangency?)");
  return res;
}

PowerSumCheck power_sum_closed_forms(double r, int J) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("power_sum_closed_forms: r in (0,1)");
  PowerSumCheck out{};
  double rp = 1.0;  // r^{j-1}
  for (int j = 1; j <= J; ++j) {
    double jm = 1.0;
    for (int m = 0; m <= 4; ++m) {
      out.partial[static_cast<size_t>(m)] += jm * rp;
      jm *= j;
    }
    rp *= r;
  }
  const double d = 1.0 - r;
  out.closed[0] = 1.0 / d;
  out.closed[1] = 1.0 / (d * d);
  out.closed[2] = (1.0 + r) / (d * d * d);
  out.closed[3] = (1.0 + 4.0 * r + r * r) / (d * d * d * d);
  out.closed[4] = (1.0 + r) * (1.0 + 10.0 * r + r * r) / (d * d * d * d * d);
  return out;
}

std::vector<RadiusTableRow> radius_vs_order_table(RadiusFamily family, int p, double C,
                                                  const std::vector<double>& orders) {
  for (size_t i = 1; i < orders.size(); ++i)
    if (!(orders[i] > orders[i - 1]))
      throw std::invalid_argument("radius_vs_order_table: orders must be strictly increasing");
  std::vector<RadiusTableRow> rows;
  rows.reserve(orders.size());
  for (double order : orders) {
    RadiusProblem prob{family, order, p, C};
    rows.push_back({order, smallest_root(build_radius_polynomial(prob))});
  }
  return rows;
}

}  // namespace phm
