#include "phm/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phm {

PolyharmonicMap::PolyharmonicMap(std::vector<HarmonicLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("PolyharmonicMap: p must be >= 1");
  const int J = layers_.front().h.truncation_order();
  for (const auto& layer : layers_) {
    if (layer.h.truncation_order() != J || layer.g.truncation_order() != J)
      throw std::invalid_argument("PolyharmonicMap: all layers must share one truncation order");
  }
  if (a(1, 1) != Complex(1.0, 0.0))
    throw NormalizationError("PolyharmonicMap: a_{1,1} must equal 1");
  if (std::abs(b(1, 1)) >= 1.0)
    throw NormalizationError("PolyharmonicMap: |b_{1,1}| must be < 1");
}

PolyharmonicMap PolyharmonicMap::unchecked(std::vector<HarmonicLayer> layers) {
  if (layers.empty()) throw std::invalid_argument("PolyharmonicMap: p must be >= 1");
  PolyharmonicMap m{};
  m.layers_ = std::move(layers);
  const int J = m.layers_.front().h.truncation_order();
  for (const auto& layer : m.layers_) {
    if (layer.h.truncation_order() != J || layer.g.truncation_order() != J)
      throw std::invalid_argument("PolyharmonicMap: all layers must share one truncation order");
  }
  return m;
}

bool PolyharmonicMap::is_normalized() const {
  if (b(1, 1) != Complex(0.0, 0.0)) return false;
  for (int k = 2; k <= p(); ++k)
    if (a(k, 1) != Complex(0.0, 0.0) || b(k, 1) != Complex(0.0, 0.0)) return false;
  return true;
}

void PolyharmonicMap::require_normalized() const {
  if (!is_normalized())
    throw NormalizationError("map is not in H_p^0 (b_{1,1} or some a_{k,1}, b_{k,1}, k>=2, nonzero)");
}

Complex evaluate(const PolyharmonicMap& f, Complex z) {
  detail::require_in_disk(z);
  const double u = std::norm(z);  // |z|^2
  Complex total = 0.0;
  double upow = 1.0;
  for (const auto& layer : f.layers()) {
    Complex hsum = 0.0, gsum = 0.0;
    Complex zp = 1.0;
    const int J = layer.h.truncation_order();
    for (int j = 1; j <= J; ++j) {
      zp *= z;
      hsum += layer.h.at(j) * zp;
      gsum += layer.g.at(j) * zp;
    }
    total += upow * (hsum + std::conj(gsum));
    upow *= u;
  }
  return total;
}

namespace {

struct LayerSums {
  Complex h0, h1, h2;  // sum a_j z^j, sum a_j j z^{j-1}, sum a_j j(j-1) z^{j-2}
  Complex g0, g1, g2;  // same for g at z (before conjugation)
};

LayerSums layer_derivative_sums(const HarmonicLayer& layer, Complex z) {
  LayerSums s{};
  const int J = layer.h.truncation_order();
  Complex zjm2 = 0.0;           // z^{j-2}, only used with the j(j-1) factor
  Complex zjm1 = 1.0;           // z^{j-1}
  for (int j = 1; j <= J; ++j) {
    const Complex aj = layer.h.at(j);
    const Complex bj = layer.g.at(j);
    const Complex zj = zjm1 * z;
    s.h0 += aj * zj;
    s.h1 += aj * double(j) * zjm1;
    s.g0 += bj * zj;
    s.g1 += bj * double(j) * zjm1;
    if (j >= 2) {
      s.h2 += aj * double(j) * double(j - 1) * zjm2;
      s.g2 += bj * double(j) * double(j - 1) * zjm2;
    }
    zjm2 = zjm1;
    zjm1 = zj;
  }
  return s;
}

// factor * z^e, with the convention 0 * z^{negative} = 0 (the factor always
// vanishes whenever the exponent would be negative).
Complex mono(double factor, Complex z, int e) {
  if (factor == 0.0) return 0.0;
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return factor * r;
}

}  // namespace

WirtingerBundle wirtinger(const PolyharmonicMap& f, Complex z) {
  detail::require_in_disk(z);
  const Complex zb = std::conj(z);
  WirtingerBundle w{};
  int k = 0;
  for (const auto& layer : f.layers()) {
    ++k;
    const LayerSums s = layer_derivative_sums(layer, z);
    const Complex H = s.h0, Hp = s.h1, Hpp = s.h2;
    const Complex Gb = std::conj(s.g0), Gbp = std::conj(s.g1), Gbpp = std::conj(s.g2);
    const double m = k - 1.0;
    const Complex zk1 = mono(1.0, z, k - 1);
    const Complex zbk1 = mono(1.0, zb, k - 1);
    const Complex zk2 = mono(m, z, std::max(k - 2, 0));    // m z^{k-2} (0 when k=1)
    const Complex zbk2 = mono(m, zb, std::max(k - 2, 0));  // m zbar^{k-2}
    const Complex zk3 = mono(m * (m - 1.0), z, std::max(k - 3, 0));
    const Complex zbk3 = mono(m * (m - 1.0), zb, std::max(k - 3, 0));

    const Complex G = H + Gb;
    w.value += zk1 * zbk1 * G;
    w.dz += zk2 * zbk1 * G + zk1 * zbk1 * Hp;
    w.dzbar += zk1 * zbk2 * G + zk1 * zbk1 * Gbp;
    w.dz2 += zk3 * zbk1 * G + 2.0 * zk2 * zbk1 * Hp + zk1 * zbk1 * Hpp;
    w.dzbar2 += zk1 * zbk3 * G + 2.0 * zk1 * zbk2 * Gbp + zk1 * zbk1 * Gbpp;
    w.dzdzbar += zk2 * zbk2 * G + zk2 * zbk1 * Gbp + zk1 * zbk2 * Hp;
  }
  return w;
}

double jacobian(const PolyharmonicMap& f, Complex z) {
  const WirtingerBundle w = wirtinger(f, z);
  return std::norm(w.dz) - std::norm(w.dzbar);
}

PolyharmonicMap add(const PolyharmonicMap& f, const PolyharmonicMap& g) {
  if (f.p() != g.p() || f.truncation_order() != g.truncation_order())
    throw std::invalid_argument("add: maps must share p and truncation order");
  std::vector<HarmonicLayer> layers;
  const int J = f.truncation_order();
  for (int k = 1; k <= f.p(); ++k) {
    HarmonicLayer layer{AnalyticCoeffs::zero(J), AnalyticCoeffs::zero(J)};
    for (int j = 1; j <= J; ++j) {
      layer.h.set(j, f.a(k, j) + g.a(k, j));
      layer.g.set(j, f.b(k, j) + g.b(k, j));
    }
    layers.push_back(std::move(layer));
  }
  // a_{1,1} = 2 after the sum, so this leaves H_p.
  return PolyharmonicMap::unchecked(std::move(layers));
}

PolyharmonicMap rescaled(const PolyharmonicMap& f, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("rescaled: r must be in (0,1)");
  std::vector<HarmonicLayer> layers;
  const int J = f.truncation_order();
  for (int k = 1; k <= f.p(); ++k) {
    HarmonicLayer layer{AnalyticCoeffs::zero(J), AnalyticCoeffs::zero(J)};
    for (int j = 1; j <= J; ++j) {
      const double scale = std::pow(r, 2 * k + j - 3);
      layer.h.set(j, f.a(k, j) * scale);
      layer.g.set(j, f.b(k, j) * scale);
    }
    layers.push_back(std::move(layer));
  }
  return PolyharmonicMap(std::move(layers));
}

double tail_bound(int truncation_order, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("tail_bound: r must be in [0,1)");
  // sum_{j>J} j^2 r^{j-1} <= (J+1)^2 r^J / (1 - r e^{2/(J+1)}) when the
  // envelope contracts; +inf otherwise.
  const double J = truncation_order;
  const double q = r * std::exp(2.0 / (J + 1.0));
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return (J + 1.0) * (J + 1.0) * std::pow(r, J) / (1.0 - q);
}

double tail_bound(const PolyharmonicMap& f, double r) {
  double scale = 0.0;
  for (int k = 1; k <= f.p(); ++k)
    for (int j = 1; j <= f.truncation_order(); ++j)
      scale = std::max(scale, (std::abs(f.a(k, j)) + std::abs(f.b(k, j))) / double(j * j));
  return scale * tail_bound(f.truncation_order(), r);
}

}  // namespace phm
