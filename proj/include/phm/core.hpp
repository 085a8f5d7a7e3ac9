#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phm {

using Complex = std::complex<double>;

/// Thrown when a map violates the normalization required by the operation
/// (a_{1,1} = 1, |b_{1,1}| < 1; fully normalized additionally needs
/// b_{1,1} = 0 and a_{k,1} = b_{k,1} = 0 for k >= 2).
class NormalizationError : public std::runtime_error {
public:
  explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated Taylor coefficients c_1..c_J of an analytic part; index j is the
/// power of z, there is no constant term.
class AnalyticCoeffs {
public:
  AnalyticCoeffs() = default;
  explicit AnalyticCoeffs(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("AnalyticCoeffs: truncation order must be >= 1");
  }
  static AnalyticCoeffs zero(int truncation_order) {
    return AnalyticCoeffs(std::vector<Complex>(static_cast<size_t>(truncation_order)));
  }

  int truncation_order() const { return static_cast<int>(coeffs_.size()); }
  /// Coefficient on z^j, 1 <= j <= J.
  Complex at(int j) const { return coeffs_.at(static_cast<size_t>(j - 1)); }
  void set(int j, Complex c) { coeffs_.at(static_cast<size_t>(j - 1)) = c; }
  std::span<const Complex> coeffs() const { return coeffs_; }

private:
  std::vector<Complex> coeffs_;
};

struct HarmonicLayer {
  AnalyticCoeffs h;
  AnalyticCoeffs g;
};

/// F(z) = sum_{k=1..p} |z|^{2(k-1)} (h_k(z) + conj(g_k(z))), truncated at a
/// common order J. Construction enforces a_{1,1} = 1 and |b_{1,1}| < 1.
class PolyharmonicMap {
public:
  explicit PolyharmonicMap(std::vector<HarmonicLayer> layers);

  /// Skips the a_{1,1} = 1 / |b_{1,1}| < 1 class checks; for coefficient
  /// arithmetic (sums of maps) that leaves H_p.
  static PolyharmonicMap unchecked(std::vector<HarmonicLayer> layers);

  int p() const { return static_cast<int>(layers_.size()); }
  int truncation_order() const { return layers_.front().h.truncation_order(); }
  const std::vector<HarmonicLayer>& layers() const { return layers_; }

  Complex a(int k, int j) const { return layers_.at(static_cast<size_t>(k - 1)).h.at(j); }
  Complex b(int k, int j) const { return layers_.at(static_cast<size_t>(k - 1)).g.at(j); }

  /// b_{1,1} = 0 and a_{k,1} = b_{k,1} = 0 for k >= 2 (class H_p^0).
  bool is_normalized() const;
  void require_normalized() const;

private:
  PolyharmonicMap() = default;
  std::vector<HarmonicLayer> layers_;
};

/// F and its first and second Wirtinger derivatives at a point.
struct WirtingerBundle {
  Complex value;
  Complex dz;
  Complex dzbar;
  Complex dz2;
  Complex dzdzbar;
  Complex dzbar2;
};

/// Series evaluation of F at z, |z| < 1.
Complex evaluate(const PolyharmonicMap& f, Complex z);

/// All six Wirtinger quantities by term-wise differentiation of the monomials
/// z^{k-1+j} zbar^{k-1} and z^{k-1} zbar^{k-1+j}; no finite differences.
WirtingerBundle wirtinger(const PolyharmonicMap& f, Complex z);

/// |F_z|^2 - |F_zbar|^2.
double jacobian(const PolyharmonicMap& f, Complex z);

/// Coefficient-wise sum of two maps sharing p and J.
PolyharmonicMap add(const PolyharmonicMap& f, const PolyharmonicMap& g);

/// F_r(z) = r^{-1} F(rz): coefficients scaled by r^{2k+j-3}. Preserves
/// a_{1,1} = 1.
PolyharmonicMap rescaled(const PolyharmonicMap& f, double r);

/// Upper bound on the dropped tail sum_{j>J} j^2 r^{j-1}, valid for maps whose
/// coefficient moduli are dominated by the j^2-growth of the Clunie-Sheil-Small
/// bound. Returns +inf when the geometric envelope does not contract.
double tail_bound(int truncation_order, double r);

/// Tail bound for a specific map: sum_{j>J} coefficient-envelope * r^{j-1}
/// with the map's own largest layer coefficient scale.
double tail_bound(const PolyharmonicMap& f, double r);

namespace detail {
inline void require_in_disk(Complex z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("point outside the open unit disk");
}
}  // namespace detail

}  // namespace phm
