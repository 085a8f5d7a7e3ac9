#include "phm/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace phm {

BuiltinMap builtin_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "IDENTITY") return BuiltinMap::Identity;
  if (s == "KOEBE_ANALYTIC") return BuiltinMap::KoebeAnalytic;
  if (s == "KOEBE_HARMONIC") return BuiltinMap::KoebeHarmonic;
  if (s == "F0") return BuiltinMap::F0;
  if (s == "F1") return BuiltinMap::F1;
  if (s == "F2") return BuiltinMap::F2;
  if (s == "F3") return BuiltinMap::F3;
  if (s == "EXAMPLE1") return BuiltinMap::Example1;
  throw std::invalid_argument("unknown builtin map: " + name);
}

std::string to_string(BuiltinMap name) {
  switch (name) {
    case BuiltinMap::Identity: return "IDENTITY";
    case BuiltinMap::KoebeAnalytic: return "KOEBE_ANALYTIC";
    case BuiltinMap::KoebeHarmonic: return "KOEBE_HARMONIC";
    case BuiltinMap::F0: return "F0";
    case BuiltinMap::F1: return "F1";
    case BuiltinMap::F2: return "F2";
    case BuiltinMap::F3: return "F3";
    case BuiltinMap::Example1: return "EXAMPLE1";
  }
  return "?";
}

namespace {

double koebe_a(int j) { return (2.0 * j + 1.0) * (j + 1.0) / 6.0; }
double koebe_b(int j) { return (2.0 * j - 1.0) * (j - 1.0) / 6.0; }

PolyharmonicMap single_layer(AnalyticCoeffs h, AnalyticCoeffs g) {
  std::vector<HarmonicLayer> layers;
  layers.push_back({std::move(h), std::move(g)});
  return PolyharmonicMap(std::move(layers));
}

}  // namespace

PolyharmonicMap make(BuiltinMap name, int J, double C) {
  if (J < 2) throw std::invalid_argument("make: truncation order must be >= 2");
  AnalyticCoeffs h = AnalyticCoeffs::zero(J);
  AnalyticCoeffs g = AnalyticCoeffs::zero(J);
  switch (name) {
    case BuiltinMap::Identity:
      h.set(1, 1.0);
      return single_layer(std::move(h), std::move(g));
    case BuiltinMap::KoebeAnalytic:
      for (int j = 1; j <= J; ++j) h.set(j, double(j));
      return single_layer(std::move(h), std::move(g));
    case BuiltinMap::KoebeHarmonic:
      for (int j = 1; j <= J; ++j) {
        h.set(j, koebe_a(j));
        g.set(j, koebe_b(j));
      }
      return single_layer(std::move(h), std::move(g));
    case BuiltinMap::F0:
    case BuiltinMap::F1: {
      // 2z - (analytic part of K) -+ conj(co-analytic part of K)
      const double sign = (name == BuiltinMap::F0) ? 1.0 : -1.0;
      h.set(1, 1.0);
      for (int j = 2; j <= J; ++j) {
        h.set(j, -koebe_a(j));
        g.set(j, sign * koebe_b(j));
      }
      return single_layer(std::move(h), std::move(g));
    }
    case BuiltinMap::F2:
      h.set(1, 1.0);
      for (int j = 2; j <= J; ++j) {
        h.set(j, -C / 2.0);
        g.set(j, -C / 2.0);
      }
      return single_layer(std::move(h), std::move(g));
    case BuiltinMap::F3:
      h.set(1, 1.0);
      for (int j = 2; j <= J; ++j) g.set(j, -C);
      return single_layer(std::move(h), std::move(g));
    case BuiltinMap::Example1: {
      h.set(1, 1.0);
      AnalyticCoeffs h2 = AnalyticCoeffs::zero(J);
      AnalyticCoeffs g2 = AnalyticCoeffs::zero(J);
      g2.set(2, -1.0 / 6.0);
      std::vector<HarmonicLayer> layers;
      layers.push_back({std::move(h), std::move(g)});
      layers.push_back({std::move(h2), std::move(g2)});
      return PolyharmonicMap(std::move(layers));
    }
  }
  throw std::invalid_argument("make: unknown builtin map");
}

Complex harmonic_koebe_closed_form(Complex z) {
  const Complex one = 1.0;
  const Complex d = std::pow(one - z, 3);
  const Complex hpart = (z - 0.5 * z * z + z * z * z / 6.0) / d;
  const Complex gpart = (0.5 * z * z + z * z * z / 6.0) / d;
  return hpart + std::conj(gpart);
}

}  // namespace phm
