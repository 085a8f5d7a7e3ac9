#pragma once

#include <string>

#include "phm/core.hpp"

namespace phm {

/// Named extremal and reference mappings, generated as coefficient series.
enum class BuiltinMap {
  Identity,
  KoebeAnalytic,   // k(z) = z/(1-z)^2, a_j = j
  KoebeHarmonic,   // harmonic Koebe K, a_j = (2j+1)(j+1)/6, b_j = (2j-1)(j-1)/6
  F0,              // starlike sharpness witness for the Koebe-bound family
  F1,              // convex sharpness witness for the Koebe-bound family
  F2,              // starlike sharpness witness for the uniform-bound family
  F3,              // convex sharpness witness for the uniform-bound family
  Example1,        // z - (1/6) conj(z)^2 |z|^2, p = 2
};

/// Parses the CLI spelling (IDENTITY, KOEBE_ANALYTIC, ... case-insensitive).
BuiltinMap builtin_from_string(const std::string& name);
std::string to_string(BuiltinMap name);

/// Coefficient generator. C is used by F2/F3 only; J >= 2.
PolyharmonicMap make(BuiltinMap name, int truncation_order, double C = 1.0);

/// Closed form of the harmonic Koebe mapping (for oracle tests, not the core
/// evaluation path).
Complex harmonic_koebe_closed_form(Complex z);

}  // namespace phm
