#include "phm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace phm {

namespace {

std::string fmt7(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.7g", x);
  return buf;
}

}  // namespace

std::string curve_to_csv(const std::vector<Complex>& curve) {
  std::string out = "theta,re,im\n";
  const size_t n = curve.size();
  for (size_t m = 0; m < n; ++m) {
    const double theta = 2.0 * std::numbers::pi * double(m) / double(n);
    out += fmt7(theta);
    out += ',';
    out += fmt7(curve[m].real());
    out += ',';
    out += fmt7(curve[m].imag());
    out += '\n';
  }
  return out;
}

std::string curve_to_svg(const std::vector<Complex>& curve, bool with_half_disk) {
  double ext = 0.5;
  for (const Complex& z : curve)
    ext = std::max({ext, std::abs(z.real()), std::abs(z.imag())});
  ext *= 1.1;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"";
  out += fmt7(-ext) + " " + fmt7(-ext) + " " + fmt7(2 * ext) + " " + fmt7(2 * ext) + "\">\n";
  if (with_half_disk) {
    out += "  <circle cx=\"0\" cy=\"0\" r=\"0.5\" fill=\"none\" stroke=\"#888888\" stroke-width=\"";
    out += fmt7(ext / 240.0) + "\" stroke-dasharray=\"" + fmt7(ext / 40.0) + "\"/>\n";
  }
  out += "  <path fill=\"none\" stroke=\"#1f3b8f\" stroke-width=\"" + fmt7(ext / 160.0) + "\" d=\"";
  for (size_t m = 0; m < curve.size(); ++m) {
    out += (m == 0 ? "M " : " L ");
    out += fmt7(curve[m].real());
    out += ' ';
    out += fmt7(-curve[m].imag());  // SVG y axis points down
  }
  out += " Z\"/>\n</svg>\n";
  return out;
}

}  // namespace phm
