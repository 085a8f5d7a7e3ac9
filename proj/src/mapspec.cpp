#include "phm/mapspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phm/catalog.hpp"

namespace phm {

namespace {

AnalyticCoeffs parse_part(const nlohmann::json& arr, int J, const char* which, size_t layer_idx) {
  if (!arr.is_array())
    throw MapSpecError(std::string("layer ") + std::to_string(layer_idx + 1) + ": '" + which +
                       "' must be an array of [re, im] pairs");
  AnalyticCoeffs out = AnalyticCoeffs::zero(J);
  for (size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw MapSpecError(std::string("layer ") + std::to_string(layer_idx + 1) + ", " + which +
                         "[" + std::to_string(i) + "]: expected [re, im]");
    out.set(static_cast<int>(i) + 1, Complex(pair[0].get<double>(), pair[1].get<double>()));
  }
  return out;
}

}  // namespace

PolyharmonicMap parse_map_spec(const std::string& json_text, int default_builtin_J) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MapSpecError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw MapSpecError("map spec must be a JSON object");

  if (doc.contains("builtin")) {
    if (!doc["builtin"].is_string()) throw MapSpecError("'builtin' must be a string");
    const double C = doc.value("C", 1.0);
    const int J = doc.value("J", default_builtin_J);
    try {
      return make(builtin_from_string(doc["builtin"].get<std::string>()), J, C);
    } catch (const std::invalid_argument& e) {
      throw MapSpecError(e.what());
    }
  }

  if (!doc.contains("p") || !doc["p"].is_number_integer())
    throw MapSpecError("map spec needs an integer 'p' (or a 'builtin' name)");
  const int p = doc["p"].get<int>();
  if (!doc.contains("layers") || !doc["layers"].is_array())
    throw MapSpecError("map spec needs a 'layers' array");
  const auto& layers_json = doc["layers"];
  if (static_cast<int>(layers_json.size()) != p)
    throw MapSpecError("'layers' length must equal p");

  // Common truncation order: the longest coefficient list anywhere.
  size_t J = 1;
  for (const auto& lj : layers_json) {
    if (!lj.is_object()) throw MapSpecError("each layer must be an object with 'h' and 'g'");
    if (lj.contains("h") && lj["h"].is_array()) J = std::max(J, lj["h"].size());
    if (lj.contains("g") && lj["g"].is_array()) J = std::max(J, lj["g"].size());
  }

  std::vector<HarmonicLayer> layers;
  for (size_t i = 0; i < layers_json.size(); ++i) {
    const auto& lj = layers_json[i];
    HarmonicLayer layer{AnalyticCoeffs::zero(static_cast<int>(J)),
                        AnalyticCoeffs::zero(static_cast<int>(J))};
    if (lj.contains("h")) layer.h = parse_part(lj["h"], static_cast<int>(J), "h", i);
    if (lj.contains("g")) layer.g = parse_part(lj["g"], static_cast<int>(J), "g", i);
    layers.push_back(std::move(layer));
  }
  return PolyharmonicMap(std::move(layers));
}

PolyharmonicMap load_map_spec(const std::string& path, int default_builtin_J) {
  std::ifstream in(path);
  if (!in) throw MapSpecError("cannot open map spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_spec(buf.str(), default_builtin_J);
}

}  // namespace phm
