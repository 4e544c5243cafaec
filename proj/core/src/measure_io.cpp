#include "fockideal/measure_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fockideal {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* k : keys)
    if (!obj.contains(k)) throw MeasureParseError(where + ": missing field '" + k + "'");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw MeasureParseError(where + ": unknown field '" + key + "'");
  }
}

ComplexPoint parse_point(const json& arr, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    throw MeasureParseError("point: expected an array of " + std::to_string(dim) + " [re, im] pairs");
  std::vector<std::complex<double>> coords;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw MeasureParseError("point: each coordinate must be an [re, im] pair of numbers");
    coords.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexPoint(std::move(coords));
}

}  // namespace

Measure parse_measure(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MeasureParseError(std::string("measure file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MeasureParseError("measure file: top level must be an object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw MeasureParseError("measure file: version must be the integer 1");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw MeasureParseError("measure file: missing string field 'kind'");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer() ||
      doc["dimension"].get<int>() < 1)
    throw MeasureParseError("measure file: 'dimension' must be a positive integer");
  const int dim = doc["dimension"].get<int>();
  const std::string kind = doc["kind"].get<std::string>();

  try {
    if (kind == "atomic") {
      require_keys(doc, {"version", "dimension", "kind", "atoms"}, "measure file");
      if (!doc["atoms"].is_array()) throw MeasureParseError("atoms: expected an array");
      std::vector<Atom> atoms;
      for (const auto& a : doc["atoms"]) {
        if (!a.is_object()) throw MeasureParseError("atoms: each atom must be an object");
        require_keys(a, {"point", "weight"}, "atom");
        if (!a["weight"].is_number() || !(a["weight"].get<double>() > 0.0))
          throw MeasureParseError("atom: weight must be a number > 0");
        atoms.push_back(Atom{parse_point(a["point"], dim), a["weight"].get<double>()});
      }
      return AtomicMeasure(dim, std::move(atoms));
    }
    if (kind == "radial") {
      require_keys(doc, {"version", "dimension", "kind", "poly", "beta", "quad_order"},
                   "measure file");
      if (!doc["poly"].is_array() || doc["poly"].empty())
        throw MeasureParseError("radial: 'poly' must be a nonempty array of numbers");
      std::vector<double> poly;
      for (const auto& c : doc["poly"]) {
        if (!c.is_number() || c.get<double>() < 0.0)
          throw MeasureParseError("radial: polynomial coefficients must be numbers >= 0");
        poly.push_back(c.get<double>());
      }
      if (!doc["beta"].is_number() || doc["beta"].get<double>() < 0.0)
        throw MeasureParseError("radial: 'beta' must be a number >= 0");
      if (!doc["quad_order"].is_number_integer() || doc["quad_order"].get<int>() < 4)
        throw MeasureParseError("radial: 'quad_order' must be an integer >= 4");
      return DensityMeasure(dim, std::move(poly), doc["beta"].get<double>(),
                            doc["quad_order"].get<int>());
    }
  } catch (const std::invalid_argument& e) {
    throw MeasureParseError(std::string("measure file: ") + e.what());
  }
  throw MeasureParseError("measure file: kind must be 'atomic' or 'radial'");
}

Measure load_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeasureParseError("cannot open measure file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure(buf.str());
}

std::string serialize_measure(const Measure& nu) {
  json doc;
  doc["version"] = 1;
  doc["dimension"] = measure_dim(nu);
  if (const auto* a = std::get_if<AtomicMeasure>(&nu)) {
    doc["kind"] = "atomic";
    doc["atoms"] = json::array();
    for (const auto& at : a->atoms) {
      json pt = json::array();
      for (const auto& c : at.location.coords()) pt.push_back({c.real(), c.imag()});
      doc["atoms"].push_back({{"point", pt}, {"weight", at.weight}});
    }
  } else {
    const auto& d = std::get<DensityMeasure>(nu);
    doc["kind"] = "radial";
    doc["poly"] = d.poly;
    doc["beta"] = d.beta;
    doc["quad_order"] = d.quad_order;
  }
  return doc.dump(2) + "\n";
}

}  // namespace fockideal
