#include "ratde/eqspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ratde {

using nlohmann::json;

const char* constructor_name(ConstructorKind c) {
  switch (c) {
    case ConstructorKind::T1Periodic: return "t1-periodic";
    case ConstructorKind::T2Periodic: return "t2-periodic";
    case ConstructorKind::T4ivPeriodic: return "t4iv-periodic";
    case ConstructorKind::T1Unbounded: return "t1-unbounded";
  }
  return "?";
}

ConstructorKind parse_constructor(const std::string& name) {
  if (name == "t1-periodic") return ConstructorKind::T1Periodic;
  if (name == "t2-periodic") return ConstructorKind::T2Periodic;
  if (name == "t4iv-periodic") return ConstructorKind::T4ivPeriodic;
  if (name == "t1-unbounded") return ConstructorKind::T1Unbounded;
  throw ParseError("unknown constructor \"" + name +
                   "\" (expected t1-periodic, t2-periodic, t4iv-periodic or t1-unbounded)");
}

namespace {

std::map<int, Ratio> parse_coeff_map(const json& j, const char* which) {
  if (!j.is_object()) throw ParseError(std::string(which) + " must be an object");
  std::map<int, Ratio> out;
  for (const auto& [key, value] : j.items()) {
    int lag = 0;
    try {
      std::size_t pos = 0;
      lag = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(std::string(which) + " lag \"" + key + "\" is not an integer");
    }
    if (!value.is_string())
      throw ParseError(std::string(which) + " coefficient at lag " + key +
                       " must be a rational string");
    out[lag] = Ratio::parse(value.get<std::string>());
  }
  return out;
}

}  // namespace

EquationSpec EquationSpec::parse(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spec document must be a JSON object");

  static const std::set<std::string> known{
      "k", "alpha", "A", "beta", "B", "initial_conditions", "constructor"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ParseError("unknown key \"" + key + "\"");
  for (const char* required : {"k", "alpha", "A", "beta", "B"})
    if (!j.contains(required))
      throw ParseError(std::string("missing key \"") + required + "\"");

  EquationSpec spec;
  if (!j["k"].is_number_integer()) throw ParseError("k must be an integer");
  spec.k = j["k"].get<int>();
  if (!j["alpha"].is_string() || !j["A"].is_string())
    throw ParseError("alpha and A must be rational strings");
  spec.alpha = Ratio::parse(j["alpha"].get<std::string>());
  spec.A = Ratio::parse(j["A"].get<std::string>());
  spec.beta = parse_coeff_map(j["beta"], "beta");
  spec.B = parse_coeff_map(j["B"], "B");

  if (j.contains("initial_conditions")) {
    if (!j["initial_conditions"].is_array())
      throw ParseError("initial_conditions must be an array of rational strings");
    std::vector<Ratio> ics;
    for (const auto& v : j["initial_conditions"]) {
      if (!v.is_string())
        throw ParseError("initial_conditions entries must be rational strings");
      ics.push_back(Ratio::parse(v.get<std::string>()));
    }
    spec.initial_conditions = std::move(ics);
  }
  if (j.contains("constructor")) {
    if (!j["constructor"].is_string()) throw ParseError("constructor must be a string");
    spec.constructor = parse_constructor(j["constructor"].get<std::string>());
  }
  return spec;
}

EquationSpec EquationSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string EquationSpec::to_json() const {
  json j;
  j["k"] = k;
  j["alpha"] = alpha.str();
  j["A"] = A.str();
  json jb = json::object();
  for (const auto& [lag, coeff] : beta) jb[std::to_string(lag)] = coeff.str();
  j["beta"] = jb;
  json jB = json::object();
  for (const auto& [lag, coeff] : B) jB[std::to_string(lag)] = coeff.str();
  j["B"] = jB;
  if (initial_conditions) {
    json arr = json::array();
    for (const Ratio& r : *initial_conditions) arr.push_back(r.str());
    j["initial_conditions"] = arr;
  }
  if (constructor) j["constructor"] = constructor_name(*constructor);
  return j.dump(2);
}

Equation EquationSpec::equation(std::vector<std::string>* warnings) const {
  Equation eq = Equation::create(alpha, A, beta, B, warnings);
  if (eq.k != k)
    throw ParseError("k = " + std::to_string(k) + " does not match the largest lag " +
                     std::to_string(eq.k));
  if (initial_conditions && static_cast<int>(initial_conditions->size()) != k)
    throw ParseError("initial_conditions must list exactly k = " + std::to_string(k) +
                     " values");
  return eq;
}

}  // namespace ratde
