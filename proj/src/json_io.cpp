#include "lexbetti/json_io.hpp"

#include <fstream>

#include "lexbetti/errors.hpp"

namespace lexbetti {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object())
    throw InputError("expected a JSON object with a '" + std::string(key) + "' field");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError("missing field '" + std::string(key) + "'");
  return *it;
}

int int_field(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = field(j, key);
  if (!v.is_number_integer())
    throw InputError("field '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

}  // namespace

nlohmann::json to_json(const Monomial& m) {
  return nlohmann::json(m.exponents());
}

Monomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("a monomial is a nonempty array of exponents");
  std::vector<int> exps;
  exps.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw InputError("exponents must be integers");
    exps.push_back(e.get<int>());
  }
  return Monomial(std::move(exps));  // rejects negatives itself
}

nlohmann::json to_json(const MonomialSet& s) {
  nlohmann::json j;
  j["vars"] = s.vars();
  j["degree"] = s.degree();
  nlohmann::json elems = nlohmann::json::array();
  for (const Monomial& m : s.elements()) elems.push_back(to_json(m));
  j["elements"] = std::move(elems);
  return j;
}

MonomialSet set_from_json(const nlohmann::json& j) {
  int vars = int_field(j, "vars");
  int degree = int_field(j, "degree");
  const nlohmann::json& elems = field(j, "elements");
  if (!elems.is_array()) throw InputError("'elements' must be an array");
  std::vector<Monomial> mons;
  mons.reserve(elems.size());
  for (const auto& e : elems) mons.push_back(monomial_from_json(e));
  return MonomialSet::of(vars, degree, std::move(mons));
}

nlohmann::json to_json(const HilbertFunction& h) {
  nlohmann::json j;
  j["vars"] = h.vars;
  j["values"] = h.values;
  return j;
}

HilbertFunction hilbert_from_json(const nlohmann::json& j) {
  HilbertFunction h;
  h.vars = int_field(j, "vars");
  if (h.vars < 1) throw InputError("'vars' must be positive");
  const nlohmann::json& vals = field(j, "values");
  if (!vals.is_array() || vals.empty())
    throw InputError("'values' must be a nonempty array");
  for (const auto& v : vals) {
    if (!v.is_number_integer())
      throw InputError("Hilbert values must be integers");
    h.values.push_back(v.get<Count>());
    if (h.values.back() < 0) throw InputError("Hilbert values must be nonnegative");
  }
  return h;
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  nlohmann::json j;
  j["vars"] = ideal.vars();
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

LoadedIdeal ideal_from_json(const nlohmann::json& j) {
  int vars = int_field(j, "vars");
  if (vars < 1) throw InputError("'vars' must be positive");
  const nlohmann::json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("'generators' must be an array");
  std::vector<Monomial> mons;
  mons.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial m = monomial_from_json(g);
    if (m.vars() != vars)
      throw InputError("generator " + m.str() + " does not have " +
                       std::to_string(vars) + " exponents");
    mons.push_back(std::move(m));
  }
  const auto provided = static_cast<Count>(mons.size());
  LoadedIdeal loaded{MonomialIdeal::minimalize(std::move(mons), vars), true};
  loaded.was_minimal = loaded.ideal.generator_count() == provided;
  return loaded;
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json j;
  j["betas"] = t.betas;
  nlohmann::json by = nlohmann::json::object();
  for (const auto& [d, row] : t.by_degree) by[std::to_string(d)] = row;
  j["by_degree"] = std::move(by);
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("parse failure in " + path + ": " + e.what());
  }
}

}  // namespace lexbetti
