#include "rothyp/spec_document.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "rothyp/errors.hpp"

namespace rothyp {

using nlohmann::json;

namespace {

const std::set<std::string> kFields = {"family", "params", "domain", "n", "unit_speed"};

json require(const json& doc, const char* field) {
  if (!doc.contains(field)) throw SpecParseError(field, "missing");
  return doc.at(field);
}

}  // namespace

ProfileSpecDocument ProfileSpecDocument::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError("<document>", e.what());
  }
  if (!doc.is_object()) throw SpecParseError("<document>", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.count(key)) throw SpecParseError(key, "unknown field");
  }

  ProfileSpecDocument spec;
  const json family = require(doc, "family");
  if (!family.is_string()) throw SpecParseError("family", "expected a string");
  spec.family = family.get<std::string>();

  const json params = require(doc, "params");
  if (!params.is_object()) throw SpecParseError("params", "expected an object of numbers");
  for (const auto& [key, value] : params.items()) {
    if (!value.is_number()) throw SpecParseError("params." + key, "expected a number");
    spec.params[key] = value.get<double>();
  }

  const json domain = require(doc, "domain");
  if (!domain.is_array() || domain.size() != 2 || !domain[0].is_number() || !domain[1].is_number()) {
    throw SpecParseError("domain", "expected [r_min, r_max]");
  }
  spec.domain = {domain[0].get<double>(), domain[1].get<double>()};

  const json n = require(doc, "n");
  if (!n.is_number_integer()) throw SpecParseError("n", "expected an integer");
  spec.n = n.get<int>();
  if (spec.n < 3) throw SpecParseError("n", "dimension must be at least 3");

  if (doc.contains("unit_speed")) {
    if (!doc["unit_speed"].is_boolean()) throw SpecParseError("unit_speed", "expected a boolean");
    spec.unit_speed = doc["unit_speed"].get<bool>();
  }
  return spec;
}

ProfileSpecDocument ProfileSpecDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("<file>", "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

ProfileSpecDocument ProfileSpecDocument::from_profile(const ProfileCurve& profile, int n) {
  ProfileSpecDocument spec;
  spec.family = std::string(to_string(profile.family()));
  spec.params = profile.params();
  spec.domain = profile.domain();
  spec.n = n;
  spec.unit_speed = profile.unit_speed();
  return spec;
}

std::string ProfileSpecDocument::dump(int indent) const {
  json doc;
  doc["family"] = family;
  doc["params"] = json::object();
  for (const auto& [key, value] : params) doc["params"][key] = value;
  doc["domain"] = {domain.lo, domain.hi};
  doc["n"] = n;
  doc["unit_speed"] = unit_speed;
  return doc.dump(indent);
}

ProfileCurve ProfileSpecDocument::build() const {
  ProfileFamily kind;
  try {
    kind = family_from_string(family);
  } catch (const DomainError& e) {
    throw SpecParseError("family", e.what());
  }
  ProfileCurve profile = [&] {
    try {
      return ProfileCurve::from_params(kind, params, domain);
    } catch (const DomainError& e) {
      throw SpecParseError("params", e.what());
    } catch (const SingularProfile& e) {
      throw SpecParseError("params", e.what());
    }
  }();
  if (unit_speed && !profile.unit_speed()) {
    throw SpecParseError("unit_speed", "document claims unit speed but the profile is not");
  }
  return profile;
}

bool ProfileSpecDocument::operator==(const ProfileSpecDocument& other) const {
  return family == other.family && params == other.params && domain.lo == other.domain.lo &&
         domain.hi == other.domain.hi && n == other.n && unit_speed == other.unit_speed;
}

}  // namespace rothyp
