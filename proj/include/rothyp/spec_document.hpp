#pragma once

#include <string>
#include <string_view>

#include "rothyp/profile.hpp"

namespace rothyp {

/// JSON profile specification:
///   {"family": "circle", "params": {"rho": 1.0, "phi0": 0.0}, "domain": [0.1, 3.0],
///    "n": 4, "unit_speed": true}
/// Unknown keys are rejected; parse failures throw SpecParseError naming the field.
struct ProfileSpecDocument {
  std::string family;
  ParamMap params;
  Interval domain;
  int n = 3;
  bool unit_speed = true;

  static ProfileSpecDocument parse(std::string_view text);
  static ProfileSpecDocument load(const std::string& path);
  static ProfileSpecDocument from_profile(const ProfileCurve& profile, int n);

  std::string dump(int indent = 2) const;
  /// Builds the profile; a document claiming unit speed for a profile that is not
  /// unit speed is rejected on the "unit_speed" field.
  ProfileCurve build() const;

  bool operator==(const ProfileSpecDocument& other) const;
};

}  // namespace rothyp
