#include "rothyp/profile.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "rothyp/errors.hpp"

namespace rothyp {

namespace {

constexpr double kUnitSpeedTolerance = 1e-12;
// Panels are short enough that one 61-point Kronrod rule resolves R to machine precision.
constexpr double kMaxPanelPhase = 0.25;
constexpr int kMaxSeriesTerms = 10;

struct FamilyName {
  ProfileFamily family;
  std::string_view name;
};

constexpr std::array<FamilyName, 7> kFamilyNames{{
    {ProfileFamily::Line, "line"},
    {ProfileFamily::Circle, "circle"},
    {ProfileFamily::Cylinder, "cylinder"},
    {ProfileFamily::Plane, "plane"},
    {ProfileFamily::Cone, "cone"},
    {ProfileFamily::TurningAngle, "turning_angle"},
    {ProfileFamily::CatenaryLike, "catenary_like"},
}};

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(ProfileFamily family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

ProfileFamily family_from_string(std::string_view name) {
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) return entry.family;
  }
  throw DomainError("unknown profile family '" + std::string(name) + "'");
}

std::vector<double> Interval::interior_samples(int count, double margin) const {
  std::vector<double> out;
  if (count <= 0) return out;
  const double a = lo + margin * width();
  const double b = hi - margin * width();
  if (count == 1) {
    out.push_back(0.5 * (a + b));
    return out;
  }
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1));
  return out;
}

double TurningAngleJet::sinR() const { return std::sin(R); }
double TurningAngleJet::cosR() const { return std::cos(R); }

struct ProfileCurve::Impl {
  ProfileFamily family = ProfileFamily::Line;
  ParamMap params;
  Interval domain;
  bool unit_speed = false;

  // Turning-angle representation.
  std::vector<double> poly;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
  double w = 1.0;
  double r0 = 0.0;

  double p(const char* key) const { return params.at(key); }

  /// R, R', R'', R''' at t = r - r0.
  template <class T>
  std::array<T, 4> angle(T t) const {
    std::array<T, 4> out{};
    // Horner with Taylor coefficients: out[m] accumulates P^(m)(t) / m!.
    const int deg = static_cast<int>(poly.size()) - 1;
    for (int k = deg; k >= 0; --k) {
      out[3] = out[3] * t + out[2];
      out[2] = out[2] * t + out[1];
      out[1] = out[1] * t + out[0];
      out[0] = out[0] * t + static_cast<T>(poly[static_cast<std::size_t>(k)]);
    }
    out[2] *= 2;
    out[3] *= 6;
    const std::size_t harmonics = std::max(cos_coeffs.size(), sin_coeffs.size());
    for (std::size_t j = 0; j < harmonics; ++j) {
      const T omega = static_cast<T>(w) * static_cast<T>(j + 1);
      const T a = j < cos_coeffs.size() ? static_cast<T>(cos_coeffs[j]) : T(0);
      const T b = j < sin_coeffs.size() ? static_cast<T>(sin_coeffs[j]) : T(0);
      const T c = std::cos(omega * t);
      const T s = std::sin(omega * t);
      out[0] += a * c + b * s;
      out[1] += omega * (-a * s + b * c);
      out[2] += omega * omega * (-a * c - b * s);
      out[3] += omega * omega * omega * (a * s - b * c);
    }
    return out;
  }

  /// Rough bound on how fast R turns per unit t, which sets the panel width.
  double angular_rate() const {
    double rate = 1.0;
    for (std::size_t k = 1; k < poly.size(); ++k) {
      rate = std::max(rate, std::abs(poly[k]) * static_cast<double>(k));
    }
    const std::size_t harmonics = std::max(cos_coeffs.size(), sin_coeffs.size());
    return std::max(rate, std::abs(w) * static_cast<double>(harmonics));
  }

  // Composite fixed-order rule. The adaptive driver's error estimate stalls near 1e-11
  // on short intervals and then recurses to full depth, so it is not used here.
  template <class T>
  T integrate_from_anchor(T r, bool use_cos) const {
    const T a = static_cast<T>(r0);
    if (r == a) return T(0);
    auto integrand = [&](T x) {
      const T R = angle(x - a)[0];
      return use_cos ? std::cos(R) : std::sin(R);
    };
    const T lo = std::min(a, r);
    const T hi = std::max(a, r);
    const double phase = static_cast<double>(hi - lo) * angular_rate();
    const int panels = std::max(1, static_cast<int>(std::ceil(phase / kMaxPanelPhase)));
    const T width = (hi - lo) / static_cast<T>(panels);
    T value(0);
    for (int i = 0; i < panels; ++i) {
      const T x0 = lo + width * static_cast<T>(i);
      const T x1 = i + 1 == panels ? hi : x0 + width;
      value += boost::math::quadrature::gauss_kronrod<T, 61>::integrate(integrand, x0, x1, 0);
    }
    return r > a ? value : -value;
  }

  template <class T>
  ProfileJet<T> evaluate(T r) const {
    ProfileJet<T> j;
    switch (family) {
      case ProfileFamily::Line: {
        const T df = static_cast<T>(p("df"));
        const T dphi = static_cast<T>(p("dphi"));
        j.f = static_cast<T>(p("f0")) + df * r;
        j.df = df;
        j.phi = static_cast<T>(p("phi0")) + dphi * r;
        j.dphi = dphi;
        break;
      }
      case ProfileFamily::Circle: {
        const T rho = static_cast<T>(p("rho"));
        const T t = r / rho;
        const T s = std::sin(t);
        const T c = std::cos(t);
        j.f = rho * s;
        j.df = c;
        j.d2f = -s / rho;
        j.d3f = -c / (rho * rho);
        j.phi = static_cast<T>(p("phi0")) - rho * c;
        j.dphi = s;
        j.d2phi = c / rho;
        j.d3phi = -s / (rho * rho);
        break;
      }
      case ProfileFamily::Cylinder:
        j.f = static_cast<T>(p("c"));
        j.phi = static_cast<T>(p("phi0")) + r;
        j.dphi = T(1);
        break;
      case ProfileFamily::Plane:
        j.f = static_cast<T>(p("f0")) + r;
        j.df = T(1);
        j.phi = static_cast<T>(p("c"));
        break;
      case ProfileFamily::Cone: {
        const T alpha = static_cast<T>(p("alpha"));
        j.f = static_cast<T>(p("f0")) + r * std::cos(alpha);
        j.df = std::cos(alpha);
        j.phi = static_cast<T>(p("phi0")) + r * std::sin(alpha);
        j.dphi = std::sin(alpha);
        break;
      }
      case ProfileFamily::TurningAngle: {
        const auto R = angle(r - static_cast<T>(r0));
        const T c = std::cos(R[0]);
        const T s = std::sin(R[0]);
        j.f = static_cast<T>(p("f0")) + integrate_from_anchor(r, true);
        j.df = c;
        j.d2f = -s * R[1];
        j.d3f = -c * R[1] * R[1] - s * R[2];
        j.phi = static_cast<T>(p("phi0")) + integrate_from_anchor(r, false);
        j.dphi = s;
        j.d2phi = c * R[1];
        j.d3phi = -s * R[1] * R[1] + c * R[2];
        break;
      }
      case ProfileFamily::CatenaryLike: {
        const T a = static_cast<T>(p("a"));
        const T q = std::sqrt(a * a + r * r);
        const T q3 = q * q * q;
        const T q5 = q3 * q * q;
        j.f = q;
        j.df = r / q;
        j.d2f = a * a / q3;
        j.d3f = -3 * a * a * r / q5;
        j.phi = static_cast<T>(p("phi0")) + a * std::asinh(r / a);
        j.dphi = a / q;
        j.d2phi = -a * r / q3;
        j.d3phi = a * (2 * r * r - a * a) / q5;
        break;
      }
    }
    return j;
  }

  void validate() {
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
      throw DomainError("profile domain must be a finite interval with r_min < r_max");
    }
    for (double r : domain.interior_samples(129, 1e-3)) {
      const auto j = evaluate(r);
      if (!(j.f > 0.0)) {
        throw DomainError(std::string(to_string(family)) + " profile has f <= 0 at r = " +
                          describe(r));
      }
      if (!(j.speed_squared() > 0.0)) {
        throw SingularProfile(std::string(to_string(family)) +
                              " profile is not regular at r = " + describe(r));
      }
      if (unit_speed && std::abs(j.speed_squared() - 1.0) > kUnitSpeedTolerance) {
        throw DomainError("profile flagged unit speed but |f'^2 + phi'^2 - 1| = " +
                          describe(std::abs(j.speed_squared() - 1.0)));
      }
    }
  }
};

ProfileCurve::ProfileCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ProfileCurve ProfileCurve::line(double f0, double df, double phi0, double dphi, Interval domain) {
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::Line;
  impl->params = {{"f0", f0}, {"df", df}, {"phi0", phi0}, {"dphi", dphi}};
  impl->domain = domain;
  impl->unit_speed = std::abs(df * df + dphi * dphi - 1.0) < kUnitSpeedTolerance;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::circle(double rho, Interval domain, double phi0) {
  if (!(rho > 0.0)) throw DomainError("circle radius must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::Circle;
  impl->params = {{"rho", rho}, {"phi0", phi0}};
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::cylinder(double c, Interval domain, double phi0) {
  if (!(c > 0.0)) throw DomainError("cylinder radius must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::Cylinder;
  impl->params = {{"c", c}, {"phi0", phi0}};
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::plane(double c, Interval domain, double f0) {
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::Plane;
  impl->params = {{"c", c}, {"f0", f0}};
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::cone(double alpha, double f0, Interval domain, double phi0) {
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::Cone;
  impl->params = {{"alpha", alpha}, {"f0", f0}, {"phi0", phi0}};
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::turning_angle(std::vector<double> poly, std::vector<double> cos_coeffs,
                                         std::vector<double> sin_coeffs, double w, double r0,
                                         double f0, double phi0, Interval domain) {
  if (poly.size() > kMaxSeriesTerms || cos_coeffs.size() + 1 > kMaxSeriesTerms ||
      sin_coeffs.size() + 1 > kMaxSeriesTerms) {
    throw DomainError("turning-angle series limited to c0..c9, a1..a9, b1..b9");
  }
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::TurningAngle;
  impl->params = {{"r0", r0}, {"f0", f0}, {"phi0", phi0}, {"w", w}};
  for (std::size_t k = 0; k < poly.size(); ++k) impl->params["c" + std::to_string(k)] = poly[k];
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
    impl->params["a" + std::to_string(k + 1)] = cos_coeffs[k];
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
    impl->params["b" + std::to_string(k + 1)] = sin_coeffs[k];
  impl->poly = std::move(poly);
  impl->cos_coeffs = std::move(cos_coeffs);
  impl->sin_coeffs = std::move(sin_coeffs);
  impl->w = w;
  impl->r0 = r0;
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

ProfileCurve ProfileCurve::catenary_like(double a, Interval domain, double phi0) {
  if (!(a > 0.0)) throw DomainError("catenary neck radius must be positive");
  auto impl = std::make_shared<Impl>();
  impl->family = ProfileFamily::CatenaryLike;
  impl->params = {{"a", a}, {"phi0", phi0}};
  impl->domain = domain;
  impl->unit_speed = true;
  impl->validate();
  return ProfileCurve(std::move(impl));
}

std::vector<std::string> ProfileCurve::parameter_names(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Line:
      return {"f0", "df", "phi0", "dphi"};
    case ProfileFamily::Circle:
      return {"rho", "phi0"};
    case ProfileFamily::Cylinder:
      return {"c", "phi0"};
    case ProfileFamily::Plane:
      return {"c", "f0"};
    case ProfileFamily::Cone:
      return {"alpha", "f0", "phi0"};
    case ProfileFamily::TurningAngle: {
      std::vector<std::string> names{"r0", "f0", "phi0", "w"};
      for (int k = 0; k < kMaxSeriesTerms; ++k) names.push_back("c" + std::to_string(k));
      for (int k = 1; k < kMaxSeriesTerms; ++k) names.push_back("a" + std::to_string(k));
      for (int k = 1; k < kMaxSeriesTerms; ++k) names.push_back("b" + std::to_string(k));
      return names;
    }
    case ProfileFamily::CatenaryLike:
      return {"a", "phi0"};
  }
  return {};
}

ProfileCurve ProfileCurve::from_params(ProfileFamily family, const ParamMap& params,
                                       Interval domain) {
  const auto allowed = parameter_names(family);
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw DomainError("unknown parameter '" + key + "' for family " +
                        std::string(to_string(family)));
    }
    if (!std::isfinite(value)) throw DomainError("parameter '" + key + "' is not finite");
  }
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  auto need = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw DomainError("missing parameter '" + key + "' for family " +
                        std::string(to_string(family)));
    }
    return it->second;
  };

  switch (family) {
    case ProfileFamily::Line:
      return line(get("f0", 0.0), need("df"), get("phi0", 0.0), need("dphi"), domain);
    case ProfileFamily::Circle:
      return circle(need("rho"), domain, get("phi0", 0.0));
    case ProfileFamily::Cylinder:
      return cylinder(need("c"), domain, get("phi0", 0.0));
    case ProfileFamily::Plane:
      return plane(get("c", 0.0), domain, get("f0", 0.0));
    case ProfileFamily::Cone:
      return cone(need("alpha"), get("f0", 0.0), domain, get("phi0", 0.0));
    case ProfileFamily::TurningAngle: {
      auto collect = [&](char prefix, int first) {
        std::vector<double> out;
        int last = -1;
        for (int k = first; k < kMaxSeriesTerms; ++k) {
          if (params.count(std::string(1, prefix) + std::to_string(k))) last = k;
        }
        for (int k = first; k <= last; ++k) out.push_back(get(std::string(1, prefix) + std::to_string(k), 0.0));
        return out;
      };
      return turning_angle(collect('c', 0), collect('a', 1), collect('b', 1), get("w", 1.0),
                           get("r0", domain.lo), need("f0"), get("phi0", 0.0), domain);
    }
    case ProfileFamily::CatenaryLike:
      return catenary_like(need("a"), domain, get("phi0", 0.0));
  }
  throw DomainError("unhandled profile family");
}

ProfileFamily ProfileCurve::family() const { return impl_->family; }
const ParamMap& ProfileCurve::params() const { return impl_->params; }
Interval ProfileCurve::domain() const { return impl_->domain; }
bool ProfileCurve::unit_speed() const { return impl_->unit_speed; }

ProfileJet<double> ProfileCurve::jet(double r) const {
  if (!impl_->domain.contains(r)) {
    throw DomainError("r = " + describe(r) + " outside profile domain (" +
                      describe(impl_->domain.lo) + ", " + describe(impl_->domain.hi) + ")");
  }
  return impl_->evaluate(r);
}

ProfileJet<long double> ProfileCurve::jet_extended(long double r) const {
  if (!(r > impl_->domain.lo && r < impl_->domain.hi)) {
    throw DomainError("r = " + describe(static_cast<double>(r)) + " outside profile domain");
  }
  return impl_->evaluate(r);
}

TurningAngleJet ProfileCurve::turning(double r) const {
  if (!impl_->unit_speed) {
    throw ConventionError("turning-angle data requested for a non-unit-speed " +
                          std::string(to_string(impl_->family)) + " profile");
  }
  const auto j = jet(r);
  TurningAngleJet t;
  if (impl_->family == ProfileFamily::TurningAngle) {
    const auto R = impl_->angle(r - impl_->r0);
    t.R = R[0];
    t.dR = R[1];
    t.d2R = R[2];
  } else {
    t.R = std::atan2(j.dphi, j.df);
    t.dR = j.df * j.d2phi - j.d2f * j.dphi;
    t.d2R = j.df * j.d3phi - j.d3f * j.dphi;
  }
  t.f = j.f;
  return t;
}

}  // namespace rothyp
