#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rothyp {

/// Multiplicative sign relating a printed closed form to its ground-truth value:
/// truth = value * printed. `value` is 0 unless the ratio is the same +-1 at every sample.
struct ConventionFlag {
  int value = 0;
  double reference_ratio = 0.0;
  /// Largest relative defect |truth - value * printed| / scale over all samples.
  double max_deviation = 0.0;
  bool constant = false;
  int samples = 0;

  /// "+1", "-1" or "mismatch".
  std::string label() const;
  /// The same flag written relative to the orientation sign: "eps" or "-eps".
  std::string label_in_epsilon(int epsilon) const;
};

/// Accumulates (truth, printed) pairs and decides whether they differ by a constant sign.
///
/// The first pair where both sides exceed `floor` in magnitude fixes the reference
/// ratio. Every later pair is checked against it, including pairs where only one
/// side is small, since such a pair is itself evidence of a non-constant factor.
class FlagMeter {
 public:
  explicit FlagMeter(double constancy_tolerance = 1e-8, double floor = 1e-8);

  void add(double truth, double printed);
  ConventionFlag result() const;

 private:
  double tolerance_;
  double floor_;
  double reference_ = 0.0;
  bool have_reference_ = false;
  double max_deviation_ = 0.0;
  int samples_ = 0;
  // Pairs seen before the reference was fixed are re-checked in result().
  std::vector<std::pair<double, double>> pending_;
};

}  // namespace rothyp
