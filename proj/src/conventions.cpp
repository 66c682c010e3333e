#include "rothyp/conventions.hpp"

#include <algorithm>
#include <cmath>

namespace rothyp {

std::string ConventionFlag::label() const {
  if (value == 1) return "+1";
  if (value == -1) return "-1";
  return "mismatch";
}

std::string ConventionFlag::label_in_epsilon(int epsilon) const {
  if (value == 0) return "mismatch";
  return value == epsilon ? "eps" : "-eps";
}

FlagMeter::FlagMeter(double constancy_tolerance, double floor)
    : tolerance_(constancy_tolerance), floor_(floor) {}

namespace {

double defect(double truth, double printed, double ratio, double floor) {
  const double scaled = ratio * printed;
  const double scale = std::max({std::abs(truth), std::abs(scaled), floor});
  return std::abs(truth - scaled) / scale;
}

}  // namespace

void FlagMeter::add(double truth, double printed) {
  ++samples_;
  if (!have_reference_) {
    if (std::abs(truth) > floor_ && std::abs(printed) > floor_) {
      reference_ = truth / printed;
      have_reference_ = true;
      for (const auto& [t, p] : pending_) max_deviation_ = std::max(max_deviation_, defect(t, p, reference_, floor_));
      pending_.clear();
    } else {
      pending_.emplace_back(truth, printed);
    }
    return;
  }
  max_deviation_ = std::max(max_deviation_, defect(truth, printed, reference_, floor_));
}

ConventionFlag FlagMeter::result() const {
  ConventionFlag flag;
  flag.samples = samples_;
  if (!have_reference_) {
    // Both sides vanish everywhere: any sign fits, report +1 with the largest gap seen.
    double gap = 0.0;
    for (const auto& [t, p] : pending_) gap = std::max(gap, std::abs(t - p));
    flag.value = 1;
    flag.reference_ratio = 1.0;
    flag.max_deviation = gap;
    flag.constant = gap <= tolerance_;
    return flag;
  }
  flag.reference_ratio = reference_;
  if (std::abs(reference_ - 1.0) <= tolerance_) {
    flag.value = 1;
  } else if (std::abs(reference_ + 1.0) <= tolerance_) {
    flag.value = -1;
  }
  flag.max_deviation = max_deviation_;
  if (max_deviation_ > tolerance_) flag.value = 0;
  flag.constant = flag.value != 0;
  return flag;
}

}  // namespace rothyp
