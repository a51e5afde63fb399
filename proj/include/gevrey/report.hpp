#ifndef GEVREY_REPORT_HPP
#define GEVREY_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gevrey/decay.hpp"
#include "gevrey/filter.hpp"

namespace gevrey {

struct CheckEntry {
  std::string name;
  double measured = 0.0;  // worst residual, or the probed quantity
  double tolerance = 0.0;
  std::optional<std::pair<double, double>> bracket;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  FilterConfig config;
  double eps = 0.0;
  double eta = 0.0;
  std::vector<CheckEntry> checks;
  nlohmann::json notes = nlohmann::json::object();  // empirical constants, not gating

  bool pass() const;
  /// Sorted keys; non-finite numbers become null with a companion "<key>_finite": false.
  nlohmann::json to_json() const;
};

/// Stores v under key, or null plus key_finite = false when v is not finite.
void put_number(nlohmann::json& obj, const std::string& key, double v);

nlohmann::json to_json(const FilterConfig& config);
nlohmann::json to_json(const DecayReport& report);

}  // namespace gevrey

#endif  // GEVREY_REPORT_HPP
