#include "gevrey/report.hpp"

#include <algorithm>
#include <cmath>

namespace gevrey {

void put_number(nlohmann::json& obj, const std::string& key, double v) {
  if (std::isfinite(v)) {
    obj[key] = v;
  } else {
    obj[key] = nullptr;
    obj[key + "_finite"] = false;
  }
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

nlohmann::json to_json(const FilterConfig& config) {
  nlohmann::json j;
  put_number(j, "sigma", config.sigma);
  put_number(j, "d", config.d);
  put_number(j, "quad_tol", config.quad_tol);
  j["table_n"] = config.table_n;
  return j;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["config"] = gevrey::to_json(config);
  put_number(j["config"], "eps", eps);
  put_number(j["config"], "eta", eta);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    put_number(e, "measured", c.measured);
    put_number(e, "tolerance", c.tolerance);
    if (c.bracket) {
      nlohmann::json b = nlohmann::json::object();
      put_number(b, "low", c.bracket->first);
      put_number(b, "high", c.bracket->second);
      e["bracket"] = b;
    }
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(e);
  }
  j["checks"] = list;
  j["notes"] = notes;
  j["pass"] = pass();
  return j;
}

nlohmann::json to_json(const DecayReport& r) {
  nlohmann::json j;
  put_number(j, "sigma", r.sigma);
  put_number(j, "eta", r.eta);
  put_number(j, "sigma_eta", r.sigma_eta);
  put_number(j, "eps", r.eps);
  put_number(j, "envelope_eps", r.envelope_eps);
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  put_number(j, "fitted_rho", r.fitted_rho);
  put_number(j, "fitted_C", r.fitted_C);
  put_number(j, "r_upper_min", r.r_upper_min);
  put_number(j, "r_upper_max", r.r_upper_max);
  put_number(j, "bracket_ratio", r.bracket_ratio);
  put_number(j, "bracket_limit", kBracketLimit);
  put_number(j, "lower_limit", r.lower_limit);
  put_number(j, "lower_slack", kLowerSlack);
  j["all_nonzero"] = r.all_nonzero;
  j["bracket_ok"] = r.bracket_ok;
  j["lower_ok"] = r.lower_ok;
  j["pass"] = r.pass;
  if (r.zero_at_n) j["zero_at_n"] = *r.zero_at_n;
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) {
    nlohmann::json e;
    e["n"] = s.n;
    put_number(e, "xi", s.xi);
    put_number(e, "log_abs_phi_hat", s.log_abs);
    e["zero"] = s.zero;
    put_number(e, "r_upper", s.r_upper);
    put_number(e, "r_lower", s.r_lower);
    samples.push_back(e);
  }
  j["samples"] = samples;
  return j;
}

}  // namespace gevrey
