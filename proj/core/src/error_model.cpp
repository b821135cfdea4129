#include "clusterforge/error_model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace clusterforge {

void EntanglerParams::check() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2))
    throw std::invalid_argument("theta must lie in [0, pi/2]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
}

double error_probability(const EntanglerParams& p) {
  p.check();
  const double sin_t = std::sin(p.theta);
  const double inner = -std::expm1(-0.5 * p.eta * p.gamma * p.gamma * p.theta * p.theta);
  return std::exp(-2.0 * inner * p.alpha * p.alpha * sin_t * sin_t);
}

RegimeReport regime_check(const EntanglerParams& p, double threshold) {
  p.check();
  RegimeReport r;
  r.alpha_sin_theta = p.alpha * std::sin(p.theta);
  r.eta_gamma2_theta2 = p.eta * p.gamma * p.gamma * p.theta * p.theta;
  r.deterministic = r.alpha_sin_theta >= threshold && r.eta_gamma2_theta2 >= threshold;
  return r;
}

double schedule_success(const EntanglerParams& p, const ResourceCount& rc) {
  const double pe = error_probability(p);
  return std::pow(1.0 - pe, static_cast<double>(rc.entangler_equiv));
}

std::vector<SweepRow> sweep(EntanglerParams base, std::string_view axis,
                            std::span<const double> values) {
  double EntanglerParams::* field = nullptr;
  if (axis == "alpha") field = &EntanglerParams::alpha;
  else if (axis == "gamma") field = &EntanglerParams::gamma;
  else if (axis == "theta") field = &EntanglerParams::theta;
  else if (axis == "eta") field = &EntanglerParams::eta;
  else throw std::invalid_argument("unknown sweep axis: " + std::string(axis));

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  ResourceCount headline;
  headline.entangler_equiv = 40;
  for (double v : values) {
    base.*field = v;
    SweepRow row;
    row.value = v;
    row.p_error = error_probability(base);
    row.success_n40 = schedule_success(base, headline);
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::string_view axis, std::span<const SweepRow> rows) {
  std::string out = "axis,value,p_error,success_n40\n";
  char buf[128];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.*s,%.12g,%.12g,%.12g\n",
                  static_cast<int>(axis.size()), axis.data(), r.value, r.p_error,
                  r.success_n40);
    out += buf;
  }
  return out;
}

}  // namespace clusterforge
