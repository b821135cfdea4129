#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterforge/schedule.hpp"

namespace clusterforge {

/// Physical knobs of the entangling operation. alpha is the coherent-beam
/// amplitude (not the qubit amplitude), gamma the probe amplitude used by the
/// number-resolving detection stage, theta the XPM phase shift, eta the
/// detector efficiency.
struct EntanglerParams {
  double alpha = 0.0;   // >= 0
  double gamma = 0.0;   // >= 0
  double theta = 0.0;   // [0, pi/2]
  double eta = 0.0;     // [0, 1]

  void check() const;
};

/// Per-operation error probability
///   exp{-2 (1 - e^{-eta gamma^2 theta^2 / 2}) alpha^2 sin^2 theta},
/// in (0, 1]; equals 1 exactly iff the exponent vanishes.
double error_probability(const EntanglerParams& p);

struct RegimeReport {
  double alpha_sin_theta = 0.0;
  double eta_gamma2_theta2 = 0.0;
  bool deterministic = false;  // both figures of merit >= threshold
};

RegimeReport regime_check(const EntanglerParams& p, double threshold = 10.0);

/// Independent-error estimate (1 - P_E)^entangler_equiv for a whole schedule.
double schedule_success(const EntanglerParams& p, const ResourceCount& rc);

struct SweepRow {
  double value = 0.0;
  double p_error = 0.0;
  double success_n40 = 0.0;  // success estimate at 40 entangler-equivalents
};

/// One row per value of the named axis ("alpha", "gamma", "theta", "eta").
std::vector<SweepRow> sweep(EntanglerParams base, std::string_view axis,
                            std::span<const double> values);

/// CSV with header `axis,value,p_error,success_n40`, 12 significant digits,
/// newline-terminated rows.
std::string sweep_csv(std::string_view axis, std::span<const SweepRow> rows);

}  // namespace clusterforge
