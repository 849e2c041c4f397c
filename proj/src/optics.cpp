// SPDX-License-Identifier: Apache-2.0
#include "icqkd/optics.hpp"

#include <algorithm>
#include <cmath>

namespace icqkd::optics {

int outer_sign(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
    case CorrelationId::C3:
      return -1;
    case CorrelationId::C2:
    case CorrelationId::C4:
      return +1;
  }
  return 0;  // unreachable
}

int phase_sign(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
    case CorrelationId::C4:
      return +1;
    case CorrelationId::C2:
    case CorrelationId::C3:
      return -1;
  }
  return 0;  // unreachable
}

std::string to_string(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
      return "C1";
    case CorrelationId::C2:
      return "C2";
    case CorrelationId::C3:
      return "C3";
    case CorrelationId::C4:
      return "C4";
  }
  return "?";
}

std::string to_string(const DetectionEvent& ev) {
  if (ev.double_click()) return "both";
  if (ev.plus_click) return "plus";
  if (ev.minus_click) return "minus";
  return "none";
}

double alice_interference_term(CorrelationId c, double theta1, double phi_m) {
  return outer_sign(c) * std::cos(2.0 * theta1 + phase_sign(c) * phi_m);
}

double bob_interference_term(double theta2, double phi_m) {
  return std::cos(2.0 * theta2 + phi_m);
}

PortMeans port_means(const PulsePair& pulse, double term) {
  const double total = pulse.n_x + pulse.n_y;
  // AM-GM bounds the cross term by total/2; the clamp also absorbs the last
  // ulp of sqrt rounding so that the dark port is exactly zero at full
  // interference with a balanced source.
  const double cross =
      std::min(std::sqrt(pulse.n_x * pulse.n_y), 0.5 * total);
  const double hi = 0.5 * (total + 2.0 * cross * std::abs(term));
  // hi lies in [total/2, total], so the subtraction is exact (Sterbenz) and
  // the two ports sum to exactly n_x + n_y.
  const double lo = total - hi;
  if (term >= 0.0) return PortMeans{hi, lo};
  return PortMeans{lo, hi};
}

PortCounts sample_port_photons(const PortMeans& means, SplitMix64& rng) {
  PortCounts counts;
  counts.plus = rng.poisson(means.plus);
  counts.minus = rng.poisson(means.minus);
  return counts;
}

DetectionEvent detect(const PortCounts& counts, const DetectorParams& det,
                      SplitMix64& rng) {
  DetectionEvent ev;
  ev.plus_click = rng.thin(counts.plus, det.efficiency) > 0;
  if (rng.bernoulli(det.dark_count_prob)) ev.plus_click = true;
  ev.minus_click = rng.thin(counts.minus, det.efficiency) > 0;
  if (rng.bernoulli(det.dark_count_prob)) ev.minus_click = true;
  return ev;
}

DetectionEvent sample_detection(double mu_plus, double mu_minus,
                                const DetectorParams& det, SplitMix64& rng) {
  return detect(sample_port_photons(PortMeans{mu_plus, mu_minus}, rng), det,
                rng);
}

double two_photon_expectation(const PulsePair& pulse, double theta) {
  const double nx = pulse.n_x;
  const double ny = pulse.n_y;
  const double cross = std::sqrt(nx * ny);
  const double value =
      nx * nx + ny * ny + 2.0 * nx * ny +
      2.0 * (nx + ny) * cross *
          std::cos(2.0 * theta + effective_phase(pulse));
  return std::max(value, 0.0);
}

}  // namespace icqkd::optics
