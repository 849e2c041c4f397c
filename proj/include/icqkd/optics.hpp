// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "icqkd/rng.hpp"

namespace icqkd::optics {

// The optical signal of one round: two co-polarized weak-coherent modes with
// the modulated phase riding on the vertical mode. An honest source emits
// n_x = n_y = n_c < 1 and keeps the static arms aligned (phi_a == phi_b);
// the type deliberately admits violations of both so that source-imbalance
// and adversary transforms are expressible.
struct PulsePair {
  double n_x = 0.0;    // mean photon number, horizontal mode
  double n_y = 0.0;    // mean photon number, vertical mode
  double phi_m = 0.0;  // modulated phase [rad], +-pi/2 from an honest source
  double phi_a = 0.0;  // source-arm static phase [rad]
  double phi_b = 0.0;  // receiver-arm static phase [rad]
};

// Phase that enters the interference term. Honest alignment leaves phi_m.
inline double effective_phase(const PulsePair& pulse) {
  return pulse.phi_m + pulse.phi_a - pulse.phi_b;
}

// The four shared correlation functions: the protocol's code space.
enum class CorrelationId { C1, C2, C3, C4 };

// Overall sign of Alice's interference term.
int outer_sign(CorrelationId c);
// Sign on phi_m inside Alice's cosine.
int phase_sign(CorrelationId c);

std::string to_string(CorrelationId c);

enum class Port { Plus, Minus };

// Which detectors fired at one party in one round. A detection is valid for
// protocol purposes only when exactly one port clicked.
struct DetectionEvent {
  bool plus_click = false;
  bool minus_click = false;

  bool valid() const { return plus_click != minus_click; }
  bool vacuum() const { return !plus_click && !minus_click; }
  bool double_click() const { return plus_click && minus_click; }
};

std::string to_string(const DetectionEvent& ev);

struct DetectorParams {
  double efficiency = 1.0;       // per-photon detection probability
  double dark_count_prob = 0.0;  // spurious click probability per round
};

struct PortMeans {
  double plus = 0.0;
  double minus = 0.0;
};

struct PortCounts {
  unsigned plus = 0;
  unsigned minus = 0;
};

// Alice's interference term for correlation function c:
// outer_sign(c) * cos(2*theta1 + phase_sign(c)*phi_m). In [-1, +1].
double alice_interference_term(CorrelationId c, double theta1, double phi_m);

// Bob's term is cos(2*theta2 + phi_m) regardless of Alice's choice.
double bob_interference_term(double theta2, double phi_m);

// Mean photon numbers behind the analyzer ports:
//   mu_plus  = (n_x + n_y + 2*sqrt(n_x n_y)*term) / 2
//   mu_minus = (n_x + n_y - 2*sqrt(n_x n_y)*term) / 2
// Both are non-negative for |term| <= 1 and their sum is exactly n_x + n_y.
PortMeans port_means(const PulsePair& pulse, double term);

// Poisson photon numbers at the two ports (pre-detector).
PortCounts sample_port_photons(const PortMeans& means, SplitMix64& rng);

// Detector response: each photon survives with probability `efficiency`,
// and each port independently fires a dark count.
DetectionEvent detect(const PortCounts& counts, const DetectorParams& det,
                      SplitMix64& rng);

DetectionEvent sample_detection(double mu_plus, double mu_minus,
                                const DetectorParams& det, SplitMix64& rng);

// Two-photon contribution at the detection expectation level:
//   n_x^2 + n_y^2 + 2 n_x n_y + 2 (n_x + n_y) sqrt(n_x n_y) cos(2 theta + phi)
// Vanishes at the destructive phase iff n_x == n_y, which is why a source
// imbalance shows up as excess errors.
double two_photon_expectation(const PulsePair& pulse, double theta);

}  // namespace icqkd::optics
