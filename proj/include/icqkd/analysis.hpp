// SPDX-License-Identifier: Apache-2.0
#pragma once

<string>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icqkd/config.hpp"
#include "icqkd/protocol.hpp"

namespace icqkd::analysis {

// Aggregate results of one session.
struct SessionStats {
  std::uint64_t rounds_total = 0;
  std::uint64_t coincident = 0;
  std::uint64_t sifted = 0;
  std::uint64_t disclosed = 0;   // coincident rounds spent on the error check
  std::uint64_t mismatches = 0;  // disagreements among sifted pairs
  std::optional<double> qber;    // mismatches / sifted
  std::optional<double> sift_rate;
  double raw_key_rate_per_round = 0.0;  // sifted bits / total rounds
  bool eve_detection = false;
  double pns_stolen_fraction = 0.0;   // stolen rounds / total rounds
  double eve_phase_id_rate = 0.0;     // rounds with correctly identified phase
};

// Order-independent reduction over rounds and sifted pairs; merging two
// accumulators equals accumulating the concatenation.
class StatsAccumulator {
 public:
  void add_round(const protocol::RoundRecord& record);
  void add_pair(const protocol::SiftedBitPair& pair);
  void merge(const StatsAccumulator& other);

  SessionStats finalize(const protocol::ErrorCheckResult& check) const;

 private:
  std::uint64_t rounds_ = 0;
  std::uint64_t coincident_ = 0;
  std::uint64_t disclosed_ = 0;
  std::uint64_t sifted_ = 0;
  std::uint64_t mismatches_ = 0;
  std::uint64_t stolen_ = 0;
  std::uint64_t phase_identified_ = 0;
};

SessionStats compute_stats(const std::vector<protocol::RoundRecord>& records,
                           const std::vector<protocol::SiftedBitPair>& sifted,
                           const protocol::ErrorCheckResult& check);

// ---- Closed forms used as oracles for the Monte-Carlo paths. ----

// Mean photon number left in the destructive port: (sqrt(n_x)-sqrt(n_y))^2/2.
// Zero iff the source is balanced.
double dark_port_residual_mean(double n_x, double n_y);

// Per-round probability of a click on the destructive port with ideal
// detectors: 1 - exp(-residual).
double wrong_port_click_prob(double n_x, double n_y);

// Probability that a valid detection at one party sits on the wrong port,
// given bright/dark port means and the party's detector.
double wrong_click_given_valid(double mu_bright, double mu_dark,
                               const optics::DetectorParams& det,
                               DoubleClickPolicy policy);

// Expected per-pair disagreement rate of an honest session (wrong-port
// clicks at either party; a flip at both parties cancels).
double expected_honest_error_rate(const SessionConfig& config);

// Closed-form QBER of a session with a source imbalance (n_x, n_y).
double expected_qber_source_imbalance(double n_x, double n_y,
                                      const SessionConfig& config);

// Simulated excess QBER of an imbalanced source over the balanced baseline
// with the same total intensity. `samples` rounds per session.
double mismatch_penalty(double n_x, double n_y, std::uint64_t samples,
                        std::uint64_t seed);

// ---- Parameter sweeps. ----

enum class SweepParameter { NC, Transmittance, DarkCountProb, Eve };

std::string to_string(SweepParameter parameter);
SweepParameter sweep_parameter_from_string(const std::string& name);

struct SweepPoint {
  std::string label;        // value as it appears in reports
  SessionStats stats;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepPoint> points;
};

// One full session per value, each with an independently derived seed.
// Numeric parameters take the values as numbers; Eve takes strategy names.
SweepResult sweep(const SessionConfig& base, SweepParameter parameter,
                  const std::vector<std::string>& values);

}  // namespace icqkd::analysis
