// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "icqkd/adversary.hpp"
#include "icqkd/optics.hpp"

namespace icqkd {

// Raised for parse failures and range violations; `key` names the offending
// config entry when one is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// How a party treats a round in which both detectors fired.
enum class DoubleClickPolicy { Discard, RandomAssign };

std::string to_string(DoubleClickPolicy policy);

// Full parameterization of one session. Angles are stored in radians; the
// config file and every other external surface speak degrees.
struct SessionConfig {
  double n_c = 0.1;           // mean photon number per mode, must be < 1
  std::uint64_t rounds = 0;   // pulses emitted
  std::uint64_t seed = 0;     // master seed; round i uses substream (seed, i)
  double theta1 = kTheta45;   // Alice's fixed analyzer angle
  optics::DetectorParams detector_alice;
  optics::DetectorParams detector_bob;
  adversary::ChannelParams channel;
  adversary::EveStrategy eve;
  bool alpha_eta_intact = true;  // phase-coding layer assumed unbroken
  double error_check_fraction = 0.0;
  DoubleClickPolicy double_click_policy = DoubleClickPolicy::Discard;
  std::optional<double> abort_threshold;  // nullopt = auto (honest rate + 3 sigma)

  // Diagnostic source imbalance. Not part of the config file format; set
  // programmatically for the n_x != n_y error analysis.
  std::optional<double> source_n_x;
  std::optional<double> source_n_y;
};

// Parses flat `key = value` text (dotted keys for nesting, '#' comments).
SessionConfig parse_config(std::string_view text);

SessionConfig load_config(const std::string& path);

// Range and consistency checks; throws ConfigError naming the key.
void validate(const SessionConfig& config);

// Normalized `key = value` dump (the same format parse_config accepts).
std::string to_text(const SessionConfig& config);

}  // namespace icqkd
