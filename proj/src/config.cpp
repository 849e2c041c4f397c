// SPDX-License-Identifier: Apache-2.0
#include "icqkd/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "icqkd/angles.hpp"

namespace icqkd {

namespace {

std::string trim(std::string_view s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key, "expected true/false, got '" + value + "'");
}

adversary::EveKind parse_eve_kind(const std::string& key, const std::string& value) {
  if (value == "none") return adversary::EveKind::None;
  if (value == "intercept_resend") return adversary::EveKind::InterceptResend;
  if (value == "pns") return adversary::EveKind::Pns;
  throw ConfigError(key, "expected none|intercept_resend|pns, got '" + value + "'");
}

adversary::ResendPolicy parse_resend_policy(const std::string& key,
                                            const std::string& value) {
  if (value == "resend_on_click_else_vacuum")
    return adversary::ResendPolicy::ResendOnClickElseVacuum;
  if (value == "resend_always_guess_on_vacuum")
    return adversary::ResendPolicy::ResendAlwaysGuessOnVacuum;
  throw ConfigError(key,
                    "expected resend_on_click_else_vacuum|"
                    "resend_always_guess_on_vacuum, got '" + value + "'");
}

DoubleClickPolicy parse_dc_policy(const std::string& key, const std::string& value) {
  if (value == "discard") return DoubleClickPolicy::Discard;
  if (value == "random_assign") return DoubleClickPolicy::RandomAssign;
  throw ConfigError(key, "expected discard|random_assign, got '" + value + "'");
}

void check_unit_interval(const std::string& key, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ConfigError(key, "must lie in [0, 1], got " + std::to_string(v));
  }
}

}  // namespace

std::string to_string(DoubleClickPolicy policy) {
  return policy == DoubleClickPolicy::Discard ? "discard" : "random_assign";
}

SessionConfig parse_config(std::string_view text) {
  SessionConfig config;
  bool have_n_c = false;
  bool have_rounds = false;

  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) +
                                ": expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(key, "line " + std::to_string(lineno) + ": empty key or value");
    }

    if (key == "n_c") {
      config.n_c = parse_double(key, value);
      have_n_c = true;
    } else if (key == "rounds") {
      config.rounds = parse_u64(key, value);
      have_rounds = true;
    } else if (key == "seed") {
      config.seed = parse_u64(key, value);
    } else if (key == "theta1_deg") {
      config.theta1 = deg2rad(parse_double(key, value));
    } else if (key == "detector.alice.efficiency") {
      config.detector_alice.efficiency = parse_double(key, value);
    } else if (key == "detector.alice.dark_count_prob") {
      config.detector_alice.dark_count_prob = parse_double(key, value);
    } else if (key == "detector.bob.efficiency") {
      config.detector_bob.efficiency = parse_double(key, value);
    } else if (key == "detector.bob.dark_count_prob") {
      config.detector_bob.dark_count_prob = parse_double(key, value);
    } else if (key == "channel.transmittance_alice") {
      config.channel.transmittance_alice = parse_double(key, value);
    } else if (key == "channel.transmittance_bob") {
      config.channel.transmittance_bob = parse_double(key, value);
    } else if (key == "eve.strategy") {
      config.eve.kind = parse_eve_kind(key, value);
    } else if (key == "eve.theta_e_deg") {
      config.eve.theta_e = deg2rad(parse_double(key, value));
    } else if (key == "eve.resend_policy") {
      config.eve.resend_policy = parse_resend_policy(key, value);
    } else if (key == "eve.attack_alice_beam") {
      config.eve.attack_alice_beam = parse_bool(key, value);
    } else if (key == "alpha_eta_intact") {
      config.alpha_eta_intact = parse_bool(key, value);
    } else if (key == "error_check_fraction") {
      config.error_check_fraction = parse_double(key, value);
    } else if (key == "double_click_policy") {
      config.double_click_policy = parse_dc_policy(key, value);
    } else if (key == "abort_threshold") {
      if (value == "auto") {
        config.abort_threshold.reset();
      } else {
        config.abort_threshold = parse_double(key, value);
      }
    } else {
      throw ConfigError(key, "unknown config key");
    }
  }

  if (!have_n_c) throw ConfigError("n_c", "required key is missing");
  if (!have_rounds) throw ConfigError("rounds", "required key is missing");
  validate(config);
  return config;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate(const SessionConfig& config) {
  if (!(config.n_c > 0.0 && config.n_c < 1.0)) {
    throw ConfigError(
        "n_c", "the protocol requires a mean photon number 0 < n_c < 1 per "
               "mode, got " + std::to_string(config.n_c));
  }
  if (config.rounds == 0) throw ConfigError("rounds", "must be positive");
  check_unit_interval("detector.alice.efficiency", config.detector_alice.efficiency);
  check_unit_interval("detector.alice.dark_count_prob",
                      config.detector_alice.dark_count_prob);
  check_unit_interval("detector.bob.efficiency", config.detector_bob.efficiency);
  check_unit_interval("detector.bob.dark_count_prob",
                      config.detector_bob.dark_count_prob);
  check_unit_interval("channel.transmittance_alice",
                      config.channel.transmittance_alice);
  check_unit_interval("channel.transmittance_bob", config.channel.transmittance_bob);
  check_unit_interval("error_check_fraction", config.error_check_fraction);
  if (config.abort_threshold) {
    check_unit_interval("abort_threshold", *config.abort_threshold);
  }
  if (!same_angle(config.eve.theta_e, kTheta45) &&
      !same_angle(config.eve.theta_e, kThetaMinus45)) {
    throw ConfigError("eve.theta_e_deg", "must be +45 or -45");
  }
  if (config.eve.kind == adversary::EveKind::InterceptResend &&
      config.alpha_eta_intact) {
    throw ConfigError("eve.strategy",
                      "intercept_resend requires alpha_eta_intact = false; "
                      "the phase-coding layer blocks measurement attacks "
                      "while intact");
  }
  if (config.source_n_x && !(*config.source_n_x > 0.0 && *config.source_n_x < 1.0)) {
    throw ConfigError("source_n_x", "diagnostic mode mean must lie in (0, 1)");
  }
  if (config.source_n_y && !(*config.source_n_y > 0.0 && *config.source_n_y < 1.0)) {
    throw ConfigError("source_n_y", "diagnostic mode mean must lie in (0, 1)");
  }
}

std::string to_text(const SessionConfig& config) {
  std::ostringstream out;
  out.precision(17);
  out << "n_c = " << config.n_c << "\n";
  out << "rounds = " << config.rounds << "\n";
  out << "seed = " << config.seed << "\n";
  out << "theta1_deg = " << rad2deg(config.theta1) << "\n";
  out << "detector.alice.efficiency = " << config.detector_alice.efficiency << "\n";
  out << "detector.alice.dark_count_prob = "
      << config.detector_alice.dark_count_prob << "\n";
  out << "detector.bob.efficiency = " << config.detector_bob.efficiency << "\n";
  out << "detector.bob.dark_count_prob = "
      << config.detector_bob.dark_count_prob << "\n";
  out << "channel.transmittance_alice = " << config.channel.transmittance_alice
      << "\n";
  out << "channel.transmittance_bob = " << config.channel.transmittance_bob << "\n";
  out << "eve.strategy = " << adversary::to_string(config.eve.kind) << "\n";
  out << "eve.theta_e_deg = " << rad2deg(config.eve.theta_e) << "\n";
  out << "eve.resend_policy = " << adversary::to_string(config.eve.resend_policy)
      << "\n";
  out << "eve.attack_alice_beam = "
      << (config.eve.attack_alice_beam ? "true" : "false") << "\n";
  out << "alpha_eta_intact = " << (config.alpha_eta_intact ? "true" : "false")
      << "\n";
  out << "error_check_fraction = " << config.error_check_fraction << "\n";
  out << "double_click_policy = " << to_string(config.double_click_policy) << "\n";
  if (config.abort_threshold) {
    out << "abort_threshold = " << *config.abort_threshold << "\n";
  } else {
    out << "abort_threshold = auto\n";
  }
  return out.str();
}

}  // namespace icqkd
