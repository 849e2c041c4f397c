// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "icqkd/angles.hpp"
#include "icqkd/optics.hpp"
#include "icqkd/rng.hpp"

namespace icqkd::adversary {

enum class Party { Alice, Bob };

// Lossy fibers between the mid-point source and each party, applied as
// multiplicative thinning of the mode means.
struct ChannelParams {
  double transmittance_alice = 1.0;
  double transmittance_bob = 1.0;
};

enum class EveKind { None, InterceptResend, Pns };

// What Eve does when her intercept measurement gave no usable click.
enum class ResendPolicy { ResendOnClickElseVacuum, ResendAlwaysGuessOnVacuum };

struct EveStrategy {
  EveKind kind = EveKind::None;
  double theta_e = kTheta45;  // intercept measurement angle (+-45 deg)
  ResendPolicy resend_policy = ResendPolicy::ResendOnClickElseVacuum;
  bool attack_alice_beam = false;  // also intercept beam 1 (exploratory)
};

// Eve's per-round view, logged for audit.
struct EveRecord {
  std::uint64_t round_index = 0;
  std::optional<optics::Port> measured_click;
  std::optional<double> inferred_phi_m;  // [rad]
  bool stole_photon = false;
};

std::string to_string(EveKind kind);
std::string to_string(ResendPolicy policy);

optics::PulsePair apply_channel(optics::PulsePair pulse,
                                const ChannelParams& params, Party party);

// Intercept-resend: Eve measures the in-flight pulse exactly as Bob would
// (ideal detectors at theta_e). A single click pins the modulated phase in
// this intensity-level model, and she resends a fresh source-statistics
// pulse carrying her inferred phase. On vacuum or double click the resend
// policy decides between sending vacuum and resending with a coin-flip
// phase guess.
std::pair<optics::PulsePair, EveRecord> eve_intercept_resend(
    const optics::PulsePair& pulse, const EveStrategy& strategy,
    SplitMix64& rng);

// Photon-number splitting: Eve draws the pulse's total photon number; on a
// multi-photon pulse she removes one photon (means rescaled by (k-1)/k) and
// keeps it. Phases are untouched.
std::pair<optics::PulsePair, EveRecord> eve_pns(const optics::PulsePair& pulse,
                                                SplitMix64& rng);

}  // namespace icqkd::adversary
