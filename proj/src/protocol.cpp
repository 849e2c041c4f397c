// SPDX-License-Identifier: Apache-2.0
#include "icqkd/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "icqkd/angles.hpp"

namespace icqkd::protocol {

using optics::CorrelationId;

namespace {

bool is_plus45(double theta) { return same_angle(theta, kTheta45); }
bool is_minus45(double theta) { return same_angle(theta, kThetaMinus45); }

void require_pm45(double theta2, const char* who) {
  if (!is_plus45(theta2) && !is_minus45(theta2)) {
    throw std::invalid_argument(std::string(who) +
                                ": theta2 must be +45 or -45 degrees");
  }
}

// Port that counts as the effective click, after double-click policy.
std::optional<optics::Port> effective_port(const optics::DetectionEvent& event,
                                           DoubleClickPolicy policy,
                                           SplitMix64& rng) {
  if (event.valid()) {
    return event.plus_click ? optics::Port::Plus : optics::Port::Minus;
  }
  if (event.double_click() && policy == DoubleClickPolicy::RandomAssign) {
    return rng.bernoulli(0.5) ? optics::Port::Plus : optics::Port::Minus;
  }
  return std::nullopt;
}

optics::PulsePair emit_pulse(double n_x, double n_y, SplitMix64& rng) {
  const double phi_m = rng.bernoulli(0.5) ? kPhi90 : kPhiMinus90;
  return optics::PulsePair{n_x, n_y, phi_m, 0.0, 0.0};
}

optics::DetectionEvent sample_party(const optics::PulsePair& pulse, double term,
                                    const optics::DetectorParams& det,
                                    SplitMix64& rng) {
  const optics::PortMeans means = optics::port_means(pulse, term);
  return optics::sample_detection(means.plus, means.minus, det, rng);
}

}  // namespace

std::string to_string(GroupLabel group) {
  return group == GroupLabel::Psi ? "psi" : "phi";
}

std::string to_string(Outcome outcome) {
  return outcome == Outcome::Yes ? "yes" : "no";
}

GroupLabel group_of(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
    case CorrelationId::C2:
      return GroupLabel::Psi;
    case CorrelationId::C3:
    case CorrelationId::C4:
      return GroupLabel::Phi;
  }
  return GroupLabel::Psi;  // unreachable
}

int bit_of(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
    case CorrelationId::C3:
      return 0;
    case CorrelationId::C2:
    case CorrelationId::C4:
      return 1;
  }
  return 0;  // unreachable
}

CorrelationId other_in_group(CorrelationId c) {
  switch (c) {
    case CorrelationId::C1:
      return CorrelationId::C2;
    case CorrelationId::C2:
      return CorrelationId::C1;
    case CorrelationId::C3:
      return CorrelationId::C4;
    case CorrelationId::C4:
      return CorrelationId::C3;
  }
  return c;  // unreachable
}

std::pair<CorrelationId, CorrelationId> guess_set(double theta2) {
  require_pm45(theta2, "guess_set");
  if (is_plus45(theta2)) return {CorrelationId::C1, CorrelationId::C4};
  return {CorrelationId::C2, CorrelationId::C3};
}

optics::PulsePair source_emit(double n_c, SplitMix64& rng) {
  if (!(n_c > 0.0 && n_c < 1.0)) {
    throw std::invalid_argument(
        "source_emit: mean photon number must satisfy 0 < n_c < 1");
  }
  return emit_pulse(n_c, n_c, rng);
}

AliceChoice alice_choose(SplitMix64& rng) {
  const auto c = static_cast<CorrelationId>(rng.below(4));
  return AliceChoice{group_of(c), c};
}

AliceRound alice_record(AliceRound round, DoubleClickPolicy policy,
                        SplitMix64& rng) {
  if (const auto port = effective_port(round.detection, policy, rng)) {
    round.recorded_bit = (*port == optics::Port::Plus) ? 1 : 0;
  } else {
    round.recorded_bit.reset();
  }
  return round;
}

double bob_guess(SplitMix64& rng) {
  return rng.bernoulli(0.5) ? kTheta45 : kThetaMinus45;
}

BobRound bob_record(BobRound round, DoubleClickPolicy policy, SplitMix64& rng) {
  if (const auto port = effective_port(round.detection, policy, rng)) {
    round.outcome = (*port == optics::Port::Plus) ? Outcome::Yes : Outcome::No;
  } else {
    round.outcome.reset();
  }
  return round;
}

int bob_infer_bit(GroupLabel group, double theta2, Outcome outcome) {
  require_pm45(theta2, "bob_infer_bit");
  // Within Psi: a confirmed (+45, Yes) guess lands on C1 -> 0, and flipping
  // either the angle or the outcome flips the member. Phi mirrors Psi.
  const bool minus45 = is_minus45(theta2);
  const bool no = (outcome == Outcome::No);
  const int psi_bit = (minus45 != no) ? 1 : 0;
  return group == GroupLabel::Psi ? psi_bit : 1 - psi_bit;
}

Outcome alice_expected_outcome(GroupLabel group, int alice_bit, double theta2) {
  return bob_infer_bit(group, theta2, Outcome::Yes) == alice_bit ? Outcome::Yes
                                                                 : Outcome::No;
}

RoundRecord run_round(const SessionConfig& config, std::uint64_t index,
                      SplitMix64& rng) {
  const double n_x = config.source_n_x.value_or(config.n_c);
  const double n_y = config.source_n_y.value_or(config.n_c);
  const optics::PulsePair source = emit_pulse(n_x, n_y, rng);
  optics::PulsePair to_alice = source;
  optics::PulsePair to_bob = source;

  const AliceChoice choice = alice_choose(rng);
  const double theta2 = bob_guess(rng);

  std::optional<adversary::EveRecord> eve;
  if (config.eve.kind == adversary::EveKind::InterceptResend) {
    auto [resent, record] = adversary::eve_intercept_resend(to_bob, config.eve, rng);
    to_bob = resent;
    record.round_index = index;
    eve = record;
    if (config.eve.attack_alice_beam) {
      auto [resent1, record1] =
          adversary::eve_intercept_resend(to_alice, config.eve, rng);
      to_alice = resent1;
      (void)record1;  // beam-1 view is not logged; the audit trail follows beam 2
    }
  } else if (config.eve.kind == adversary::EveKind::Pns) {
    auto [forwarded, record] = adversary::eve_pns(to_bob, rng);
    to_bob = forwarded;
    record.round_index = index;
    eve = record;
  }

  to_alice = adversary::apply_channel(to_alice, config.channel,
                                      adversary::Party::Alice);
  to_bob = adversary::apply_channel(to_bob, config.channel,
                                    adversary::Party::Bob);

  AliceRound alice;
  alice.group = choice.group;
  alice.chosen_c = choice.c;
  alice.theta1 = config.theta1;
  alice.detection = sample_party(
      to_alice,
      optics::alice_interference_term(choice.c, config.theta1,
                                      optics::effective_phase(to_alice)),
      config.detector_alice, rng);
  alice = alice_record(alice, config.double_click_policy, rng);

  BobRound bob;
  bob.theta2 = theta2;
  bob.detection = sample_party(
      to_bob,
      optics::bob_interference_term(theta2, optics::effective_phase(to_bob)),
      config.detector_bob, rng);
  bob = bob_record(bob, config.double_click_policy, rng);

  RoundRecord record;
  record.index = index;
  record.phi_m = source.phi_m;
  record.alice = alice;
  record.bob = bob;
  record.coincident =
      alice.recorded_bit.has_value() && bob.outcome.has_value();
  record.eve = eve;
  return record;
}

ErrorCheckResult error_check(std::vector<RoundRecord>& records, double fraction,
                             std::optional<double> threshold,
                             double expected_honest_rate, SplitMix64& rng) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("error_check: fraction must lie in [0, 1]");
  }
  ErrorCheckResult result;
  for (RoundRecord& record : records) {
    if (!record.coincident) continue;
    if (!rng.bernoulli(fraction)) continue;
    record.disclosed = true;
    result.disclosed.push_back(record.index);
    ++result.checked;
    const Outcome expected = alice_expected_outcome(
        record.alice.group, *record.alice.recorded_bit, record.bob.theta2);
    if (*record.bob.outcome != expected) ++result.errors;
  }
  if (result.checked > 0) {
    result.error_rate =
        static_cast<double>(result.errors) / static_cast<double>(result.checked);
    if (threshold) {
      result.threshold = *threshold;
    } else if (expected_honest_rate > 0.0) {
      const double sigma =
          std::sqrt(expected_honest_rate * (1.0 - expected_honest_rate) /
                    static_cast<double>(result.checked));
      result.threshold = expected_honest_rate + 3.0 * sigma;
    } else {
      result.threshold = 0.0;  // ideal hardware tolerates no error at all
    }
    result.abort = *result.error_rate > result.threshold;
  } else if (threshold) {
    result.threshold = *threshold;
  }
  return result;
}

void announce_and_infer(std::vector<RoundRecord>& records) {
  for (RoundRecord& record : records) {
    if (!record.coincident || record.disclosed) continue;
    record.bob.inferred_bit =
        bob_infer_bit(record.alice.group, record.bob.theta2, *record.bob.outcome);
  }
}

SiftResult sift(const std::vector<RoundRecord>& records) {
  SiftResult result;
  std::uint64_t coincident = 0;
  std::uint64_t disclosed = 0;
  for (const RoundRecord& record : records) {
    if (!record.coincident) continue;
    ++coincident;
    if (record.disclosed) {
      ++disclosed;
      continue;
    }
    if (!record.bob.inferred_bit) continue;  // announcement not applied
    result.pairs.push_back(SiftedBitPair{*record.alice.recorded_bit,
                                         *record.bob.inferred_bit, record.index});
  }
  if (coincident > disclosed) {
    result.sift_rate = static_cast<double>(result.pairs.size()) /
                       static_cast<double>(coincident - disclosed);
  }
  return result;
}

}  // namespace icqkd::protocol
