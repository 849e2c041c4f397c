// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icqkd/adversary.hpp"
#include "icqkd/config.hpp"
#include "icqkd/optics.hpp"
#include "icqkd/rng.hpp"

namespace icqkd::protocol {

// The two-element partition of the correlation functions; the only
// information Alice ever announces.
enum class GroupLabel { Psi, Phi };

std::string to_string(GroupLabel group);

GroupLabel group_of(optics::CorrelationId c);

// Nominal key bit of each correlation function: C1, C3 -> 0; C2, C4 -> 1.
int bit_of(optics::CorrelationId c);

// The partner of c within its group.
optics::CorrelationId other_in_group(optics::CorrelationId c);

enum class Outcome { Yes, No };

std::string to_string(Outcome outcome);

// The pair of correlation functions a projection angle bets on:
// +45 deg -> {C1, C4}, -45 deg -> {C2, C3}.
std::pair<optics::CorrelationId, optics::CorrelationId> guess_set(double theta2);

struct AliceRound {
  GroupLabel group = GroupLabel::Psi;
  optics::CorrelationId chosen_c = optics::CorrelationId::C1;
  double theta1 = kTheta45;
  optics::DetectionEvent detection;
  std::optional<int> recorded_bit;
};

struct BobRound {
  double theta2 = kTheta45;
  optics::DetectionEvent detection;
  std::optional<Outcome> outcome;
  std::optional<int> inferred_bit;  // set after the group announcement
};

struct RoundRecord {
  std::uint64_t index = 0;
  double phi_m = 0.0;  // source truth, hidden from the parties; audit only
  AliceRound alice;
  BobRound bob;
  bool coincident = false;
  bool disclosed = false;  // spent on the error check, excluded from the key
  std::optional<adversary::EveRecord> eve;
};

struct SiftedBitPair {
  int alice_bit = 0;
  int bob_bit = 0;
  std::uint64_t round_index = 0;
};

struct SiftResult {
  std::vector<SiftedBitPair> pairs;
  // sifted / (coincident - disclosed); null when there is nothing to sift.
  std::optional<double> sift_rate;
};

struct ErrorCheckResult {
  std::optional<double> error_rate;  // null when nothing was disclosed
  bool abort = false;
  double threshold = 0.0;
  std::uint64_t checked = 0;
  std::uint64_t errors = 0;
  std::vector<std::uint64_t> disclosed;
};

// Step 0: the source draws phi_m uniformly from {+90, -90} deg and emits a
// balanced pair with aligned static arms. Rejects n_c outside (0, 1).
optics::PulsePair source_emit(double n_c, SplitMix64& rng);

// Step 1: Alice picks one of the four correlation functions uniformly.
struct AliceChoice {
  GroupLabel group;
  optics::CorrelationId c;
};
AliceChoice alice_choose(SplitMix64& rng);

// Step 2: plus-only -> 1, minus-only -> 0. Vacuum leaves no bit; a double
// click leaves no bit under Discard and a coin-flip port under RandomAssign.
AliceRound alice_record(AliceRound round, DoubleClickPolicy policy,
                        SplitMix64& rng);

// Step 3: Bob draws his projection angle uniformly from {+45, -45} deg.
double bob_guess(SplitMix64& rng);

// Step 4: plus-only -> Yes, minus-only -> No, same invalid-event handling.
BobRound bob_record(BobRound round, DoubleClickPolicy policy, SplitMix64& rng);

// Step 6: the announced group plus Bob's own (theta2, outcome) pin the bit.
// Yes confirms the guessed member's bit inside the group; No selects the
// other member's bit. Rejects theta2 outside {+45, -45} deg.
int bob_infer_bit(GroupLabel group, double theta2, Outcome outcome);

// What Alice expects Bob to have answered, given her recorded bit: the
// unique outcome under which bob_infer_bit reproduces her bit.
Outcome alice_expected_outcome(GroupLabel group, int alice_bit, double theta2);

// One full round: emission, adversary and channel transforms, detection and
// recording at both parties. Consumes only `rng`, so rounds are independent
// given distinct substreams.
RoundRecord run_round(const SessionConfig& config, std::uint64_t index,
                      SplitMix64& rng);

// Step 4 alternative: Bob discloses each coincident round with probability
// `fraction`; Alice compares his announced outcome against her expectation.
// With no explicit threshold the abort level is expected_honest_rate plus
// three binomial sigma at the realized disclosure count. Marks disclosed
// rounds in place.
ErrorCheckResult error_check(std::vector<RoundRecord>& records, double fraction,
                             std::optional<double> threshold,
                             double expected_honest_rate, SplitMix64& rng);

// Step 5 + 6 over a transcript: fills bob.inferred_bit for every coincident,
// non-disclosed round.
void announce_and_infer(std::vector<RoundRecord>& records);

// Produces one bit pair per coincident non-disclosed round; nothing is ever
// discarded for a wrong guess, which is the protocol's rate advantage.
SiftResult sift(const std::vector<RoundRecord>& records);

}  // namespace icqkd::protocol
