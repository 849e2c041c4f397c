// SPDX-License-Identifier: Apache-2.0
#include "icqkd/adversary.hpp"

#include <cmath>
#include <stdexcept>

namespace icqkd::adversary {

namespace {

optics::PulsePair honest_pulse(double n_per_mode, double phi_m) {
  return optics::PulsePair{n_per_mode, n_per_mode, phi_m, 0.0, 0.0};
}

// Invert cos(2*theta_e + phi) = +-1 over phi in {+90, -90} deg.
double invert_phase(double theta_e, optics::Port port) {
  const double want = (port == optics::Port::Plus) ? +1.0 : -1.0;
  const double at_plus = optics::bob_interference_term(theta_e, kPhi90);
  return (at_plus * want > 0.0) ? kPhi90 : kPhiMinus90;
}

}  // namespace

std::string to_string(EveKind kind) {
  switch (kind) {
    case EveKind::None:
      return "none";
    case EveKind::InterceptResend:
      return "intercept_resend";
    case EveKind::Pns:
      return "pns";
  }
  return "?";
}

std::string to_string(ResendPolicy policy) {
  switch (policy) {
    case ResendPolicy::ResendOnClickElseVacuum:
      return "resend_on_click_else_vacuum";
    case ResendPolicy::ResendAlwaysGuessOnVacuum:
      return "resend_always_guess_on_vacuum";
  }
  return "?";
}

optics::PulsePair apply_channel(optics::PulsePair pulse,
                                const ChannelParams& params, Party party) {
  const double t = (party == Party::Alice) ? params.transmittance_alice
                                           : params.transmittance_bob;
  pulse.n_x *= t;
  pulse.n_y *= t;
  return pulse;
}

std::pair<optics::PulsePair, EveRecord> eve_intercept_resend(
    const optics::PulsePair& pulse, const EveStrategy& strategy,
    SplitMix64& rng) {
  if (strategy.kind != EveKind::InterceptResend) {
    throw std::logic_error("eve_intercept_resend: strategy kind mismatch");
  }
  EveRecord record;
  const double term = optics::bob_interference_term(
      strategy.theta_e, optics::effective_phase(pulse));
  const optics::PortMeans means = optics::port_means(pulse, term);
  const optics::DetectionEvent event =
      optics::sample_detection(means.plus, means.minus,
                               optics::DetectorParams{}, rng);

  // She mimics the source statistics of the pulse she consumed.
  const double n_resend = 0.5 * (pulse.n_x + pulse.n_y);

  if (event.valid()) {
    const optics::Port port =
        event.plus_click ? optics::Port::Plus : optics::Port::Minus;
    record.measured_click = port;
    record.inferred_phi_m = invert_phase(strategy.theta_e, port);
    return {honest_pulse(n_resend, *record.inferred_phi_m), record};
  }

  // Vacuum or double click: no usable phase information this round.
  if (strategy.resend_policy == ResendPolicy::ResendAlwaysGuessOnVacuum) {
    const double guess = rng.bernoulli(0.5) ? kPhi90 : kPhiMinus90;
    return {honest_pulse(n_resend, guess), record};
  }
  return {honest_pulse(0.0, 0.0), record};
}

std::pair<optics::PulsePair, EveRecord> eve_pns(const optics::PulsePair& pulse,
                                                SplitMix64& rng) {
  EveRecord record;
  const unsigned k = rng.poisson(pulse.n_x + pulse.n_y);
  if (k < 2) return {pulse, record};
  record.stole_photon = true;
  const double scale = static_cast<double>(k - 1) / static_cast<double>(k);
  optics::PulsePair forwarded = pulse;
  forwarded.n_x *= scale;
  forwarded.n_y *= scale;
  return {forwarded, record};
}

}  // namespace icqkd::adversary
