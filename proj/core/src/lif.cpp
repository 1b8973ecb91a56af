// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/lif.hpp"

#include <cmath>

#include "spikecrypt/error.hpp"

namespace spikecrypt::lif {

void LifParams::validate() const {
  if (!(tau_m > 0.0)) throw ConfigError("tau_m must be positive");
  if (!(tau_syn > 0.0)) throw ConfigError("tau_syn must be positive");
  if (!(c_m > 0.0)) throw ConfigError("C_m must be positive");
  if (!(v_reset < v_th)) throw ConfigError("V_reset must lie below V_th");
  if (!(t_ref >= 0.0)) throw ConfigError("t_ref must be non-negative");
}

StepResult lif_step(const LifState& state, const LifParams& params, double i_ext_pa, double dt,
                    double now) {
  if (!(dt > 0.0)) throw ValidationError("time step must be positive");
  StepResult out;
  out.state.i = state.i * std::exp(-dt / params.tau_syn);
  out.state.refractory_until = state.refractory_until;
  if (now < state.refractory_until - 1e-9) {
    out.state.v = params.v_reset;
    return out;
  }
  const double v_inf = params.v_leak + state.i + params.resistance() * i_ext_pa;
  double v = v_inf + (state.v - v_inf) * std::exp(-dt / params.tau_m);
  if (v >= params.v_th) {
    v = params.v_reset;
    out.spiked = true;
    out.state.refractory_until = now + dt + params.t_ref;
  }
  out.state.v = v;
  return out;
}

SpikeTrain simulate_neuron(const LifParams& params, const Drive& drive_pa, double duration_ms,
                           double dt) {
  if (!(duration_ms > 0.0)) throw ValidationError("simulation length must be positive");
  if (!(dt > 0.0)) throw ValidationError("time step must be positive");
  params.validate();
  const auto steps = static_cast<std::size_t>(std::llround(duration_ms / dt));
  LifState s = LifState::at_rest(params);
  std::vector<double> times;
  for (std::size_t k = 0; k < steps; ++k) {
    const double now = static_cast<double>(k) * dt;
    auto r = lif_step(s, params, drive_pa(now), dt, now);
    s = r.state;
    const double t = static_cast<double>(k + 1) * dt;
    if (r.spiked && t < duration_ms) times.push_back(t);
  }
  return SpikeTrain(std::move(times), duration_ms);
}

SpikeTrain simulate_neuron(const LifParams& params, double constant_drive_pa, double duration_ms,
                           double dt) {
  return simulate_neuron(
      params, [constant_drive_pa](double) { return constant_drive_pa; }, duration_ms, dt);
}

}  // namespace spikecrypt::lif
