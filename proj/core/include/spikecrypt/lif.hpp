// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::lif {

/// Leaky integrate-and-fire constants. Defaults are the published neuron
/// table with the reset potential taken as -70 mV.
///
/// External currents are given in pA and folded into the membrane equation
/// through R = tau_m / c_m (ms/pF = GOhm, so 1 pA -> R mV). With the defaults
/// R = 0.08 mV/pA. The synaptic state `i` is kept in the same mV-equivalent
/// units, so a synaptic weight w (pA) increments it by w * R.
struct LifParams {
  double tau_m = 20.0;    // ms
  double tau_syn = 5.0;   // ms
  double v_leak = -70.0;  // mV
  double v_th = -55.0;    // mV
  double v_reset = -70.0; // mV
  double t_ref = 2.0;     // ms
  double c_m = 250.0;     // pF

  double resistance() const { return tau_m / c_m; }
  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

struct LifState {
  double v = -70.0;
  double i = 0.0;
  double refractory_until = -1.0;

  static LifState at_rest(const LifParams& p) { return {p.v_leak, 0.0, -1.0}; }
};

struct StepResult {
  LifState state;
  bool spiked = false;
};

/// One exponential-Euler step over [now, now + dt].
///
/// The synaptic state decays with tau_syn. Outside refractoriness the membrane
/// relaxes toward v_leak + i + R * i_ext_pa with tau_m; reaching v_th emits a
/// spike, resets to v_reset and clamps v there until now + dt + t_ref.
/// Throws ValidationError for dt <= 0.
StepResult lif_step(const LifState& state, const LifParams& params, double i_ext_pa, double dt,
                    double now);

using Drive = std::function<double(double t_ms)>;

/// Integrates one neuron from rest over [0, T). Spikes are stamped at the end
/// of the step in which threshold was reached.
SpikeTrain simulate_neuron(const LifParams& params, const Drive& drive_pa, double duration_ms,
                           double dt);
SpikeTrain simulate_neuron(const LifParams& params, double constant_drive_pa, double duration_ms,
                           double dt);

}  // namespace spikecrypt::lif
