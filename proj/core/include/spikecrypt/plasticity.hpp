// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::plasticity {

/// Pair-based additive STDP with hard bounds.
struct StdpParams {
  double a_plus = 5.0;     // pA
  double a_minus = 5.25;   // pA, slight depression bias
  double tau_plus = 20.0;  // ms
  double tau_minus = 20.0; // ms
  double w_min = 400.0;    // pA
  double w_max = 900.0;    // pA

  void validate() const;
};

/// Weight change for one pre/post pair; dt_pre_post = t_post - t_pre.
/// Positive dt potentiates, negative depresses, zero leaves w unchanged.
double stdp_delta(double dt_pre_post, const StdpParams& p);

/// w + stdp_delta, clamped to [w_min, w_max].
double stdp_update(double w, double dt_pre_post, const StdpParams& p);

/// Remote supervised method (ReSuMe) with an exponential learning window.
///
///   dw = sum_{t in target} [a + eta * sum_{s in input, s <= t} exp(-(t - s) / tau)]
///      - sum_{t in output} [same]
///
/// `offset` is the non-Hebbian term a (weight units).
struct ResumeParams {
  double learning_rate = 4.0;    // eta, pA per coincidence
  double offset = 0.2;           // a = 0.05 * eta
  double kernel_tau = 5.0;       // ms
  std::size_t epochs = 60;
  double w_min = 400.0;
  double w_max = 900.0;

  void validate() const;
};

/// Raw ReSuMe weight change. Throws ValidationError if the trains do not
/// share a window.
double resume_delta(const SpikeTrain& input, const SpikeTrain& output, const SpikeTrain& target,
                    const ResumeParams& p);

/// w + resume_delta, clamped to [w_min, w_max].
double resume_update(double w, const SpikeTrain& input, const SpikeTrain& output,
                     const SpikeTrain& target, const ResumeParams& p);

}  // namespace spikecrypt::plasticity
