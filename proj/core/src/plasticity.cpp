// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/plasticity.hpp"

#include <algorithm>
#include <cmath>

#include "spikecrypt/error.hpp"

namespace spikecrypt::plasticity {

void StdpParams::validate() const {
  if (!(tau_plus > 0.0) || !(tau_minus > 0.0)) throw ConfigError("STDP time constants must be positive");
  if (!(a_plus >= 0.0) || !(a_minus >= 0.0)) throw ConfigError("STDP amplitudes must be non-negative");
  if (!(w_min < w_max)) throw ConfigError("STDP bounds require w_min < w_max");
}

double stdp_delta(double dt_pre_post, const StdpParams& p) {
  if (dt_pre_post > 0.0) return p.a_plus * std::exp(-dt_pre_post / p.tau_plus);
  if (dt_pre_post < 0.0) return -p.a_minus * std::exp(dt_pre_post / p.tau_minus);
  return 0.0;
}

double stdp_update(double w, double dt_pre_post, const StdpParams& p) {
  return std::clamp(w + stdp_delta(dt_pre_post, p), p.w_min, p.w_max);
}

void ResumeParams::validate() const {
  if (!(kernel_tau > 0.0)) throw ConfigError("ReSuMe kernel tau must be positive");
  if (!(learning_rate > 0.0)) throw ConfigError("ReSuMe learning rate must be positive");
  if (epochs < 1) throw ConfigError("ReSuMe needs at least one epoch");
  if (!(w_min < w_max)) throw ConfigError("ReSuMe bounds require w_min < w_max");
}

namespace {

double contribution(const std::vector<double>& input, const std::vector<double>& events,
                    const ResumeParams& p) {
  double total = 0.0;
  std::size_t j = 0;
  double trace = 0.0;
  double trace_time = 0.0;
  for (double t : events) {
    // Trace of input spikes with s <= t, advanced lazily.
    while (j < input.size() && input[j] <= t) {
      trace = trace * std::exp(-(input[j] - trace_time) / p.kernel_tau) + 1.0;
      trace_time = input[j];
      ++j;
    }
    const double at_t = trace * std::exp(-(t - trace_time) / p.kernel_tau);
    total += p.offset + p.learning_rate * at_t;
  }
  return total;
}

}  // namespace

double resume_delta(const SpikeTrain& input, const SpikeTrain& output, const SpikeTrain& target,
                    const ResumeParams& p) {
  if (input.duration() != output.duration() || input.duration() != target.duration()) {
    throw ValidationError("ReSuMe trains must share one window");
  }
  return contribution(input.times(), target.times(), p) -
         contribution(input.times(), output.times(), p);
}

double resume_update(double w, const SpikeTrain& input, const SpikeTrain& output,
                     const SpikeTrain& target, const ResumeParams& p) {
  return std::clamp(w + resume_delta(input, output, target, p), p.w_min, p.w_max);
}

}  // namespace spikecrypt::plasticity
