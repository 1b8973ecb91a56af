// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/network.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "spikecrypt/error.hpp"

namespace spikecrypt::snn {

std::size_t NetworkTopology::total_neurons() const {
  std::size_t n = 0;
  for (const auto& r : layers) n += r.size;
  return n;
}

std::vector<SynapseSpec> NetworkTopology::synapses() const {
  std::vector<SynapseSpec> out;
  for (const auto& p : projections) {
    const LayerRange& a = range(p.pre);
    const LayerRange& b = range(p.post);
    auto weight = [&](std::size_t k) { return p.uniform() ? p.weights[0] : p.weights[k]; };
    switch (p.pattern) {
      case Connectivity::kOneToOne:
        for (std::size_t k = 0; k < std::min(a.size, b.size); ++k)
          out.push_back({a.first + k, b.first + k, weight(k), p.delay_ms, p.kind});
        break;
      case Connectivity::kAllToAll:
        for (std::size_t i = 0; i < a.size; ++i)
          for (std::size_t j = 0; j < b.size; ++j)
            out.push_back({a.first + i, b.first + j, weight(i * b.size + j), p.delay_ms, p.kind});
        break;
      case Connectivity::kRoundRobin:
        if (b.size == 0) break;
        for (std::size_t i = 0; i < a.size; ++i)
          out.push_back({a.first + i, b.first + i % b.size, weight(i), p.delay_ms, p.kind});
        break;
    }
  }
  return out;
}

const Projection& Network::l2l3() const { return topology_.projections.at(l2l3_index_); }

Network Network::with_l2l3_weights(std::vector<double> weights) const {
  const Projection& current = l2l3();
  if (weights.size() != current.weights.size()) {
    throw ShapeError("expected " + std::to_string(current.weights.size()) +
                     " L2->L3 weights, got " + std::to_string(weights.size()));
  }
  for (double& w : weights) {
    if (!std::isfinite(w)) throw ValidationError("L2->L3 weights must be finite");
    w = std::clamp(w, config_.weight_l2l3_min, config_.weight_l2l3_max);
  }
  Network copy = *this;
  copy.topology_.projections[l2l3_index_].weights = std::move(weights);
  return copy;
}

std::size_t SimulationResult::spike_count(Layer l) const {
  std::size_t n = 0;
  for (const auto& t : layer(l)) n += t.size();
  return n;
}

Network build_network(std::size_t message_len, const NetworkConfig& config, std::uint64_t seed) {
  NetworkConfig cfg = config;
  cfg.stdp.w_min = cfg.weight_l2l3_min;
  cfg.stdp.w_max = cfg.weight_l2l3_max;
  cfg.validate();

  const std::size_t l1 = codec::kNeuronsPerByte * message_len;
  const std::size_t l2 = cfg.hidden_size == 0 ? l1 : cfg.hidden_size;
  if (l2 < l1) {
    throw ConfigError("hidden_size " + std::to_string(l2) + " is smaller than the input layer (" +
                      std::to_string(l1) + ")");
  }
  const std::size_t noise = message_len == 0 ? 0 : (cfg.noise_neurons == 0 ? l2 : cfg.noise_neurons);

  Network net;
  net.config_ = cfg;
  net.message_len_ = message_len;
  net.seed_ = seed;

  NetworkTopology& topo = net.topology_;
  const std::array<std::size_t, kLayerCount> sizes = {l1, l2, l1, l1, noise, l1};
  std::size_t first = 0;
  for (std::size_t k = 0; k < kLayerCount; ++k) {
    topo.layers[k] = {first, sizes[k]};
    first += sizes[k];
  }
  topo.noise_rate_hz = cfg.noise_rate_hz;
  topo.report_delay_correction_ms = cfg.report_delay_correction_ms;

  const double d = cfg.delay_ms;
  topo.projections.push_back(
      {Layer::kInput, Layer::kHidden, Connectivity::kOneToOne, SynapseKind::kStatic, d, {cfg.weight_l1l2}});

  const std::size_t plastic = cfg.l2l3 == Connectivity::kOneToOne ? l1 : l2 * l1;
  net.l2l3_index_ = topo.projections.size();
  topo.projections.push_back({Layer::kHidden, Layer::kOutput, cfg.l2l3, SynapseKind::kStdp, d,
                              std::vector<double>(plastic, cfg.weight_l2l3_init)});

  topo.projections.push_back(
      {Layer::kOutput, Layer::kInhibition, Connectivity::kAllToAll, SynapseKind::kStatic, d, {cfg.weight_l3li}});
  topo.projections.push_back(
      {Layer::kInhibition, Layer::kHidden, Connectivity::kOneToOne, SynapseKind::kStatic, d, {cfg.weight_lil2}});
  topo.projections.push_back(
      {Layer::kNoise, Layer::kHidden, Connectivity::kRoundRobin, SynapseKind::kStatic, d, {cfg.weight_noise}});
  // Teaching acts as a one-step current pulse ending at the target time.
  topo.projections.push_back({Layer::kTeaching, Layer::kOutput, Connectivity::kOneToOne,
                              SynapseKind::kStatic, cfg.dt_ms, {cfg.teaching_pulse_pa}});
  return net;
}

SpikeTrain poisson_train(double rate_hz, double duration_ms, std::uint64_t seed) {
  if (!(rate_hz >= 0.0) || !std::isfinite(rate_hz)) {
    throw ValidationError("Poisson rate must be finite and non-negative");
  }
  if (!(duration_ms > 0.0)) throw ValidationError("Poisson window must be positive");
  std::vector<double> times;
  if (rate_hz > 0.0) {
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> isi(rate_hz / 1000.0);
    double t = isi(gen);
    while (t < duration_ms) {
      if (times.empty() || t > times.back()) times.push_back(t);
      t += isi(gen);
    }
  }
  return SpikeTrain(std::move(times), duration_ms);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t delay_steps(double delay_ms, double dt) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(delay_ms / dt - 1e-9)));
}

// Pending synaptic input for one future step.
struct Slot {
  std::vector<double> per_neuron;
  std::array<double, kLayerCount> broadcast{};
};

struct NoiseEvent {
  double t;
  std::size_t gen;
};

}  // namespace

SimulationResult run(const Network& net, const codec::StimulusPlan& stimulus, double duration_ms,
                     const RunOptions& options) {
  const auto wall_start = std::chrono::steady_clock::now();
  const NetworkConfig& cfg = net.config();
  const NetworkTopology& topo = net.topology();
  const lif::LifParams& np = cfg.neuron;
  const double dt = cfg.dt_ms;

  if (!(duration_ms > 0.0) || !std::isfinite(duration_ms)) {
    throw ValidationError("simulation length must be positive");
  }
  if (stimulus.amplitude_pa.size() != topo.size(Layer::kInput)) {
    throw ShapeError("stimulus drives " + std::to_string(stimulus.amplitude_pa.size()) +
                     " neurons but L1 has " + std::to_string(topo.size(Layer::kInput)));
  }
  if (!options.teaching.empty() && options.teaching.size() != topo.size(Layer::kOutput)) {
    throw ShapeError("teaching set has " + std::to_string(options.teaching.size()) +
                     " trains but L3 has " + std::to_string(topo.size(Layer::kOutput)));
  }

  const auto steps = static_cast<std::size_t>(std::llround(duration_ms / dt));
  // L1, L2, L3 and LI are LIF neurons and occupy global ids [0, n_lif).
  const std::size_t n_lif = topo.range(Layer::kNoise).first;

  SimulationResult result;
  result.duration_ms = duration_ms;
  std::array<std::vector<std::vector<double>>, kLayerCount> spikes;
  for (Layer l : kAllLayers) spikes[static_cast<std::size_t>(l)].resize(topo.size(l));

  // Synaptic projections grouped by presynaptic layer.
  const std::vector<Projection>& projections = topo.projections;
  const std::size_t plastic_index = [&] {
    for (std::size_t k = 0; k < projections.size(); ++k)
      if (projections[k].kind == SynapseKind::kStdp) return k;
    return projections.size();
  }();
  std::array<std::vector<std::size_t>, kLayerCount> outgoing;
  std::size_t max_delay = 1;
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const Projection& p = projections[k];
    if (p.pre == Layer::kTeaching) continue;
    if (p.pre == Layer::kNoise && !options.noise) continue;
    if (p.pre == Layer::kInhibition && !options.lateral_inhibition) continue;
    outgoing[static_cast<std::size_t>(p.pre)].push_back(k);
    max_delay = std::max(max_delay, delay_steps(p.delay_ms, dt));
  }
  std::vector<std::size_t> proj_delay(projections.size());
  for (std::size_t k = 0; k < projections.size(); ++k)
    proj_delay[k] = delay_steps(projections[k].delay_ms, dt);

  const std::size_t ring_size = max_delay + 2;
  std::vector<Slot> ring(ring_size);
  for (auto& s : ring) s.per_neuron.assign(n_lif, 0.0);

  std::vector<double> plastic_w =
      plastic_index < projections.size() ? projections[plastic_index].weights : std::vector<double>{};

  const double R = np.resistance();
  auto deliver = [&](std::size_t proj, std::size_t pre_local, std::size_t arrival) {
    const Projection& p = projections[proj];
    const std::vector<double>& w = proj == plastic_index ? plastic_w : p.weights;
    Slot& slot = ring[arrival % ring_size];
    const LayerRange& post = topo.range(p.post);
    if (post.size == 0) return;
    switch (p.pattern) {
      case Connectivity::kOneToOne:
        if (pre_local < post.size)
          slot.per_neuron[post.first + pre_local] +=
              R * (w.size() == 1 ? w[0] : w[pre_local]);
        break;
      case Connectivity::kAllToAll:
        if (w.size() == 1) {
          slot.broadcast[static_cast<std::size_t>(p.post)] += R * w[0];
        } else {
          const double* row = w.data() + pre_local * post.size;
          for (std::size_t q = 0; q < post.size; ++q) slot.per_neuron[post.first + q] += R * row[q];
        }
        break;
      case Connectivity::kRoundRobin:
        slot.per_neuron[post.first + pre_local % post.size] +=
            R * (w.size() == 1 ? w[0] : w[pre_local]);
        break;
    }
  };

  // Noise generators are precomputed Poisson trains.
  const std::size_t n_noise = topo.size(Layer::kNoise);
  std::vector<NoiseEvent> noise_events;
  if (options.noise && n_noise > 0) {
    const std::uint64_t base = options.noise_seed.value_or(net.seed());
    for (std::size_t g = 0; g < n_noise; ++g) {
      SpikeTrain tr = poisson_train(topo.noise_rate_hz, duration_ms, splitmix(base ^ splitmix(g)));
      spikes[static_cast<std::size_t>(Layer::kNoise)][g] = tr.times();
      for (double t : tr.times()) noise_events.push_back({t, g});
    }
    std::stable_sort(noise_events.begin(), noise_events.end(),
                     [](const NoiseEvent& a, const NoiseEvent& b) { return a.t < b.t; });
  }

  // Teaching pulses: step k carries a pulse so the neuron fires at (k + 1) dt.
  std::vector<std::vector<std::size_t>> pulses;
  if (!options.teaching.empty()) {
    pulses.resize(steps);
    for (std::size_t q = 0; q < options.teaching.size(); ++q) {
      for (double t : options.teaching[q].times()) {
        const long long k = std::max(0LL, std::llround(t / dt) - 1);
        if (static_cast<std::size_t>(k) < steps) pulses[static_cast<std::size_t>(k)].push_back(q);
      }
      auto& rec = spikes[static_cast<std::size_t>(Layer::kTeaching)][q];
      for (double t : options.teaching[q].times())
        if (t < duration_ms) rec.push_back(t);
    }
  }

  // STDP state for the plastic projection.
  const bool stdp_on = options.stdp && plastic_index < projections.size();
  const plasticity::StdpParams& sp = cfg.stdp;
  std::vector<double> pre_trace(topo.size(Layer::kHidden), 0.0);
  std::vector<double> post_trace(topo.size(Layer::kOutput), 0.0);
  const double pre_decay = std::exp(-dt / sp.tau_plus);
  const double post_decay = std::exp(-dt / sp.tau_minus);
  std::vector<double> v(n_lif, np.v_leak);
  std::vector<double> syn(n_lif, 0.0);
  std::vector<std::size_t> ref_until(n_lif, 0);  // first step no longer clamped
  const std::size_t ref_steps = static_cast<std::size_t>(std::llround(np.t_ref / dt));
  const double syn_decay = std::exp(-dt / np.tau_syn);
  const double mem_decay = std::exp(-dt / np.tau_m);

  std::vector<double> i_ext(n_lif, 0.0);
  const LayerRange l1 = topo.range(Layer::kInput);
  for (std::size_t n = 0; n < l1.size; ++n) i_ext[l1.first + n] = stimulus.amplitude_pa[n];
  const LayerRange l2 = topo.range(Layer::kHidden);
  const LayerRange l3 = topo.range(Layer::kOutput);

  std::vector<std::size_t> fired;
  std::size_t noise_pos = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    Slot& slot = ring[k % ring_size];
    for (std::size_t n = 0; n < n_lif; ++n) {
      syn[n] += slot.per_neuron[n];
      slot.per_neuron[n] = 0.0;
    }
    for (Layer l : kAllLayers) {
      double& b = slot.broadcast[static_cast<std::size_t>(l)];
      if (b == 0.0) continue;
      const LayerRange& r = topo.range(l);
      for (std::size_t n = r.first; n < r.first + r.size; ++n) syn[n] += b;
      b = 0.0;
    }
    if (!pulses.empty())
      for (std::size_t q : pulses[k]) i_ext[l3.first + q] += cfg.teaching_pulse_pa;

    fired.clear();
    for (std::size_t n = 0; n < n_lif; ++n) {
      syn[n] *= syn_decay;
      if (k < ref_until[n]) {
        v[n] = np.v_reset;
        continue;
      }
      const double v_inf = np.v_leak + syn[n] + R * i_ext[n];
      const double vn = v_inf + (v[n] - v_inf) * mem_decay;
      if (vn >= np.v_th) {
        v[n] = np.v_reset;
        ref_until[n] = k + 1 + ref_steps;
        fired.push_back(n);
      } else {
        v[n] = vn;
      }
    }
    if (!pulses.empty())
      for (std::size_t q : pulses[k]) i_ext[l3.first + q] -= cfg.teaching_pulse_pa;

    const double t_spike = static_cast<double>(k + 1) * dt;
    for (std::size_t n : fired) {
      Layer layer = Layer::kInput;
      for (Layer l : {Layer::kInput, Layer::kHidden, Layer::kOutput, Layer::kInhibition}) {
        const LayerRange& r = topo.range(l);
        if (n >= r.first && n < r.first + r.size) layer = l;
      }
      const std::size_t local = n - topo.range(layer).first;
      if (k + 1 < steps) spikes[static_cast<std::size_t>(layer)][local].push_back(t_spike);
      for (std::size_t proj : outgoing[static_cast<std::size_t>(layer)])
        deliver(proj, local, k + 1 + proj_delay[proj]);
    }

    while (noise_pos < noise_events.size() && noise_events[noise_pos].t < t_spike) {
      const NoiseEvent& e = noise_events[noise_pos++];
      for (std::size_t proj : outgoing[static_cast<std::size_t>(Layer::kNoise)]) {
        const double a = std::ceil((e.t + projections[proj].delay_ms) / dt - 1e-9);
        deliver(proj, e.gen, std::max(k + 1, static_cast<std::size_t>(a)));
      }
    }

    if (stdp_on) {
      for (double& x : pre_trace) x *= pre_decay;
      for (double& y : post_trace) y *= post_decay;
      const Projection& p = projections[plastic_index];
      const std::size_t n3 = l3.size;
      std::vector<std::size_t> pre_fired, post_fired;
      for (std::size_t n : fired) {
        if (n >= l2.first && n < l2.first + l2.size) pre_fired.push_back(n - l2.first);
        if (n >= l3.first && n < l3.first + l3.size) post_fired.push_back(n - l3.first);
      }
      auto bump = [&](double& w, double dw) { w = std::clamp(w + dw, sp.w_min, sp.w_max); };
      for (std::size_t i : pre_fired) {
        if (p.pattern == Connectivity::kOneToOne) {
          if (i < n3) bump(plastic_w[i], -sp.a_minus * post_trace[i]);
        } else {
          for (std::size_t j = 0; j < n3; ++j) bump(plastic_w[i * n3 + j], -sp.a_minus * post_trace[j]);
        }
      }
      for (std::size_t j : post_fired) {
        if (p.pattern == Connectivity::kOneToOne) {
          if (j < pre_trace.size()) bump(plastic_w[j], sp.a_plus * pre_trace[j]);
        } else {
          for (std::size_t i = 0; i < pre_trace.size(); ++i)
            bump(plastic_w[i * n3 + j], sp.a_plus * pre_trace[i]);
        }
      }
      for (std::size_t i : pre_fired) pre_trace[i] += 1.0;
      for (std::size_t j : post_fired) post_trace[j] += 1.0;
    }
  }

  result.final_l2l3_weights = plastic_w;
  for (Layer l : kAllLayers) {
    auto& dst = result.trains[static_cast<std::size_t>(l)];
    for (auto& times : spikes[static_cast<std::size_t>(l)]) {
      SpikeTrain tr(std::move(times), duration_ms);
      if (options.apply_report_correction) tr = tr.shifted_earlier(topo.report_delay_correction_ms);
      dst.push_back(std::move(tr));
    }
  }
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
  return result;
}

}  // namespace spikecrypt::snn
