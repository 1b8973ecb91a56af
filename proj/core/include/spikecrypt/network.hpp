// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spikecrypt/codec.hpp"
#include "spikecrypt/lif.hpp"
#include "spikecrypt/plasticity.hpp"
#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::snn {

enum class Layer : std::size_t { kInput, kHidden, kOutput, kInhibition, kNoise, kTeaching };
inline constexpr std::size_t kLayerCount = 6;
inline constexpr std::array<Layer, kLayerCount> kAllLayers = {
    Layer::kInput, Layer::kHidden, Layer::kOutput, Layer::kInhibition, Layer::kNoise,
    Layer::kTeaching};

/// "L1", "L2", "L3", "LI", "noise", "teaching".
std::string_view layer_name(Layer l);

enum class Connectivity { kOneToOne, kAllToAll, kRoundRobin };
enum class SynapseKind { kStatic, kStdp };

std::string_view connectivity_name(Connectivity c);
Connectivity parse_connectivity(std::string_view name);

/// Every tunable of the six-layer network. Weights are in pA.
struct NetworkConfig {
  lif::LifParams neuron;

  double weight_l1l2 = 1200.0;
  double weight_l2l3_min = 400.0;
  double weight_l2l3_max = 900.0;
  double weight_l2l3_init = 420.0;
  double weight_lil2 = -100.0;
  double weight_l3li = 350.0;
  double weight_noise = 500.0;

  double noise_rate_hz = 10.0;
  double delay_ms = 1.0;
  double report_delay_correction_ms = 13.0;
  double dt_ms = 0.1;

  double i_on_pa = codec::kDefaultOnCurrentPa;
  double teaching_pulse_pa = 50000.0;

  std::size_t hidden_size = 0;    // 0: same as L1
  std::size_t noise_neurons = 0;  // 0: same as L2
  Connectivity l2l3 = Connectivity::kOneToOne;

  plasticity::StdpParams stdp;

  /// Throws ConfigError on inconsistent values.
  void validate() const;
};

/// JSON keys: t_ref, V_th, C_m, tau_m, tau_syn, E_L, V_reset, weight_l1l2,
/// weight_l2l3_min, weight_l2l3_max, weight_l2l3_init, weight_lil2,
/// weight_l3li, weight_noise, noise_rate_hz, delay_ms,
/// report_delay_correction_ms, dt_ms, i_on_pa, teaching_pulse_pa,
/// hidden_size, noise_neurons, l2l3_connectivity, stdp_a_plus, stdp_a_minus,
/// stdp_tau_plus, stdp_tau_minus. Missing keys keep the values of `base`.
NetworkConfig config_from_json(std::string_view json, const NetworkConfig& base = {});
std::string config_to_json(const NetworkConfig& cfg);

struct SynapseSpec {
  std::size_t pre = 0;   // global neuron id
  std::size_t post = 0;  // global neuron id
  double weight = 0.0;
  double delay_ms = 0.0;
  SynapseKind kind = SynapseKind::kStatic;
};

/// A structured projection between two layers.
///
/// weights layout: one-to-one -> one per pair; all-to-all -> row-major
/// [pre][post]; round-robin -> one per pre neuron. A single weight means
/// every synapse of the projection shares it.
struct Projection {
  Layer pre = Layer::kInput;
  Layer post = Layer::kHidden;
  Connectivity pattern = Connectivity::kOneToOne;
  SynapseKind kind = SynapseKind::kStatic;
  double delay_ms = 1.0;
  std::vector<double> weights;

  bool uniform() const { return weights.size() == 1; }
};

struct LayerRange {
  std::size_t first = 0;
  std::size_t size = 0;
};

struct NetworkTopology {
  std::array<LayerRange, kLayerCount> layers{};
  std::vector<Projection> projections;
  double noise_rate_hz = 10.0;
  double report_delay_correction_ms = 13.0;

  const LayerRange& range(Layer l) const { return layers[static_cast<std::size_t>(l)]; }
  std::size_t size(Layer l) const { return range(l).size; }
  std::size_t total_neurons() const;
  /// Expands every projection into explicit synapses.
  std::vector<SynapseSpec> synapses() const;
};

/// Immutable network description. Simulation state lives in `run`.
class Network {
 public:
  const NetworkConfig& config() const { return config_; }
  const NetworkTopology& topology() const { return topology_; }
  std::size_t message_len() const { return message_len_; }
  std::uint64_t seed() const { return seed_; }

  /// The plastic L2 -> L3 projection.
  const Projection& l2l3() const;
  /// Copy with replaced L2 -> L3 weights (clamped to the configured bounds).
  Network with_l2l3_weights(std::vector<double> weights) const;

 private:
  friend Network build_network(std::size_t, const NetworkConfig&, std::uint64_t);
  NetworkConfig config_;
  NetworkTopology topology_;
  std::size_t message_len_ = 0;
  std::uint64_t seed_ = 0;
  std::size_t l2l3_index_ = 0;
};

/// Wires L1..L3, lateral inhibition, noise and teaching layers for a message
/// of `message_len` bytes (L1 = 8 * message_len).
Network build_network(std::size_t message_len, const NetworkConfig& config, std::uint64_t seed);

/// Homogeneous Poisson process over [0, T). Throws ValidationError for a
/// negative rate or non-positive T.
SpikeTrain poisson_train(double rate_hz, double duration_ms, std::uint64_t seed);

struct RunOptions {
  bool noise = true;
  bool lateral_inhibition = true;
  bool stdp = true;
  // One target train per L3 neuron; empty disables the teaching layer.
  std::vector<SpikeTrain> teaching;
  bool apply_report_correction = false;
  // Overrides the network seed for the noise generators.
  std::optional<std::uint64_t> noise_seed;
};

struct SimulationResult {
  std::array<std::vector<SpikeTrain>, kLayerCount> trains;
  std::vector<double> final_l2l3_weights;
  double duration_ms = 0.0;
  double wall_time_ms = 0.0;

  const std::vector<SpikeTrain>& layer(Layer l) const {
    return trains[static_cast<std::size_t>(l)];
  }
  std::size_t spike_count(Layer l) const;
};

/// Simulates the network for `duration_ms` with the stimulus driving L1.
/// Throws ShapeError if the stimulus does not match L1 or the teaching set
/// does not match L3.
SimulationResult run(const Network& net, const codec::StimulusPlan& stimulus, double duration_ms,
                     const RunOptions& options = {});

}  // namespace spikecrypt::snn
