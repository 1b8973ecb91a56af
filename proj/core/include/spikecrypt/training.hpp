// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spikecrypt/network.hpp"
#include "spikecrypt/plasticity.hpp"

namespace spikecrypt::plasticity {

struct TrainingExample {
  codec::StimulusPlan stimulus;
  std::vector<SpikeTrain> targets;  // one per L3 neuron
};

struct TrainOptions {
  ResumeParams resume;
  double vp_q = 1.0;                  // 1/ms
  double convergence_threshold = 1.0; // mean VP distance per neuron
  double window_ms = 200.0;
  bool noise = false;
};

struct TrainResult {
  std::vector<double> weights;                       // final L2 -> L3 weights
  std::vector<double> epoch_distance;                // mean VP before each epoch's update
  std::vector<std::vector<double>> weight_trajectory; // weights entering each epoch
  double final_distance = 0.0;
  std::size_t epochs_run = 0;
  bool converged = false;
  std::string report;
};

/// Batch ReSuMe on the L2 -> L3 projection. Each epoch runs every example
/// (STDP and teaching off), records the mean Victor-Purpura distance between
/// L3 output and target, stops if it is at or below the threshold, and
/// otherwise applies the summed weight changes. Non-convergence is reported
/// through `converged == false` and `report`. Throws ValidationError for an
/// empty dataset or mismatched shapes.
TrainResult train(const snn::Network& net, std::span<const TrainingExample> dataset,
                  const TrainOptions& options);

/// Single-byte student/teacher task: targets are the L3 output of a network
/// whose L2 -> L3 weights are drawn uniformly from the weight bounds, run
/// with noise and STDP off.
struct ToyTask {
  snn::Network student;
  std::vector<double> teacher_weights;
  std::vector<TrainingExample> dataset;
};

ToyTask make_toy_task(std::uint8_t byte, const snn::NetworkConfig& config, std::uint64_t seed,
                      double window_ms = 200.0);

/// Mean Victor-Purpura distance between paired trains.
double mean_vp_distance(std::span<const SpikeTrain> a, std::span<const SpikeTrain> b, double q);

}  // namespace spikecrypt::plasticity
