// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/training.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "spikecrypt/error.hpp"
#include "spikecrypt/metrics.hpp"

namespace spikecrypt::plasticity {

double mean_vp_distance(std::span<const SpikeTrain> a, std::span<const SpikeTrain> b, double q) {
  if (a.size() != b.size()) throw ShapeError("train sets differ in size");
  if (a.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) total += metrics::vp_distance(a[k], b[k], q);
  return total / static_cast<double>(a.size());
}

namespace {

snn::RunOptions training_run_options(const TrainOptions& options) {
  snn::RunOptions ro;
  ro.noise = options.noise;
  ro.stdp = false;
  return ro;
}

}  // namespace

TrainResult train(const snn::Network& net, std::span<const TrainingExample> dataset,
                  const TrainOptions& options) {
  using snn::Layer;
  if (dataset.empty()) throw ValidationError("training dataset is empty");
  if (options.resume.epochs == 0) throw ValidationError("training needs at least one epoch");
  options.resume.validate();
  const auto& topo = net.topology();
  const std::size_t n3 = topo.size(Layer::kOutput);
  for (const auto& ex : dataset) {
    if (ex.targets.size() != n3) {
      throw ShapeError("each example needs " + std::to_string(n3) + " target trains");
    }
    if (ex.stimulus.amplitude_pa.size() != topo.size(Layer::kInput)) {
      throw ShapeError("stimulus does not match the input layer");
    }
  }

  ResumeParams rp = options.resume;
  rp.w_min = net.config().weight_l2l3_min;
  rp.w_max = net.config().weight_l2l3_max;
  const bool one_to_one = net.l2l3().pattern == snn::Connectivity::kOneToOne;
  const snn::RunOptions ro = training_run_options(options);

  TrainResult out;
  std::vector<double> w = net.l2l3().weights;
  if (w.size() == 1) w.assign(one_to_one ? n3 : topo.size(Layer::kHidden) * n3, w[0]);

  auto evaluate = [&](const std::vector<double>& weights, std::vector<double>* delta) {
    const snn::Network current = net.with_l2l3_weights(weights);
    double dist = 0.0;
    for (const auto& ex : dataset) {
      const auto sim = snn::run(current, ex.stimulus, options.window_ms, ro);
      const auto& hidden = sim.layer(Layer::kHidden);
      const auto& output = sim.layer(Layer::kOutput);
      std::vector<SpikeTrain> targets;
      targets.reserve(n3);
      for (const auto& t : ex.targets) targets.push_back(SpikeTrain(t.times(), options.window_ms));
      dist += mean_vp_distance(output, targets, options.vp_q);
      if (delta == nullptr) continue;
      for (std::size_t j = 0; j < n3; ++j) {
        if (one_to_one) {
          (*delta)[j] += resume_delta(hidden[j], output[j], targets[j], rp);
        } else {
          for (std::size_t i = 0; i < hidden.size(); ++i)
            (*delta)[i * n3 + j] += resume_delta(hidden[i], output[j], targets[j], rp);
        }
      }
    }
    return dist / static_cast<double>(dataset.size());
  };

  for (std::size_t epoch = 0; epoch < rp.epochs; ++epoch) {
    out.weight_trajectory.push_back(w);
    std::vector<double> delta(w.size(), 0.0);
    const double dist = evaluate(w, &delta);
    out.epoch_distance.push_back(dist);
    out.epochs_run = epoch + 1;
    out.final_distance = dist;
    if (dist <= options.convergence_threshold) {
      out.converged = true;
      break;
    }
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] = std::clamp(w[k] + delta[k], rp.w_min, rp.w_max);
  }
  if (!out.converged) out.final_distance = evaluate(w, nullptr);
  if (!out.converged && out.final_distance <= options.convergence_threshold) out.converged = true;
  out.weights = w;

  std::ostringstream msg;
  if (out.converged) {
    msg << "converged after " << out.epochs_run << " epoch(s); mean VP distance "
        << format_double(out.final_distance);
  } else {
    msg << "did not converge within " << rp.epochs << " epochs; mean VP distance "
        << format_double(out.final_distance) << " above threshold "
        << format_double(options.convergence_threshold);
  }
  out.report = msg.str();
  return out;
}

ToyTask make_toy_task(std::uint8_t byte, const snn::NetworkConfig& config, std::uint64_t seed,
                      double window_ms) {
  using snn::Layer;
  ToyTask task{snn::build_network(1, config, seed), {}, {}};
  const auto& cfg = task.student.config();
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(cfg.weight_l2l3_min, cfg.weight_l2l3_max);
  task.teacher_weights.resize(task.student.l2l3().weights.size());
  for (double& w : task.teacher_weights) w = dist(gen);

  const snn::Network teacher = task.student.with_l2l3_weights(task.teacher_weights);
  const std::uint8_t data[1] = {byte};
  const std::uint8_t zero_key[1] = {0};
  TrainingExample ex;
  ex.stimulus = codec::encode_bytes(data, zero_key, window_ms, cfg.i_on_pa);
  snn::RunOptions ro;
  ro.noise = false;
  ro.stdp = false;
  ex.targets = snn::run(teacher, ex.stimulus, window_ms, ro).layer(Layer::kOutput);
  task.dataset.push_back(std::move(ex));
  return task;
}

}  // namespace spikecrypt::plasticity
