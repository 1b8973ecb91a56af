// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::metrics {

/// Victor-Purpura distance: minimum cost of turning `a` into `b` with
/// insertions and deletions (cost 1) and shifts (cost q * |dt|).
/// Throws ValidationError for q < 0.
double vp_distance(std::span<const double> a, std::span<const double> b, double q);
double vp_distance(const SpikeTrain& a, const SpikeTrain& b, double q);

enum class VrReport {
  kIntegral,  // (1/tau) * integral of the squared difference
  kRoot,      // square root of the above
};

/// Van Rossum distance with a causal exponential kernel, evaluated in
/// closed form over spike pairs. Throws ValidationError for tau <= 0.
double vr_distance(std::span<const double> a, std::span<const double> b, double tau,
                   VrReport report = VrReport::kIntegral);
double vr_distance(const SpikeTrain& a, const SpikeTrain& b, double tau,
                   VrReport report = VrReport::kIntegral);

/// Spike counts per bin over [0, duration).
std::vector<std::size_t> bin_spikes(const SpikeTrain& train, double bin_ms = 1.0);

/// Symmetric N x N matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<std::size_t> labels);
  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v);
  const std::vector<std::size_t>& labels() const { return labels_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::vector<std::size_t> labels_;
};

DistanceMatrix vp_distance_matrix(std::span<const SpikeTrain> trains, double q,
                                  std::vector<std::size_t> labels = {});

/// Normalized rank matrix built from a distance matrix.
struct RankMatrix {
  std::size_t n = 0;
  std::vector<double> values;  // row-major
  std::vector<std::size_t> labels;

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// Ranks the upper-triangle entries so the largest distance gets rank 0,
/// mirrors them, and divides by N(N-1)/2. Equal distances are ranked in
/// (row, col) order. The diagonal is 0. Throws ValidationError for N < 2.
RankMatrix rank_order_matrix(const DistanceMatrix& d);

/// Permutes rows and columns so neurons appear by descending firing rate;
/// ties keep ascending label order.
RankMatrix reindex_by_firing_rate(const RankMatrix& m, std::span<const double> rates);

void write_matrix_csv(std::ostream& out, std::span<const std::size_t> labels,
                      std::span<const double> values);

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
};

/// nullopt marks a metric whose denominator is zero.
struct ConfusionMetrics {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> specificity;
  std::optional<double> f1;
  std::optional<double> fpr;
  std::optional<double> fnr;
  std::optional<double> wcr;
  std::optional<double> ccr;
};

/// Throws ValidationError when all counts are zero.
ConfusionMetrics confusion_metrics(const ConfusionCounts& c);

}  // namespace spikecrypt::metrics
