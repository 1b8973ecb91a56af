// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "spikecrypt/error.hpp"

namespace spikecrypt::metrics {

double vp_distance(std::span<const double> a, std::span<const double> b, double q) {
  if (!(q >= 0.0)) throw ValidationError("Victor-Purpura cost q must be non-negative");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // Two-row DP over prefixes.
  std::vector<double> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<double>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const double shift = prev[j - 1] + q * std::abs(a[i - 1] - b[j - 1]);
      cur[j] = std::min({prev[j] + 1.0, cur[j - 1] + 1.0, shift});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double vp_distance(const SpikeTrain& a, const SpikeTrain& b, double q) {
  return vp_distance(std::span<const double>(a.times()), std::span<const double>(b.times()), q);
}

namespace {

double kernel_sum(std::span<const double> x, std::span<const double> y, double tau) {
  double s = 0.0;
  for (double tx : x)
    for (double ty : y) s += std::exp(-std::abs(tx - ty) / tau);
  return s;
}

}  // namespace

double vr_distance(std::span<const double> a, std::span<const double> b, double tau,
                   VrReport report) {
  if (!(tau > 0.0)) throw ValidationError("Van Rossum tau must be positive");
  const double d = 0.5 * (kernel_sum(a, a, tau) + kernel_sum(b, b, tau) - 2.0 * kernel_sum(a, b, tau));
  const double clamped = std::max(d, 0.0);
  return report == VrReport::kRoot ? std::sqrt(clamped) : clamped;
}

double vr_distance(const SpikeTrain& a, const SpikeTrain& b, double tau, VrReport report) {
  return vr_distance(std::span<const double>(a.times()), std::span<const double>(b.times()), tau,
                     report);
}

std::vector<std::size_t> bin_spikes(const SpikeTrain& train, double bin_ms) {
  if (!(bin_ms > 0.0)) throw ValidationError("bin width must be positive");
  const auto bins = static_cast<std::size_t>(std::ceil(train.duration() / bin_ms));
  std::vector<std::size_t> counts(bins, 0);
  for (double t : train.times()) {
    auto k = static_cast<std::size_t>(t / bin_ms);
    if (k >= bins) k = bins - 1;
    ++counts[k];
  }
  return counts;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::size_t> labels)
    : n_(n), values_(n * n, 0.0), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), std::size_t{0});
  }
  if (labels_.size() != n) throw ShapeError("label count does not match matrix size");
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double v) {
  if (i >= n_ || j >= n_) throw ShapeError("matrix index out of range");
  if (i == j && v != 0.0) throw ValidationError("distance matrix diagonal must be zero");
  values_[i * n_ + j] = v;
  values_[j * n_ + i] = v;
}

DistanceMatrix vp_distance_matrix(std::span<const SpikeTrain> trains, double q,
                                  std::vector<std::size_t> labels) {
  DistanceMatrix d(trains.size(), std::move(labels));
  for (std::size_t i = 0; i < trains.size(); ++i)
    for (std::size_t j = i + 1; j < trains.size(); ++j)
      d.set(i, j, vp_distance(trains[i], trains[j], q));
  return d;
}

RankMatrix rank_order_matrix(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n < 2) throw ValidationError("rank matrix needs at least two neurons");
  struct Entry {
    double value;
    std::size_t i, j;
  };
  std::vector<Entry> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back({d.at(i, j), i, j});
  // Largest distance first; stable sort keeps (row, col) order for ties.
  std::stable_sort(upper.begin(), upper.end(),
                   [](const Entry& x, const Entry& y) { return x.value > y.value; });
  const double norm = static_cast<double>(upper.size());
  RankMatrix m{n, std::vector<double>(n * n, 0.0), d.labels()};
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const double v = static_cast<double>(r) / norm;
    m.values[upper[r].i * n + upper[r].j] = v;
    m.values[upper[r].j * n + upper[r].i] = v;
  }
  return m;
}

RankMatrix reindex_by_firing_rate(const RankMatrix& m, std::span<const double> rates) {
  if (rates.size() != m.n) throw ShapeError("rate count does not match matrix size");
  std::vector<std::size_t> order(m.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (rates[x] != rates[y]) return rates[x] > rates[y];
    return m.labels[x] < m.labels[y];
  });
  RankMatrix out{m.n, std::vector<double>(m.n * m.n, 0.0), {}};
  out.labels.reserve(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    out.labels.push_back(m.labels[order[r]]);
    for (std::size_t c = 0; c < m.n; ++c) out.values[r * m.n + c] = m.at(order[r], order[c]);
  }
  return out;
}

void write_matrix_csv(std::ostream& out, std::span<const std::size_t> labels,
                      std::span<const double> values) {
  const std::size_t n = labels.size();
  if (values.size() != n * n) throw ShapeError("matrix values do not match label count");
  out << "neuron_id";
  for (std::size_t id : labels) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < n; ++j) out << ',' << format_double(values[i * n + j]);
    out << '\n';
  }
}

namespace {

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

}  // namespace

ConfusionMetrics confusion_metrics(const ConfusionCounts& c) {
  const double tp = static_cast<double>(c.tp);
  const double tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp);
  const double fn = static_cast<double>(c.fn);
  const double total = tp + tn + fp + fn;
  if (total == 0.0) throw ValidationError("confusion counts are all zero");
  ConfusionMetrics m;
  m.accuracy = (tp + tn) / total;
  m.ccr = (tp + tn) / total;
  m.wcr = (fp + fn) / total;
  m.precision = ratio(tp, tp + fp);
  m.recall = ratio(tp, tp + fn);
  m.specificity = ratio(tn, tn + fp);
  m.fpr = ratio(fp, fp + tn);
  m.fnr = ratio(fn, fn + tp);
  if (m.precision && m.recall) m.f1 = ratio(2.0 * *m.precision * *m.recall, *m.precision + *m.recall);
  return m;
}

}  // namespace spikecrypt::metrics
