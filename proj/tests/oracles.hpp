// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

// Slow reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace spikecrypt::oracle {

// Minimum edit cost found by trying every partial matching between spikes of
// `a` and spikes of `b` (crossing matchings included). Matched pairs cost
// q * |dt|, every unmatched spike costs 1.
inline double vp_brute_force(const std::vector<double>& a, const std::vector<double>& b,
                             double q) {
  std::vector<bool> used(b.size(), false);
  double best = std::numeric_limits<double>::infinity();
  auto rec = [&](auto&& self, std::size_t i, double cost, std::size_t matched) -> void {
    if (i == a.size()) {
      best = std::min(best, cost + static_cast<double>(a.size() + b.size() - 2 * matched));
      return;
    }
    self(self, i + 1, cost, matched);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      self(self, i + 1, cost + q * std::abs(a[i] - b[j]), matched + 1);
      used[j] = false;
    }
  };
  rec(rec, 0, 0.0, 0);
  return best;
}

// (1/tau) * integral of the squared difference of the exponentially filtered
// trains, by the trapezoid rule with step h. The integration range is split at
// every spike so no panel straddles a jump, and runs 40 tau past the last spike.
inline double vr_trapezoid(const std::vector<double>& a, const std::vector<double>& b, double tau,
                           double h = 1e-3) {
  std::vector<double> events(a);
  events.insert(events.end(), b.begin(), b.end());
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  if (events.empty()) return 0.0;
  auto diff_at = [&](double t) {
    double d = 0;
    for (double s : a)
      if (s <= t) d += std::exp(-(t - s) / tau);
    for (double s : b)
      if (s <= t) d -= std::exp(-(t - s) / tau);
    return d;
  };
  double total = 0.0;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const double start = events[k];
    const double end = k + 1 < events.size() ? events[k + 1] : start + 40.0 * tau;
    const double d0 = diff_at(start);  // right limit: spikes at `start` included
    const auto steps = static_cast<std::size_t>(std::ceil((end - start) / h - 1e-9));
    if (steps == 0) continue;
    const double step = (end - start) / static_cast<double>(steps);
    const double r = std::exp(-step / tau);
    double prev = d0 * d0;
    double cur = d0;
    double seg = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      cur *= r;
      const double sq = cur * cur;
      seg += 0.5 * (prev + sq) * step;
      prev = sq;
    }
    total += seg;
  }
  return total / tau;
}

// Strictly increasing spike times on a 1/8 ms grid, so sums stay exact in binary.
inline std::vector<double> dyadic_train(std::mt19937_64& gen, std::size_t max_spikes,
                                        int grid_points) {
  std::uniform_int_distribution<int> count(0, static_cast<int>(max_spikes));
  std::uniform_int_distribution<int> slot(0, grid_points - 1);
  std::vector<int> slots;
  const int n = count(gen);
  while (static_cast<int>(slots.size()) < n) {
    const int s = slot(gen);
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) slots.push_back(s);
  }
  std::sort(slots.begin(), slots.end());
  std::vector<double> t;
  for (int s : slots) t.push_back(s / 8.0);
  return t;
}

}  // namespace spikecrypt::oracle
