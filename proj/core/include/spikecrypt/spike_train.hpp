// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace spikecrypt {

/// Ordered spike times (ms) of one neuron over a window [0, duration).
class SpikeTrain {
 public:
  SpikeTrain() = default;
  /// Throws ValidationError unless times are strictly increasing and in [0, duration).
  SpikeTrain(std::vector<double> times, double duration_ms);

  static SpikeTrain empty(double duration_ms) { return SpikeTrain({}, duration_ms); }

  const std::vector<double>& times() const { return times_; }
  double duration() const { return duration_; }
  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }

  /// Firing rate in Hz over the whole window.
  double rate_hz() const;
  /// Copy with every spike moved by -offset_ms; spikes that land before 0 are dropped.
  SpikeTrain shifted_earlier(double offset_ms) const;

  friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

 private:
  std::vector<double> times_;
  double duration_ = 0.0;
};

/// Spikes grouped by neuron id as read back from CSV.
struct SpikeTable {
  std::map<std::size_t, std::vector<double>> by_neuron;

  /// Train for one neuron (empty if absent).
  SpikeTrain train(std::size_t neuron_id, double duration_ms) const;
  /// All spikes regardless of neuron, merged and sorted.
  std::vector<double> merged() const;
  double last_time() const;
};

// CSV layout: header "neuron_id,time_ms", one row per spike, neurons in
// ascending id order and times ascending within a neuron.
void write_spikes_csv(std::ostream& out, std::span<const SpikeTrain> trains,
                      std::size_t first_id = 0);
void write_spike_rows(std::ostream& out, std::span<const SpikeTrain> trains,
                      std::size_t first_id);
SpikeTable read_spikes_csv(std::istream& in);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace spikecrypt
