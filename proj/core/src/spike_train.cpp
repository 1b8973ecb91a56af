// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/spike_train.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "spikecrypt/error.hpp"

namespace spikecrypt {

SpikeTrain::SpikeTrain(std::vector<double> times, double duration_ms)
    : times_(std::move(times)), duration_(duration_ms) {
  if (!(duration_ >= 0.0) || !std::isfinite(duration_)) {
    throw ValidationError("spike train duration must be finite and non-negative");
  }
  for (std::size_t k = 0; k < times_.size(); ++k) {
    const double t = times_[k];
    if (!(t >= 0.0 && t < duration_)) {
      throw ValidationError("spike time " + format_double(t) + " outside [0, " +
                            format_double(duration_) + ")");
    }
    if (k > 0 && !(t > times_[k - 1])) {
      throw ValidationError("spike times must be strictly increasing");
    }
  }
}

double SpikeTrain::rate_hz() const {
  return duration_ > 0.0 ? 1000.0 * static_cast<double>(times_.size()) / duration_ : 0.0;
}

SpikeTrain SpikeTrain::shifted_earlier(double offset_ms) const {
  std::vector<double> out;
  out.reserve(times_.size());
  for (double t : times_) {
    if (t - offset_ms >= 0.0) out.push_back(t - offset_ms);
  }
  return SpikeTrain(std::move(out), duration_);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

SpikeTrain SpikeTable::train(std::size_t neuron_id, double duration_ms) const {
  auto it = by_neuron.find(neuron_id);
  if (it == by_neuron.end()) return SpikeTrain::empty(duration_ms);
  return SpikeTrain(it->second, duration_ms);
}

std::vector<double> SpikeTable::merged() const {
  std::vector<double> out;
  for (const auto& [id, times] : by_neuron) out.insert(out.end(), times.begin(), times.end());
  std::sort(out.begin(), out.end());
  return out;
}

double SpikeTable::last_time() const {
  double last = 0.0;
  for (const auto& [id, times] : by_neuron)
    if (!times.empty()) last = std::max(last, times.back());
  return last;
}

void write_spike_rows(std::ostream& out, std::span<const SpikeTrain> trains,
                      std::size_t first_id) {
  for (std::size_t n = 0; n < trains.size(); ++n) {
    for (double t : trains[n].times()) out << first_id + n << ',' << format_double(t) << '\n';
  }
}

void write_spikes_csv(std::ostream& out, std::span<const SpikeTrain> trains,
                      std::size_t first_id) {
  out << "neuron_id,time_ms\n";
  write_spike_rows(out, trains, first_id);
}

SpikeTable read_spikes_csv(std::istream& in) {
  SpikeTable table;
  std::string line;
  if (!std::getline(in, line)) return table;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "neuron_id,time_ms") {
    throw ValidationError("spike CSV must start with header 'neuron_id,time_ms'");
  }
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("spike CSV row " + std::to_string(row) + " has no comma");
    }
    std::size_t id = 0;
    double t = 0.0;
    const char* b = line.data();
    auto r1 = std::from_chars(b, b + comma, id);
    auto r2 = std::from_chars(b + comma + 1, b + line.size(), t);
    if (r1.ec != std::errc{} || r1.ptr != b + comma || r2.ec != std::errc{} ||
        r2.ptr != b + line.size()) {
      throw ValidationError("spike CSV row " + std::to_string(row) + " is malformed");
    }
    table.by_neuron[id].push_back(t);
  }
  for (auto& [id, times] : table.by_neuron) std::sort(times.begin(), times.end());
  return table;
}

}  // namespace spikecrypt
