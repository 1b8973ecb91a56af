// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "spikecrypt/error.hpp"
#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::bench {

namespace {

using Clock = std::chrono::steady_clock;

double timed_average(const std::function<void()>& op, std::size_t iterations) {
  const auto start = Clock::now();
  for (std::size_t k = 0; k < iterations; ++k) op();
  const auto elapsed = Clock::now() - start;
  // A clock tick is the smallest measurable duration.
  const auto ns = std::max<std::int64_t>(
      1, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
  return static_cast<double>(ns) * 1e-9 / static_cast<double>(iterations);
}

void check_counts(std::size_t iterations, std::size_t warmup) {
  if (iterations < kMinIterations) {
    throw ValidationError("benchmarks need at least " + std::to_string(kMinIterations) +
                          " iterations");
  }
  if (warmup < 1) throw ValidationError("benchmarks need at least one warmup iteration");
}

}  // namespace

BenchmarkRecord time_cycle(const std::function<void()>& op, std::size_t iterations,
                           std::size_t warmup, std::string algorithm, std::string variant,
                           std::size_t payload_bytes) {
  check_counts(iterations, warmup);
  for (std::size_t k = 0; k < warmup; ++k) op();
  BenchmarkRecord r;
  r.algorithm = std::move(algorithm);
  r.variant = std::move(variant);
  r.iterations = iterations;
  r.payload_bytes = payload_bytes;
  r.avg_time_s = timed_average(op, iterations);
  r.iters_per_s = 1.0 / r.avg_time_s;
  return r;
}

const std::vector<std::string>& comparison_columns() {
  static const std::vector<std::string> cols = {
      "Algorithm",       "Library / Method",  "Average Time (s)",
      "Iterations per Second", "Performance Factor", "Key Size",
      "Enc. Latency (ms)",     "Dec. Latency (ms)",  "Rounds"};
  return cols;
}

ComparisonTable compare(std::span<const AlgorithmSpec> algorithms,
                        std::span<const std::uint8_t> payload, std::size_t iterations,
                        std::size_t warmup, std::size_t baseline) {
  if (algorithms.size() < 2) throw ValidationError("comparison needs at least two algorithms");
  if (baseline >= algorithms.size()) throw ValidationError("baseline index out of range");
  check_counts(iterations, warmup);

  ComparisonTable table;
  table.baseline = algorithms[baseline].name;
  for (const auto& a : algorithms) {
    if (!a.encrypt || !a.decrypt) throw ValidationError("algorithm '" + a.name + "' lacks a closure");
    const Bytes ct = a.encrypt(payload);
    ComparisonRow row;
    row.key_size = a.key_size;
    row.rounds = a.rounds;
    row.cycle = time_cycle([&] { (void)a.decrypt(a.encrypt(payload)); }, iterations, warmup,
                           a.name, a.variant, payload.size());
    row.enc_latency_ms =
        time_cycle([&] { (void)a.encrypt(payload); }, iterations, warmup).avg_time_s * 1e3;
    row.dec_latency_ms =
        time_cycle([&] { (void)a.decrypt(ct); }, iterations, warmup).avg_time_s * 1e3;
    table.rows.push_back(std::move(row));
  }
  const double base = table.rows[baseline].cycle.avg_time_s;
  for (auto& row : table.rows) row.factor = base / row.cycle.avg_time_s;
  return table;
}

StabilityReport repeat_stability(const std::function<void()>& op, std::size_t runs,
                                 std::size_t iterations, std::size_t warmup, double cv_threshold) {
  if (runs < 2) throw ValidationError("stability check needs at least two runs");
  StabilityReport rep;
  double sum = 0.0;
  for (std::size_t k = 0; k < runs; ++k) {
    rep.runs.push_back(time_cycle(op, iterations, warmup));
    sum += rep.runs.back().avg_time_s;
  }
  rep.mean_s = sum / static_cast<double>(runs);
  double ss = 0.0;
  for (const auto& r : rep.runs) ss += (r.avg_time_s - rep.mean_s) * (r.avg_time_s - rep.mean_s);
  rep.stddev_s = std::sqrt(ss / static_cast<double>(runs - 1));
  rep.cv = rep.stddev_s / rep.mean_s;
  rep.flagged = rep.cv >= cv_threshold;
  return rep;
}

namespace {

std::vector<std::string> row_cells(const ComparisonRow& r) {
  std::ostringstream avg, ips, factor, enc, dec;
  avg << std::scientific << std::setprecision(3) << r.cycle.avg_time_s;
  ips << std::fixed << std::setprecision(2) << r.cycle.iters_per_s;
  factor << std::fixed << std::setprecision(2) << r.factor << "x";
  enc << std::fixed << std::setprecision(4) << r.enc_latency_ms;
  dec << std::fixed << std::setprecision(4) << r.dec_latency_ms;
  return {r.cycle.algorithm, r.cycle.variant, avg.str(), ips.str(), factor.str(),
          r.key_size,        enc.str(),       dec.str(), r.rounds};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_table_text(std::ostream& out, const ComparisonTable& table) {
  const auto& cols = comparison_columns();
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : table.rows) cells.push_back(row_cells(r));
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  };
  line(cols);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (cols.size() - 1), '-') << '\n';
  for (const auto& row : cells) line(row);
  out << "Performance factor baseline: " << table.baseline << '\n';
}

void write_table_csv(std::ostream& out, const ComparisonTable& table) {
  const auto& cols = comparison_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(cols[c]);
  out << '\n';
  for (const auto& r : table.rows) {
    const std::vector<std::string> cells = {
        r.cycle.algorithm, r.cycle.variant, format_double(r.cycle.avg_time_s),
        format_double(r.cycle.iters_per_s), format_double(r.factor), r.key_size,
        format_double(r.enc_latency_ms), format_double(r.dec_latency_ms), r.rounds};
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_escape(cells[c]);
    out << '\n';
  }
}

std::string table_to_json(const ComparisonTable& table) {
  nlohmann::json doc;
  doc["baseline"] = table.baseline;
  doc["columns"] = comparison_columns();
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : table.rows) {
    doc["rows"].push_back({{"algorithm", r.cycle.algorithm},
                           {"variant", r.cycle.variant},
                           {"avg_time_s", r.cycle.avg_time_s},
                           {"iters_per_s", r.cycle.iters_per_s},
                           {"iterations", r.cycle.iterations},
                           {"payload_bytes", r.cycle.payload_bytes},
                           {"factor", r.factor},
                           {"key_size", r.key_size},
                           {"enc_latency_ms", r.enc_latency_ms},
                           {"dec_latency_ms", r.dec_latency_ms},
                           {"rounds", r.rounds}});
  }
  return doc.dump(2);
}

}  // namespace spikecrypt::bench
