// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spikecrypt/bytes.hpp"

namespace spikecrypt::bench {

struct BenchmarkRecord {
  std::string algorithm;
  std::string variant;
  double avg_time_s = 0.0;
  double iters_per_s = 0.0;
  std::size_t iterations = 0;
  std::size_t payload_bytes = 0;
};

inline constexpr std::size_t kMinIterations = 30;
inline constexpr std::size_t kDefaultIterations = 1000;
inline constexpr std::size_t kDefaultWarmup = 100;

/// Runs `op` warmup times untimed, then `iterations` times under a steady
/// clock. Exceptions from `op` propagate. Throws ValidationError if
/// iterations < 30 or warmup < 1.
BenchmarkRecord time_cycle(const std::function<void()>& op, std::size_t iterations,
                           std::size_t warmup, std::string algorithm = {},
                           std::string variant = {}, std::size_t payload_bytes = 0);

/// One entry of a comparison.
struct AlgorithmSpec {
  std::string name;
  std::string variant;
  std::string key_size;
  std::string rounds;
  std::function<Bytes(std::span<const std::uint8_t>)> encrypt;
  std::function<Bytes(std::span<const std::uint8_t>)> decrypt;
};

struct ComparisonRow {
  BenchmarkRecord cycle;
  std::string key_size;
  std::string rounds;
  double enc_latency_ms = 0.0;
  double dec_latency_ms = 0.0;
  // baseline avg time / this avg time; > 1 means faster than the baseline.
  double factor = 1.0;
};

struct ComparisonTable {
  std::string baseline;
  std::vector<ComparisonRow> rows;
};

/// Column headers in output order.
const std::vector<std::string>& comparison_columns();

/// Times encryption and decryption separately and as a full cycle for each
/// algorithm. Throws ValidationError for fewer than two algorithms or a bad
/// baseline index.
ComparisonTable compare(std::span<const AlgorithmSpec> algorithms,
                        std::span<const std::uint8_t> payload, std::size_t iterations,
                        std::size_t warmup = kDefaultWarmup, std::size_t baseline = 0);

struct StabilityReport {
  std::vector<BenchmarkRecord> runs;
  double mean_s = 0.0;
  double stddev_s = 0.0;
  double cv = 0.0;
  bool flagged = false;  // cv >= threshold
};

/// Repeats time_cycle `runs` times and reports the coefficient of variation
/// of the per-run averages.
StabilityReport repeat_stability(const std::function<void()>& op, std::size_t runs,
                                 std::size_t iterations, std::size_t warmup,
                                 double cv_threshold = 0.2);

void write_table_text(std::ostream& out, const ComparisonTable& table);
void write_table_csv(std::ostream& out, const ComparisonTable& table);
std::string table_to_json(const ComparisonTable& table);

}  // namespace spikecrypt::bench
