// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include "spikecrypt/bytes.hpp"
#include "spikecrypt/cipher/keys.hpp"
#include "spikecrypt/network.hpp"

namespace spikecrypt {

struct PipelineOptions {
  snn::NetworkConfig config;
  Bytes obfuscation_key = codec::kDefaultObfuscationKey;
  double window_ms = 200.0;
  std::size_t theta_spk = 1;
  bool noise = true;
  bool stdp = true;
  std::uint64_t seed = 42;
  // Trained L2 -> L3 weights; empty keeps the configured initial weight.
  std::vector<double> l2l3_weights;
};

struct PipelineResult {
  Bytes ciphertext;
  Bytes decoded_ciphertext;
  Bytes recovered;
  snn::SimulationResult simulation;
  bool ciphertext_intact = false;
};

/// cipher -> XOR + population code -> six-layer SNN -> decode -> decipher.
/// Decryption errors propagate (a corrupted ciphertext may fail integrity checks).
PipelineResult run_pipeline(std::span<const std::uint8_t> plaintext, const cipher::CipherKey& key,
                            const PipelineOptions& options, RandomSource& rng);

/// Spike-level half of the pipeline: encode, simulate, decode.
PipelineResult transmit(std::span<const std::uint8_t> ciphertext, const PipelineOptions& options);

}  // namespace spikecrypt
