// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spikecrypt/bytes.hpp"
#include "spikecrypt/spike_train.hpp"

namespace spikecrypt::codec {

inline constexpr std::size_t kNeuronsPerByte = 8;
inline constexpr double kDefaultOnCurrentPa = 1500.0;

/// Obfuscation key used by the pipeline when none is supplied.
inline const Bytes kDefaultObfuscationKey = {0x3c, 0xa5, 0x5a, 0xc3};

/// Constant input current per input neuron over the whole window.
struct StimulusPlan {
  std::vector<double> amplitude_pa;
  double window_ms = 200.0;
  std::size_t neurons_per_byte = kNeuronsPerByte;

  std::size_t neuron_count() const { return amplitude_pa.size(); }
  std::vector<std::size_t> active_neurons() const;
};

/// out[i] = data[i] ^ key[i % key.size()]. Throws ValidationError for an empty key.
Bytes xor_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> key);

/// XOR with `key`, then one neuron per bit, MSB first: 1 -> i_on_pa, 0 -> silent.
StimulusPlan encode_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> key,
                          double window_ms, double i_on_pa = kDefaultOnCurrentPa);

/// bit = (spike count >= theta_spk), MSB first, then XOR with `key`.
/// Throws ShapeError if the train count is not a multiple of 8.
Bytes decode_spikes(std::span<const SpikeTrain> trains, std::span<const std::uint8_t> key,
                    std::size_t theta_spk = 1);

}  // namespace spikecrypt::codec
