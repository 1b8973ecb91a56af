// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/codec.hpp"

#include "spikecrypt/error.hpp"

namespace spikecrypt::codec {

std::vector<std::size_t> StimulusPlan::active_neurons() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < amplitude_pa.size(); ++n)
    if (amplitude_pa[n] != 0.0) out.push_back(n);
  return out;
}

Bytes xor_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> key) {
  if (key.empty()) throw ValidationError("XOR key must not be empty");
  Bytes out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = data[i] ^ key[i % key.size()];
  return out;
}

StimulusPlan encode_bytes(std::span<const std::uint8_t> data, std::span<const std::uint8_t> key,
                          double window_ms, double i_on_pa) {
  if (!(window_ms > 0.0)) throw ValidationError("stimulus window must be positive");
  const Bytes obfuscated = xor_bytes(data, key);
  StimulusPlan plan;
  plan.window_ms = window_ms;
  plan.amplitude_pa.reserve(obfuscated.size() * kNeuronsPerByte);
  for (std::uint8_t b : obfuscated) {
    for (int bit = 7; bit >= 0; --bit) plan.amplitude_pa.push_back((b >> bit) & 1 ? i_on_pa : 0.0);
  }
  return plan;
}

Bytes decode_spikes(std::span<const SpikeTrain> trains, std::span<const std::uint8_t> key,
                    std::size_t theta_spk) {
  if (trains.size() % kNeuronsPerByte != 0) {
    throw ShapeError("spike train count " + std::to_string(trains.size()) +
                     " is not a multiple of 8");
  }
  Bytes raw(trains.size() / kNeuronsPerByte, 0);
  for (std::size_t n = 0; n < trains.size(); ++n) {
    if (trains[n].size() >= theta_spk) {
      raw[n / kNeuronsPerByte] |= static_cast<std::uint8_t>(0x80u >> (n % kNeuronsPerByte));
    }
  }
  return xor_bytes(raw, key);
}

}  // namespace spikecrypt::codec
