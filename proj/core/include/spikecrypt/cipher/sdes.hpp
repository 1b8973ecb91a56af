// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "spikecrypt/bytes.hpp"

namespace spikecrypt::cipher {

/// Simplified DES: 10-bit key, 8-bit block, two Feistel rounds.
/// Uses the canonical P10/P8/IP/EP/P4/S0/S1 tables.
class SDesKey {
 public:
  /// Bits are given most significant first, each 0 or 1.
  explicit SDesKey(std::span<const int> bits);
  /// Low 10 bits of `value`, bit 9 is the first key bit.
  static SDesKey from_u16(std::uint16_t value);

  std::uint16_t value() const { return value_; }
  std::array<int, 10> bits() const;

  friend bool operator==(const SDesKey&, const SDesKey&) = default;

 private:
  SDesKey() = default;
  std::uint16_t value_ = 0;
};

struct SDesSubkeys {
  std::uint8_t k1 = 0;
  std::uint8_t k2 = 0;
};

SDesSubkeys sdes_keygen(const SDesKey& key);

std::uint8_t sdes_encrypt_byte(std::uint8_t plain, const SDesSubkeys& keys);
std::uint8_t sdes_decrypt_byte(std::uint8_t cipher, const SDesSubkeys& keys);

/// Byte-wise application over a message (no chaining).
Bytes sdes_encrypt(std::span<const std::uint8_t> plain, const SDesKey& key);
Bytes sdes_decrypt(std::span<const std::uint8_t> cipher, const SDesKey& key);

}  // namespace spikecrypt::cipher
