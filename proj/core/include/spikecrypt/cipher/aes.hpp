// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "spikecrypt/bytes.hpp"

namespace spikecrypt::cipher {

using Block = std::array<std::uint8_t, 16>;

class Aes128Key {
 public:
  explicit Aes128Key(std::span<const std::uint8_t> bytes);
  const std::array<std::uint8_t, 16>& bytes() const { return bytes_; }
  friend bool operator==(const Aes128Key&, const Aes128Key&) = default;

 private:
  std::array<std::uint8_t, 16> bytes_{};
};

/// Expanded key schedule, 11 round keys of 16 bytes.
class Aes128 {
 public:
  explicit Aes128(const Aes128Key& key);

  Block encrypt_block(const Block& in) const;
  Block decrypt_block(const Block& in) const;

 private:
  std::array<std::uint8_t, 176> round_keys_{};
};

/// Span-based wrappers; throw ValidationError unless both spans hold 16 octets.
Block aes128_encrypt_block(std::span<const std::uint8_t> block, std::span<const std::uint8_t> key);
Block aes128_decrypt_block(std::span<const std::uint8_t> block, std::span<const std::uint8_t> key);

enum class AesMode { kEcb, kCbc };

struct AesMessageOptions {
  AesMode mode = AesMode::kEcb;
  // Required for CBC, ignored for ECB.
  std::optional<Block> iv;
};

Bytes pkcs7_pad(std::span<const std::uint8_t> data, std::size_t block = 16);
/// Throws PaddingError on a malformed pad or length.
Bytes pkcs7_unpad(std::span<const std::uint8_t> data, std::size_t block = 16);

/// PKCS#7 then ECB (default) or CBC. ECB leaks block equality; research use only.
Bytes aes128_encrypt_message(std::span<const std::uint8_t> plain, const Aes128Key& key,
                             const AesMessageOptions& opts = {});
Bytes aes128_decrypt_message(std::span<const std::uint8_t> cipher, const Aes128Key& key,
                             const AesMessageOptions& opts = {});

}  // namespace spikecrypt::cipher
