// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/cipher/sdes.hpp"

#include "spikecrypt/error.hpp"

namespace spikecrypt::cipher {
namespace {

// Tables use 1-based positions counted from the most significant bit.
constexpr int kP10[] = {3, 5, 2, 7, 4, 10, 1, 9, 8, 6};
constexpr int kP8[] = {6, 3, 7, 4, 8, 5, 10, 9};
constexpr int kIp[] = {2, 6, 3, 1, 4, 8, 5, 7};
constexpr int kIpInv[] = {4, 1, 3, 5, 7, 2, 8, 6};
constexpr int kEp[] = {4, 1, 2, 3, 2, 3, 4, 1};
constexpr int kP4[] = {2, 4, 3, 1};

constexpr std::uint8_t kS0[4][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}, {0, 2, 1, 3}, {3, 1, 3, 2}};
constexpr std::uint8_t kS1[4][4] = {{0, 1, 2, 3}, {2, 0, 1, 3}, {3, 0, 1, 0}, {2, 1, 0, 3}};

template <std::size_t N>
unsigned permute(unsigned in, int in_width, const int (&table)[N]) {
  unsigned out = 0;
  for (int pos : table) out = out << 1 | ((in >> (in_width - pos)) & 1u);
  return out;
}

unsigned rotl5(unsigned half, int n) {
  return ((half << n) | (half >> (5 - n))) & 0x1F;
}

unsigned sbox(const std::uint8_t (&box)[4][4], unsigned nibble) {
  unsigned row = ((nibble >> 2) & 0x2) | (nibble & 0x1);
  unsigned col = (nibble >> 1) & 0x3;
  return box[row][col];
}

// fK: mixes the left nibble with F(right, subkey), right passes through.
unsigned fk(unsigned block, std::uint8_t subkey) {
  unsigned left = block >> 4;
  unsigned right = block & 0xF;
  unsigned t = permute(right, 4, kEp) ^ subkey;
  unsigned s = sbox(kS0, t >> 4) << 2 | sbox(kS1, t & 0xF);
  return (left ^ permute(s, 4, kP4)) << 4 | right;
}

unsigned swap_halves(unsigned block) { return (block << 4 | block >> 4) & 0xFF; }

}  // namespace

SDesKey::SDesKey(std::span<const int> bits) {
  if (bits.size() != 10) throw_validation("S-DES key must have exactly 10 bits");
  for (int b : bits) {
    if (b != 0 && b != 1) throw_validation("S-DES key bits must be 0 or 1");
    value_ = static_cast<std::uint16_t>(value_ << 1 | b);
  }
}

SDesKey SDesKey::from_u16(std::uint16_t value) {
  SDesKey k;
  k.value_ = value & 0x3FF;
  return k;
}

std::array<int, 10> SDesKey::bits() const {
  std::array<int, 10> out{};
  for (int i = 0; i < 10; ++i) out[i] = (value_ >> (9 - i)) & 1;
  return out;
}

SDesSubkeys sdes_keygen(const SDesKey& key) {
  unsigned p = permute(key.value(), 10, kP10);
  unsigned left = rotl5(p >> 5, 1);
  unsigned right = rotl5(p & 0x1F, 1);
  SDesSubkeys out;
  out.k1 = static_cast<std::uint8_t>(permute(left << 5 | right, 10, kP8));
  left = rotl5(left, 2);
  right = rotl5(right, 2);
  out.k2 = static_cast<std::uint8_t>(permute(left << 5 | right, 10, kP8));
  return out;
}

std::uint8_t sdes_encrypt_byte(std::uint8_t plain, const SDesSubkeys& keys) {
  unsigned b = permute(plain, 8, kIp);
  b = swap_halves(fk(b, keys.k1));
  b = fk(b, keys.k2);
  return static_cast<std::uint8_t>(permute(b, 8, kIpInv));
}

std::uint8_t sdes_decrypt_byte(std::uint8_t cipher, const SDesSubkeys& keys) {
  unsigned b = permute(cipher, 8, kIp);
  b = swap_halves(fk(b, keys.k2));
  b = fk(b, keys.k1);
  return static_cast<std::uint8_t>(permute(b, 8, kIpInv));
}

Bytes sdes_encrypt(std::span<const std::uint8_t> plain, const SDesKey& key) {
  const auto sub = sdes_keygen(key);
  Bytes out(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) out[i] = sdes_encrypt_byte(plain[i], sub);
  return out;
}

Bytes sdes_decrypt(std::span<const std::uint8_t> cipher, const SDesKey& key) {
  const auto sub = sdes_keygen(key);
  Bytes out(cipher.size());
  for (std::size_t i = 0; i < cipher.size(); ++i) out[i] = sdes_decrypt_byte(cipher[i], sub);
  return out;
}

}  // namespace spikecrypt::cipher
