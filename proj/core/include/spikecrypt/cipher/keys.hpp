// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "spikecrypt/cipher/aes.hpp"
#include "spikecrypt/cipher/rsa.hpp"
#include "spikecrypt/cipher/sdes.hpp"

namespace spikecrypt::cipher {

enum class Algorithm { kSDes, kAes128, kRsa };

std::string_view algorithm_name(Algorithm a);
/// Accepts "sdes", "aes", "rsa" (case-sensitive).
Algorithm parse_algorithm(std::string_view name);

using CipherKey = std::variant<SDesKey, Aes128Key, RsaKeyPair>;

Algorithm algorithm_of(const CipherKey& key);

struct KeygenRequest {
  Algorithm algorithm = Algorithm::kSDes;
  unsigned rsa_bits = 2048;
  bool rsa_test_mode = false;
};

CipherKey generate_key(const KeygenRequest& req, RandomSource& rng);

// JSON layouts:
//   {"algo":"sdes","key":[0,0,0,1,1,0,0,1,1,0],"subkey1":[...],"subkey2":[...]}
//   {"algo":"aes","key":"000102...0f"}
//   {"algo":"rsa","n":"3233","e":"17","d":"2753","p":"61","q":"53"}
// Subkeys are informational on output and ignored on input.
std::string key_to_json(const CipherKey& key);
CipherKey key_from_json(std::string_view json);

/// Dispatches to the message-level cipher for the key's algorithm.
Bytes encrypt(std::span<const std::uint8_t> plain, const CipherKey& key, RandomSource& rng);
Bytes decrypt(std::span<const std::uint8_t> cipher, const CipherKey& key);

}  // namespace spikecrypt::cipher
