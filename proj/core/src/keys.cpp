// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/cipher/keys.hpp"

#include <json.hpp>

#include "spikecrypt/error.hpp"

namespace spikecrypt::cipher {

using nlohmann::json;

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kSDes:
      return "sdes";
    case Algorithm::kAes128:
      return "aes";
    case Algorithm::kRsa:
      return "rsa";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "sdes") return Algorithm::kSDes;
  if (name == "aes") return Algorithm::kAes128;
  if (name == "rsa") return Algorithm::kRsa;
  throw ValidationError("unknown algorithm '" + std::string(name) + "' (expected sdes, aes, rsa)");
}

Algorithm algorithm_of(const CipherKey& key) {
  return static_cast<Algorithm>(key.index());
}

CipherKey generate_key(const KeygenRequest& req, RandomSource& rng) {
  switch (req.algorithm) {
    case Algorithm::kSDes: {
      std::uint8_t buf[2];
      rng.fill(buf);
      return SDesKey::from_u16(static_cast<std::uint16_t>(buf[0] << 8 | buf[1]));
    }
    case Algorithm::kAes128: {
      std::array<std::uint8_t, 16> buf{};
      rng.fill(buf);
      return Aes128Key(buf);
    }
    case Algorithm::kRsa: {
      RsaKeygenOptions opts;
      opts.bits = req.rsa_bits;
      opts.test_mode = req.rsa_test_mode;
      return rsa_keygen(opts, rng);
    }
  }
  throw ValidationError("unknown algorithm");
}

namespace {

json bits_json(unsigned value, int width) {
  json arr = json::array();
  for (int i = width - 1; i >= 0; --i) arr.push_back((value >> i) & 1u);
  return arr;
}

BigInt parse_decimal(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ValidationError(std::string("RSA key field '") + field + "' must be a decimal string");
  }
  const auto s = j[field].get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError(std::string("RSA key field '") + field + "' is not a decimal integer");
  }
  return BigInt(s);
}

}  // namespace

std::string key_to_json(const CipherKey& key) {
  json j;
  j["algo"] = std::string(algorithm_name(algorithm_of(key)));
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SDesKey>) {
          j["key"] = bits_json(k.value(), 10);
          const auto sub = sdes_keygen(k);
          j["subkey1"] = bits_json(sub.k1, 8);
          j["subkey2"] = bits_json(sub.k2, 8);
        } else if constexpr (std::is_same_v<T, Aes128Key>) {
          j["key"] = to_hex(k.bytes());
        } else {
          j["n"] = k.n.str();
          j["e"] = k.e.str();
          j["d"] = k.d.str();
          j["p"] = k.p.str();
          j["q"] = k.q.str();
        }
      },
      key);
  return j.dump(2);
}

CipherKey key_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("key file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("algo") || !j["algo"].is_string()) {
    throw ValidationError("key JSON needs a string 'algo' field");
  }
  switch (parse_algorithm(j["algo"].get<std::string>())) {
    case Algorithm::kSDes: {
      if (!j.contains("key") || !j["key"].is_array()) {
        throw ValidationError("S-DES key must be a 10-element bit array");
      }
      std::vector<int> bits;
      for (const auto& b : j["key"]) {
        if (!b.is_number_integer()) throw ValidationError("S-DES key bits must be integers");
        bits.push_back(b.get<int>());
      }
      return SDesKey(bits);
    }
    case Algorithm::kAes128: {
      if (!j.contains("key") || !j["key"].is_string()) {
        throw ValidationError("AES key must be a hex string");
      }
      return Aes128Key(from_hex(j["key"].get<std::string>()));
    }
    case Algorithm::kRsa: {
      RsaKeyPair k;
      k.n = parse_decimal(j, "n");
      k.e = parse_decimal(j, "e");
      k.d = parse_decimal(j, "d");
      // p and q are optional for decrypt-only keys.
      if (j.contains("p")) k.p = parse_decimal(j, "p");
      if (j.contains("q")) k.q = parse_decimal(j, "q");
      if (k.n < 3) throw ValidationError("RSA modulus too small");
      return k;
    }
  }
  throw ValidationError("unknown algorithm");
}

Bytes encrypt(std::span<const std::uint8_t> plain, const CipherKey& key, RandomSource& rng) {
  return std::visit(
      [&](const auto& k) -> Bytes {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SDesKey>) {
          return sdes_encrypt(plain, k);
        } else if constexpr (std::is_same_v<T, Aes128Key>) {
          return aes128_encrypt_message(plain, k);
        } else {
          return rsa_encrypt(plain, k.public_key(), rng);
        }
      },
      key);
}

Bytes decrypt(std::span<const std::uint8_t> cipher, const CipherKey& key) {
  return std::visit(
      [&](const auto& k) -> Bytes {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SDesKey>) {
          return sdes_decrypt(cipher, k);
        } else if constexpr (std::is_same_v<T, Aes128Key>) {
          return aes128_decrypt_message(cipher, k);
        } else {
          return rsa_decrypt(cipher, k.private_key());
        }
      },
      key);
}

}  // namespace spikecrypt::cipher
