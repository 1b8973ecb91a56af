// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include <boost/multiprecision/gmp.hpp>

#include "spikecrypt/bytes.hpp"
#include "spikecrypt/random.hpp"

namespace spikecrypt::cipher {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

struct RsaPublicKey {
  BigInt n;
  BigInt e;
};

struct RsaPrivateKey {
  BigInt n;
  BigInt d;
};

struct RsaKeyPair {
  BigInt n;
  BigInt e;
  BigInt d;
  BigInt p;
  BigInt q;

  RsaPublicKey public_key() const { return {n, e}; }
  RsaPrivateKey private_key() const { return {n, d}; }
  BigInt phi() const { return (p - 1) * (q - 1); }
  /// Modulus length in octets.
  std::size_t size_bytes() const;
};

struct RsaKeygenOptions {
  unsigned bits = 2048;
  unsigned long public_exponent = 65537;
  // Allows bit lengths below 512; never use for real data.
  bool test_mode = false;
  int miller_rabin_rounds = 40;
};

RsaKeyPair rsa_keygen(const RsaKeygenOptions& opts, RandomSource& rng);

/// Builds a pair from known primes. Throws ValidationError if p or q is not
/// prime or e is not invertible modulo phi.
RsaKeyPair rsa_keypair_from_primes(const BigInt& p, const BigInt& q, const BigInt& e);

/// Validates n = pq, primality, and e*d = 1 mod phi.
bool rsa_keypair_valid(const RsaKeyPair& key, RandomSource& rng);

bool is_probable_prime(const BigInt& n, int rounds, RandomSource& rng);
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Textbook primitives: c = m^e mod n, m = c^d mod n. Require m < n.
BigInt rsa_encrypt_raw(const BigInt& m, const RsaPublicKey& key);
BigInt rsa_decrypt_raw(const BigInt& c, const RsaPrivateKey& key);

enum class OaepHash { kSha1, kSha256, kSha512 };

struct OaepOptions {
  OaepHash hash = OaepHash::kSha256;
  OaepHash mgf_hash = OaepHash::kSha256;
  Bytes label;
};

std::size_t oaep_capacity(std::size_t modulus_bytes, const OaepOptions& opts = {});

/// RSAES-OAEP. Throws CapacityError if the message is too long.
Bytes rsa_encrypt(std::span<const std::uint8_t> message, const RsaPublicKey& key,
                  RandomSource& rng, const OaepOptions& opts = {});
/// Throws DecryptionError on any integrity failure.
Bytes rsa_decrypt(std::span<const std::uint8_t> cipher, const RsaPrivateKey& key,
                  const OaepOptions& opts = {});

BigInt os2ip(std::span<const std::uint8_t> bytes);
Bytes i2osp(const BigInt& x, std::size_t len);

}  // namespace spikecrypt::cipher
