// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/cipher/rsa.hpp"

#include <algorithm>
#include <array>

#include <openssl/evp.h>

#include "spikecrypt/error.hpp"

namespace spikecrypt::cipher {
namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};

const EVP_MD* evp_for(OaepHash h) {
  switch (h) {
    case OaepHash::kSha1:
      return EVP_sha1();
    case OaepHash::kSha256:
      return EVP_sha256();
    case OaepHash::kSha512:
      return EVP_sha512();
  }
  return EVP_sha256();
}

std::size_t digest_size(OaepHash h) { return static_cast<std::size_t>(EVP_MD_size(evp_for(h))); }

Bytes digest(OaepHash h, std::span<const std::uint8_t> data) {
  Bytes out(EVP_MAX_MD_SIZE);
  unsigned len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, evp_for(h), nullptr) != 1) {
    throw Error("EVP_Digest failed");
  }
  out.resize(len);
  return out;
}

Bytes mgf1(OaepHash h, std::span<const std::uint8_t> seed, std::size_t len) {
  Bytes out;
  out.reserve(len + EVP_MAX_MD_SIZE);
  Bytes buf(seed.begin(), seed.end());
  buf.resize(seed.size() + 4);
  for (std::uint32_t counter = 0; out.size() < len; ++counter) {
    buf[seed.size() + 0] = static_cast<std::uint8_t>(counter >> 24);
    buf[seed.size() + 1] = static_cast<std::uint8_t>(counter >> 16);
    buf[seed.size() + 2] = static_cast<std::uint8_t>(counter >> 8);
    buf[seed.size() + 3] = static_cast<std::uint8_t>(counter);
    Bytes block = digest(h, buf);
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(len);
  return out;
}

// Uniform-ish value in [lo, hi] drawn from `rng`; bias is negligible for
// the oversampled width used here.
BigInt random_in_range(const BigInt& lo, const BigInt& hi, RandomSource& rng) {
  const BigInt span = hi - lo + 1;
  const std::size_t nbytes = msb(span) / 8 + 9;
  Bytes buf(nbytes);
  rng.fill(buf);
  return lo + os2ip(buf) % span;
}

BigInt random_prime(unsigned bits, const BigInt& e, int rounds, RandomSource& rng) {
  const std::size_t nbytes = (bits + 7) / 8;
  Bytes buf(nbytes);
  for (;;) {
    rng.fill(buf);
    BigInt candidate = os2ip(buf);
    // Keep exactly `bits` bits with the top two set so p*q has full length.
    candidate &= (BigInt(1) << bits) - 1;
    bit_set(candidate, bits - 1);
    bit_set(candidate, bits - 2);
    bit_set(candidate, 0);
    if (gcd(BigInt(candidate - 1), e) != 1) continue;
    if (is_probable_prime(candidate, rounds, rng)) return candidate;
  }
}

}  // namespace

std::size_t RsaKeyPair::size_bytes() const { return (msb(n) + 8) / 8; }

BigInt os2ip(std::span<const std::uint8_t> bytes) {
  BigInt x = 0;
  for (auto b : bytes) x = (x << 8) | b;
  return x;
}

Bytes i2osp(const BigInt& x, std::size_t len) {
  if (x < 0) throw_validation("i2osp: negative integer");
  Bytes out(len, 0);
  BigInt v = x;
  for (std::size_t i = 0; i < len; ++i) {
    out[len - 1 - i] = static_cast<std::uint8_t>(static_cast<unsigned>(v & 0xFF));
    v >>= 8;
  }
  if (v != 0) throw_validation("i2osp: integer too large for requested length");
  return out;
}

bool is_probable_prime(const BigInt& n, int rounds, RandomSource& rng) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const BigInt n_minus_1 = n - 1;
  for (int round = 0; round < rounds; ++round) {
    BigInt a = random_in_range(2, n - 2, rng);
    BigInt x = powm(a, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw_validation("value is not invertible modulo m");
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

RsaKeyPair rsa_keypair_from_primes(const BigInt& p, const BigInt& q, const BigInt& e) {
  SeededRandom rng(0x5eed);
  if (!is_probable_prime(p, 40, rng) || !is_probable_prime(q, 40, rng)) {
    throw_validation("RSA factors must be prime");
  }
  if (p == q) throw_validation("RSA factors must be distinct");
  RsaKeyPair key;
  key.p = p;
  key.q = q;
  key.n = p * q;
  key.e = e;
  const BigInt phi = key.phi();
  if (e <= 1 || e >= phi || gcd(e, phi) != 1) {
    throw_validation("public exponent must be coprime with phi(n)");
  }
  key.d = mod_inverse(e, phi);
  return key;
}

RsaKeyPair rsa_keygen(const RsaKeygenOptions& opts, RandomSource& rng) {
  if (opts.bits < 512 && !opts.test_mode) {
    throw_validation("RSA modulus must be at least 512 bits outside test mode");
  }
  if (opts.bits < 16) throw_validation("RSA modulus must be at least 16 bits");
  const BigInt e = opts.public_exponent;
  if (e < 3 || (e & 1) == 0) throw_validation("public exponent must be odd and >= 3");
  const unsigned p_bits = (opts.bits + 1) / 2;
  const unsigned q_bits = opts.bits / 2;
  for (;;) {
    BigInt p = random_prime(p_bits, e, opts.miller_rabin_rounds, rng);
    BigInt q = random_prime(q_bits, e, opts.miller_rabin_rounds, rng);
    if (p == q) continue;
    RsaKeyPair key;
    key.p = p;
    key.q = q;
    key.n = p * q;
    key.e = e;
    if (msb(key.n) + 1 != opts.bits) continue;
    const BigInt phi = key.phi();
    if (gcd(e, phi) != 1 || e >= phi) continue;
    key.d = mod_inverse(e, phi);
    return key;
  }
}

bool rsa_keypair_valid(const RsaKeyPair& key, RandomSource& rng) {
  if (key.p * key.q != key.n) return false;
  if (!is_probable_prime(key.p, 40, rng) || !is_probable_prime(key.q, 40, rng)) return false;
  const BigInt phi = key.phi();
  return gcd(key.e, phi) == 1 && (key.e * key.d) % phi == 1;
}

BigInt rsa_encrypt_raw(const BigInt& m, const RsaPublicKey& key) {
  if (m < 0 || m >= key.n) throw CapacityError("message representative out of range");
  return powm(m, key.e, key.n);
}

BigInt rsa_decrypt_raw(const BigInt& c, const RsaPrivateKey& key) {
  if (c < 0 || c >= key.n) throw DecryptionError("ciphertext representative out of range");
  return powm(c, key.d, key.n);
}

std::size_t oaep_capacity(std::size_t modulus_bytes, const OaepOptions& opts) {
  const std::size_t h = digest_size(opts.hash);
  return modulus_bytes < 2 * h + 2 ? 0 : modulus_bytes - 2 * h - 2;
}

Bytes rsa_encrypt(std::span<const std::uint8_t> message, const RsaPublicKey& key,
                  RandomSource& rng, const OaepOptions& opts) {
  const std::size_t k = (msb(key.n) + 8) / 8;
  const std::size_t h_len = digest_size(opts.hash);
  if (k < 2 * h_len + 2 || message.size() > k - 2 * h_len - 2) {
    throw CapacityError("message too long for OAEP with this modulus");
  }
  const Bytes l_hash = digest(opts.hash, opts.label);
  Bytes db;
  db.reserve(k - h_len - 1);
  db.insert(db.end(), l_hash.begin(), l_hash.end());
  db.insert(db.end(), k - message.size() - 2 * h_len - 2, 0x00);
  db.push_back(0x01);
  db.insert(db.end(), message.begin(), message.end());

  Bytes seed(h_len);
  rng.fill(seed);
  const Bytes db_mask = mgf1(opts.mgf_hash, seed, db.size());
  for (std::size_t i = 0; i < db.size(); ++i) db[i] ^= db_mask[i];
  const Bytes seed_mask = mgf1(opts.mgf_hash, db, h_len);
  for (std::size_t i = 0; i < h_len; ++i) seed[i] ^= seed_mask[i];

  Bytes em;
  em.reserve(k);
  em.push_back(0x00);
  em.insert(em.end(), seed.begin(), seed.end());
  em.insert(em.end(), db.begin(), db.end());
  return i2osp(rsa_encrypt_raw(os2ip(em), key), k);
}

Bytes rsa_decrypt(std::span<const std::uint8_t> cipher, const RsaPrivateKey& key,
                  const OaepOptions& opts) {
  const std::size_t k = (msb(key.n) + 8) / 8;
  const std::size_t h_len = digest_size(opts.hash);
  if (cipher.size() != k || k < 2 * h_len + 2) throw DecryptionError("decryption error");
  const BigInt c = os2ip(cipher);
  if (c >= key.n) throw DecryptionError("decryption error");
  const Bytes em = i2osp(powm(c, key.d, key.n), k);

  Bytes seed(em.begin() + 1, em.begin() + 1 + static_cast<std::ptrdiff_t>(h_len));
  Bytes db(em.begin() + 1 + static_cast<std::ptrdiff_t>(h_len), em.end());
  const Bytes seed_mask = mgf1(opts.mgf_hash, db, h_len);
  for (std::size_t i = 0; i < h_len; ++i) seed[i] ^= seed_mask[i];
  const Bytes db_mask = mgf1(opts.mgf_hash, seed, db.size());
  for (std::size_t i = 0; i < db.size(); ++i) db[i] ^= db_mask[i];

  const Bytes l_hash = digest(opts.hash, opts.label);
  bool ok = em[0] == 0x00 && std::equal(l_hash.begin(), l_hash.end(), db.begin());
  std::size_t i = h_len;
  while (i < db.size() && db[i] == 0x00) ++i;
  ok = ok && i < db.size() && db[i] == 0x01;
  if (!ok) throw DecryptionError("decryption error");
  return Bytes(db.begin() + static_cast<std::ptrdiff_t>(i + 1), db.end());
}

}  // namespace spikecrypt::cipher
