// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spikecrypt {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }
inline std::string to_string(std::span<const std::uint8_t> b) {
  return std::string(b.begin(), b.end());
}

std::string to_hex(std::span<const std::uint8_t> b);
// Throws ValidationError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace spikecrypt
