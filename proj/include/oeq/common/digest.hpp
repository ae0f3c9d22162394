// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace oeq {

/// FNV-1a 64-bit. Used for config and model-spec digests that tag output
/// artifacts; not cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string digest_hex(std::uint64_t d) {
  static const char* hexdig = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hexdig[d & 0xf];
    d >>= 4;
  }
  return s;
}

}  // namespace oeq
