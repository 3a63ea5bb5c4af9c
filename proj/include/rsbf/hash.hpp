#ifndef RSBF_HASH_HPP
#define RSBF_HASH_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace rsbf {

/// 64-bit FNV-1a as 16 lowercase hex digits. Used for profile digests and
/// cache checksums, both of which must stay stable across releases.
inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rsbf

#endif  // RSBF_HASH_HPP
