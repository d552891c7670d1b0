// Shared small utilities: error helper, integer gcd/lcm, FNV hashing.
#ifndef COSETS_COMMON_HPP_
#define COSETS_COMMON_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cosets {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error("cosets: " + msg);
}

inline void check(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a / std::gcd(a, b)) * b;
}

// FNV-1a, used for stable content hashes in reports.
struct Fnv1a {
  std::uint64_t state = 1469598103934665603ULL;
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      state ^= c;
      state *= 1099511628211ULL;
    }
  }
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state;
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 0xf];
    return out;
  }
};

}  // namespace cosets

#endif
