#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mwpx {

// 64-bit FNV-1a. Specified byte-for-byte so embeddings and cache keys are
// reproducible in any implementation language.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t seed = 14695981039346656037ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// SHA-256 digest as lowercase hex; used for content-addressed cache keys and
// config hashes in run manifests.
std::string sha256_hex(std::string_view data);

// Deterministic counter-free PRNG used wherever a fixture or shuffle must be
// identical across platforms (std:: distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) without modulo bias worth worrying about here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform double in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace mwpx
