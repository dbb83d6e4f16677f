#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hypermotif {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Seed of a named random stream derived from the run's root seed:
/// splitmix64(root ^ fnv1a(stream)). Streams used by the pipelines are
/// "motif-null", "census-null" and "downsample". Work unit i of a stream
/// seeds its generator with stream_seed + i.
constexpr std::uint64_t stream_seed(std::uint64_t root, std::string_view stream) {
  return splitmix64(root ^ fnv1a(stream));
}

}  // namespace hypermotif
