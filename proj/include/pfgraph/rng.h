// Copyright 2026 The pfgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFGRAPH_RNG_H_
#define PFGRAPH_RNG_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace pfgraph {

// SplitMix64 output function.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t HashName(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return Mix64(h);
}

// Counter-based uniform stream: draw k depends only on (seed, name, index, k),
// so element-wise noise is identical however the work is split across threads.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t seed, std::string_view name, std::uint64_t index)
      : key_(Mix64(Mix64(seed) ^ HashName(name) ^ Mix64(index + 1))) {}

  std::uint64_t Bits(std::uint64_t counter) const {
    return Mix64(key_ ^ Mix64(counter));
  }

  // Uniform on the open interval (0, 1).
  double Uniform(std::uint64_t counter) const {
    return (static_cast<double>(Bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

inline double LaplaceInverseCdf(double u, double scale) {
  return u < 0.5 ? scale * std::log(2.0 * u)
                 : -scale * std::log(2.0 * (1.0 - u));
}

inline double LaplaceCdf(double x, double scale) {
  return x < 0 ? 0.5 * std::exp(x / scale) : 1.0 - 0.5 * std::exp(-x / scale);
}

inline double LaplaceDensity(double x, double scale) {
  return std::exp(-std::abs(x) / scale) / (2.0 * scale);
}

// Uniform integer in [0, n) by rejection; unlike
// std::uniform_int_distribution the sequence is the same on every standard
// library.
inline std::size_t UniformIndex(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

inline double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pfgraph

#endif  // PFGRAPH_RNG_H_
