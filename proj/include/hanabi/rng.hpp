// Copyright 2026 The hanabi-adhoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HANABI_RNG_HPP_
#define HANABI_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace hanabi {

// Identifier written into every game record header. Replaying a record on
// any platform requires this exact generator + shuffle recipe:
// std::mt19937_64 (output sequence is pinned by the C++ standard), draws by
// modulo reduction, and a top-down Fisher-Yates shuffle.
inline constexpr const char* kRngId = "mt19937_64-fisheryates-v1";

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t NextUint64() { return gen_(); }

  // Uniform draw in [0, bound). Modulo reduction; the bias is < 2^-57 for
  // the bounds used here (all < 128) and the recipe is portable.
  int UniformInt(int bound) {
    return static_cast<int>(NextUint64() % static_cast<uint64_t>(bound));
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = NextUint64() % i;
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Mixing function for deriving independent sub-seeds from one base seed.
inline constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline constexpr uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace hanabi

#endif  // HANABI_RNG_HPP_
