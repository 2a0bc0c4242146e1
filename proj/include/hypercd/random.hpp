// Copyright 2026 The hypercd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hypercd {

// mt19937_64 with hand-rolled draws, so that a seed produces the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., bound - 1}; bound > 0.
  int below(int bound) {
    const int k = static_cast<int>(uniform() * bound);
    return k < bound ? k : bound - 1;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (int k = static_cast<int>(items.size()) - 1; k > 0; --k) {
      std::swap(items[k], items[below(k + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypercd
