// Copyright 2026 The fracflight Authors.
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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

namespace fracflight {

std::uint64_t splitmix64(std::uint64_t x);

// Random stream: mt19937_64 with an explicit uniform mapping so that draws
// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Independent stream for block `block` of a run seeded with `master`.
  static Rng for_block(std::uint64_t master, std::uint64_t block);

  std::uint64_t next_u64() { return eng_(); }
  // Uniform on the open interval (0, 1).
  double uniform() { return ((eng_() >> 11) + 0.5) * 0x1.0p-53; }
  // Standard normal by the polar method.
  double normal();

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Gamma(shape, 1) variate. Marsaglia-Tsang for shape >= 1; for shape < 1
// G(shape + 1) * U^{1/shape}.
double sample_gamma(Rng& rng, double shape);
// log of a Gamma(shape, 1) variate; stays finite for tiny shapes.
double sample_log_gamma(Rng& rng, double shape);
// Beta(a, b) through the ratio of two gamma variates.
double sample_beta(Rng& rng, double a, double b);
// Binomial(n, p) as a sum of Bernoulli trials.
unsigned sample_binomial(Rng& rng, unsigned n, double p);

inline constexpr std::size_t kBlockSize = 1024;

// Fills `count` draws. Draw i belongs to block i / kBlockSize and uses the
// stream Rng::for_block(seed, block), so the output does not depend on the
// number of workers.
template <class T, class Draw>
std::vector<T> parallel_draws(std::size_t count, std::uint64_t seed,
                              unsigned workers, Draw&& draw) {
  std::vector<T> out(count);
  const std::size_t blocks = (count + kBlockSize - 1) / kBlockSize;
  if (blocks == 0) return out;
  const std::size_t nw =
      std::clamp<std::size_t>(workers == 0 ? 1 : workers, 1, blocks);
  std::vector<std::exception_ptr> errors(nw);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t b = w; b < blocks; b += nw) {
        Rng rng = Rng::for_block(seed, b);
        const std::size_t end = std::min(count, (b + 1) * kBlockSize);
        for (std::size_t i = b * kBlockSize; i < end; ++i) out[i] = draw(rng);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (nw == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace fracflight
