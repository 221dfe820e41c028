// Copyright 2026 The jumpcode Authors
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

namespace jumpcode {

/// One SplitMix64 output: golden-ratio increment, then the finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of substream `stream_id` under `master_seed`. Depends only on the pair,
/// never on the order in which streams are requested.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_id);

/// Per-trajectory random stream. Uniform and normal variates are produced
/// from raw 64-bit words so sequences do not depend on the standard
/// library's distribution implementations.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : engine_(stream_seed(master_seed, stream_id)) {}

  /// Uniform in the open interval (0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace jumpcode
