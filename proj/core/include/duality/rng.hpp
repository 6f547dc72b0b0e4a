// Copyright 2026 The duality-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace duality {

/// Seedable random source with a bit-reproducible output sequence on every
/// platform: the engine is std::mt19937_64 (whose sequence the standard fixes)
/// and all conversions to floating point are done here rather than through
/// the implementation-defined std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent generator for trial `stream` of a run seeded with `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer on [0, n).
    std::size_t uniform_index(std::size_t n);
    /// Standard normal via Box-Muller.
    double normal();
    /// Real and imaginary parts independent standard normals.
    std::complex<double> complex_normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> cached_normal_;
};

/// SplitMix64 finalizer; used to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace duality
