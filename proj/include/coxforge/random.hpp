/*
   Copyright 2026 The coxforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <random>

#include "coxforge/field.hpp"

namespace coxforge {

/// Deterministic random stream. mt19937_64 output is fixed by the standard,
/// and all derived draws below avoid std::uniform_int_distribution (whose
/// mapping is implementation-defined), so the same seed yields the same
/// stream on every platform. The state is always passed explicitly; nothing
/// here is global.
class RandomState {
  public:
    explicit RandomState(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound) by rejection sampling.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw UsageError("uniform_below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::mt19937_64 engine_;
};

/// Numerators of random rationals are drawn from this symmetric integer
/// range; it keeps Groebner coefficient growth tractable on certification
/// runs over Q.
inline constexpr std::int64_t kRationalCoeffBound = 50;

/// Uniform scalar: over all of F_p in prime mode, an integer in
/// [-kRationalCoeffBound, kRationalCoeffBound] in rational mode.
template <Scalar K>
K random_scalar(RandomState& rng, const FieldChoice& fc) {
    if (fc.kind == FieldChoice::Kind::prime)
        return K::from_int(fc, static_cast<std::int64_t>(rng.uniform_below(fc.p)));
    return K::from_int(fc, rng.int_in(-kRationalCoeffBound, kRationalCoeffBound));
}

/// Small-integer coefficient draw used when *instances* are generated from a
/// seed: the same seed produces the same integer lift in F_p mode and in Q
/// mode, so a probabilistic F_p run can be re-certified over the rationals.
/// (Instance moduli are required to exceed every degree-window bound, so
/// these small integers never collapse.)
inline std::int64_t random_coefficient(RandomState& rng) {
    return rng.int_in(-kRationalCoeffBound, kRationalCoeffBound);
}

}  // namespace coxforge
