/*
   Copyright 2026 The gsinterp Authors

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

#ifndef GSINTERP_RNG_HPP
#define GSINTERP_RNG_HPP

#include <cstdint>
#include <random>

#include "gsinterp/field.hpp"

namespace gsi {

/// Seeded draw sequence. Same seed, same draws, on every platform: only the
/// raw mt19937_64 output is used, never a distribution object.
/// Not shareable between concurrent users.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

    std::uint64_t next() {
        ++counter_;
        return engine_();
    }

    /// Uniform over GF(2^m), zero included.
    Element element(const Field& f) { return static_cast<Element>(next() >> (64 - f.m())); }

    /// Uniform nonzero element.
    Element nonzero_element(const Field& f) {
        for (;;)
            if (Element e = element(f); e != 0)
                return e;
    }

    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;)
            if (std::uint64_t v = next(); v < limit)
                return v % bound;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::mt19937_64 engine_;
};

} // namespace gsi

#endif
