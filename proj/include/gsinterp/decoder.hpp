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

#ifndef GSINTERP_DECODER_HPP
#define GSINTERP_DECODER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gsinterp/binary.hpp"

namespace gsi {

/// (n, k) Reed-Solomon code: messages are polynomials of degree < k,
/// codewords their evaluations at n distinct locators.
struct CodeSpec {
    std::shared_ptr<const Field> field;
    int n = 0;
    int k = 0;
    std::vector<Element> locators;

    /// Locators alpha^0 .. alpha^(n-1).
    static CodeSpec with_default_locators(std::shared_ptr<const Field> field, int n, int k);
    /// Validates 1 <= k < n <= 2^m - 1 and distinct locators.
    static CodeSpec with_locators(std::shared_ptr<const Field> field, int k, std::vector<Element> locators);
};

struct GsParams {
    int r = 0;
    int rho = 0;     ///< y-degree bound
    long long l = 0; ///< (1, k-1)-weighted degree bound
    int tau = 0;     ///< required agreements
};

/// rho is the unique integer with rho(rho-1)/2 <= nr(r+1)/(2(k-1)) < rho(rho+1)/2,
/// l = floor(nr(r+1)/(2 rho) + (rho-1)(k-1)/2), tau = floor(l/r) + 1.
/// Needs k >= 2 (k = 1 leaves rho unbounded).
GsParams gs_params(int n, int k, int r);

/// c_i = msg(x_i). Throws DegreeTooHigh when deg msg >= k.
std::vector<Element> encode(const CodeSpec& code, const UniPoly& msg);

/// All f with deg f < k and Q(x, f(x)) == 0, sorted, each checked by substitution.
std::vector<UniPoly> y_roots(const Field& f, const BiPoly& q, int k);

enum class Algorithm { Iia, LeeOSullivan, Binary, BinaryReencoded };

const char* algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct Candidate {
    UniPoly message;
    int agreement = 0;
    friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct DecodeOptions {
    /// Return early when the r = 1 stage already yields a candidate within
    /// half the minimum distance. Off by default.
    bool gao_shortcut = false;
    MergeOptions merge;
};

struct DecodeResult {
    GsParams params;
    std::vector<Candidate> candidates;
    /// Interpolation polynomial in (x, y), i.e. after back-substitution for
    /// the re-encoded algorithm.
    BiPoly interpolation_poly;
    /// The basis the polynomial was taken from (in (x, z) for re-encoding).
    PolyBasis basis;
    InterpolationStats stats;
    bool shortcut_taken = false;
};

/// Guruswami-Sudan list decoding of `received` with multiplicity r. The
/// smallest basis element under (1, k-1) order is factored and its y-roots
/// with at least tau agreements are returned, sorted by coefficients.
DecodeResult list_decode(const CodeSpec& code, std::span<const Element> received, int r, Algorithm algorithm,
                         std::uint64_t seed, const DecodeOptions& opts = {});

int agreement(const Field& f, const UniPoly& msg, std::span<const Element> locators, std::span<const Element> word);

} // namespace gsi

#endif
