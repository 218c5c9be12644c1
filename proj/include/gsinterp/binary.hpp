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

#ifndef GSINTERP_BINARY_HPP
#define GSINTERP_BINARY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsinterp/module.hpp"
#include "gsinterp/rng.hpp"

namespace gsi {

/// Counters for one Merge call.
struct MergeStats {
    int r = 0;                     ///< multiplicity of the product ideal
    int u = 0;                     ///< |P| - 1
    int v = 0;                     ///< |S| - 1
    int random_iterations = 0;     ///< passes of the randomized loop
    std::size_t reduce_steps = 0;  ///< inner Reduce steps, fallback included
    bool fallback_used = false;
};

/// "r,u,v,random_iterations,reduce_steps,fallback_used"
const char* merge_stats_csv_header() noexcept;
std::string to_csv_row(const MergeStats& s);

struct MergeOptions {
    /// Randomized passes allowed before folding every pairwise product.
    int max_random_iterations = 64;
    std::size_t karatsuba_cutoff = kDefaultKaratsubaCutoff;
};

/// Groebner basis of the product of two ideals given by Groebner bases whose
/// leading y-degrees are exactly 0..u and 0..v. Starts from the
/// leading-term-minimal products P_{i-j} S_j and folds random products
/// (sum a_i P_i)(sum b_j S_j) until delta(B) reaches `delta0`.
std::pair<PolyBasis, MergeStats> merge(const Field& f, const PolyBasis& p, const PolyBasis& s, long long delta0,
                                       RngStream& rng, const MergeOptions& opts = {});

/// Keeps the smallest element led by a pure power of y, y^u, and everything
/// leading below it, then clears the rows above y^u of each kept element with
/// multiples of that top element. Leading terms do not change.
PolyBasis prune(const Field& f, const PolyBasis& b);

struct InterpolationStats {
    std::vector<MergeStats> merges;
    std::size_t reduce_steps = 0;  ///< over the whole run
    int merge_calls() const noexcept { return static_cast<int>(merges.size()); }
    int random_iterations() const noexcept;
    bool fallback_used() const noexcept;
};

/// Groebner basis of the ideal of polynomials vanishing to order r at every
/// point, by binary exponentiation of the basis for r = 1. Uses the
/// (1, k-1)-weighted lex order; the result is pruned.
std::pair<PolyBasis, InterpolationStats> interpolate(const Field& f, const InterpPoints& pts, int r, int k,
                                                     RngStream& rng, const MergeOptions& opts = {});

/// Basis of I_1 in (1, k-1) order: folds y^j (y - T) into (phi) until some
/// element leads with a pure power of y.
PolyBasis ideal_basis_r1(const Field& f, const InterpPoints& pts, int k, std::size_t* steps = nullptr);

/// Number of Merge calls made by interpolate() for multiplicity r:
/// one squaring per bit below the top one, plus one per set bit below the top.
int merge_call_count(int r);

/// Change of variables y = g(x) + z psi(x) around the first k points.
struct Reencoding {
    int k = 0;
    UniPoly psi;    ///< prod_{i <= k} (x - x_i)
    UniPoly theta;  ///< prod_{i > k} (x - x_i)
    UniPoly t;      ///< Lagrange interpolant of all n points
    UniPoly h;      ///< T = h psi + g
    UniPoly g;      ///< deg g < k
};

Reencoding make_reencoding(const Field& f, const InterpPoints& pts, int k);

struct ReencodedInterpolation {
    PolyBasis basis;  ///< in (x, z), (1, -1)-weighted lex, pruned
    Reencoding transform;
    InterpolationStats stats;
};

/// Binary interpolation in the re-encoded coordinates. The first k points
/// form the re-encoding set; k >= 1.
ReencodedInterpolation reencode_interpolate(const Field& f, const InterpPoints& pts, int r, int k, RngStream& rng,
                                            const MergeOptions& opts = {});

/// Merge termination threshold in re-encoded coordinates for input bases of
/// sizes u1, u2 and product multiplicity R:
/// (n-k) R(R+1)/2 + k (u1+u2-2-R)(u1+u2-1-R)/2.
long long reencode_threshold(long long u1, long long u2, long long R, long long n, long long k);

/// Maps P(x, z) back to Q(x, y) = sum_j p_j(x) (y - g)^j psi^(r-j); rows
/// above r must be divisible by psi^(j-r) (InexactDivision otherwise).
BiPoly back_substitute(const Field& f, const BiPoly& p, const UniPoly& g, const UniPoly& psi, int r);

} // namespace gsi

#endif
