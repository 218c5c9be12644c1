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

#include "gsinterp/binary.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace gsi {

namespace {

void require_contiguous(const PolyBasis& b, const char* name) {
    for (std::size_t j = 0; j < b.polys.size(); ++j) {
        if (b.polys[j].is_zero() || leading_term(b.polys[j], b.ord).j != static_cast<int>(j))
            throw Error(Errc::PreconditionViolated,
                        std::string("merge: leading y-degrees of ") + name + " are not 0..size-1 in order");
    }
    if (b.polys.empty())
        throw Error(Errc::PreconditionViolated, std::string("merge: empty basis ") + name);
}

// sum_i c_i B_i with fresh uniform coefficients; redrawn while all are zero.
BiPoly random_combination(const Field& f, const PolyBasis& b, RngStream& rng) {
    std::vector<Element> c(b.polys.size());
    for (;;) {
        bool any = false;
        for (auto& e : c) {
            e = rng.element(f);
            any = any || e != 0;
        }
        if (any)
            break;
    }
    BiPoly out;
    for (std::size_t i = 0; i < c.size(); ++i)
        add_scaled_inplace(f, out, c[i], 0, 0, b.polys[i]);
    return out;
}

// Keeps the smallest of the elements selected by `is_top`, drops the others.
// Clears the rows of p above y^u with multiples y^e c(x) top. The leading
// term of p is untouched since each subtracted multiple leads strictly below it.
void cap_ydeg(const Field& f, BiPoly& p, const BiPoly& top, int u) {
    const UniPoly& lead = top.row(static_cast<std::size_t>(u));
    for (int d = p.ydeg(); d > u; --d) {
        const UniPoly& row = p.row(static_cast<std::size_t>(d));
        if (row.is_zero())
            continue;
        const UniPoly q = div_exact(f, row, lead);
        const BiPoly term = mul_uni(f, top, q);
        add_scaled_inplace(f, p, 1, 0, d - u, term);
    }
}

PolyBasis prune_by(const Field& f, const PolyBasis& b, const std::function<bool(const Monomial&)>& is_top) {
    const auto lts = b.leading_terms();
    std::optional<std::size_t> keep;
    for (std::size_t i = 0; i < lts.size(); ++i)
        if (is_top(lts[i]) && (!keep || b.ord.less(lts[i].exponent(), lts[*keep].exponent())))
            keep = i;
    if (!keep)
        return b;
    // Everything leading above the kept element is generated by it.
    const BiPoly& top = b.polys[*keep];
    const int u = lts[*keep].j;
    PolyBasis out{{}, b.ord};
    for (std::size_t i = 0; i < lts.size(); ++i)
        if (lts[i].j < u || i == *keep)
            out.polys.push_back(b.polys[i]);
    for (auto& p : out.polys)
        cap_ydeg(f, p, top, u);
    return out;
}

PolyBasis prune_reencoded(const Field& f, const PolyBasis& b, int R, int k) {
    return prune_by(f, b, [R, k](const Monomial& m) {
        return m.j >= R && static_cast<long long>(m.i) == static_cast<long long>(m.j - R) * k;
    });
}

} // namespace

const char* merge_stats_csv_header() noexcept { return "r,u,v,random_iterations,reduce_steps,fallback_used"; }

std::string to_csv_row(const MergeStats& s) {
    return std::to_string(s.r) + ',' + std::to_string(s.u) + ',' + std::to_string(s.v) + ',' +
           std::to_string(s.random_iterations) + ',' + std::to_string(s.reduce_steps) + ',' +
           (s.fallback_used ? '1' : '0');
}

std::pair<PolyBasis, MergeStats> merge(const Field& f, const PolyBasis& p, const PolyBasis& s, long long delta0,
                                       RngStream& rng, const MergeOptions& opts) {
    if (!(p.ord == s.ord))
        throw Error(Errc::PreconditionViolated, "merge: bases use different term orders");
    require_contiguous(p, "P");
    require_contiguous(s, "S");
    const TermOrder& ord = p.ord;
    const int u = static_cast<int>(p.size()) - 1;
    const int v = static_cast<int>(s.size()) - 1;
    const auto lp = p.leading_terms();
    const auto ls = s.leading_terms();

    MergeStats stats;
    stats.u = u;
    stats.v = v;

    PolyBasis b{{}, ord};
    b.polys.reserve(static_cast<std::size_t>(u + v + 1));
    for (int i = 0; i <= u + v; ++i) {
        // All candidate products lead in y^i; pick the smallest x-degree
        // from the leading monomials alone, lowest j on ties.
        int best = -1;
        Exponent best_lt{};
        for (int j = std::max(0, i - u); j <= std::min(i, v); ++j) {
            const Exponent e{lp[static_cast<std::size_t>(i - j)].i + ls[static_cast<std::size_t>(j)].i, i};
            if (best < 0 || ord.less(e, best_lt)) {
                best = j;
                best_lt = e;
            }
        }
        b.polys.push_back(mul(f, p.polys[static_cast<std::size_t>(i - best)], s.polys[static_cast<std::size_t>(best)],
                              opts.karatsuba_cutoff));
    }

    long long d = delta(b);
    while (d > delta0 && stats.random_iterations < opts.max_random_iterations) {
        BiPoly a = random_combination(f, p, rng);
        BiPoly c = random_combination(f, s, rng);
        b = reduce_extend(f, std::move(b), mul(f, a, c, opts.karatsuba_cutoff), &stats.reduce_steps);
        ++stats.random_iterations;
        d = delta(b);
    }
    if (d > delta0) {
        // The pairwise products generate the product module, so folding all
        // of them always reaches the target.
        stats.fallback_used = true;
        for (int i = 0; i <= u && d > delta0; ++i)
            for (int j = 0; j <= v && d > delta0; ++j) {
                b = reduce_extend(f, std::move(b),
                                  mul(f, p.polys[static_cast<std::size_t>(i)], s.polys[static_cast<std::size_t>(j)],
                                      opts.karatsuba_cutoff),
                                  &stats.reduce_steps);
                d = delta(b);
            }
        if (d > delta0)
            throw Error(Errc::FallbackExhausted, "merge: delta " + std::to_string(d) + " stays above " +
                                                     std::to_string(delta0) + " after all pairwise products");
    }
    if (d < delta0)
        throw Error(Errc::PreconditionViolated, "merge: delta " + std::to_string(d) + " fell below target " +
                                                    std::to_string(delta0) +
                                                    "; inputs are not bases of the expected ideals");
    return {std::move(b), stats};
}

PolyBasis prune(const Field& f, const PolyBasis& b) {
    return prune_by(f, b, [](const Monomial& m) { return m.i == 0; });
}

int InterpolationStats::random_iterations() const noexcept {
    int total = 0;
    for (const auto& m : merges)
        total += m.random_iterations;
    return total;
}

bool InterpolationStats::fallback_used() const noexcept {
    return std::any_of(merges.begin(), merges.end(), [](const MergeStats& m) { return m.fallback_used; });
}

int merge_call_count(int r) {
    if (r < 1)
        throw Error(Errc::InvalidArgument, "multiplicity must be positive");
    const unsigned ur = static_cast<unsigned>(r);
    return (std::bit_width(ur) - 1) + (std::popcount(ur) - 1);
}

PolyBasis ideal_basis_r1(const Field& f, const InterpPoints& pts, int k, std::size_t* steps) {
    const UniPoly phi = from_roots(f, pts.xs());
    const UniPoly t = lagrange(f, pts.xs(), pts.ys());
    PolyBasis g{{BiPoly::from_uni(phi)}, decoding_order(k)};
    const int limit = static_cast<int>(pts.size()) + 2;
    for (int j = 0;;) {
        // y^j (y - T)
        std::vector<UniPoly> rows(static_cast<std::size_t>(j) + 2);
        rows[static_cast<std::size_t>(j)] = t;
        rows[static_cast<std::size_t>(j) + 1] = UniPoly::constant(1);
        g = reduce_extend(f, std::move(g), BiPoly(std::move(rows)), steps);
        ++j;
        if (const BiPoly* top = g.with_leading_ydeg(j); top && leading_term(*top, g.ord).i == 0)
            break;
        if (j > limit)
            throw Error(Errc::PreconditionViolated, "no pure power of y appeared while building the r = 1 basis");
    }
    return g;
}

namespace {

// Squares-and-multiplies `g` up to multiplicity r; `threshold(|P|, |S|, R)`
// gives the Merge target and `tidy(B, R)` prunes the merged basis.
template <class Threshold, class Tidy>
PolyBasis exponentiate(const Field& f, const PolyBasis& g, int r, RngStream& rng, const MergeOptions& opts,
                       InterpolationStats& stats, Threshold threshold, Tidy tidy) {
    PolyBasis b = g;
    const unsigned ur = static_cast<unsigned>(r);
    const int top = std::bit_width(ur) - 1;
    int big_r = 1;
    for (int bit = top - 1; bit >= 0; --bit) {
        big_r *= 2;
        auto [sq, sq_stats] = merge(f, b, b, threshold(b.size(), b.size(), big_r), rng, opts);
        sq_stats.r = big_r;
        stats.reduce_steps += sq_stats.reduce_steps;
        stats.merges.push_back(sq_stats);
        b = tidy(sq, big_r);
        if ((ur >> bit) & 1u) {
            ++big_r;
            auto [pr, pr_stats] = merge(f, b, g, threshold(b.size(), g.size(), big_r), rng, opts);
            pr_stats.r = big_r;
            stats.reduce_steps += pr_stats.reduce_steps;
            stats.merges.push_back(pr_stats);
            b = tidy(pr, big_r);
        }
    }
    return b;
}

} // namespace

std::pair<PolyBasis, InterpolationStats> interpolate(const Field& f, const InterpPoints& pts, int r, int k,
                                                     RngStream& rng, const MergeOptions& opts) {
    if (r < 1)
        throw Error(Errc::InvalidArgument, "interpolate: r must be >= 1");
    if (k < 1)
        throw Error(Errc::InvalidArgument, "interpolate: k must be >= 1");
    InterpolationStats stats;
    const PolyBasis g = prune(f, ideal_basis_r1(f, pts, k, &stats.reduce_steps));
    const long long n = static_cast<long long>(pts.size());
    PolyBasis b = exponentiate(
        f, g, r, rng, opts, stats, [n](std::size_t, std::size_t, long long R) { return n * R * (R + 1) / 2; },
        [&f](const PolyBasis& x, int) { return prune(f, x); });
    return {std::move(b), std::move(stats)};
}

long long reencode_threshold(long long u1, long long u2, long long R, long long n, long long k) {
    return (n - k) * R * (R + 1) / 2 + k * (u1 + u2 - 2 - R) * (u1 + u2 - 1 - R) / 2;
}

Reencoding make_reencoding(const Field& f, const InterpPoints& pts, int k) {
    const int n = static_cast<int>(pts.size());
    if (k < 1 || k >= n)
        throw Error(Errc::InvalidArgument, "re-encoding needs 1 <= k < n");
    Reencoding re;
    re.k = k;
    const auto& xs = pts.xs();
    re.psi = from_roots(f, std::span<const Element>(xs.data(), static_cast<std::size_t>(k)));
    re.theta = from_roots(f, std::span<const Element>(xs.data() + k, xs.size() - static_cast<std::size_t>(k)));
    re.t = lagrange(f, xs, pts.ys());
    auto [h, g] = divmod(f, re.t, re.psi);
    re.h = std::move(h);
    re.g = std::move(g);
    return re;
}

ReencodedInterpolation reencode_interpolate(const Field& f, const InterpPoints& pts, int r, int k, RngStream& rng,
                                            const MergeOptions& opts) {
    if (r < 1)
        throw Error(Errc::InvalidArgument, "reencode_interpolate: r must be >= 1");
    ReencodedInterpolation out;
    out.transform = make_reencoding(f, pts, k);
    const Reencoding& re = out.transform;
    const long long n = static_cast<long long>(pts.size());

    PolyBasis g{{BiPoly::from_uni(re.theta)}, reencoded_order()};
    UniPoly psi_pow = UniPoly::constant(1);
    const int limit = static_cast<int>(n) + 2;
    for (int j = 0;;) {
        // (psi z)^j (z - h)
        std::vector<UniPoly> rows(static_cast<std::size_t>(j) + 2);
        rows[static_cast<std::size_t>(j)] = mul(f, re.h, psi_pow, opts.karatsuba_cutoff);
        rows[static_cast<std::size_t>(j) + 1] = psi_pow;
        g = reduce_extend(f, std::move(g), BiPoly(std::move(rows)), &out.stats.reduce_steps);
        ++j;
        psi_pow = mul(f, psi_pow, re.psi, opts.karatsuba_cutoff);
        if (const BiPoly* top = g.with_leading_ydeg(j);
            top && leading_term(*top, g.ord).i == static_cast<long long>(j - 1) * k)
            break;
        if (j > limit)
            throw Error(Errc::PreconditionViolated, "re-encoded r = 1 basis never reached its top leader");
    }
    g = prune_reencoded(f, g, 1, k);

    out.basis = exponentiate(
        f, g, r, rng, opts, out.stats,
        [n, k](std::size_t u1, std::size_t u2, long long R) {
            return reencode_threshold(static_cast<long long>(u1), static_cast<long long>(u2), R, n, k);
        },
        [&f, k](const PolyBasis& x, int R) { return prune_reencoded(f, x, R, k); });
    return out;
}

BiPoly back_substitute(const Field& f, const BiPoly& p, const UniPoly& g, const UniPoly& psi, int r) {
    if (r < 0)
        throw Error(Errc::InvalidArgument, "back_substitute: r must be >= 0");
    const int top = p.ydeg();
    std::vector<UniPoly> psi_pow{UniPoly::constant(1)};
    const int need = std::max(r, top - r);
    for (int e = 1; e <= need; ++e)
        psi_pow.push_back(mul(f, psi_pow.back(), psi));

    const BiPoly y_minus_g(std::vector<UniPoly>{g, UniPoly::constant(1)});
    BiPoly lin_pow = BiPoly::from_uni(UniPoly::constant(1));
    BiPoly q;
    for (int j = 0; j <= top; ++j) {
        const UniPoly& pj = p.row(static_cast<std::size_t>(j));
        if (!pj.is_zero()) {
            UniPoly c = j <= r ? mul(f, pj, psi_pow[static_cast<std::size_t>(r - j)])
                               : div_exact(f, pj, psi_pow[static_cast<std::size_t>(j - r)]);
            q = add(q, mul_uni(f, lin_pow, c));
        }
        if (j < top)
            lin_pow = mul(f, lin_pow, y_minus_g);
    }
    return q;
}

} // namespace gsi
