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

// Test-side reference implementations. None of these call into the library's
// arithmetic beyond container types, so they can check it independently.

#ifndef GSINTERP_TESTS_ORACLES_HPP
#define GSINTERP_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsinterp/bench.hpp"

namespace oracle {

using gsi::Element;

// Carry-less multiply then reduce modulo the defining polynomial, bit by bit.
inline Element gf_mul(Element a, Element b, unsigned m, std::uint32_t poly) {
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < m; ++i)
        if ((b >> i) & 1u)
            acc ^= static_cast<std::uint32_t>(a) << i;
    for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit)
        if ((acc >> bit) & 1u)
            acc ^= poly << (bit - static_cast<int>(m));
    return static_cast<Element>(acc);
}

inline Element gf_pow(Element a, unsigned long long e, unsigned m, std::uint32_t poly) {
    Element r = 1;
    for (unsigned long long i = 0; i < e; ++i)
        r = gf_mul(r, a, m, poly);
    return r;
}

// Multiplicative order of x modulo poly, by repeated shift-and-reduce.
inline unsigned cycle_length(unsigned m, std::uint32_t poly) {
    std::uint32_t v = 1;
    for (unsigned i = 1; i <= (1u << m); ++i) {
        v <<= 1;
        if (v >> m)
            v ^= poly;
        if (v == 1)
            return i;
    }
    return 0;
}

// Binomial mod 2 by Pascal's triangle.
inline bool binom_odd_pascal(unsigned n, unsigned k) {
    if (k > n)
        return false;
    std::vector<std::vector<bool>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, true);
        for (unsigned j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] != t[i - 1][j];
    }
    return t[n][k];
}

// Hasse derivative straight from the definition, with every power computed by
// repeated multiplication in the oracle field.
inline Element hasse(const gsi::BiPoly& q, int j1, int j2, Element x0, Element y0, unsigned m, std::uint32_t poly) {
    Element acc = 0;
    for (int b = j2; b <= q.ydeg(); ++b)
        for (int a = j1; a <= q.row(static_cast<std::size_t>(b)).degree(); ++a) {
            const Element c = q.coeff(a, b);
            if (c == 0 || !binom_odd_pascal(static_cast<unsigned>(a), static_cast<unsigned>(j1)) ||
                !binom_odd_pascal(static_cast<unsigned>(b), static_cast<unsigned>(j2)))
                continue;
            Element t = c;
            t = gf_mul(t, gf_pow(x0, static_cast<unsigned>(a - j1), m, poly), m, poly);
            t = gf_mul(t, gf_pow(y0, static_cast<unsigned>(b - j2), m, poly), m, poly);
            acc ^= t;
        }
    return acc;
}

inline bool has_root_mult(const gsi::BiPoly& q, Element x0, Element y0, int r, unsigned m, std::uint32_t poly) {
    for (int j1 = 0; j1 < r; ++j1)
        for (int j2 = 0; j1 + j2 < r; ++j2)
            if (hasse(q, j1, j2, x0, y0, m, poly) != 0)
                return false;
    return true;
}

struct Params {
    int rho;
    long long l;
    int tau;
};

// Scans rho upward for the unique integer with
//   rho(rho-1)/2 <= n r (r+1) / (2(k-1)) < rho(rho+1)/2,
// then takes floors of the two remaining expressions as exact rationals.
inline Params gs_params(long long n, long long k, long long r) {
    const long long num = n * r * (r + 1);  // over 2(k-1)
    std::optional<long long> rho;
    for (long long c = 1; c < 100000; ++c) {
        const bool lower = c * (c - 1) * (k - 1) <= num;
        const bool upper = num < c * (c + 1) * (k - 1);
        if (lower && upper) {
            if (rho)
                return {-1, -1, -1};  // not unique
            rho = c;
        }
    }
    if (!rho)
        return {-1, -1, -1};
    // l = floor(A/B + C/D) with A = n r(r+1), B = 2 rho, C = (rho-1)(k-1), D = 2.
    const long long a = num, b = 2 * *rho, c = (*rho - 1) * (k - 1), d = 2;
    const long long l = (a * d + c * b) / (b * d);
    return {static_cast<int>(*rho), l, static_cast<int>(l / r + 1)};
}

// Membership of p in the F[x]-span of a basis with distinct leading
// y-degrees: plain multivariate division on leading terms.
inline bool in_module(const gsi::Field& f, const gsi::PolyBasis& b, gsi::BiPoly p) {
    std::map<int, std::pair<int, Element>> lead;  // j -> (i, coeff)
    for (const auto& e : b.polys) {
        const auto lt = gsi::leading_term(e, b.ord);
        lead[lt.j] = {lt.i, lt.coeff};
    }
    for (int guard = 0; guard < 1000000 && !p.is_zero(); ++guard) {
        const auto lt = gsi::leading_term(p, b.ord);
        auto it = lead.find(lt.j);
        if (it == lead.end() || it->second.first > lt.i)
            return false;
        for (const auto& e : b.polys) {
            const auto le = gsi::leading_term(e, b.ord);
            if (le.j == lt.j) {
                gsi::add_scaled_inplace(f, p, f.div(lt.coeff, le.coeff), lt.i - le.i, 0, e);
                break;
            }
        }
    }
    return p.is_zero();
}

// Every polynomial of degree < k over the field, as coefficient vectors.
inline std::vector<std::vector<Element>> all_polys(const gsi::Field& f, int k) {
    std::vector<std::vector<Element>> out{{}};
    for (int d = 0; d < k; ++d) {
        std::vector<std::vector<Element>> next;
        for (const auto& p : out)
            for (std::uint32_t c = 0; c < f.size(); ++c) {
                auto q = p;
                q.push_back(static_cast<Element>(c));
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

inline Element eval_uni(const gsi::Field& f, const std::vector<Element>& c, Element x) {
    Element acc = 0, xp = 1;
    for (Element a : c) {
        acc ^= f.mul(a, xp);
        xp = f.mul(xp, x);
    }
    return acc;
}

// Random points with distinct nonzero abscissae from the alpha powers.
inline gsi::InterpPoints random_points(const gsi::Field& f, int n, gsi::RngStream& rng) {
    std::vector<Element> xs, ys;
    for (int i = 0; i < n; ++i) {
        xs.push_back(f.alpha_pow(i));
        ys.push_back(rng.element(f));
    }
    return gsi::InterpPoints(xs, ys);
}

inline gsi::UniPoly random_uni(const gsi::Field& f, int deg, gsi::RngStream& rng) {
    std::vector<Element> c(static_cast<std::size_t>(deg + 1));
    for (auto& e : c)
        e = rng.element(f);
    c.back() = rng.nonzero_element(f);
    return gsi::UniPoly(std::move(c));
}

inline gsi::BiPoly random_bi(const gsi::Field& f, int xdeg, int ydeg, gsi::RngStream& rng) {
    std::vector<gsi::UniPoly> rows;
    for (int j = 0; j <= ydeg; ++j)
        rows.push_back(random_uni(f, xdeg, rng));
    return gsi::BiPoly(std::move(rows));
}

} // namespace oracle

#endif
