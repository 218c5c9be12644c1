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

#include "gsinterp/module.hpp"

#include <algorithm>
#include <numeric>

namespace gsi {

std::vector<Monomial> PolyBasis::leading_terms() const {
    std::vector<Monomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys)
        out.push_back(leading_term(p, ord));
    return out;
}

const BiPoly* PolyBasis::with_leading_ydeg(int j) const {
    for (const auto& p : polys)
        if (!p.is_zero() && leading_term(p, ord).j == j)
            return &p;
    return nullptr;
}

std::size_t PolyBasis::smallest_index() const {
    if (polys.empty())
        throw Error(Errc::InvalidArgument, "smallest element of an empty basis");
    std::size_t best = 0;
    Exponent best_lt = leading_term(polys[0], ord).exponent();
    for (std::size_t i = 1; i < polys.size(); ++i) {
        const Exponent e = leading_term(polys[i], ord).exponent();
        if (ord.less(e, best_lt)) {
            best = i;
            best_lt = e;
        }
    }
    return best;
}

InterpPoints::InterpPoints(std::vector<Element> xs, std::vector<Element> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size())
        throw Error(Errc::InvalidArgument, "point coordinate counts differ");
    std::vector<Element> sorted = xs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::DuplicateAbscissa, "interpolation abscissas must be distinct");
}

long long delta(const PolyBasis& b) {
    long long sum = 0;
    std::vector<int> seen;
    for (const auto& p : b.polys) {
        const Monomial lt = leading_term(p, b.ord);
        if (std::find(seen.begin(), seen.end(), lt.j) != seen.end())
            throw Error(Errc::NotGroebnerShape, "two basis elements lead in y-degree " + std::to_string(lt.j));
        seen.push_back(lt.j);
        sum += lt.i;
    }
    return sum;
}

void sort_by_leading_ydeg(PolyBasis& b) {
    std::vector<std::pair<int, std::size_t>> keys;
    keys.reserve(b.polys.size());
    for (std::size_t i = 0; i < b.polys.size(); ++i)
        keys.emplace_back(leading_term(b.polys[i], b.ord).j, i);
    std::stable_sort(keys.begin(), keys.end());
    std::vector<BiPoly> sorted;
    sorted.reserve(keys.size());
    for (const auto& [j, i] : keys)
        sorted.push_back(std::move(b.polys[i]));
    b.polys = std::move(sorted);
}

PolyBasis iia(const Field& f, const InterpPoints& pts, int r, int rho, const TermOrder& ord) {
    if (r < 1 || rho < 1)
        throw Error(Errc::InvalidArgument, "iia needs r >= 1 and rho >= 1");
    std::vector<BiPoly> q;
    q.reserve(static_cast<std::size_t>(rho));
    for (int j = 0; j < rho; ++j)
        q.push_back(BiPoly::y_pow(static_cast<std::size_t>(j)));

    std::vector<Element> d(q.size());
    std::vector<Exponent> lt(q.size());
    for (std::size_t j = 0; j < q.size(); ++j)
        lt[j] = leading_term(q[j], ord).exponent();

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Element xi = pts.xs()[i];
        const Element yi = pts.ys()[i];
        for (int beta = 0; beta < r; ++beta) {
            for (int alpha = 0; alpha < r - beta; ++alpha) {
                std::optional<std::size_t> m;
                for (std::size_t j = 0; j < q.size(); ++j) {
                    d[j] = hasse(f, q[j], alpha, beta, xi, yi);
                    // Strict comparison keeps the lowest index on ties.
                    if (d[j] != 0 && (!m || ord.less(lt[j], lt[*m])))
                        m = j;
                }
                if (!m)
                    continue;
                const BiPoly& qm = q[*m];
                for (std::size_t j = 0; j < q.size(); ++j) {
                    if (j == *m || d[j] == 0)
                        continue;
                    add_scaled_inplace(f, q[j], f.div(d[j], d[*m]), 0, 0, qm);
                }
                // Q_m <- Q_m * (x - x_i)
                BiPoly shifted;
                add_scaled_inplace(f, shifted, 1, 1, 0, qm);
                add_scaled_inplace(f, shifted, xi, 0, 0, qm);
                q[*m] = std::move(shifted);
                lt[*m] = leading_term(q[*m], ord).exponent();
            }
        }
    }
    PolyBasis out{std::move(q), ord};
    sort_by_leading_ydeg(out);
    return out;
}

PolyBasis reduce_extend(const Field& f, PolyBasis b, BiPoly p, std::size_t* steps) {
    const TermOrder& ord = b.ord;
    std::vector<Monomial> lts;
    lts.reserve(b.polys.size() + 1);
    for (const auto& s : b.polys) {
        if (s.is_zero())
            throw Error(Errc::PreconditionViolated, "reduce_extend: zero basis element");
        const Monomial lt = leading_term(s, ord);
        for (const auto& o : lts)
            if (o.j == lt.j)
                throw Error(Errc::PreconditionViolated,
                            "reduce_extend: leading y-degree " + std::to_string(lt.j) + " repeated");
        lts.push_back(lt);
    }

    std::size_t local_steps = 0;
    while (!p.is_zero()) {
        const Monomial lp = leading_term(p, ord);
        auto it = std::find_if(lts.begin(), lts.end(), [&](const Monomial& m) { return m.j == lp.j; });
        if (it == lts.end())
            break;
        const std::size_t idx = static_cast<std::size_t>(it - lts.begin());
        const Monomial lb = *it;
        ++local_steps;
        if (lp.i <= lb.i) {
            // lt P divides lt S_j: swap roles so the basis keeps the smaller one.
            BiPoly w = std::move(b.polys[idx]);
            add_scaled_inplace(f, w, f.div(lb.coeff, lp.coeff), lb.i - lp.i, 0, p);
            b.polys[idx] = std::move(p);
            lts[idx] = lp;
            p = std::move(w);
        } else {
            add_scaled_inplace(f, p, f.div(lp.coeff, lb.coeff), lp.i - lb.i, 0, b.polys[idx]);
        }
    }
    if (!p.is_zero())
        b.polys.push_back(std::move(p));
    if (steps)
        *steps += local_steps;
    sort_by_leading_ydeg(b);
    return b;
}

std::vector<BiPoly> lee_osullivan_generators(const Field& f, const InterpPoints& pts, int r, int rho) {
    const UniPoly phi = from_roots(f, pts.xs());
    const UniPoly t = lagrange(f, pts.xs(), pts.ys());
    // y - T(x); signs vanish in characteristic 2
    const BiPoly y_minus_t(std::vector<UniPoly>{t, UniPoly::constant(1)});

    std::vector<UniPoly> phi_pow{UniPoly::constant(1)};
    for (int e = 1; e <= r; ++e)
        phi_pow.push_back(mul(f, phi_pow.back(), phi));

    std::vector<BiPoly> gens;
    BiPoly lin_pow = BiPoly::from_uni(UniPoly::constant(1));
    for (int j = 0; j <= r && j < rho; ++j) {
        gens.push_back(mul_uni(f, lin_pow, phi_pow[static_cast<std::size_t>(r - j)]));
        if (j < r)
            lin_pow = mul(f, lin_pow, y_minus_t);
    }
    for (int j = 1; r + j < rho; ++j) {
        BiPoly g;
        add_scaled_inplace(f, g, 1, 0, j, lin_pow);
        gens.push_back(std::move(g));
    }
    return gens;
}

PolyBasis lee_osullivan(const Field& f, const InterpPoints& pts, int r, int rho, int k, std::size_t* steps) {
    if (r < 1 || rho < 1)
        throw Error(Errc::InvalidArgument, "lee_osullivan needs r >= 1 and rho >= 1");
    auto gens = lee_osullivan_generators(f, pts, r, rho);
    PolyBasis b{{}, decoding_order(k)};
    for (auto& g : gens)
        b = reduce_extend(f, std::move(b), std::move(g), steps);
    return b;
}

namespace {

Verdict fail(std::string why) { return Verdict{false, std::move(why)}; }

Verdict check_module(const Field& f, const PolyBasis& b, const InterpPoints& pts, int r, long long n) {
    if (b.polys.empty())
        return fail("empty basis");
    for (const auto& p : b.polys)
        if (p.is_zero())
            return fail("zero element");
    long long d = 0;
    try {
        d = delta(b);
    } catch (const Error& e) {
        return fail(e.what());
    }
    for (std::size_t e = 0; e < b.polys.size(); ++e)
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!has_root_mult(f, b.polys[e], pts.xs()[i], pts.ys()[i], r))
                return fail("element " + std::to_string(e) + " does not vanish to order " + std::to_string(r) +
                            " at point " + std::to_string(i));
    const long long want = n * r * (r + 1) / 2;
    if (d != want)
        return fail("delta " + std::to_string(d) + " != " + std::to_string(want));
    return {};
}

} // namespace

Verdict verify_module_basis(const Field& f, const PolyBasis& b, const InterpPoints& pts, int r) {
    return check_module(f, b, pts, r, static_cast<long long>(pts.size()));
}

Verdict verify_ideal_basis(const Field& f, const PolyBasis& b, const InterpPoints& pts, int r, int n) {
    if (Verdict v = check_module(f, b, pts, r, n); !v)
        return v;
    auto lts = b.leading_terms();
    std::sort(lts.begin(), lts.end(), [](const Monomial& a, const Monomial& c) { return a.j < c.j; });
    for (std::size_t j = 0; j < lts.size(); ++j)
        if (lts[j].j != static_cast<int>(j))
            return fail("leading y-degrees are not 0.." + std::to_string(lts.size() - 1));
    if (lts.back().i != 0)
        return fail("top element leads with x^" + std::to_string(lts.back().i) + " y^" +
                    std::to_string(lts.back().j) + ", not a pure power of y");
    return {};
}

} // namespace gsi
