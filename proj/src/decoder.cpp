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

#include "gsinterp/decoder.hpp"

#include <algorithm>

namespace gsi {

CodeSpec CodeSpec::with_default_locators(std::shared_ptr<const Field> field, int n, int k) {
    if (!field)
        throw Error(Errc::InvalidArgument, "code needs a field");
    if (n < 1 || static_cast<std::uint32_t>(n) > field->order())
        throw Error(Errc::InvalidArgument, "code length must be in [1, 2^m - 1]");
    std::vector<Element> loc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        loc[static_cast<std::size_t>(i)] = field->alpha_pow(i);
    return with_locators(std::move(field), k, std::move(loc));
}

CodeSpec CodeSpec::with_locators(std::shared_ptr<const Field> field, int k, std::vector<Element> locators) {
    if (!field)
        throw Error(Errc::InvalidArgument, "code needs a field");
    const int n = static_cast<int>(locators.size());
    if (k < 1 || k >= n || static_cast<std::uint32_t>(n) > field->size())
        throw Error(Errc::InvalidArgument, "need 1 <= k < n <= 2^m, got n=" + std::to_string(n) +
                                               " k=" + std::to_string(k));
    for (Element e : locators)
        if (!field->contains(e))
            throw Error(Errc::InvalidArgument, "locator outside the field");
    // Validates distinctness.
    InterpPoints check(locators, std::vector<Element>(locators.size(), 0));
    CodeSpec c;
    c.field = std::move(field);
    c.n = n;
    c.k = k;
    c.locators = std::move(locators);
    return c;
}

GsParams gs_params(int n, int k, int r) {
    if (k < 2 || k >= n || r < 1)
        throw Error(Errc::InvalidArgument, "gs_params needs 2 <= k < n and r >= 1");
    const long long s = static_cast<long long>(n) * r * (r + 1);
    const long long km1 = k - 1;
    // rho(rho-1)/2 <= s/(2(k-1)) < rho(rho+1)/2, cleared of denominators.
    long long rho = 1;
    while (!(rho * (rho - 1) * km1 <= s && s < rho * (rho + 1) * km1))
        ++rho;
    GsParams p;
    p.r = r;
    p.rho = static_cast<int>(rho);
    p.l = (s + rho * (rho - 1) * km1) / (2 * rho);
    p.tau = static_cast<int>(p.l / r) + 1;
    return p;
}

std::vector<Element> encode(const CodeSpec& code, const UniPoly& msg) {
    if (msg.degree() >= code.k)
        throw Error(Errc::DegreeTooHigh, "message degree " + std::to_string(msg.degree()) + " >= k = " +
                                             std::to_string(code.k));
    std::vector<Element> out;
    out.reserve(code.locators.size());
    for (Element x : code.locators)
        out.push_back(eval(*code.field, msg, x));
    return out;
}

int agreement(const Field& f, const UniPoly& msg, std::span<const Element> locators, std::span<const Element> word) {
    int count = 0;
    for (std::size_t i = 0; i < locators.size() && i < word.size(); ++i)
        count += eval(f, msg, locators[i]) == word[i];
    return count;
}

namespace {

// Q / x^s for the largest s dividing every row.
BiPoly strip_x_power(const BiPoly& q) {
    int s = -1;
    for (const auto& row : q.rows())
        if (!row.is_zero())
            s = s < 0 ? row.low_degree() : std::min(s, row.low_degree());
    if (s <= 0)
        return q;
    std::vector<UniPoly> rows;
    rows.reserve(q.rows().size());
    for (const auto& row : q.rows()) {
        const auto c = row.coeffs();
        rows.emplace_back(row.is_zero() ? std::vector<Element>{}
                                        : std::vector<Element>(c.begin() + s, c.end()));
    }
    return BiPoly(std::move(rows));
}

// Q(x, x y + gamma)
BiPoly shift_and_scale(const Field& f, const BiPoly& q, Element gamma) {
    const auto rows = q.rows();
    std::vector<UniPoly> out(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].is_zero())
            continue;
        Element gp = 1;  // gamma^(j - jp), built from jp = j downwards
        for (std::size_t jp = j + 1; jp-- > 0;) {
            if (binom_odd(static_cast<unsigned>(j), static_cast<unsigned>(jp)))
                add_scaled_inplace(f, out[jp], gp, 0, rows[j]);
            gp = f.mul(gp, gamma);
        }
    }
    for (std::size_t jp = 0; jp < out.size(); ++jp)
        out[jp] = shift_up(out[jp], jp);
    return BiPoly(std::move(out));
}

void roth_ruckenstein(const Field& f, const BiPoly& q, int k, std::vector<Element>& prefix,
                      std::vector<std::vector<Element>>& found) {
    if (static_cast<int>(prefix.size()) == k) {
        found.push_back(prefix);
        return;
    }
    const BiPoly reduced = strip_x_power(q);
    std::vector<Element> at_zero(reduced.rows().size());
    for (std::size_t j = 0; j < at_zero.size(); ++j)
        at_zero[j] = reduced.row(j)[0];
    const UniPoly in_y(std::move(at_zero));
    if (in_y.degree() < 1)
        return;
    for (std::uint32_t e = 0; e < f.size(); ++e) {
        const Element gamma = static_cast<Element>(e);
        if (eval(f, in_y, gamma) != 0)
            continue;
        prefix.push_back(gamma);
        roth_ruckenstein(f, shift_and_scale(f, reduced, gamma), k, prefix, found);
        prefix.pop_back();
    }
}

bool coeff_less(const UniPoly& a, const UniPoly& b) {
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    if (ca.size() != cb.size())
        return ca.size() < cb.size();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

} // namespace

std::vector<UniPoly> y_roots(const Field& f, const BiPoly& q, int k) {
    if (q.is_zero())
        throw Error(Errc::ZeroPolynomial, "y_roots of the zero polynomial");
    if (k < 1)
        throw Error(Errc::InvalidArgument, "y_roots needs k >= 1");
    std::vector<Element> prefix;
    std::vector<std::vector<Element>> found;
    roth_ruckenstein(f, q, k, prefix, found);

    std::vector<UniPoly> roots;
    for (auto& coeffs : found) {
        UniPoly cand(std::move(coeffs));
        if (substitute_y(f, q, cand).is_zero())
            roots.push_back(std::move(cand));
    }
    std::sort(roots.begin(), roots.end(), coeff_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

const char* algorithm_name(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::Iia: return "iia";
    case Algorithm::LeeOSullivan: return "lee_osullivan";
    case Algorithm::Binary: return "binary";
    case Algorithm::BinaryReencoded: return "binary_reencoded";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : {Algorithm::Iia, Algorithm::LeeOSullivan, Algorithm::Binary, Algorithm::BinaryReencoded})
        if (name == algorithm_name(a))
            return a;
    return std::nullopt;
}

namespace {

std::vector<Candidate> filter_candidates(const CodeSpec& code, std::span<const Element> received,
                                         const std::vector<UniPoly>& roots, int min_agreement) {
    std::vector<Candidate> out;
    for (const auto& f : roots) {
        const int a = agreement(*code.field, f, code.locators, received);
        if (a >= min_agreement)
            out.push_back(Candidate{f, a});
    }
    return out;
}

} // namespace

DecodeResult list_decode(const CodeSpec& code, std::span<const Element> received, int r, Algorithm algorithm,
                         std::uint64_t seed, const DecodeOptions& opts) {
    if (static_cast<int>(received.size()) != code.n)
        throw Error(Errc::InvalidArgument, "received word has " + std::to_string(received.size()) +
                                               " symbols, code length is " + std::to_string(code.n));
    const Field& f = *code.field;
    for (Element e : received)
        if (!f.contains(e))
            throw Error(Errc::InvalidArgument, "received symbol outside the field");

    DecodeResult res;
    res.params = gs_params(code.n, code.k, r);
    const InterpPoints pts(code.locators, std::vector<Element>(received.begin(), received.end()));
    const TermOrder ord = decoding_order(code.k);
    RngStream rng(seed);

    if (opts.gao_shortcut) {
        PolyBasis g = ideal_basis_r1(f, pts, code.k, &res.stats.reduce_steps);
        const BiPoly& q = g.smallest();
        const int unique_radius = (code.n - code.k) / 2;
        auto cands = filter_candidates(code, received, y_roots(f, q, code.k), code.n - unique_radius);
        if (!cands.empty()) {
            res.candidates = std::move(cands);
            res.interpolation_poly = q;
            res.basis = std::move(g);
            res.shortcut_taken = true;
            return res;
        }
    }

    switch (algorithm) {
    case Algorithm::Iia:
        res.basis = iia(f, pts, r, res.params.rho, ord);
        res.interpolation_poly = res.basis.smallest();
        break;
    case Algorithm::LeeOSullivan:
        res.basis = lee_osullivan(f, pts, r, res.params.rho, code.k, &res.stats.reduce_steps);
        res.interpolation_poly = res.basis.smallest();
        break;
    case Algorithm::Binary: {
        auto [b, st] = interpolate(f, pts, r, code.k, rng, opts.merge);
        st.reduce_steps += res.stats.reduce_steps;
        res.basis = std::move(b);
        res.stats = std::move(st);
        res.interpolation_poly = res.basis.smallest();
        break;
    }
    case Algorithm::BinaryReencoded: {
        auto out = reencode_interpolate(f, pts, r, code.k, rng, opts.merge);
        out.stats.reduce_steps += res.stats.reduce_steps;
        res.interpolation_poly =
            back_substitute(f, out.basis.smallest(), out.transform.g, out.transform.psi, r);
        res.basis = std::move(out.basis);
        res.stats = std::move(out.stats);
        break;
    }
    }

    res.candidates = filter_candidates(code, received, y_roots(f, res.interpolation_poly, code.k), res.params.tau);
    return res;
}

} // namespace gsi
