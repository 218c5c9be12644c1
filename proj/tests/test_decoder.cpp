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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace gsi;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected gsi::Error");
    return Errc::Io;
}

constexpr Algorithm kAll[] = {Algorithm::Iia, Algorithm::LeeOSullivan, Algorithm::Binary,
                              Algorithm::BinaryReencoded};

CodeSpec small_code(unsigned m, int n, int k) {
    return CodeSpec::with_default_locators(std::make_shared<const Field>(m, default_primitive_poly(m)), n, k);
}

std::vector<Element> vec(const UniPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

int oracle_agreement(const CodeSpec& code, const std::vector<Element>& msg, const std::vector<Element>& word) {
    int a = 0;
    for (int i = 0; i < code.n; ++i)
        a += oracle::eval_uni(*code.field, msg, code.locators[static_cast<std::size_t>(i)]) ==
             word[static_cast<std::size_t>(i)];
    return a;
}

std::set<std::vector<Element>> brute_force_list(const CodeSpec& code, const std::vector<Element>& word, int tau) {
    std::set<std::vector<Element>> out;
    for (auto c : oracle::all_polys(*code.field, code.k)) {
        if (oracle_agreement(code, c, word) < tau)
            continue;
        while (!c.empty() && c.back() == 0)
            c.pop_back();
        out.insert(c);
    }
    return out;
}

std::set<std::vector<Element>> as_set(const DecodeResult& res) {
    std::set<std::vector<Element>> out;
    for (const auto& c : res.candidates)
        out.insert(vec(c.message));
    return out;
}

} // namespace

TEST_CASE("gs_params known values") {
    const GsParams a = gs_params(31, 15, 1), b = gs_params(31, 15, 2), c = gs_params(31, 15, 4);
    CHECK(a.rho == 2);
    CHECK(a.l == 22);
    CHECK(a.tau == 23);
    CHECK(b.rho == 4);
    CHECK(b.l == 44);
    CHECK(b.tau == 23);
    CHECK(c.rho == 7);
    CHECK(c.l == 86);
    CHECK(c.tau == 22);
}

TEST_CASE("gs_params against the exact-rational scan") {
    for (int n : {7, 15, 31, 63, 255})
        for (int k = 2; k < n; k += std::max(1, n / 9))
            for (int r = 1; r <= 8; ++r) {
                const auto want = oracle::gs_params(n, k, r);
                const GsParams got = gs_params(n, k, r);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(r);
                REQUIRE(want.rho > 0);
                CHECK(got.r == r);
                CHECK(got.rho == want.rho);
                CHECK(got.l == want.l);
                CHECK(got.tau == want.tau);
            }
    CHECK(code_of([] { gs_params(31, 1, 2); }) == Errc::InvalidArgument);
    CHECK(code_of([] { gs_params(31, 31, 2); }) == Errc::InvalidArgument);
    CHECK(code_of([] { gs_params(31, 15, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("code construction") {
    auto f = std::make_shared<const Field>(5, 0x25);
    const CodeSpec c = CodeSpec::with_default_locators(f, 31, 15);
    CHECK(c.locators.size() == 31);
    CHECK(c.locators[1] == 2);
    CHECK(code_of([&] { CodeSpec::with_default_locators(f, 32, 15); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { CodeSpec::with_default_locators(f, 31, 31); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { CodeSpec::with_locators(f, 1, {3, 3}); }) == Errc::DuplicateAbscissa);
    CHECK(code_of([&] { CodeSpec::with_locators(f, 1, {3, 40}); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { CodeSpec::with_default_locators(nullptr, 7, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("encode evaluates the message") {
    const CodeSpec code = small_code(5, 31, 15);
    RngStream rng(1);
    for (int t = 0; t < 20; ++t) {
        const UniPoly msg = oracle::random_uni(*code.field, static_cast<int>(rng.below(15)), rng);
        const auto cw = encode(code, msg);
        REQUIRE(cw.size() == 31);
        for (int i = 0; i < 31; ++i)
            REQUIRE(cw[static_cast<std::size_t>(i)] ==
                    oracle::eval_uni(*code.field, vec(msg), code.locators[static_cast<std::size_t>(i)]));
        CHECK(agreement(*code.field, msg, code.locators, cw) == 31);
    }
    CHECK(code_of([&] { encode(code, UniPoly::monomial(1, 15)); }) == Errc::DegreeTooHigh);
    CHECK(encode(code, UniPoly()) == std::vector<Element>(31, 0));
}

TEST_CASE("y_roots against brute force") {
    const Field f(3, 0xb);
    RngStream rng(2);
    const auto all = oracle::all_polys(f, 2);
    for (int t = 0; t < 40; ++t) {
        // product of a few (y - g_i(x)) with a random x-factor
        BiPoly q = BiPoly::from_uni(oracle::random_uni(f, static_cast<int>(rng.below(3)), rng));
        const int factors = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < factors; ++i) {
            const auto& g = all[rng.below(all.size())];
            q = mul(f, q, BiPoly(std::vector<UniPoly>{UniPoly(g), UniPoly::constant(1)}));
        }
        if (t % 3 == 0)
            q = add(q, BiPoly::monomial(1, 0, 0));
        std::set<std::vector<Element>> want;
        for (auto c : all) {
            // substitute y = c(x) and check the result vanishes identically
            const UniPoly s = substitute_y(f, q, UniPoly(c));
            if (!s.is_zero())
                continue;
            while (!c.empty() && c.back() == 0)
                c.pop_back();
            want.insert(c);
        }
        std::set<std::vector<Element>> got;
        for (const auto& p : y_roots(f, q, 2))
            got.insert(vec(p));
        REQUIRE(got == want);
    }
    CHECK(code_of([&] { y_roots(f, BiPoly(), 2); }) == Errc::ZeroPolynomial);
    CHECK(code_of([&] { y_roots(f, BiPoly::y_pow(1), 0); }) == Errc::InvalidArgument);
}

TEST_CASE("list is exactly the codewords within the radius, small codes") {
    for (auto [m, n, k] : {std::tuple{3u, 7, 2}, std::tuple{4u, 15, 3}}) {
        const CodeSpec code = small_code(m, n, k);
        RngStream rng(m);
        for (int r = 1; r <= 4; ++r) {
            const GsParams gp = gs_params(n, k, r);
            for (int t = 0; t < 6; ++t) {
                const UniPoly msg = oracle::random_uni(*code.field, k - 1, rng);
                auto word = encode(code, msg);
                const int weight = n - gp.tau - static_cast<int>(rng.below(2));
                for (int i = 0; i < weight; ++i)
                    word[static_cast<std::size_t>(i)] ^= code.field->alpha_pow(static_cast<int>(rng.below(n)));
                const auto want = brute_force_list(code, word, gp.tau);
                for (Algorithm a : kAll) {
                    const DecodeResult res = list_decode(code, word, r, a, 1000 + static_cast<std::uint64_t>(t));
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(algorithm_name(a));
                    REQUIRE(as_set(res) == want);
                    for (const auto& c : res.candidates)
                        CHECK(c.agreement == oracle_agreement(code, vec(c.message), word));
                }
            }
        }
    }
}

TEST_CASE("decoding radius on (31, 15)") {
    const CodeSpec code = small_code(5, 31, 15);
    for (int r = 1; r <= 4; ++r) {
        const GsParams gp = gs_params(31, 15, r);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            RngStream rng(seed * 17 + static_cast<std::uint64_t>(r));
            const UniPoly msg = oracle::random_uni(*code.field, 14, rng);
            auto word = encode(code, msg);
            // n - tau errors on distinct positions
            std::vector<int> pos(31);
            for (int i = 0; i < 31; ++i)
                pos[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < 31 - gp.tau; ++i) {
                std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i) + rng.below(31 - i)]);
                word[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] ^= rng.nonzero_element(*code.field);
            }
            std::set<std::vector<Element>> first;
            for (Algorithm a : kAll) {
                const DecodeResult res = list_decode(code, word, r, a, seed);
                CAPTURE(r);
                CAPTURE(algorithm_name(a));
                CHECK(res.params.tau == gp.tau);
                const auto got = as_set(res);
                REQUIRE(got.count(vec(msg)) == 1);
                for (const auto& c : res.candidates) {
                    CHECK(c.agreement >= gp.tau);
                    CHECK(c.message.degree() < 15);
                }
                CHECK(wdeg(res.interpolation_poly, 1, 14) <= gp.l);
                CHECK(res.interpolation_poly.ydeg() < gp.rho);
                for (std::size_t i = 0; i < 31; ++i)
                    REQUIRE(has_root_mult(*code.field, res.interpolation_poly, code.locators[i], word[i], r));
                if (first.empty())
                    first = got;
                CHECK(got == first);
            }
        }
    }
}

TEST_CASE("error-free and zero words") {
    const CodeSpec code = small_code(5, 31, 15);
    const std::vector<Element> zero(31, 0);
    for (Algorithm a : kAll) {
        const DecodeResult res = list_decode(code, zero, 2, a, 1);
        REQUIRE(res.candidates.size() == 1);
        CHECK(res.candidates[0].message.is_zero());
        CHECK(res.candidates[0].agreement == 31);
    }
    CHECK(code_of([&] { list_decode(code, std::vector<Element>(30, 0), 1, Algorithm::Iia, 1); }) ==
          Errc::InvalidArgument);
    CHECK(code_of([&] { list_decode(code, std::vector<Element>(31, 0x20), 1, Algorithm::Iia, 1); }) ==
          Errc::InvalidArgument);
}

TEST_CASE("optional unique-decoding shortcut") {
    const CodeSpec code = small_code(5, 31, 15);
    RngStream rng(3);
    const UniPoly msg = oracle::random_uni(*code.field, 14, rng);
    auto word = encode(code, msg);
    for (int i = 0; i < 5; ++i)
        word[static_cast<std::size_t>(3 * i)] ^= 1;
    DecodeOptions opts;
    opts.gao_shortcut = true;
    const DecodeResult fast = list_decode(code, word, 4, Algorithm::Binary, 1, opts);
    CHECK(fast.shortcut_taken);
    REQUIRE(fast.candidates.size() == 1);
    CHECK(fast.candidates[0].message == msg);
    const DecodeResult full = list_decode(code, word, 4, Algorithm::Binary, 1);
    CHECK(!full.shortcut_taken);
    CHECK(full.candidates == fast.candidates);
}

TEST_CASE("algorithm names") {
    for (Algorithm a : kAll)
        CHECK(parse_algorithm(algorithm_name(a)) == a);
    CHECK(std::string(algorithm_name(Algorithm::BinaryReencoded)) == "binary_reencoded");
    CHECK(!parse_algorithm("fast"));
}
