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

// gsi: decode single words, run seeded benchmarks, collect Merge histograms.

#include <csignal>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsinterp/gsinterp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmptyList = 2;
constexpr int kExitUsage = 64;
constexpr int kExitField = 65;
constexpr int kExitFailure = 1;

struct Options {
    int n = 31;
    int k = 15;
    unsigned m = 5;
    std::string prim_poly;
    int r = 1;
    std::string r_list;
    std::string algorithms = "binary";
    int trials = 1;
    int errors = -1;
    std::uint64_t seed = 1;
    std::string out;
    std::string received;
    bool dump_basis = false;
    bool gao_shortcut = false;
    int max_random_iterations = 0;
};

struct UsageError {
    std::string what;
};

void on_sigint(int) { gsi_request_stop(); }

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError{"not an integer: '" + s + "'"};
    }
    if (used != s.size())
        throw UsageError{"not an integer: '" + s + "'"};
    return v;
}

// "1,2,5" or "1..4" or a mix such as "1..3,8".
std::vector<int> parse_r_list(const Options& o) {
    if (o.r_list.empty())
        return {o.r};
    std::vector<int> out;
    for (const auto& tok : split_csv(o.r_list)) {
        const auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(tok));
            continue;
        }
        const int lo = to_int(tok.substr(0, dots));
        const int hi = to_int(tok.substr(dots + 2));
        if (hi < lo)
            throw UsageError{"empty range '" + tok + "'"};
        for (int r = lo; r <= hi; ++r)
            out.push_back(r);
    }
    return out;
}

std::vector<gsi_algorithm> parse_algorithms(const std::string& csv) {
    std::vector<gsi_algorithm> out;
    for (const auto& name : split_csv(csv)) {
        gsi_algorithm a;
        if (gsi_algorithm_from_name(name.c_str(), &a) != GSI_OK)
            throw UsageError{"unknown algorithm '" + name + "' (iia, lee_osullivan, binary, binary_reencoded)"};
        out.push_back(a);
    }
    return out;
}

std::uint32_t parse_poly(const std::string& text) {
    if (text.empty())
        return 0;
    std::string digits = text;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
        digits = digits.substr(2);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(digits, &used, 16);
    } catch (const std::exception&) {
        throw UsageError{"malformed --prim-poly '" + text + "'"};
    }
    if (used != digits.size() || v == 0 || v > 0xffffffffUL)
        throw UsageError{"malformed --prim-poly '" + text + "'"};
    return static_cast<std::uint32_t>(v);
}

int report(gsi_status s, const char* what) {
    std::fprintf(stderr, "gsi: %s: %s (%s)\n", what, gsi_status_string(s), gsi_last_error());
    switch (s) {
    case GSI_ERR_DEGREE_OUT_OF_RANGE:
    case GSI_ERR_NOT_PRIMITIVE:
        return kExitField;
    case GSI_ERR_INVALID_ARGUMENT:
    case GSI_ERR_PARSE:
        return kExitUsage;
    default:
        return kExitFailure;
    }
}

std::string fetch_text(const gsi_result* res, gsi_status (*fn)(const gsi_result*, char*, size_t, size_t*)) {
    size_t need = 0;
    fn(res, nullptr, 0, &need);
    std::string buf(need, '\0');
    fn(res, buf.data(), buf.size(), &need);
    buf.resize(need ? need - 1 : 0);
    return buf;
}

int run_decode(const Options& o) {
    gsi_algorithm alg;
    const auto algs = parse_algorithms(o.algorithms);
    if (algs.size() != 1)
        throw UsageError{"decode takes exactly one --algorithm"};
    alg = algs.front();
    if (!o.r_list.empty())
        throw UsageError{"decode takes --r, not --r-list"};

    gsi_field* field = nullptr;
    if (auto s = gsi_field_new(o.m, parse_poly(o.prim_poly), &field); s != GSI_OK)
        return report(s, "field");
    gsi_code* code = nullptr;
    if (auto s = gsi_code_new(field, o.n, o.k, &code); s != GSI_OK) {
        gsi_field_free(field);
        return report(s, "code");
    }

    int rc = kExitOk;
    std::vector<uint16_t> word(static_cast<std::size_t>(o.n));
    size_t count = 0;
    gsi_result* res = nullptr;
    if (auto s = gsi_parse_symbols(field, o.received.c_str(), word.data(), word.size(), &count);
        s != GSI_OK || count != word.size()) {
        if (s == GSI_OK || s == GSI_ERR_BUFFER_TOO_SMALL)
            std::fprintf(stderr, "gsi: --received has %zu symbols, expected %d\n", count, o.n);
        else
            std::fprintf(stderr, "gsi: --received: %s\n", gsi_last_error());
        rc = kExitUsage;
    } else if (auto s2 = gsi_decode(code, word.data(), word.size(), o.r, alg, o.seed, o.gao_shortcut, &res);
               s2 != GSI_OK) {
        rc = report(s2, "decode");
    } else {
        gsi_params p{};
        gsi_decode_stats st{};
        gsi_result_params(res, &p);
        gsi_result_stats(res, &st);
        std::printf("algorithm: %s\n", gsi_algorithm_name(alg));
        std::printf("code: n=%d k=%d field=%u:%x\n", o.n, o.k, gsi_field_m(field), gsi_field_poly(field));
        std::printf("params: r=%d rho=%d l=%lld tau=%d\n", o.r, p.rho, p.l, p.tau);
        const size_t list = gsi_result_count(res);
        std::printf("candidates: %zu\n", list);
        std::vector<uint16_t> msg(static_cast<std::size_t>(o.k));
        for (size_t i = 0; i < list; ++i) {
            int agree = 0;
            gsi_result_candidate(res, i, msg.data(), msg.size(), &agree);
            std::printf("  [%zu] agreement=%d message=", i, agree);
            for (std::size_t c = 0; c < msg.size(); ++c)
                std::printf("%s%x", c ? "," : "", msg[c]);
            std::printf("\n");
        }
        std::printf("stats: merge_calls=%d random_iterations=%d reduce_steps=%zu fallback=%d shortcut=%d\n",
                    st.merge_calls, st.random_iterations, st.reduce_steps, st.fallback_used, st.shortcut_taken);
        if (o.dump_basis) {
            std::printf("basis:\n%s", fetch_text(res, gsi_result_basis_text).c_str());
            std::printf("interpolation polynomial:\n%s", fetch_text(res, gsi_result_poly_text).c_str());
        }
        rc = list ? kExitOk : kExitEmptyList;
    }
    gsi_result_free(res);
    gsi_code_free(code);
    gsi_field_free(field);
    return rc;
}

int run_grid(const Options& o, bool histogram) {
    const auto rs = parse_r_list(o);
    const auto algs = parse_algorithms(o.algorithms);

    // Surface field errors with their own exit code before starting the grid.
    gsi_field* field = nullptr;
    if (auto s = gsi_field_new(o.m, parse_poly(o.prim_poly), &field); s != GSI_OK)
        return report(s, "field");
    gsi_field_free(field);

    gsi_bench_config cfg{};
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.m = o.m;
    cfg.prim_poly = parse_poly(o.prim_poly);
    cfg.r_values = rs.data();
    cfg.r_count = rs.size();
    cfg.algorithms = algs.data();
    cfg.algorithm_count = algs.size();
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.error_weight = o.errors;
    cfg.max_random_iterations = o.max_random_iterations;

    std::signal(SIGINT, on_sigint);
    const std::string path = o.out.empty() ? "-" : o.out;
    const gsi_status s = histogram ? gsi_iterhist_run(&cfg, path.c_str()) : gsi_bench_run(&cfg, path.c_str());
    std::signal(SIGINT, SIG_DFL);
    return s == GSI_OK ? kExitOk : report(s, histogram ? "iterhist" : "bench");
}

void add_code_flags(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "code length")->capture_default_str();
    sub->add_option("--k", o.k, "code dimension")->capture_default_str();
    sub->add_option("--m", o.m, "field extension degree, GF(2^m)")->capture_default_str();
    sub->add_option("--prim-poly", o.prim_poly, "primitive polynomial in hex (default: built-in for m)");
    sub->add_option("--algorithm", o.algorithms, "iia, lee_osullivan, binary, binary_reencoded (csv)")
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--max-random-iterations", o.max_random_iterations,
                    "randomized Merge passes before the exhaustive fallback (0: default)");
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Reed-Solomon list decoding with binary interpolation"};
    app.require_subcommand(1);

    auto* decode = app.add_subcommand("decode", "list-decode one received word");
    add_code_flags(decode, o);
    decode->add_option("--r", o.r, "multiplicity")->capture_default_str();
    decode->add_option("--r-list", o.r_list)->group("");
    decode->add_option("--received", o.received, "received word, comma-separated hex symbols")->required();
    decode->add_flag("--dump-basis", o.dump_basis, "print the final basis and interpolation polynomial");
    decode->add_flag("--gao-shortcut", o.gao_shortcut, "stop after the r=1 stage when it already decodes");

    CLI::App* grids[2];
    grids[0] = app.add_subcommand("bench", "seeded Monte-Carlo timing comparison, CSV output");
    grids[1] = app.add_subcommand("iterhist", "histogram of randomized Merge passes, CSV output");
    for (auto* sub : grids) {
        add_code_flags(sub, o);
        sub->add_option("--r", o.r, "multiplicity")->capture_default_str();
        sub->add_option("--r-list", o.r_list, "multiplicities, e.g. 1,2,4 or 1..4");
        sub->add_option("--trials", o.trials, "trials per (algorithm, r)")->capture_default_str();
        sub->add_option("--errors", o.errors, "error weight (default: n - tau(r))");
        sub->add_option("--out", o.out, "CSV output path (default: stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (decode->parsed())
            return run_decode(o);
        return run_grid(o, grids[1]->parsed());
    } catch (const UsageError& e) {
        std::fprintf(stderr, "gsi: %s\n", e.what.c_str());
        return kExitUsage;
    }
}
