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

#include "gsinterp/bench.hpp"

#include <chrono>
#include <cstdio>
#include <map>

namespace gsi {

void validate(const BenchConfig& cfg) {
    if (cfg.trials < 1)
        throw Error(Errc::InvalidArgument, "trials must be >= 1");
    if (cfg.error_weight > cfg.n)
        throw Error(Errc::InvalidArgument, "error weight exceeds code length");
    if (cfg.r_values.empty() || cfg.algorithms.empty())
        throw Error(Errc::InvalidArgument, "need at least one multiplicity and one algorithm");
    for (int r : cfg.r_values)
        if (r < 1)
            throw Error(Errc::InvalidArgument, "multiplicities must be >= 1");
    if (cfg.k < 2 || cfg.k >= cfg.n)
        throw Error(Errc::InvalidArgument, "need 2 <= k < n");
}

CodeSpec make_code(const BenchConfig& cfg) {
    const std::uint32_t poly = cfg.prim_poly != 0 ? cfg.prim_poly : default_primitive_poly(cfg.m);
    return CodeSpec::with_default_locators(std::make_shared<const Field>(cfg.m, poly), cfg.n, cfg.k);
}

const char* bench_csv_header() noexcept {
    return "algorithm,n,k,r,trial,seed,wall_time,merge_random_iterations,reduce_steps,list_size,success";
}

std::string to_csv_row(const BenchRecord& rec) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.6f", rec.wall_time);
    return std::string(algorithm_name(rec.algorithm)) + ',' + std::to_string(rec.n) + ',' + std::to_string(rec.k) +
           ',' + std::to_string(rec.r) + ',' + std::to_string(rec.trial) + ',' + std::to_string(rec.seed) + ',' +
           wall + ',' + std::to_string(rec.merge_random_iterations) + ',' + std::to_string(rec.reduce_steps) + ',' +
           std::to_string(rec.list_size) + ',' + (rec.success ? '1' : '0');
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept {
    return seed ^ static_cast<std::uint64_t>(trial);
}

std::uint64_t decoder_seed(std::uint64_t s) noexcept {
    // splitmix64 finalizer
    s += 0x9e3779b97f4a7c15ull;
    s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
    s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
    return s ^ (s >> 31);
}

Trial make_trial(const CodeSpec& code, std::uint64_t seed, int weight) {
    if (weight < 0 || weight > code.n)
        throw Error(Errc::InvalidArgument, "error weight must be in [0, n]");
    const Field& f = *code.field;
    RngStream rng(seed);
    std::vector<Element> msg(static_cast<std::size_t>(code.k));
    for (auto& c : msg)
        c = rng.element(f);
    Trial t;
    t.message = UniPoly(std::move(msg));
    t.codeword = encode(code, t.message);
    t.received = t.codeword;

    std::vector<int> pos(static_cast<std::size_t>(code.n));
    for (int i = 0; i < code.n; ++i)
        pos[static_cast<std::size_t>(i)] = i;
    for (int e = 0; e < weight; ++e) {
        const auto pick = e + static_cast<int>(rng.below(static_cast<std::uint64_t>(code.n - e)));
        std::swap(pos[static_cast<std::size_t>(e)], pos[static_cast<std::size_t>(pick)]);
        t.received[static_cast<std::size_t>(pos[static_cast<std::size_t>(e)])] ^= rng.nonzero_element(f);
    }
    return t;
}

namespace {

int resolve_weight(const BenchConfig& cfg, int r) {
    return cfg.error_weight >= 0 ? cfg.error_weight : cfg.n - gs_params(cfg.n, cfg.k, r).tau;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* csv, const std::atomic<bool>* stop) {
    validate(cfg);
    const CodeSpec code = make_code(cfg);
    std::vector<BenchRecord> records;
    if (csv)
        *csv << bench_csv_header() << '\n' << std::flush;
    for (Algorithm alg : cfg.algorithms) {
        for (int r : cfg.r_values) {
            const int weight = resolve_weight(cfg, r);
            for (int trial = 0; trial < cfg.trials; ++trial) {
                if (stop && stop->load())
                    return records;
                const std::uint64_t ts = trial_seed(cfg.seed, trial);
                const Trial t = make_trial(code, ts, weight);

                const auto t0 = std::chrono::steady_clock::now();
                const DecodeResult res = list_decode(code, t.received, r, alg, decoder_seed(ts), cfg.decode);
                const auto t1 = std::chrono::steady_clock::now();

                BenchRecord rec;
                rec.algorithm = alg;
                rec.n = cfg.n;
                rec.k = cfg.k;
                rec.r = r;
                rec.trial = trial;
                rec.seed = ts;
                rec.wall_time = std::chrono::duration<double>(t1 - t0).count();
                rec.merge_random_iterations = res.stats.random_iterations();
                rec.reduce_steps = res.stats.reduce_steps;
                rec.list_size = res.candidates.size();
                for (const auto& c : res.candidates)
                    rec.success = rec.success || c.message == t.message;
                if (csv)
                    *csv << to_csv_row(rec) << '\n' << std::flush;
                records.push_back(rec);
            }
        }
    }
    return records;
}

std::vector<HistogramRow> run_iterhist(const BenchConfig& cfg, std::ostream* csv, const std::atomic<bool>* stop) {
    validate(cfg);
    const Algorithm alg = cfg.algorithms.front();
    if (alg != Algorithm::Binary && alg != Algorithm::BinaryReencoded)
        throw Error(Errc::InvalidArgument, "iteration histograms need the binary or binary_reencoded algorithm");
    const CodeSpec code = make_code(cfg);

    std::map<std::pair<int, int>, long> buckets;
    for (int r : cfg.r_values) {
        const int weight = resolve_weight(cfg, r);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            if (stop && stop->load())
                break;
            const std::uint64_t ts = trial_seed(cfg.seed, trial);
            const Trial t = make_trial(code, ts, weight);
            const DecodeResult res = list_decode(code, t.received, r, alg, decoder_seed(ts), cfg.decode);
            for (const auto& m : res.stats.merges)
                ++buckets[{r, m.random_iterations}];
        }
    }
    std::vector<HistogramRow> rows;
    for (const auto& [key, count] : buckets)
        rows.push_back(HistogramRow{key.first, key.second, count});
    if (csv) {
        *csv << "r,extra_iterations,count\n";
        for (const auto& row : rows)
            *csv << row.r << ',' << row.extra_iterations << ',' << row.count << '\n';
        csv->flush();
    }
    return rows;
}

} // namespace gsi
