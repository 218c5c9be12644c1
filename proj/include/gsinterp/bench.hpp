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

#ifndef GSINTERP_BENCH_HPP
#define GSINTERP_BENCH_HPP

#include <atomic>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gsinterp/decoder.hpp"

namespace gsi {

struct BenchConfig {
    int n = 31;
    int k = 15;
    unsigned m = 5;
    std::uint32_t prim_poly = 0;  ///< 0 selects default_primitive_poly(m)
    std::vector<int> r_values{1};
    std::vector<Algorithm> algorithms{Algorithm::Binary};
    int trials = 1;
    std::uint64_t seed = 1;
    int error_weight = -1;  ///< negative: n - tau(r), the largest guaranteed weight
    DecodeOptions decode;
};

/// Throws InvalidArgument on an unusable configuration.
void validate(const BenchConfig& cfg);
CodeSpec make_code(const BenchConfig& cfg);

struct BenchRecord {
    Algorithm algorithm = Algorithm::Binary;
    int n = 0;
    int k = 0;
    int r = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  ///< seconds, interpolation + root finding
    int merge_random_iterations = 0;
    std::size_t reduce_steps = 0;
    std::size_t list_size = 0;
    bool success = false;
};

const char* bench_csv_header() noexcept;
std::string to_csv_row(const BenchRecord& rec);

/// One channel realisation: random message, `weight` errors at random
/// positions with random nonzero values.
struct Trial {
    UniPoly message;
    std::vector<Element> codeword;
    std::vector<Element> received;
};

Trial make_trial(const CodeSpec& code, std::uint64_t seed, int weight);

/// seed xor trial index
std::uint64_t trial_seed(std::uint64_t seed, int trial) noexcept;
/// Seed of the decoder's own stream for a trial (kept apart from the channel stream).
std::uint64_t decoder_seed(std::uint64_t trial_seed) noexcept;

/// For each (algorithm, r, trial): encode, corrupt, decode, record. Rows are
/// written to `csv` (header first) and flushed as they complete; a set `stop`
/// flag ends the run after the current row.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* csv = nullptr,
                                   const std::atomic<bool>* stop = nullptr);

struct HistogramRow {
    int r = 0;
    int extra_iterations = 0;
    long count = 0;
    friend bool operator==(const HistogramRow&, const HistogramRow&) = default;
};

/// Per-Merge-call histogram of randomized passes beyond the u+v+1 initial
/// products. Uses the first configured algorithm, which must be binary or
/// binary_reencoded.
std::vector<HistogramRow> run_iterhist(const BenchConfig& cfg, std::ostream* csv = nullptr,
                                       const std::atomic<bool>* stop = nullptr);

} // namespace gsi

#endif
