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

#include "gsinterp/gsinterp.h"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "gsinterp/bench.hpp"
#include "gsinterp/text.hpp"

struct gsi_field {
    std::shared_ptr<const gsi::Field> field;
};

struct gsi_code {
    gsi::CodeSpec spec;
};

struct gsi_result {
    gsi::DecodeResult result;
    int k;
};

namespace {

thread_local std::string g_last_error;
std::atomic<bool> g_stop{false};

gsi_status to_status(gsi::Errc code) {
    using gsi::Errc;
    switch (code) {
    case Errc::InvalidArgument: return GSI_ERR_INVALID_ARGUMENT;
    case Errc::DegreeOutOfRange: return GSI_ERR_DEGREE_OUT_OF_RANGE;
    case Errc::NotPrimitive: return GSI_ERR_NOT_PRIMITIVE;
    case Errc::DivisionByZero: return GSI_ERR_DIVISION_BY_ZERO;
    case Errc::DuplicateAbscissa: return GSI_ERR_DUPLICATE_ABSCISSA;
    case Errc::ZeroPolynomial: return GSI_ERR_ZERO_POLYNOMIAL;
    case Errc::NotGroebnerShape: return GSI_ERR_NOT_GROEBNER_SHAPE;
    case Errc::PreconditionViolated: return GSI_ERR_PRECONDITION;
    case Errc::FallbackExhausted: return GSI_ERR_FALLBACK_EXHAUSTED;
    case Errc::InexactDivision: return GSI_ERR_INEXACT_DIVISION;
    case Errc::DegreeTooHigh: return GSI_ERR_DEGREE_TOO_HIGH;
    case Errc::Parse: return GSI_ERR_PARSE;
    case Errc::Io: return GSI_ERR_IO;
    }
    return GSI_ERR_INTERNAL;
}

gsi_status fail(gsi_status s, std::string msg) {
    g_last_error = std::move(msg);
    return s;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
gsi_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const gsi::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(GSI_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GSI_ERR_INTERNAL, e.what());
    }
}

gsi_status copy_text(const std::string& text, char* buf, size_t cap, size_t* needed) {
    if (needed)
        *needed = text.size() + 1;
    if (!buf || cap == 0)
        return buf ? fail(GSI_ERR_BUFFER_TOO_SMALL, "zero-sized buffer") : GSI_OK;
    const size_t n = std::min(cap - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
    if (n == text.size())
        return GSI_OK;
    return fail(GSI_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(cap) + " bytes, need " + std::to_string(text.size() + 1));
}

gsi::BenchConfig to_config(const gsi_bench_config* c) {
    if (!c)
        throw gsi::Error(gsi::Errc::InvalidArgument, "null bench config");
    gsi::BenchConfig cfg;
    cfg.n = c->n;
    cfg.k = c->k;
    cfg.m = c->m;
    cfg.prim_poly = c->prim_poly;
    cfg.r_values.assign(c->r_values, c->r_values + c->r_count);
    cfg.algorithms.clear();
    for (size_t i = 0; i < c->algorithm_count; ++i)
        cfg.algorithms.push_back(static_cast<gsi::Algorithm>(c->algorithms[i]));
    cfg.trials = c->trials;
    cfg.seed = c->seed;
    cfg.error_weight = c->error_weight;
    if (c->max_random_iterations > 0)
        cfg.decode.merge.max_random_iterations = c->max_random_iterations;
    return cfg;
}

// NULL or "-" selects stdout.
template <class Fn>
gsi_status with_output(const char* path, Fn&& fn) {
    g_stop = false;
    if (!path || std::strcmp(path, "-") == 0) {
        fn(std::cout);
        return std::cout.flush() ? GSI_OK : fail(GSI_ERR_IO, "write to stdout failed");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return fail(GSI_ERR_IO, std::string("cannot open ") + path);
    fn(out);
    return out ? GSI_OK : fail(GSI_ERR_IO, std::string("write to ") + path + " failed");
}

bool valid_algorithm(gsi_algorithm a) { return a >= GSI_ALG_IIA && a <= GSI_ALG_BINARY_REENCODED; }

} // namespace

extern "C" {

const char* gsi_version(void) { return "1.0.0"; }

const char* gsi_status_string(gsi_status status) {
    switch (status) {
    case GSI_OK: return "ok";
    case GSI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GSI_ERR_DEGREE_OUT_OF_RANGE: return "degree out of range";
    case GSI_ERR_NOT_PRIMITIVE: return "polynomial is not primitive";
    case GSI_ERR_DIVISION_BY_ZERO: return "division by zero";
    case GSI_ERR_DUPLICATE_ABSCISSA: return "duplicate abscissa";
    case GSI_ERR_ZERO_POLYNOMIAL: return "zero polynomial";
    case GSI_ERR_NOT_GROEBNER_SHAPE: return "basis is not in Groebner shape";
    case GSI_ERR_PRECONDITION: return "precondition violated";
    case GSI_ERR_FALLBACK_EXHAUSTED: return "merge fallback exhausted";
    case GSI_ERR_INEXACT_DIVISION: return "inexact division";
    case GSI_ERR_DEGREE_TOO_HIGH: return "degree too high";
    case GSI_ERR_PARSE: return "parse error";
    case GSI_ERR_IO: return "i/o error";
    case GSI_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case GSI_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gsi_last_error(void) { return g_last_error.c_str(); }

gsi_status gsi_algorithm_from_name(const char* name, gsi_algorithm* out) {
    if (!name || !out)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    auto a = gsi::parse_algorithm(name);
    if (!a)
        return fail(GSI_ERR_PARSE, std::string("unknown algorithm '") + name + "'");
    *out = static_cast<gsi_algorithm>(*a);
    return GSI_OK;
}

const char* gsi_algorithm_name(gsi_algorithm alg) {
    return valid_algorithm(alg) ? gsi::algorithm_name(static_cast<gsi::Algorithm>(alg)) : "?";
}

gsi_status gsi_field_new(unsigned m, uint32_t prim_poly, gsi_field** out) {
    return guarded([&] {
        if (!out)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null output handle");
        const uint32_t poly = prim_poly != 0 ? prim_poly : gsi::default_primitive_poly(m);
        *out = new gsi_field{std::make_shared<const gsi::Field>(m, poly)};
        return GSI_OK;
    });
}

gsi_status gsi_field_parse(const char* spec, gsi_field** out) {
    return guarded([&] {
        if (!spec || !out)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        *out = new gsi_field{std::make_shared<const gsi::Field>(gsi::Field::parse(spec))};
        return GSI_OK;
    });
}

void gsi_field_free(gsi_field* field) { delete field; }

unsigned gsi_field_m(const gsi_field* field) { return field ? field->field->m() : 0; }

uint32_t gsi_field_poly(const gsi_field* field) { return field ? field->field->primitive_poly() : 0; }

uint16_t gsi_field_mul(const gsi_field* field, uint16_t a, uint16_t b) {
    if (!field || !field->field->contains(a) || !field->field->contains(b))
        return 0;
    return field->field->mul(a, b);
}

gsi_status gsi_parse_symbols(const gsi_field* field, const char* text, uint16_t* out, size_t cap, size_t* count) {
    return guarded([&] {
        if (!field || !text || !count)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        const auto v = gsi::symbols_from_text(*field->field, text);
        *count = v.size();
        if (v.size() > cap)
            return fail(GSI_ERR_BUFFER_TOO_SMALL, "more symbols than buffer capacity");
        std::copy(v.begin(), v.end(), out);
        return GSI_OK;
    });
}

gsi_status gsi_code_new(const gsi_field* field, int n, int k, gsi_code** out) {
    return guarded([&] {
        if (!field || !out)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        *out = new gsi_code{gsi::CodeSpec::with_default_locators(field->field, n, k)};
        return GSI_OK;
    });
}

gsi_status gsi_code_new_with_locators(const gsi_field* field, int k, const uint16_t* locators, size_t n,
                                      gsi_code** out) {
    return guarded([&] {
        if (!field || !out || (!locators && n))
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        std::vector<gsi::Element> locs(locators, locators + n);
        *out = new gsi_code{gsi::CodeSpec::with_locators(field->field, k, std::move(locs))};
        return GSI_OK;
    });
}

void gsi_code_free(gsi_code* code) { delete code; }

int gsi_code_n(const gsi_code* code) { return code ? code->spec.n : 0; }

int gsi_code_k(const gsi_code* code) { return code ? code->spec.k : 0; }

gsi_status gsi_gs_params(int n, int k, int r, gsi_params* out) {
    return guarded([&] {
        if (!out)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null output");
        const auto p = gsi::gs_params(n, k, r);
        *out = gsi_params{p.rho, p.l, p.tau};
        return GSI_OK;
    });
}

gsi_status gsi_encode(const gsi_code* code, const uint16_t* msg, size_t msg_len, uint16_t* out) {
    return guarded([&] {
        if (!code || !out || (!msg && msg_len))
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        for (size_t i = 0; i < msg_len; ++i)
            if (!code->spec.field->contains(msg[i]))
                return fail(GSI_ERR_INVALID_ARGUMENT, "message symbol outside the field");
        const auto cw = gsi::encode(code->spec, gsi::UniPoly(std::vector<gsi::Element>(msg, msg + msg_len)));
        std::copy(cw.begin(), cw.end(), out);
        return GSI_OK;
    });
}

gsi_status gsi_decode(const gsi_code* code, const uint16_t* received, size_t len, int r, gsi_algorithm alg,
                      uint64_t seed, int gao_shortcut, gsi_result** out) {
    return guarded([&] {
        if (!code || !received || !out)
            return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
        if (!valid_algorithm(alg))
            return fail(GSI_ERR_INVALID_ARGUMENT, "unknown algorithm");
        gsi::DecodeOptions opts;
        opts.gao_shortcut = gao_shortcut != 0;
        auto res = std::make_unique<gsi_result>();
        res->result = gsi::list_decode(code->spec, std::span<const gsi::Element>(received, len), r,
                                       static_cast<gsi::Algorithm>(alg), seed, opts);
        res->k = code->spec.k;
        *out = res.release();
        return GSI_OK;
    });
}

void gsi_result_free(gsi_result* result) { delete result; }

size_t gsi_result_count(const gsi_result* result) { return result ? result->result.candidates.size() : 0; }

gsi_status gsi_result_candidate(const gsi_result* result, size_t index, uint16_t* coeffs, size_t cap,
                                int* agreement) {
    if (!result || !coeffs)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    if (index >= result->result.candidates.size())
        return fail(GSI_ERR_INVALID_ARGUMENT, "candidate index out of range");
    if (cap < static_cast<size_t>(result->k))
        return fail(GSI_ERR_BUFFER_TOO_SMALL, "coefficient buffer shorter than k");
    const auto& c = result->result.candidates[index];
    for (int i = 0; i < result->k; ++i)
        coeffs[i] = c.message[static_cast<size_t>(i)];
    if (agreement)
        *agreement = c.agreement;
    return GSI_OK;
}

gsi_status gsi_result_params(const gsi_result* result, gsi_params* out) {
    if (!result || !out)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    const auto& p = result->result.params;
    *out = gsi_params{p.rho, p.l, p.tau};
    return GSI_OK;
}

gsi_status gsi_result_stats(const gsi_result* result, gsi_decode_stats* out) {
    if (!result || !out)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    const auto& s = result->result.stats;
    *out = gsi_decode_stats{s.merge_calls(), s.random_iterations(), s.reduce_steps, s.fallback_used() ? 1 : 0,
                            result->result.shortcut_taken ? 1 : 0};
    return GSI_OK;
}

gsi_status gsi_result_basis_text(const gsi_result* result, char* buf, size_t cap, size_t* needed) {
    if (!result)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return copy_text(gsi::to_text(result->result.basis), buf, cap, needed); });
}

gsi_status gsi_result_poly_text(const gsi_result* result, char* buf, size_t cap, size_t* needed) {
    if (!result)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return copy_text(gsi::to_text(result->result.interpolation_poly), buf, cap, needed); });
}

gsi_status gsi_result_merge_csv(const gsi_result* result, char* buf, size_t cap, size_t* needed) {
    if (!result)
        return fail(GSI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string text = std::string(gsi::merge_stats_csv_header()) + "\n";
        for (const auto& m : result->result.stats.merges)
            text += gsi::to_csv_row(m) + "\n";
        return copy_text(text, buf, cap, needed);
    });
}

gsi_status gsi_bench_run(const gsi_bench_config* config, const char* out_path) {
    return guarded([&] {
        const auto cfg = to_config(config);
        return with_output(out_path, [&](std::ostream& out) { gsi::run_bench(cfg, &out, &g_stop); });
    });
}

gsi_status gsi_iterhist_run(const gsi_bench_config* config, const char* out_path) {
    return guarded([&] {
        const auto cfg = to_config(config);
        return with_output(out_path, [&](std::ostream& out) { gsi::run_iterhist(cfg, &out, &g_stop); });
    });
}

void gsi_request_stop(void) { g_stop.store(true); }

} // extern "C"
