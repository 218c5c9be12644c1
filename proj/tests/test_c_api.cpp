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

// Exercises the shared library through its C header only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsinterp/gsinterp.h"

namespace {

struct Handles {
    gsi_field* field = nullptr;
    gsi_code* code = nullptr;
    gsi_result* result = nullptr;
    ~Handles() {
        gsi_result_free(result);
        gsi_code_free(code);
        gsi_field_free(field);
    }
};

std::string temp_path(const char* name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

} // namespace

TEST_CASE("fields") {
    Handles h;
    REQUIRE(gsi_field_new(5, 0, &h.field) == GSI_OK);
    CHECK(gsi_field_m(h.field) == 5);
    CHECK(gsi_field_poly(h.field) == 0x25);
    CHECK(gsi_field_mul(h.field, 0x10, 0x02) == 0x05);

    gsi_field* bad = nullptr;
    CHECK(gsi_field_new(4, 0x1f, &bad) == GSI_ERR_NOT_PRIMITIVE);
    CHECK(bad == nullptr);
    CHECK(std::string(gsi_last_error()).find("NotPrimitive") != std::string::npos);
    CHECK(gsi_field_new(17, 0, &bad) == GSI_ERR_DEGREE_OUT_OF_RANGE);
    CHECK(gsi_field_parse("8:zz", &bad) == GSI_ERR_PARSE);
    CHECK(gsi_field_new(5, 0, nullptr) == GSI_ERR_INVALID_ARGUMENT);

    gsi_field* g = nullptr;
    REQUIRE(gsi_field_parse("8:11d", &g) == GSI_OK);
    CHECK(gsi_field_m(g) == 8);
    gsi_field_free(g);
    gsi_field_free(nullptr);
}

TEST_CASE("names and status strings") {
    gsi_algorithm a;
    CHECK(gsi_algorithm_from_name("binary_reencoded", &a) == GSI_OK);
    CHECK(a == GSI_ALG_BINARY_REENCODED);
    CHECK(std::string(gsi_algorithm_name(GSI_ALG_LEE_OSULLIVAN)) == "lee_osullivan");
    CHECK(gsi_algorithm_from_name("quick", &a) == GSI_ERR_PARSE);
    CHECK(std::string(gsi_status_string(GSI_OK)).size() > 0);
    CHECK(std::string(gsi_status_string(GSI_ERR_BUFFER_TOO_SMALL)) != gsi_status_string(GSI_OK));
    CHECK(std::string(gsi_version()).size() > 0);
}

TEST_CASE("parameters") {
    gsi_params p;
    REQUIRE(gsi_gs_params(31, 15, 4, &p) == GSI_OK);
    CHECK(p.rho == 7);
    CHECK(p.l == 86);
    CHECK(p.tau == 22);
    CHECK(gsi_gs_params(31, 1, 4, &p) == GSI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("symbols") {
    Handles h;
    REQUIRE(gsi_field_new(5, 0, &h.field) == GSI_OK);
    uint16_t buf[4];
    size_t count = 0;
    REQUIRE(gsi_parse_symbols(h.field, "1f,0,7", buf, 4, &count) == GSI_OK);
    CHECK(count == 3);
    CHECK(buf[0] == 0x1f);
    CHECK(buf[2] == 7);
    CHECK(gsi_parse_symbols(h.field, "1,2,3,4,5", buf, 4, &count) == GSI_ERR_BUFFER_TOO_SMALL);
    CHECK(count == 5);
    CHECK(gsi_parse_symbols(h.field, "20", buf, 4, &count) == GSI_ERR_PARSE);
    CHECK(gsi_parse_symbols(h.field, "1,,2", buf, 4, &count) == GSI_ERR_PARSE);
}

TEST_CASE("encode and decode round trip") {
    Handles h;
    REQUIRE(gsi_field_new(5, 0, &h.field) == GSI_OK);
    REQUIRE(gsi_code_new(h.field, 31, 15, &h.code) == GSI_OK);
    gsi_field_free(h.field);  // the code keeps its own reference
    h.field = nullptr;
    CHECK(gsi_code_n(h.code) == 31);
    CHECK(gsi_code_k(h.code) == 15);

    std::vector<uint16_t> msg(15);
    for (size_t i = 0; i < msg.size(); ++i)
        msg[i] = static_cast<uint16_t>((7 * i + 3) % 32);
    std::vector<uint16_t> word(31);
    REQUIRE(gsi_encode(h.code, msg.data(), msg.size(), word.data()) == GSI_OK);
    for (int i = 0; i < 9; ++i)
        word[static_cast<size_t>(3 * i)] ^= static_cast<uint16_t>(i + 1);

    for (int alg = GSI_ALG_IIA; alg <= GSI_ALG_BINARY_REENCODED; ++alg) {
        gsi_result* res = nullptr;
        REQUIRE(gsi_decode(h.code, word.data(), word.size(), 4, static_cast<gsi_algorithm>(alg), 1, 0, &res) ==
                GSI_OK);
        bool found = false;
        for (size_t c = 0; c < gsi_result_count(res); ++c) {
            std::vector<uint16_t> got(15);
            int agree = 0;
            REQUIRE(gsi_result_candidate(res, c, got.data(), got.size(), &agree) == GSI_OK);
            CHECK(agree >= 22);
            found = found || got == msg;
        }
        CHECK(found);
        gsi_params p;
        REQUIRE(gsi_result_params(res, &p) == GSI_OK);
        CHECK(p.tau == 22);
        gsi_decode_stats st;
        REQUIRE(gsi_result_stats(res, &st) == GSI_OK);
        if (alg >= GSI_ALG_BINARY)
            CHECK(st.merge_calls == 2);
        else
            CHECK(st.merge_calls == 0);
        CHECK(st.fallback_used == 0);
        gsi_result_free(res);
    }

    uint16_t small[3];
    REQUIRE(gsi_decode(h.code, word.data(), word.size(), 4, GSI_ALG_BINARY, 1, 0, &h.result) == GSI_OK);
    CHECK(gsi_result_candidate(h.result, 0, small, 3, nullptr) == GSI_ERR_BUFFER_TOO_SMALL);
    CHECK(gsi_result_candidate(h.result, 99, msg.data(), msg.size(), nullptr) == GSI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("decode argument errors") {
    Handles h;
    REQUIRE(gsi_field_new(4, 0, &h.field) == GSI_OK);
    REQUIRE(gsi_code_new(h.field, 15, 7, &h.code) == GSI_OK);
    std::vector<uint16_t> word(15, 0);
    gsi_result* res = nullptr;
    CHECK(gsi_decode(h.code, word.data(), 14, 1, GSI_ALG_IIA, 1, 0, &res) == GSI_ERR_INVALID_ARGUMENT);
    CHECK(gsi_decode(h.code, word.data(), 15, 1, static_cast<gsi_algorithm>(9), 1, 0, &res) ==
          GSI_ERR_INVALID_ARGUMENT);
    CHECK(gsi_decode(h.code, word.data(), 15, 0, GSI_ALG_IIA, 1, 0, &res) == GSI_ERR_INVALID_ARGUMENT);
    CHECK(res == nullptr);
    std::vector<uint16_t> msg(8, 1);
    CHECK(gsi_encode(h.code, msg.data(), msg.size(), word.data()) == GSI_ERR_DEGREE_TOO_HIGH);
    gsi_code* c = nullptr;
    CHECK(gsi_code_new(h.field, 16, 7, &c) == GSI_ERR_INVALID_ARGUMENT);
    const uint16_t locs[] = {1, 2, 2};
    CHECK(gsi_code_new_with_locators(h.field, 1, locs, 3, &c) == GSI_ERR_DUPLICATE_ABSCISSA);
    CHECK(c == nullptr);
}

TEST_CASE("text dumps report their size") {
    Handles h;
    REQUIRE(gsi_field_new(4, 0, &h.field) == GSI_OK);
    REQUIRE(gsi_code_new(h.field, 15, 7, &h.code) == GSI_OK);
    std::vector<uint16_t> word(15, 0);
    REQUIRE(gsi_decode(h.code, word.data(), 15, 3, GSI_ALG_BINARY_REENCODED, 1, 0, &h.result) == GSI_OK);
    CHECK(gsi_result_count(h.result) == 1);

    size_t need = 0;
    CHECK(gsi_result_basis_text(h.result, nullptr, 0, &need) == GSI_OK);
    REQUIRE(need > 1);
    std::string buf(need, '\0');
    REQUIRE(gsi_result_basis_text(h.result, buf.data(), buf.size(), &need) == GSI_OK);
    CHECK(std::string(buf.c_str()).rfind("order: 1,-1\n", 0) == 0);
    char tiny[4];
    CHECK(gsi_result_basis_text(h.result, tiny, sizeof tiny, &need) == GSI_ERR_BUFFER_TOO_SMALL);
    CHECK(std::string(tiny).size() == 3);

    REQUIRE(gsi_result_poly_text(h.result, nullptr, 0, &need) == GSI_OK);
    std::string poly(need, '\0');
    REQUIRE(gsi_result_poly_text(h.result, poly.data(), poly.size(), nullptr) == GSI_OK);
    CHECK(poly.find("0: ") == 0);

    REQUIRE(gsi_result_merge_csv(h.result, nullptr, 0, &need) == GSI_OK);
    std::string csv(need, '\0');
    REQUIRE(gsi_result_merge_csv(h.result, csv.data(), csv.size(), nullptr) == GSI_OK);
    std::istringstream lines(csv.c_str());
    std::string line;
    int rows = 0;
    std::getline(lines, line);
    CHECK(line == "r,u,v,random_iterations,reduce_steps,fallback_used");
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 2);  // r = 3: doubling then one more
}

TEST_CASE("bench and iterhist write CSV files") {
    const int rs[] = {1, 2};
    const gsi_algorithm algs[] = {GSI_ALG_BINARY};
    gsi_bench_config cfg{15, 7, 4, 0, rs, 2, algs, 1, 2, 9, -1, 0};
    const std::string path = temp_path("gsi_c_api_bench.csv");
    REQUIRE(gsi_bench_run(&cfg, path.c_str()) == GSI_OK);
    std::ifstream in(path);
    std::string line;
    int rows = -1;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 4);
    std::remove(path.c_str());

    const std::string hist = temp_path("gsi_c_api_hist.csv");
    REQUIRE(gsi_iterhist_run(&cfg, hist.c_str()) == GSI_OK);
    std::ifstream hin(hist);
    std::getline(hin, line);
    CHECK(line == "r,extra_iterations,count");
    std::remove(hist.c_str());

    cfg.trials = 0;
    CHECK(gsi_bench_run(&cfg, path.c_str()) == GSI_ERR_INVALID_ARGUMENT);
    cfg.trials = 1;
    CHECK(gsi_bench_run(&cfg, "/nonexistent-dir/x.csv") == GSI_ERR_IO);
    CHECK(gsi_bench_run(nullptr, path.c_str()) == GSI_ERR_INVALID_ARGUMENT);
}
