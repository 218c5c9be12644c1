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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run gsi(const std::string& args) {
    const std::string cmd = std::string("'") + GSI_CLI_PATH + "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
        r.out.append(buf, n);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

std::string temp_path(const char* name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

const std::string kCode = "--n 15 --k 7 --m 4 ";
const std::string kZero = "--received 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";
const std::string kFar = "--received 1,2,3,4,5,6,7,8,9,a,b,c,d,e,f";

} // namespace

TEST_CASE("decode success lists candidates") {
    const Run r = gsi("decode " + kCode + "--r 2 " + kZero);
    CHECK(r.status == 0);
    CHECK(r.out.find("params: r=2 rho=4 l=20 tau=11") != std::string::npos);
    CHECK(r.out.find("candidates: 1\n") != std::string::npos);
    CHECK(r.out.find("agreement=15 message=0,0,0,0,0,0,0") != std::string::npos);
}

TEST_CASE("all algorithms report the same list") {
    const std::string word = "--received 1,0,0,0,0,0,0,0,0,0,0,0,0,0,7 ";
    std::string first;
    for (const char* alg : {"iia", "lee_osullivan", "binary", "binary_reencoded"}) {
        const Run r = gsi("decode " + kCode + "--r 3 --algorithm " + alg + " " + word);
        CAPTURE(alg);
        REQUIRE(r.status == 0);
        const auto at = r.out.find("candidates:");
        const std::string list = r.out.substr(at, r.out.find("stats:") - at);
        if (first.empty())
            first = list;
        CHECK(list == first);
    }
}

TEST_CASE("empty list exits 2") {
    const Run r = gsi("decode " + kCode + "--r 2 " + kFar);
    CHECK(r.status == 2);
    CHECK(r.out.find("candidates: 0") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(gsi("").status == 64);
    CHECK(gsi("bogus").status == 64);
    CHECK(gsi("decode " + kCode + "--r 2").status == 64);
    CHECK(gsi("decode " + kCode + "--r 2 --received 0,0,0").status == 64);
    CHECK(gsi("decode " + kCode + "--r 2 --received 0,0,0,0,0,0,0,0,0,0,0,0,0,0,g").status == 64);
    CHECK(gsi("decode " + kCode + "--r 2 --received 0,0,0,0,0,0,0,0,0,0,0,0,0,0,10").status == 64);
    CHECK(gsi("decode " + kCode + "--prim-poly zz --r 2 " + kZero).status == 64);
    CHECK(gsi("decode " + kCode + "--algorithm fastest " + kZero).status == 64);
    CHECK(gsi("decode " + kCode + "--r 0 " + kZero).status == 64);
    CHECK(gsi("bench " + kCode + "--r-list 1..x").status == 64);
    CHECK(gsi("bench " + kCode + "--trials 0").status == 64);
    CHECK(gsi("decode --n 15 --k 1 --m 4 " + kZero).status == 64);
}

TEST_CASE("field errors exit 65") {
    CHECK(gsi("decode " + kCode + "--prim-poly 1f --r 2 " + kZero).status == 65);
    CHECK(gsi("decode --n 15 --k 7 --m 5 --prim-poly 13 " + kZero).status == 65);
    CHECK(gsi("bench --n 15 --k 7 --m 17 --trials 1").status == 65);
}

TEST_CASE("help exits 0") { CHECK(gsi("--help").status == 0); }

TEST_CASE("bench CSV on stdout and in a file") {
    const std::string args = "bench " + kCode + "--r-list 1,2 --algorithm iia,binary --trials 3 --seed 4";
    const Run r = gsi(args);
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("algorithm,n,k,r,trial,seed,wall_time,", 0) == 0);
    CHECK(count_lines(r.out) == 13);

    const std::string path = temp_path("gsi_cli_bench.csv");
    REQUIRE(gsi(args + " --out " + path).status == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(count_lines(ss.str()) == 13);

    // shell redirection must keep every row
    REQUIRE(gsi(args + " > " + path).status == 0);
    std::ifstream again(path);
    std::stringstream ss2;
    ss2 << again.rdbuf();
    CHECK(count_lines(ss2.str()) == 13);
    std::remove(path.c_str());
}

TEST_CASE("iterhist") {
    const Run none = gsi("iterhist " + kCode + "--r 1 --trials 5");
    CHECK(none.status == 0);
    CHECK(none.out == "r,extra_iterations,count\n");

    const Run some = gsi("iterhist " + kCode + "--r-list 2..4 --trials 10 --algorithm binary_reencoded");
    CHECK(some.status == 0);
    CHECK(count_lines(some.out) > 1);
    CHECK(gsi("iterhist " + kCode + "--r 2 --algorithm iia").status == 64);
}

TEST_CASE("seeded runs are reproducible") {
    const std::string args = "iterhist " + kCode + "--r-list 3,5 --trials 10 --seed 21";
    CHECK(gsi(args).out == gsi(args).out);
}
