// Copyright 2026 The gbeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbeta/gbeta.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace gbeta;

namespace {

const Params kOdd1 = make_params(1, Parity::odd);
const Params kEven1 = make_params(1, Parity::even);

const CensusRow* find_row(const std::vector<CensusRow>& rows, const FieldElem& x)
{
    for (const auto& row : rows)
        if (row.x == x)
            return &row;
    return nullptr;
}

struct RunResult {
    int code;
    std::string out;
};

#ifdef GBETA_CLI_PATH
RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string("'") + GBETA_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
#define REQUIRE_CLI() (void)0
#else
RunResult run_cli(const std::string&) { return {-1, {}}; }
#define REQUIRE_CLI() GTEST_SKIP() << "built without tools"
#endif

} // namespace

// =============================================================================
// Census
// =============================================================================

TEST(CensusTest, OddExample) {
    const auto rows = census_sweep(kOdd1, 4, 4, {6});
    const CensusRow* one = find_row(rows, kOdd1.one());
    ASSERT_NE(one, nullptr);
    EXPECT_EQ(one->classification.verdict, Verdict::countably_infinite);
    EXPECT_EQ(find_row(rows, kOdd1.canonical(parse_field_elem("(1+1*b)/6"))), nullptr);
    for (const auto& row : rows) {
        EXPECT_LE(row.x.denominator(), 4);
        EXPECT_TRUE(kOdd1.in_open_interval(row.x));
    }
}

TEST(CensusTest, EvenExample) {
    const auto rows = census_sweep(kEven1, 8, 16, {6});
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
        BigInt r = row.x.denominator();
        while (r % 2 == 0)
            r /= 2;
        const Verdict want = r == 1 ? Verdict::countably_infinite : Verdict::continuum;
        EXPECT_EQ(row.classification.verdict, want) << format_field_elem(row.x);
        if (r == 3 || r == 5 || r == 7) {
            EXPECT_EQ(row.classification.verdict, Verdict::continuum);
        }
    }
}

TEST(CensusTest, EmptyRange) {
    EXPECT_TRUE(census_sweep(kOdd1, 4, 0, {6}).empty());
    EXPECT_TRUE(census_sweep(kEven1, 1, 1, {6}).size() == 1); // just x = 1
    EXPECT_THROW(census_sweep(kOdd1, 0, 4, {6}), domain_error);
}

TEST(CensusTest, RowsAreSortedAndDistinct) {
    const auto rows = census_sweep(kOdd1, 6, 5, {4});
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_TRUE(kOdd1.less(rows[i - 1].x, rows[i].x));
}

TEST(CensusTest, ConsistentWithClassifyAndEnumerate) {
    const auto o = oracle::Field::make(1, true);
    for (const auto& row : census_sweep(kOdd1, 4, 3, {2, 5}, 4)) {
        EXPECT_EQ(row.classification.verdict, classify(kOdd1, row.x).verdict);
        ASSERT_EQ(row.prefix_counts.size(), 2u);
        for (const auto& [d, n] : row.prefix_counts)
            EXPECT_EQ(n, o.prefixes(o.from(row.x), d).size());
    }
}

TEST(CensusTest, ThreadCountDoesNotChangeOutput) {
    for (const Params& p : {kOdd1, kEven1}) {
        const auto a = census_sweep(p, 5, 4, {3, 9}, 1);
        const auto b = census_sweep(p, 5, 4, {3, 9}, 8);
        EXPECT_EQ(census_json(p, a).dump(), census_json(p, b).dump());
        EXPECT_EQ(census_csv(p, a), census_csv(p, b));
    }
}

// =============================================================================
// Reports
// =============================================================================

TEST(ReportTest, EnvelopeShape) {
    const json env = envelope(kOdd1, "1", "CountablyInfinite", certificate_json(classify(kOdd1, kOdd1.one())));
    EXPECT_EQ(env.dump(),
              R"({"params":{"k":1,"parity":"odd"},"input":"1","result":"CountablyInfinite",)"
              R"("certificate":{"kind":"finite_expansion","word":"0.2,2"}})");
}

TEST(ReportTest, Certificates) {
    const json c = certificate_json(classify(kOdd1, parse_field_elem("(1+1*b)/6")));
    EXPECT_EQ(c["kind"], "denominator");
    EXPECT_EQ(c["prime"], "3");
    EXPECT_EQ(certificate_json(classify(kOdd1, kOdd1.zero()))["expansion"], "0*");
    EXPECT_EQ(certificate_text(classify(kOdd1, parse_field_elem("1/3"))), "prime 3");
}

TEST(ReportTest, CsvLayout) {
    const auto rows = census_sweep(kOdd1, 2, 1, {2, 4});
    const std::string csv = census_csv(kOdd1, rows);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,parity,k,verdict,certificate,count_d2,count_d4");
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        EXPECT_NE(line.find(",odd,1,"), std::string::npos) << line;
    }
    EXPECT_EQ(lines, rows.size());
    EXPECT_EQ(census_csv(kOdd1, {}), "x,parity,k,verdict,certificate\n");
}

TEST(ReportTest, DisplayWordFinite) {
    EXPECT_EQ(display_word(expansions_of_one(kOdd1, 1)[1]), "0.2,2");
}

// =============================================================================
// Interface closure
// =============================================================================

TEST(ClosureTest, EmittedWordsReparseToEqualValue) {
    for (const auto& row : census_sweep(kOdd1, 8, 6, {})) {
        const std::string lit = format_field_elem(row.x);
        EXPECT_EQ(parse_field_elem(lit), row.x) << lit;
        if (row.classification.expansion) {
            const std::string text = to_string(*row.classification.expansion);
            EXPECT_EQ(word_value(kOdd1, parse_word(kOdd1, text)), row.x) << text;
        }
    }
    for (const auto& w : expansions_of_one(kOdd1, 9)) {
        EXPECT_EQ(word_value(kOdd1, parse_word(kOdd1, display_word(w))), kOdd1.one());
    }
}

// =============================================================================
// Executable
// =============================================================================

TEST(ExecutableTest, ClassifyJson) {
    REQUIRE_CLI();
    const RunResult r = run_cli("classify 1");
    EXPECT_EQ(r.code, 0);
    const json out = json::parse(r.out);
    EXPECT_EQ(out["params"]["k"], 1);
    EXPECT_EQ(out["params"]["parity"], "odd");
    EXPECT_EQ(out["result"], "CountablyInfinite");
    EXPECT_EQ(out["certificate"]["word"], "0.2,2");
}

TEST(ExecutableTest, ClassifyWithWitness) {
    REQUIRE_CLI();
    const RunResult r = run_cli("classify '(1+1*b)/6' --depth 24 --budget 256");
    ASSERT_EQ(r.code, 0);
    const json out = json::parse(r.out);
    EXPECT_EQ(out["result"], "Continuum");
    EXPECT_GE(out["certificate"]["witness"]["count"].get<int>(), 256);
}

TEST(ExecutableTest, SubcommandsSucceed) {
    REQUIRE_CLI();
    for (const char* args : {"enumerate 1 --depth 2", "ones --depth 4", "ones --k 2", "synth 1/2",
                             "synth 1/2 --route constructive", "rewrite reduce 0.2,3", "rewrite add 0.1 0.1",
                             "rewrite carry '0.3,(0,3)*'", "census --den-bound 3 --num-bound 2",
                             "census --parity even --den-bound 8 --num-bound 8 --format csv",
                             "classify 3/4 --parity even --k 1", "verify --level fast"})
        EXPECT_EQ(run_cli(args).code, 0) << args;
}

TEST(ExecutableTest, ExitCodes) {
    REQUIRE_CLI();
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    EXPECT_EQ(run_cli("classify 'not a number'").code, 2);
    EXPECT_EQ(run_cli("rewrite cr 0.4,1").code, 2);
    EXPECT_EQ(run_cli("classify 1 --format csv").code, 2);
    EXPECT_EQ(run_cli("classify 5").code, 3);
    EXPECT_EQ(run_cli("synth 1/3").code, 3);
    EXPECT_EQ(run_cli("ones --parity even").code, 3);
}

TEST(ExecutableTest, ByteDeterministic) {
    REQUIRE_CLI();
    for (const char* args : {"census --den-bound 4 --num-bound 4 --depths 6 --depths 12",
                             "census --den-bound 4 --num-bound 4 --depths 6 --format csv",
                             "verify --level fast --seed 7"}) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(std::string(args) + " --threads 8");
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_EQ(a.out, run_cli(args).out) << args;
    }
}

TEST(ExecutableTest, OutFlagWritesFile) {
    REQUIRE_CLI();
    const auto path = std::filesystem::temp_directory_path() / "gbeta_cli_test_out.json";
    std::filesystem::remove(path);
    const RunResult r = run_cli("synth 1 --out '" + path.string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const json out = json::parse(in);
    EXPECT_EQ(out["result"], "0.2,2");
    std::filesystem::remove(path);
}
