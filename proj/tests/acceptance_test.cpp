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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion runs the library check and, where cheap, repeats a
// slice of it against the independent oracle in oracle.hpp.

#include "gbeta/gbeta.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>

using namespace gbeta;

namespace {

constexpr std::uint64_t kSeed = 0;

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// =============================================================================
// Oracle slices
// =============================================================================

/// Family truncations for k in {1,2,3} at depth 9 against the oracle tree.
std::string ones_oracle()
{
    for (int k = 1; k <= 3; ++k) {
        const Params p = make_params(k, Parity::odd);
        const auto o = oracle::Field::make(k, true);
        std::set<std::vector<int>> family;
        for (const auto& w : expansions_of_one(p, 9))
            family.insert(w.prefix(9));
        const auto ref = o.prefixes(o.num(1), 9);
        if (family != std::set<std::vector<int>>(ref.begin(), ref.end()))
            return "oracle tree differs at k=" + std::to_string(k);
    }
    return {};
}

/// Member certificates re-evaluated by the oracle; a sample of non-members
/// shown to have no finite expansion by exhausting the remainder graph.
std::string desk_oracle()
{
    const Params p = make_params(1, Parity::odd);
    const auto o = oracle::Field::make(1, true);
    for (const FieldElem& x : checks::dyadic_members(p, 20, 4)) {
        const Classification c = classify(p, x);
        if (c.verdict != Verdict::countably_infinite || c.expansion->digits.size() > 40 ||
            !(o.word(c.expansion->int_part, c.expansion->digits) == o.from(x)))
            return "oracle rejects certificate for " + format_field_elem(x);
    }
    for (const FieldElem& x : checks::sampled_non_members(p, 20, kSeed))
        if (o.finite_length(o.from(x), 200).has_value())
            return "oracle found a finite expansion of " + format_field_elem(x);
    return {};
}

/// Prefix counts for x = 1 and x = 1/3 (k = 1) recomputed by the oracle to
/// depth 14.
std::string growth_oracle()
{
    const Params p = make_params(1, Parity::odd);
    const auto o = oracle::Field::make(1, true);
    const FieldElem third(0, 1, 3);
    const auto one = prefix_counts(p, p.one(), 14);
    const auto thirds = prefix_counts(p, third, 14);
    for (std::size_t d = 1; d <= 14; ++d) {
        if (one[d - 1] != o.prefixes(o.num(1), d).size())
            return "x=1 count differs from oracle at depth " + std::to_string(d);
        if (thirds[d - 1] != o.prefixes(o.from(third), d).size())
            return "x=1/3 count differs from oracle at depth " + std::to_string(d);
    }
    return {};
}

// =============================================================================
// Gate
// =============================================================================

struct Criterion {
    int id;
    const char* name;
    std::function<CheckResult()> check;
    std::function<std::string()> oracle;
};

} // namespace

int main()
{
    const unsigned threads = worker_count();
    const std::vector<Criterion> criteria{
        {1, "expansions of 1", [&] { return checks::expansions_of_one_family({1, 2, 3}, 12, threads); }, ones_oracle},
        {2, "value preservation", [&] { return checks::value_preservation(10000, kSeed, threads); }, nullptr},
        {3, "F-sequence", [] { return checks::f_sequence_checks({1, 2, 3}, 30); }, nullptr},
        {4, "odd digit bound at desk scale", [&] { return checks::odd_desk_scale(kSeed, 200, threads); }, desk_oracle},
        {5, "even digit bound at desk scale", [&] { return checks::even_desk_scale(threads); }, nullptr},
        {6, "prefix-growth dichotomy", [] { return checks::prefix_growth(); }, growth_oracle},
        {7, "cross-route consistency", [&] { return checks::cross_route(100, kSeed, threads); }, nullptr},
        {8, "determinism", [] { return checks::determinism(kSeed); }, nullptr},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = c.check();
        if (r.passed && c.oracle) {
            if (const std::string why = c.oracle(); !why.empty()) {
                r.passed = false;
                r.detail = why;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d. %s (%s; %zu cases; %.2fs)\n", r.passed ? "PASS" : "FAIL", c.id, c.name,
                    r.detail.c_str(), r.cases, secs);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
