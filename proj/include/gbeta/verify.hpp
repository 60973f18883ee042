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

#ifndef GBETA_VERIFY_HPP
#define GBETA_VERIFY_HPP

// Self-verification suite. Every check is exact and seeded; the report is a
// pure function of (level, seed), whatever the thread count.

#include "gbeta/census.hpp"
#include "gbeta/expand.hpp"
#include "gbeta/fseq.hpp"
#include "gbeta/parallel.hpp"
#include "gbeta/report.hpp"
#include "gbeta/rewrite.hpp"
#include "gbeta/words.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gbeta {

enum class VerifyLevel { fast, full };

inline std::string_view to_string(VerifyLevel level) { return level == VerifyLevel::fast ? "fast" : "full"; }

inline VerifyLevel parse_verify_level(std::string_view text)
{
    if (text == "fast")
        return VerifyLevel::fast;
    if (text == "full")
        return VerifyLevel::full;
    throw invalid_parameter("verify level must be 'fast' or 'full', got '" + std::string(text) + "'");
}

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First failure, or a summary of what was measured.
    std::string detail;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::fast;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

inline json to_json(const VerifyReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    return json{{"level", std::string(to_string(report.level))},
                {"seed", report.seed},
                {"passed", report.passed()},
                {"checks", std::move(checks)}};
}

inline VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed = 0, unsigned threads = 1);

namespace checks {

namespace detail {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi]; modulo draw so that the sequence is the same on
/// every standard library.
inline int draw(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

inline std::vector<int> random_digits(const Params& params, Rng& rng, std::size_t len)
{
    std::vector<int> d(len);
    for (auto& x : d)
        x = draw(rng, 0, params.max_digit());
    return d;
}

/// A tail that follows the small/big (dir > 0) or big/small (dir < 0)
/// alternation for a random number of positions before going random, which
/// exercises every index case of the carry and borrow maps.
inline std::vector<int> patterned_tail(const Params& params, Rng& rng, int dir, std::size_t len)
{
    const int k = params.k();
    const std::size_t run = static_cast<std::size_t>(draw(rng, 0, static_cast<int>(len)));
    std::vector<int> d = random_digits(params, rng, len);
    for (std::size_t j = 0; j < run; ++j) {
        const bool want_small = (j % 2 == 0) == (dir > 0);
        d[j] = want_small ? draw(rng, 0, k) : draw(rng, k + 1, params.max_digit());
    }
    return d;
}

inline Params odd_params(Rng& rng) { return make_params(draw(rng, 1, 3), Parity::odd); }

/// Collects the first failure message of a batch computed in parallel.
struct Failures {
    std::vector<std::string> by_case;

    explicit Failures(std::size_t n) : by_case(n) {}

    void fill(CheckResult& r) const
    {
        r.cases = by_case.size();
        for (const auto& f : by_case)
            if (!f.empty()) {
                r.passed = false;
                r.detail = f;
                return;
            }
    }
};

inline std::string describe(const Params& p, const std::string& what)
{
    return "k=" + std::to_string(p.k()) + " " + what;
}

} // namespace detail

using detail::Rng;

// ---------------------------------------------------------------------------

/// Depth-d truncations of the closed-form expansions of 1 equal the depth-d
/// prefixes of 1, for every d in [1, max_depth] and k in ks. For k = 1 the
/// count is also checked against 2d+2.
inline CheckResult expansions_of_one_family(const std::vector<int>& ks, std::size_t max_depth, unsigned threads = 1)
{
    CheckResult r{"expansions_of_one", true, 0, {}};
    std::vector<std::pair<int, std::size_t>> jobs;
    for (int k : ks)
        for (std::size_t d = 1; d <= max_depth; ++d)
            jobs.emplace_back(k, d);
    detail::Failures fails(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const auto [k, d] = jobs[i];
        const Params p = make_params(k, Parity::odd);
        std::set<std::vector<int>> family;
        for (const auto& w : expansions_of_one(p, d))
            family.insert(w.prefix(d));
        std::set<std::vector<int>> tree;
        for (const auto& leaf : enumerate_prefixes(p, p.one(), d).leaves)
            tree.insert(leaf.digits);
        if (family != tree)
            fails.by_case[i] = detail::describe(p, "d=" + std::to_string(d) + ": family has " +
                                                       std::to_string(family.size()) + " prefixes, tree has " +
                                                       std::to_string(tree.size()));
        else if (k == 1 && tree.size() > 2 * d + 2)
            fails.by_case[i] = "k=1 d=" + std::to_string(d) + ": " + std::to_string(tree.size()) + " > 2d+2";
    });
    fails.fill(r);
    if (r.passed)
        r.detail = "k in {" + std::to_string(ks.front()) + ".." + std::to_string(ks.back()) + "}, d <= " +
                   std::to_string(max_depth);
    return r;
}

/// Value preservation of every rewrite and the arithmetic postconditions of
/// add_words, mul_beta_word and div_word_by_k1, on `samples` random inputs
/// per operation.
inline CheckResult value_preservation(std::size_t samples, std::uint64_t seed, unsigned threads = 1)
{
    CheckResult r{"value_preservation", true, 0, {}};
    constexpr std::size_t kOps = 8;
    detail::Failures fails(samples * kOps);
    parallel_for(samples * kOps, threads, [&](std::size_t i) {
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        const Params p = detail::odd_params(rng);
        const std::size_t op = i % kOps;
        const std::size_t len = static_cast<std::size_t>(detail::draw(rng, 1, 10));
        const int k = p.k();
        std::string& fail = fails.by_case[i];
        auto expect = [&](bool ok, const std::string& what) {
            if (!ok && fail.empty())
                fail = detail::describe(p, what);
        };

        DigitWord w{0, detail::random_digits(p, rng, len)};
        switch (op) {
        case 0: {
            DigitWord out = cr_step(p, w);
            expect(word_value(p, out) == word_value(p, w), "C_r changed the value of " + to_string(w));
            break;
        }
        case 1: {
            DigitWord out = b_separate(p, w);
            expect(word_value(p, out) == word_value(p, w), "b_separate changed the value of " + to_string(w));
            expect(is_b_separated(p, out), "b_separate left a big pair in " + to_string(out));
            break;
        }
        case 2:
        case 3: {
            const int dir = op == 2 ? +1 : -1;
            std::vector<int> tail = detail::patterned_tail(p, rng, dir, len);
            const int lead = dir > 0 ? detail::draw(rng, k + 2, 2 * k + 1) : detail::draw(rng, 0, k - 1);
            if (detail::draw(rng, 0, 1) == 0) {
                DigitWord in{dir > 0 ? 0 : 1, {lead}};
                in.digits.insert(in.digits.end(), tail.begin(), tail.end());
                DigitWord out = dir > 0 ? carry_t_plus(p, in) : borrow_t_minus(p, in);
                expect(word_value(p, out) == word_value(p, in), "carry/borrow changed the value of " + to_string(in));
                expect(is_valid(p, out), "carry/borrow produced an invalid word from " + to_string(in));
            } else {
                const std::size_t split = static_cast<std::size_t>(detail::draw(rng, 0, static_cast<int>(len) - 1));
                std::vector<int> pre{lead};
                pre.insert(pre.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(split));
                std::vector<int> per(tail.begin() + static_cast<std::ptrdiff_t>(split), tail.end());
                if (detail::draw(rng, 0, 2) == 0) {
                    // An alternating period makes the index infinite.
                    pre = {lead};
                    per = dir > 0 ? std::vector<int>{detail::draw(rng, 0, k), detail::draw(rng, k + 1, 2 * k + 1)}
                                  : std::vector<int>{detail::draw(rng, k + 1, 2 * k + 1), detail::draw(rng, 0, k)};
                }
                EvPeriodicWord in = EvPeriodicWord::make(dir > 0 ? 0 : 1, std::move(pre), std::move(per));
                EvPeriodicWord out = dir > 0 ? carry_t_plus(p, in) : borrow_t_minus(p, in);
                expect(word_value(p, out) == word_value(p, in), "carry/borrow changed the value of " + to_string(in));
                expect(is_valid(p, out), "carry/borrow produced an invalid word from " + to_string(in));
            }
            break;
        }
        case 4: {
            DigitWord out = reduce_digits(p, w);
            expect(word_value(p, out) == word_value(p, w), "reduce_digits changed the value of " + to_string(w));
            expect(out.int_part <= 1 && std::all_of(out.digits.begin(), out.digits.end(),
                                                    [&](int d) { return d >= 0 && d <= k + 1; }),
                   "reduce_digits left a digit above k+1 in " + to_string(out));
            break;
        }
        case 5: {
            // value < 0.1(k+1); resample the lead digits until inside.
            const FieldElem limit = p.div_beta(p.interval_bound());
            w.digits[0] = detail::draw(rng, 0, 1);
            while (!p.less(word_value(p, w), limit))
                w.digits = detail::random_digits(p, rng, len), w.digits[0] = detail::draw(rng, 0, 1);
            DigitWord out = mul_beta_word(p, w);
            expect(word_value(p, out) == p.mul_beta(word_value(p, w)), "mul_beta_word is wrong on " + to_string(w));
            expect(out.int_part == 0 && is_valid(p, out), "mul_beta_word produced " + to_string(out));
            break;
        }
        case 6: {
            DigitWord y{0, detail::random_digits(p, rng, static_cast<std::size_t>(detail::draw(rng, 1, 10)))};
            DigitWord out = add_words(p, w, y);
            expect(word_value(p, out) == word_value(p, w) + word_value(p, y),
                   "add_words is wrong on " + to_string(w) + " + " + to_string(y));
            expect(is_valid(p, out), "add_words produced " + to_string(out));
            break;
        }
        case 7: {
            DigitWord out = div_word_by_k1(p, w);
            expect(word_value(p, out) == word_value(p, w) / BigInt(k + 1), "div_word_by_k1 is wrong on " + to_string(w));
            expect(out.int_part == 0 && is_valid(p, out) && out.digits.size() == w.digits.size() + 2,
                   "div_word_by_k1 produced " + to_string(out));
            break;
        }
        }
    });
    fails.fill(r);
    if (r.passed)
        r.detail = std::to_string(samples) + " samples per operation";
    return r;
}

/// The F_n / beta identity for n <= n_max, and greedy decompositions of every
/// 0 <= n < F_8: exact, coefficients in {0..k+1}, and n < F_l implies fewer
/// than l coefficients.
inline CheckResult f_sequence_checks(const std::vector<int>& ks, std::size_t n_max)
{
    CheckResult r{"f_sequence", true, 0, {}};
    auto fail = [&](std::string why) {
        if (r.passed)
            r.detail = std::move(why);
        r.passed = false;
    };
    for (int k : ks) {
        const Params p = make_params(k, Parity::odd);
        for (std::size_t n = 1; n <= n_max; ++n, ++r.cases)
            if (!fn_identity_check(p, n))
                fail("k=" + std::to_string(k) + ": F_n identity fails at n=" + std::to_string(n));
        const std::vector<BigInt> f = f_sequence(p, 8);
        for (BigInt n = 0; n < f[7]; ++n, ++r.cases) {
            const FDecomposition dec = decompose_f(p, n);
            BigInt sum = 0;
            for (std::size_t i = 0; i < dec.length(); ++i) {
                sum += BigInt(dec.coeffs[i]) * f[i];
                if (dec.coeffs[i] < 0 || dec.coeffs[i] > k + 1)
                    fail("k=" + std::to_string(k) + ": coefficient out of range for n=" + to_string(n));
            }
            if (sum != n)
                fail("k=" + std::to_string(k) + ": decomposition of " + to_string(n) + " sums to " + to_string(sum));
            for (std::size_t l = 1; l <= 8; ++l)
                if (n < f[l - 1] && dec.length() >= l)
                    fail("k=" + std::to_string(k) + ": n=" + to_string(n) + " < F_" + std::to_string(l) +
                         " but uses " + std::to_string(dec.length()) + " terms");
        }
    }
    if (r.passed)
        r.detail = "n <= " + std::to_string(n_max) + ", all n < F_8";
    return r;
}

/// Every canonical (q + p beta)/2^n in the open interval with |p|, |q| <= bound.
inline std::vector<FieldElem> dyadic_members(const Params& params, int bound, unsigned max_exp)
{
    std::set<FieldElem, RepresentationLess> seen;
    for (unsigned n = 0; n <= max_exp; ++n)
        for (int pp = -bound; pp <= bound; ++pp)
            for (int q = -bound; q <= bound; ++q) {
                FieldElem x = params.canonical(FieldElem(pp, q, BigInt(1) << n));
                if (params.in_open_interval(x))
                    seen.insert(std::move(x));
            }
    return {seen.begin(), seen.end()};
}

/// `count` distinct reduced points in the open interval whose denominators are
/// divisible by 3, 5 or 7, drawn deterministically from `seed`.
inline std::vector<FieldElem> sampled_non_members(const Params& params, std::size_t count, std::uint64_t seed)
{
    static constexpr int kOddParts[] = {3, 5, 7, 9, 15, 21, 35};
    Rng rng(seed);
    std::set<FieldElem, RepresentationLess> seen;
    std::vector<FieldElem> out;
    while (out.size() < count) {
        const int r = kOddParts[detail::draw(rng, 0, 6)] << detail::draw(rng, 0, 2);
        const int pp = params.is_odd() ? detail::draw(rng, -20, 20) : 0;
        const FieldElem x = params.canonical(FieldElem(pp, detail::draw(rng, -40, 40), r));
        const BigInt& den = x.denominator();
        if (!params.in_open_interval(x) || (den % 3 != 0 && den % 5 != 0 && den % 7 != 0))
            continue;
        if (seen.insert(x).second)
            out.push_back(x);
    }
    return out;
}

namespace detail {

/// Empty when classify(x) is CountablyInfinite with a certificate of at most
/// max_len digits that evaluates to x.
inline std::string check_member(const Params& p, const FieldElem& x, std::size_t max_len)
{
    const Classification c = classify(p, x);
    const std::string at = " at " + format_field_elem(x);
    if (c.verdict != Verdict::countably_infinite)
        return describe(p, std::string(to_string(c.verdict)) + at);
    if (c.expansion->digits.size() > max_len)
        return describe(p, "certificate longer than " + std::to_string(max_len) + at);
    if (!is_valid(p, *c.expansion) || !(word_value(p, *c.expansion) == x))
        return describe(p, "certificate " + to_string(*c.expansion) + " does not evaluate" + at);
    return {};
}

/// Empty when classify(x) is Continuum and branch_witness produces at least
/// `want` distinct extendable prefixes of length `depth`.
inline std::string check_non_member(const Params& p, const FieldElem& x, std::size_t depth, std::size_t want)
{
    const std::string at = " at " + format_field_elem(x);
    const Classification c = classify(p, x);
    if (c.verdict != Verdict::continuum)
        return describe(p, std::string(to_string(c.verdict)) + at);
    const BranchWitness bw = branch_witness(p, x, depth, want);
    if (bw.depth != depth)
        return describe(p, "witness needed depth " + std::to_string(bw.depth) + at);
    if (bw.prefixes.size() < want)
        return describe(p, "only " + std::to_string(bw.prefixes.size()) + " prefixes" + at);
    const FieldElem scale = p.pow_beta(static_cast<unsigned>(depth));
    for (const auto& prefix : bw.prefixes) {
        if (prefix.size() != depth || !is_valid(p, prefix))
            return describe(p, "malformed prefix" + at);
        const FieldElem rem = p.mul(scale, x - fraction_value(p, prefix));
        if (!p.in_closed_interval(rem))
            return describe(p, "prefix does not extend" + at);
    }
    return {};
}

} // namespace detail

/// Odd m, k = 1: dyadic points have finite certificates of length <= 40, and
/// sampled points with 3, 5 or 7 in the denominator get 2^8 witnesses.
inline CheckResult odd_desk_scale(std::uint64_t seed, std::size_t non_members, unsigned threads = 1)
{
    CheckResult r{"odd_desk_scale", true, 0, {}};
    const Params p = make_params(1, Parity::odd);
    const std::vector<FieldElem> members = dyadic_members(p, 20, 4);
    const std::vector<FieldElem> others = sampled_non_members(p, non_members, seed);
    detail::Failures fails(members.size() + others.size());
    parallel_for(members.size() + others.size(), threads, [&](std::size_t i) {
        fails.by_case[i] = i < members.size() ? detail::check_member(p, members[i], 40)
                                              : detail::check_non_member(p, others[i - members.size()], 24, 256);
    });
    fails.fill(r);
    if (r.passed)
        r.detail = std::to_string(members.size()) + " members, " + std::to_string(others.size()) + " non-members";
    return r;
}

/// Even m, k in {1, 2}: every p/(k+1)^n in (0, 2) with n <= 6 has a verified
/// finite certificate, and the thirds (k = 1) get 2^8 witnesses.
inline CheckResult even_desk_scale(unsigned threads = 1)
{
    CheckResult r{"even_desk_scale", true, 0, {}};
    struct Job {
        int k;
        FieldElem x;
        bool member;
    };
    std::vector<Job> jobs;
    for (int k : {1, 2}) {
        const BigInt den = gbeta::pow(BigInt(k + 1), 6);
        for (BigInt num = 1; num < 2 * den; ++num)
            jobs.push_back({k, FieldElem(0, num, den), true});
    }
    for (int num : {1, 2, 4, 5})
        jobs.push_back({1, FieldElem(0, num, 3), false});
    detail::Failures fails(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const Params p = make_params(jobs[i].k, Parity::even);
        fails.by_case[i] = jobs[i].member ? detail::check_member(p, jobs[i].x, 64)
                                          : detail::check_non_member(p, jobs[i].x, 24, 256);
    });
    fails.fill(r);
    if (r.passed)
        r.detail = std::to_string(jobs.size() - 4) + " members, 4 non-members";
    return r;
}

/// Exact prefix counts for k = 1: at most 2d+2 for x = 1 at every depth up to
/// 20, and more than 2^10 for x = 1/3 at depth 20.
inline CheckResult prefix_growth()
{
    CheckResult r{"prefix_growth", true, 40, {}};
    const Params p = make_params(1, Parity::odd);
    const std::vector<BigInt> one = prefix_counts(p, p.one(), 20);
    const std::vector<BigInt> third = prefix_counts(p, FieldElem(0, 1, 3), 20);
    for (std::size_t d = 1; d <= 20; ++d)
        if (one[d - 1] > 2 * d + 2) {
            r.passed = false;
            r.detail = "x=1 has " + to_string(one[d - 1]) + " prefixes at depth " + std::to_string(d);
            return r;
        }
    if (third.back() <= 1024) {
        r.passed = false;
        r.detail = "x=1/3 has only " + to_string(third.back()) + " prefixes at depth 20";
        return r;
    }
    r.detail = "x=1: " + to_string(one.back()) + ", x=1/3: " + to_string(third.back()) + " at depth 20";
    return r;
}

/// Where the constructive route succeeds it agrees in value with the search
/// route, on `samples` member points. At least one success is required.
inline CheckResult cross_route(std::size_t samples, std::uint64_t seed, unsigned threads = 1)
{
    CheckResult r{"cross_route", true, 0, {}};
    const Params p = make_params(1, Parity::odd);
    std::vector<FieldElem> pool = dyadic_members(p, 20, 4);
    Rng rng(seed);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[static_cast<std::size_t>(detail::draw(rng, 0, static_cast<int>(i) - 1))]);
    pool.resize(std::min(samples, pool.size()));
    detail::Failures fails(pool.size());
    std::vector<char> used(pool.size(), 0);
    parallel_for(pool.size(), threads, [&](std::size_t i) {
        const ConstructiveResult route = synth_finite_constructive(p, pool[i]);
        used[i] = route.used_constructive_route ? 1 : 0;
        if (route.used_constructive_route && !(word_value(p, route.word) == word_value(p, synth_finite(p, pool[i]))))
            fails.by_case[i] = "routes disagree at " + format_field_elem(pool[i]);
    });
    fails.fill(r);
    const auto succeeded = static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
    if (r.passed && succeeded == 0) {
        r.passed = false;
        r.detail = "the constructive route never applied";
    } else if (r.passed) {
        r.detail = std::to_string(succeeded) + " of " + std::to_string(pool.size()) + " built constructively";
    }
    return r;
}

/// Serialized fast-suite reports and census sweeps agree across repeated
/// runs and across 1 and 8 threads.
inline CheckResult determinism(std::uint64_t seed)
{
    CheckResult r{"determinism", true, 0, {}};
    auto suite = [&](unsigned t) { return to_json(verify_suite(VerifyLevel::fast, seed, t)).dump(); };
    auto census = [&](Parity parity, unsigned t) {
        const Params p = make_params(1, parity);
        const auto rows = census_sweep(p, parity == Parity::odd ? 4 : 8, 4, {6, 12}, t);
        return census_json(p, rows).dump() + census_csv(p, rows);
    };
    const std::vector<std::pair<std::string, std::function<std::string(unsigned)>>> subjects{
        {"verify fast", suite},
        {"census odd", [&](unsigned t) { return census(Parity::odd, t); }},
        {"census even", [&](unsigned t) { return census(Parity::even, t); }},
    };
    for (const auto& [name, run] : subjects) {
        const std::string a = run(1), b = run(1), c = run(8);
        r.cases += 3;
        if (a != b || a != c) {
            r.passed = false;
            r.detail = name + " output differs between runs";
            return r;
        }
    }
    r.detail = "byte-identical at 1 and 8 threads";
    return r;
}

} // namespace checks

/// The suite itself. fast: F_n identity, the expansions of 1 to depth 8 and
/// 10^3 value-preservation samples. full: every acceptance property.
inline VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed, unsigned threads)
{
    VerifyReport report{level, seed, {}};
    if (level == VerifyLevel::fast) {
        CheckResult fn{"fn_identity", true, 0, "n <= 30"};
        for (int k : {1, 2, 3})
            for (std::size_t n = 1; n <= 30; ++n, ++fn.cases)
                if (!fn_identity_check(make_params(k, Parity::odd), n) && fn.passed)
                    fn = {"fn_identity", false, fn.cases, "k=" + std::to_string(k) + " n=" + std::to_string(n)};
        report.checks.push_back(fn);
        report.checks.push_back(checks::expansions_of_one_family({1, 2, 3}, 8, threads));
        report.checks.push_back(checks::value_preservation(1000, seed, threads));
        return report;
    }
    report.checks.push_back(checks::expansions_of_one_family({1, 2, 3}, 12, threads));
    report.checks.push_back(checks::value_preservation(10000, seed, threads));
    report.checks.push_back(checks::f_sequence_checks({1, 2, 3}, 30));
    report.checks.push_back(checks::odd_desk_scale(seed, 200, threads));
    report.checks.push_back(checks::even_desk_scale(threads));
    report.checks.push_back(checks::prefix_growth());
    report.checks.push_back(checks::cross_route(100, seed, threads));
    report.checks.push_back(checks::determinism(seed));
    return report;
}

} // namespace gbeta

#endif // GBETA_VERIFY_HPP
