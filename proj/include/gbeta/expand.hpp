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

#ifndef GBETA_EXPAND_HPP
#define GBETA_EXPAND_HPP

#include "gbeta/field.hpp"
#include "gbeta/fseq.hpp"
#include "gbeta/rewrite.hpp"
#include "gbeta/words.hpp"

#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

/*
 * Expansions of a point x in [0, m/(beta-1)].
 *
 * A prefix e_1..e_j extends to a full expansion iff its remainder
 *
 *     r_j = beta^j (x - 0.e_1..e_j),     r_{j+1} = beta r_j - e_{j+1},
 *
 * stays in the closed interval [0, m/(beta-1)]. Both coordinates of r_j are
 * bounded (the conjugate of beta has modulus < 1 for odd m), and the
 * denominator never grows, so a point only ever visits finitely many
 * remainders. Counting and searching therefore run over remainder states.
 */

namespace gbeta {

struct PrefixNode {
    std::vector<int> digits;
    FieldElem remainder;
};

/// All length-`depth` prefixes of expansions of `root`, in lexicographic order.
struct PrefixTree {
    FieldElem root;
    std::size_t depth = 0;
    std::vector<PrefixNode> leaves;
};

namespace detail {

inline void require_closed_interval(const Params& params, const FieldElem& x, std::string_view what)
{
    if (!params.in_closed_interval(x))
        throw domain_error(std::string(what) + ": point outside [0, m/(beta-1)]");
}

inline bool for_each_prefix_rec(const Params& params, std::vector<int>& digits, const FieldElem& rem,
                                std::size_t depth,
                                const std::function<bool(const std::vector<int>&, const FieldElem&)>& fn)
{
    if (digits.size() == depth)
        return fn(digits, rem);
    const FieldElem scaled = params.mul_beta(rem);
    for (int e = 0; e <= params.max_digit(); ++e) {
        FieldElem next = scaled - FieldElem::integer(e);
        if (!params.in_closed_interval(next))
            continue;
        digits.push_back(e);
        const bool more = for_each_prefix_rec(params, digits, next, depth, fn);
        digits.pop_back();
        if (!more)
            return false;
    }
    return true;
}

} // namespace detail

/// Visits the valid prefixes of length `depth` in lexicographic order until
/// `fn` returns false.
inline void for_each_prefix(const Params& params, const FieldElem& x, std::size_t depth,
                            const std::function<bool(const std::vector<int>&, const FieldElem&)>& fn)
{
    const FieldElem root = params.canonical(x);
    detail::require_closed_interval(params, root, "prefix enumeration");
    std::vector<int> digits;
    detail::for_each_prefix_rec(params, digits, root, depth, fn);
}

inline PrefixTree enumerate_prefixes(const Params& params, const FieldElem& x, std::size_t depth)
{
    PrefixTree tree{params.canonical(x), depth, {}};
    for_each_prefix(params, x, depth, [&](const std::vector<int>& d, const FieldElem& r) {
        tree.leaves.push_back({d, r});
        return true;
    });
    return tree;
}

/// Number of valid prefixes at each depth 1..depth, by dynamic programming
/// over distinct remainders.
inline std::vector<BigInt> prefix_counts(const Params& params, const FieldElem& x, std::size_t depth)
{
    const FieldElem root = params.canonical(x);
    detail::require_closed_interval(params, root, "prefix counting");
    std::map<FieldElem, BigInt, RepresentationLess> frontier{{root, BigInt(1)}};
    std::vector<BigInt> counts;
    counts.reserve(depth);
    for (std::size_t j = 0; j < depth; ++j) {
        std::map<FieldElem, BigInt, RepresentationLess> next;
        for (const auto& [rem, mult] : frontier) {
            const FieldElem scaled = params.mul_beta(rem);
            for (int e = 0; e <= params.max_digit(); ++e) {
                FieldElem r = scaled - FieldElem::integer(e);
                if (params.in_closed_interval(r))
                    next[std::move(r)] += mult;
            }
        }
        BigInt total = 0;
        for (const auto& [rem, mult] : next)
            total += mult;
        counts.push_back(total);
        frontier = std::move(next);
    }
    return counts;
}

// ---------------------------------------------------------------------------
// expansions of 1
// ---------------------------------------------------------------------------

/// The complete family of expansions of 1 for odd m, listed as
///     0.((k+1)k)^j k (2k+1)^inf,   0.((k+1)k)^j (k+1)(k+1),   0.((k+1)k)^inf
/// for every j whose distinguishing digit falls within the first `depth`
/// positions, so that the depth-`depth` truncations cover every expansion.
inline std::vector<EvPeriodicWord> expansions_of_one(const Params& params, std::size_t depth)
{
    require_odd(params, "closed-form expansions of 1");
    const int k = params.k();
    std::vector<EvPeriodicWord> out;
    std::vector<int> blocks;
    for (std::size_t j = 0; depth > 0 && 2 * j + 1 <= depth; ++j) {
        std::vector<int> a = blocks;
        a.push_back(k);
        out.push_back(EvPeriodicWord::make(0, std::move(a), {2 * k + 1}));
        std::vector<int> b = blocks;
        b.push_back(k + 1);
        b.push_back(k + 1);
        out.push_back(EvPeriodicWord::make(0, std::move(b), {0}));
        blocks.push_back(k + 1);
        blocks.push_back(k);
    }
    out.push_back(EvPeriodicWord::make(0, {}, {k + 1, k}));
    return out;
}

// ---------------------------------------------------------------------------
// finite expansions
// ---------------------------------------------------------------------------

/// Breadth-first search over remainder states for a remainder of exactly 0.
/// Returns the lexicographically least shortest finite expansion, or nullopt
/// when none exists within `max_depth` digits. Since the state space is
/// finite, an exhausted search proves that no finite expansion exists.
inline std::optional<DigitWord> finite_expansion_search(const Params& params, const FieldElem& x,
                                                        std::size_t max_depth = std::numeric_limits<std::size_t>::max())
{
    const FieldElem root = params.canonical(x);
    detail::require_closed_interval(params, root, "finite expansion search");
    if (root.is_zero())
        return DigitWord{0, {}};

    struct Parent {
        FieldElem from;
        int digit;
    };
    std::map<FieldElem, Parent, RepresentationLess> parent;
    std::set<FieldElem, RepresentationLess> seen{root};
    std::vector<FieldElem> frontier{root};

    auto rebuild = [&](const FieldElem& end) {
        std::vector<int> digits;
        FieldElem cur = end;
        while (!(cur == root)) {
            const Parent& p = parent.at(cur);
            digits.push_back(p.digit);
            cur = p.from;
        }
        return DigitWord{0, std::vector<int>(digits.rbegin(), digits.rend())};
    };

    for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<FieldElem> next;
        for (const FieldElem& rem : frontier) {
            const FieldElem scaled = params.mul_beta(rem);
            for (int e = 0; e <= params.max_digit(); ++e) {
                FieldElem r = scaled - FieldElem::integer(e);
                if (!params.in_closed_interval(r) || seen.count(r) != 0)
                    continue;
                seen.insert(r);
                parent.emplace(r, Parent{rem, e});
                if (r.is_zero())
                    return rebuild(r);
                next.push_back(std::move(r));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// A finite expansion of x in S (odd) or F (even).
inline DigitWord synth_finite(const Params& params, const FieldElem& x)
{
    const FieldElem c = params.canonical(x);
    if (!params.in_open_interval(c))
        throw domain_error("finite synthesis needs 0 < x < m/(beta-1)");
    if (!is_member(params.membership(c)))
        throw domain_error("finite synthesis refused: x has no finite expansion");
    auto found = finite_expansion_search(params, c);
    if (!found)
        throw error("finite expansion search exhausted for a member point");
    return *found;
}

/// A finite word of value (k+1)^-n: 0.(k+1)(k+1) divided n times by k+1.
inline DigitWord expansion_of_inv_power(const Params& params, std::size_t n)
{
    if (!params.is_odd()) {
        // beta = k+1: 1 = 0.(k+1) and (k+1)^-n = 0.0..01
        if (n == 0)
            return DigitWord{0, {params.k() + 1}};
        DigitWord w{0, std::vector<int>(n, 0)};
        w.digits.back() = 1;
        return w;
    }
    DigitWord w{0, {params.k() + 1, params.k() + 1}};
    for (std::size_t i = 0; i < n; ++i)
        w = div_word_by_k1(params, w);
    return w;
}

struct ConstructiveResult {
    DigitWord word;
    /// false when the constructive route was not applicable and the search
    /// route produced `word` instead.
    bool used_constructive_route = false;
    std::string diagnostic;
};

namespace detail {

inline DigitWord times_integer(const Params& params, const DigitWord& w, BigInt c)
{
    DigitWord result{0, {}};
    DigitWord base = w;
    while (c > 0) {
        if ((c & 1) != 0)
            result = add_words(params, result, base);
        c >>= 1;
        if (c > 0)
            base = add_words(params, base, base);
    }
    return result;
}

/// w / beta^i for i >= 1; the integer part becomes digit i.
inline std::optional<DigitWord> shift_right(const Params& params, const DigitWord& w, std::size_t i)
{
    if (w.int_part > params.max_digit())
        return std::nullopt;
    DigitWord out{0, std::vector<int>(i - 1, 0)};
    out.digits.push_back(w.int_part);
    out.digits.insert(out.digits.end(), w.digits.begin(), w.digits.end());
    return out;
}

} // namespace detail

/// Builds a finite expansion constructively: write x = (p beta + q)/(k+1)^n,
/// decompose p = sum n_i F_i, and use F_i beta = F_{i+1} - (-(k+1)/beta)^i to
/// get
///
///     x = sum_{i odd} n_i / (beta^i (k+1)^(n-i))
///       - sum_{i even} n_i / (beta^i (k+1)^(n-i)) + M / (k+1)^n,
///     M = sum n_i F_{i+1} + q.
///
/// Each term is an expansion of an inverse power of k+1, scaled and shifted,
/// and the terms are combined with add_words. Only sums are available, so a
/// negative term makes the route inapplicable; the search route is then used
/// and the reason recorded in `diagnostic`.
inline ConstructiveResult synth_finite_constructive(const Params& params, const FieldElem& x)
{
    const FieldElem c = params.canonical(x);
    auto fallback = [&](std::string why) { return ConstructiveResult{synth_finite(params, c), false, std::move(why)}; };
    if (!params.is_odd())
        return fallback("constructive route is defined for odd m only");
    if (!params.in_open_interval(c) || !is_member(params.membership(c)))
        throw domain_error("finite synthesis refused: x has no finite expansion");

    const BigInt k1 = params.k() + 1;
    unsigned n = 0;
    BigInt scale = 1;
    while (scale % c.denominator() != 0) {
        scale *= k1;
        ++n;
    }
    const BigInt p = c.beta_coeff() * (scale / c.denominator());
    const BigInt q = c.rational_part() * (scale / c.denominator());

    const FDecomposition dec = decompose_f(params, p);
    const std::vector<BigInt> f = f_sequence(params, dec.length() + 1);
    BigInt big_m = q;
    for (std::size_t i = 0; i < dec.length(); ++i)
        big_m += BigInt(dec.coeffs[i]) * f[i + 1];

    for (std::size_t i = 0; i < dec.length(); ++i) {
        const int ci = dec.coeffs[i];
        const int term_sign = ((i + 1) % 2 == 1 ? 1 : -1) * (ci > 0 ? 1 : (ci < 0 ? -1 : 0));
        if (term_sign < 0)
            return fallback("negative term at F_" + std::to_string(i + 1) + " needs subtraction");
    }
    if (big_m < 0)
        return fallback("negative constant term M=" + to_string(big_m) + " needs subtraction");

    DigitWord total = detail::times_integer(params, expansion_of_inv_power(params, n), big_m);
    for (std::size_t idx = 0; idx < dec.length(); ++idx) {
        const int ci = dec.coeffs[idx];
        if (ci == 0)
            continue;
        const std::size_t i = idx + 1;
        const long e = static_cast<long>(n) - static_cast<long>(i);
        BigInt mult = gbeta::abs(BigInt(ci));
        if (e < 0)
            mult *= gbeta::pow(k1, static_cast<unsigned>(-e));
        const DigitWord base = expansion_of_inv_power(params, e < 0 ? 0 : static_cast<std::size_t>(e));
        auto shifted = detail::shift_right(params, detail::times_integer(params, base, mult), i);
        if (!shifted)
            return fallback("term at F_" + std::to_string(i) + " has an integer part above m");
        total = add_words(params, total, *shifted);
    }

    DigitWord word;
    if (total.int_part == 0) {
        word = total;
    } else if (total.int_part == 1) {
        DigitWord lowered{0, {1}};
        lowered.digits.insert(lowered.digits.end(), total.digits.begin(), total.digits.end());
        word = mul_beta_word(params, lowered);
    } else {
        return fallback("assembled sum has integer part " + std::to_string(total.int_part));
    }
    if (!(word_value(params, word) == c) || !is_valid(params, word))
        return fallback("assembled word does not evaluate to x");
    return ConstructiveResult{word, true, {}};
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

enum class Verdict { countably_infinite, continuum, unique_endpoint };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::countably_infinite: return "CountablyInfinite";
    case Verdict::continuum: return "Continuum";
    case Verdict::unique_endpoint: return "UniqueEndpoint";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::continuum;
    /// CountablyInfinite: a finite expansion of x.
    std::optional<DigitWord> expansion;
    /// Continuum: the reduced denominator and a prime of it not dividing k+1
    /// (absent only if trial division found no small factor).
    std::optional<BigInt> denominator;
    std::optional<BigInt> prime;
    /// UniqueEndpoint: "0*" or "m*" (the digit spelled out).
    std::string endpoint;
};

inline Classification classify(const Params& params, const FieldElem& x)
{
    const FieldElem c = params.canonical(x);
    detail::require_closed_interval(params, c, "classification");
    Classification out;
    if (c.is_zero()) {
        out.verdict = Verdict::unique_endpoint;
        out.endpoint = "0*";
        return out;
    }
    if (c == params.interval_bound()) {
        out.verdict = Verdict::unique_endpoint;
        out.endpoint = std::to_string(params.max_digit()) + "*";
        return out;
    }
    if (is_member(params.membership(c))) {
        out.verdict = Verdict::countably_infinite;
        out.expansion = synth_finite(params, c);
        return out;
    }
    out.verdict = Verdict::continuum;
    out.denominator = c.denominator();
    if (auto pf = smallest_prime_factor(strip_common_primes(c.denominator(), BigInt(params.k() + 1))))
        out.prime = *pf;
    return out;
}

// ---------------------------------------------------------------------------
// branch witnesses
// ---------------------------------------------------------------------------

/// Applies every value-preserving local rewrite to `prefix` and returns the
/// results. For odd m the windows are
///     x b1 b2 -> (x+1)(b1-k-1)(b2-k-1)    x <= 2k,  b1, b2 big
///     y a1 a2 -> (y-1)(a1+k+1)(a2+k+1)    y >= 1,   a1, a2 small
/// and for even m (beta = k+1) the two-digit analogues
///     x b -> (x+1)(b-k-1),   y a -> (y-1)(a+k+1)   (a <= k-1).
inline std::vector<std::vector<int>> local_rewrites(const Params& params, const std::vector<int>& prefix)
{
    const int k1 = params.k() + 1;
    const int m = params.max_digit();
    std::vector<std::vector<int>> out;
    if (params.is_odd()) {
        for (std::size_t i = 0; i + 2 < prefix.size(); ++i) {
            const int a = prefix[i], b = prefix[i + 1], c = prefix[i + 2];
            if (a <= m - 1 && params.is_big(b) && params.is_big(c)) {
                std::vector<int> v = prefix;
                v[i] += 1;
                v[i + 1] -= k1;
                v[i + 2] -= k1;
                out.push_back(std::move(v));
            }
            if (a >= 1 && params.is_small(b) && params.is_small(c)) {
                std::vector<int> v = prefix;
                v[i] -= 1;
                v[i + 1] += k1;
                v[i + 2] += k1;
                out.push_back(std::move(v));
            }
        }
        return out;
    }
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
        const int a = prefix[i], b = prefix[i + 1];
        if (a <= m - 1 && b >= k1) {
            std::vector<int> v = prefix;
            v[i] += 1;
            v[i + 1] -= k1;
            out.push_back(std::move(v));
        }
        if (a >= 1 && b + k1 <= m) {
            std::vector<int> v = prefix;
            v[i] -= 1;
            v[i + 1] += k1;
            out.push_back(std::move(v));
        }
    }
    return out;
}

struct BranchWitness {
    /// Length of every prefix; larger than requested only when the first
    /// `depth` digits of the seed held no rewrite site.
    std::size_t depth = 0;
    std::vector<int> seed;
    std::size_t seeds_used = 0;
    /// Pairwise distinct, lexicographically sorted.
    std::vector<std::vector<int>> prefixes;
};

/// Generates up to `budget` distinct expansion prefixes of x by closing the
/// lexicographically least prefix under local rewrites (breadth first, so the
/// result is reproducible). Every rewrite preserves the value of the prefix,
/// hence its remainder, hence extendability. If the closure of one seed is
/// too small, the next prefixes in lexicographic order are closed as well.
inline BranchWitness branch_witness(const Params& params, const FieldElem& x, std::size_t depth, std::size_t budget,
                                    std::size_t max_seeds = 64)
{
    if (depth == 0 || budget == 0)
        throw domain_error("branch witness needs positive depth and budget");
    const FieldElem c = params.canonical(x);
    if (classify(params, c).verdict != Verdict::continuum)
        throw domain_error("branch witness refused: x has countably many expansions");

    auto first_prefix = [&](std::size_t d) {
        std::vector<int> seed;
        for_each_prefix(params, c, d, [&](const std::vector<int>& digits, const FieldElem&) {
            seed = digits;
            return false;
        });
        return seed;
    };

    BranchWitness out;
    out.depth = depth;
    out.seed = first_prefix(depth);
    for (std::size_t d = depth + 1; local_rewrites(params, out.seed).empty() && d <= 4 * depth; ++d) {
        out.depth = d;
        out.seed = first_prefix(d);
    }

    std::set<std::vector<int>> seen;
    auto close = [&](const std::vector<int>& seed) {
        if (!seen.insert(seed).second)
            return;
        std::deque<std::vector<int>> queue{seed};
        while (!queue.empty() && seen.size() < budget) {
            std::vector<int> cur = std::move(queue.front());
            queue.pop_front();
            for (auto& next : local_rewrites(params, cur)) {
                if (seen.size() >= budget)
                    break;
                if (seen.insert(next).second)
                    queue.push_back(std::move(next));
            }
        }
    };

    for_each_prefix(params, c, out.depth, [&](const std::vector<int>& digits, const FieldElem&) {
        close(digits);
        ++out.seeds_used;
        return seen.size() < budget && out.seeds_used < max_seeds;
    });
    out.prefixes.assign(seen.begin(), seen.end());
    return out;
}

} // namespace gbeta

#endif // GBETA_EXPAND_HPP
