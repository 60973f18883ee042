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

#ifndef GBETA_REWRITE_HPP
#define GBETA_REWRITE_HPP

#include "gbeta/field.hpp"
#include "gbeta/words.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

/*
 * Value-preserving digit rewriting for odd m = 2k+1.
 *
 * Everything here is driven by the identity 1.00 = 0.(k+1)(k+1), i.e.
 * 1/beta^j = (k+1)/beta^(j+1) + (k+1)/beta^(j+2) at every position j.
 *
 * Carry T+ on 0.b x1 x2 ... (b in B_-) and borrow T- on 1.a x1 x2 ...
 * (a in S^-) dispatch on s = Ind(x):
 *
 *     s = 1      T+: 1.(b-k-1)(x1-k-1) x2 ...
 *     s >= 2     T+: 1.(b-k-2)(x1+1)(x2-1)...(x_{s-2} -+ 1) x_{s-1} (x_s -+ (k+1)) ...
 *                     with -(k+1) for odd s and +(k+1) for even s
 *     s = inf    T+: 1.(b-k-2)(x1+1)(x2-1)(x3+1)...
 *
 * and T- is the mirror image with every sign flipped. The alternating run
 * stops at x_{s-2}; x_{s-1} is left alone and x_s absorbs the remainder.
 * This is the only pattern that preserves the value for s >= 2.
 */

namespace gbeta {

struct RewriteStep {
    std::string rule;
    /// 1-based digit position the rule acted on (for T+/T-: the Ind value, 0 for infinity).
    std::size_t position = 0;

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteLog = std::vector<RewriteStep>;

/// Audit record of one rewrite: both sides evaluate to `value`.
struct RewriteTrace {
    Word input;
    Word output;
    RewriteLog steps;
    FieldElem value;
};

namespace detail {

inline void log_step(RewriteLog* log, std::string rule, std::size_t position)
{
    if (log != nullptr)
        log->push_back({std::move(rule), position});
}

inline void require_raw_range(const Params& params, std::span<const int> digits, std::string_view what)
{
    const int hi = 3 * params.k() + 2;
    for (int d : digits)
        if (d < 0 || d > hi)
            throw domain_error(std::string(what) + ": digit " + std::to_string(d) + " outside {0.." +
                               std::to_string(hi) + "}");
}

inline void require_valid(const Params& params, const DigitWord& w, std::string_view what)
{
    if (!is_valid(params, w))
        throw domain_error(std::string(what) + ": word " + to_string(w) + " is not over {0.." +
                           std::to_string(params.max_digit()) + "}");
}

/// Applies the finite-s carry pattern to v, where v[0] is the lead digit
/// and v[j] = x_j. v must have at least s+1 entries.
inline void apply_carry(const Params& params, std::vector<int>& v, std::size_t s, int dir)
{
    const int k1 = params.k() + 1;
    if (s == 1) {
        v[0] -= dir * k1;
        v[1] -= dir * k1;
        return;
    }
    v[0] -= dir * (k1 + 1);
    for (std::size_t j = 1; j + 2 <= s; ++j)
        v[j] += dir * (j % 2 == 1 ? 1 : -1);
    v[s] += dir * (s % 2 == 1 ? -k1 : k1);
}

/// The infinite-s pattern on positions [from, to) of v (v[0] = lead digit).
inline void apply_alternation(const Params& params, std::vector<int>& v, std::size_t from, std::size_t to, int dir)
{
    for (std::size_t j = from; j < to; ++j) {
        if (j == 0)
            v[0] -= dir * (params.k() + 2);
        else
            v[j] += dir * (j % 2 == 1 ? 1 : -1);
    }
}

inline DigitWord carry_or_borrow(const Params& params, const DigitWord& w, int dir, RewriteLog* log)
{
    const IndSign sign = dir > 0 ? IndSign::plus : IndSign::minus;
    std::span<const int> tail(w.digits.data() + 1, w.digits.size() - 1);
    const IndValue s = ind(params, sign, tail);
    std::vector<int> v = w.digits;
    if (v.size() < s.value() + 1)
        v.resize(s.value() + 1, 0);
    apply_carry(params, v, s.value(), dir);
    log_step(log, dir > 0 ? "T+" : "T-", s.value());
    return DigitWord{w.int_part + dir, std::move(v)};
}

inline EvPeriodicWord carry_or_borrow(const Params& params, const EvPeriodicWord& w, int dir, RewriteLog* log)
{
    const IndSign sign = dir > 0 ? IndSign::plus : IndSign::minus;
    const IndValue s = ind(params, sign, w.suffix(1));
    const std::size_t period = w.period().size();
    if (!s.is_infinite()) {
        const std::size_t n = std::max(w.preperiod().size(), s.value() + 1);
        std::vector<int> v = w.prefix(n);
        apply_carry(params, v, s.value(), dir);
        std::vector<int> rest(period);
        for (std::size_t j = 0; j < period; ++j)
            rest[j] = w.at(n + 1 + j);
        log_step(log, dir > 0 ? "T+" : "T-", s.value());
        return EvPeriodicWord::make(w.int_part() + dir, std::move(v), std::move(rest));
    }
    const std::size_t n = std::max<std::size_t>(w.preperiod().size(), 1);
    std::vector<int> all = w.prefix(n + 2 * period);
    apply_alternation(params, all, 0, all.size(), dir);
    std::vector<int> pre(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<int> rep(all.begin() + static_cast<std::ptrdiff_t>(n), all.end());
    log_step(log, dir > 0 ? "T+" : "T-", 0);
    return EvPeriodicWord::make(w.int_part() + dir, std::move(pre), std::move(rep));
}

} // namespace detail

// ---------------------------------------------------------------------------
// C_r and the B-separation map T
// ---------------------------------------------------------------------------

/// One C_r step: at the first big-big pair d_l d_{l+1}, add 1 to d_{l-1}
/// (the integer part when l = 1) and subtract k+1 from both. The identity
/// when the word is already B-separated.
inline DigitWord cr_step(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "C_r");
    detail::require_raw_range(params, w.digits, "C_r");
    const std::size_t l = first_big_pair(params, w.digits);
    if (l == 0)
        return w;
    DigitWord out = w;
    const int k1 = params.k() + 1;
    if (l == 1)
        out.int_part += 1;
    else
        out.digits[l - 2] += 1;
    out.digits[l - 1] -= k1;
    out.digits[l] -= k1;
    detail::log_step(log, "C_r", l);
    return out;
}

/// Iterates C_r (leftmost pair first) to a B-separated fixpoint. Each step
/// lowers the digit sum by 2k+1, so this terminates.
inline DigitWord b_separate(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    DigitWord cur = w;
    while (true) {
        DigitWord next = cr_step(params, cur, log);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

// ---------------------------------------------------------------------------
// carry T+ and borrow T-
// ---------------------------------------------------------------------------

inline DigitWord carry_t_plus(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "T+");
    detail::require_valid(params, w, "T+");
    if (w.int_part != 0 || w.digits.empty() || !params.in_B_lower(w.digits[0]))
        throw domain_error("T+ needs a word 0.b x1 x2 ... with b in {k+2..2k+1}, got " + to_string(w));
    return detail::carry_or_borrow(params, w, +1, log);
}

inline EvPeriodicWord carry_t_plus(const Params& params, const EvPeriodicWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "T+");
    if (!is_valid(params, w) || w.int_part() != 0 || !params.in_B_lower(w.at(1)))
        throw domain_error("T+ needs a word 0.b x1 x2 ... with b in {k+2..2k+1}, got " + to_string(w));
    return detail::carry_or_borrow(params, w, +1, log);
}

inline DigitWord borrow_t_minus(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "T-");
    detail::require_valid(params, w, "T-");
    if (w.int_part != 1 || w.digits.empty() || !params.in_S_minus(w.digits[0]))
        throw domain_error("T- needs a word 1.a x1 x2 ... with a in {0..k-1}, got " + to_string(w));
    return detail::carry_or_borrow(params, w, -1, log);
}

inline EvPeriodicWord borrow_t_minus(const Params& params, const EvPeriodicWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "T-");
    if (!is_valid(params, w) || w.int_part() != 1 || !params.in_S_minus(w.at(1)))
        throw domain_error("T- needs a word 1.a x1 x2 ... with a in {0..k-1}, got " + to_string(w));
    return detail::carry_or_borrow(params, w, -1, log);
}

// ---------------------------------------------------------------------------
// digit reduction
// ---------------------------------------------------------------------------

/// Rewrites w into an equal-valued word with all digits in {0..k+1}.
///
/// After B-separating, the rightmost digit in {k+2..2k+1} is removed by a
/// local carry into its (small) left neighbour; this can only create a big
/// digit further right, so the rightmost offending position moves right or
/// the number of offending digits drops. With integer part 0 on input the
/// result has integer part 0 or 1.
inline DigitWord reduce_digits(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "digit reduction");
    detail::require_valid(params, w, "digit reduction");
    DigitWord cur = w;
    while (true) {
        cur = b_separate(params, cur, log);
        auto it = std::find_if(cur.digits.rbegin(), cur.digits.rend(), [&](int d) { return params.in_B_lower(d); });
        if (it == cur.digits.rend())
            return cur;
        const std::size_t j = static_cast<std::size_t>(cur.digits.rend() - it) - 1;

        std::vector<int> local(cur.digits.begin() + static_cast<std::ptrdiff_t>(j), cur.digits.end());
        const IndValue s = ind(params, IndSign::plus, std::span<const int>(local).subspan(1));
        if (local.size() < s.value() + 1)
            local.resize(s.value() + 1, 0);
        detail::apply_carry(params, local, s.value(), +1);

        if (j == 0)
            cur.int_part += 1;
        else
            cur.digits[j - 1] += 1;
        cur.digits.resize(j);
        cur.digits.insert(cur.digits.end(), local.begin(), local.end());
        detail::log_step(log, "reduce", j + 1);
    }
}

// ---------------------------------------------------------------------------
// closure under x beta, +, / (k+1)
// ---------------------------------------------------------------------------

/// beta * w for 0 <= value(w) < (beta-k)/beta = 0.1(k+1); the result is a
/// finite word over {0..m} with integer part 0.
inline DigitWord mul_beta_word(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "multiplication by beta");
    detail::require_valid(params, w, "multiplication by beta");
    if (w.int_part != 0)
        throw domain_error("multiplication by beta needs integer part 0, got " + to_string(w));
    const FieldElem limit = params.div_beta(params.interval_bound());
    if (!params.less(word_value(params, w), limit))
        throw domain_error("multiplication by beta needs value < (beta-k)/beta, got " + to_string(w));

    const int k = params.k();
    const int m = params.max_digit();
    const DigitWord r = reduce_digits(params, w, log);
    const std::vector<int>& d = r.digits;
    auto at = [&](std::size_t i) { return i < d.size() ? d[i] : 0; };

    if (d.empty() || d[0] == 0) {
        detail::log_step(log, "shift", 1);
        return DigitWord{0, d.empty() ? std::vector<int>{} : std::vector<int>(d.begin() + 1, d.end())};
    }
    if (d[0] != 1 || r.int_part != 0)
        throw domain_error("multiplication by beta: reduced word " + to_string(r) + " is out of range");

    const std::vector<int> rest(d.begin() + 1, d.end());
    if (params.in_S_minus(at(1))) {
        DigitWord lifted{1, rest.empty() ? std::vector<int>{0} : rest};
        return borrow_t_minus(params, lifted, log);
    }
    if (at(1) != k)
        throw domain_error("multiplication by beta: reduced word " + to_string(r) + " is out of range");

    // 0.1 k ((k+1)k)^p ...
    std::size_t pos = 2;
    std::size_t blocks = 0;
    while (at(pos) == k + 1 && at(pos + 1) == k) {
        pos += 2;
        ++blocks;
    }
    const int c = at(pos);
    DigitWord out{0, std::vector<int>(2 * blocks + 1, m)};
    if (params.is_small(c)) {
        out.digits.push_back(c + k + 1);
        for (std::size_t i = pos + 1; i < d.size(); ++i)
            out.digits.push_back(d[i]);
        detail::log_step(log, "mul-beta", 2 * blocks + 2);
        return out;
    }
    if (c != k + 1 || !params.in_S_minus(at(pos + 1)))
        throw domain_error("multiplication by beta: reduced word " + to_string(r) + " is out of range");
    out.digits.push_back(m);
    DigitWord lifted{1, {}};
    for (std::size_t i = pos + 1; i < std::max(d.size(), pos + 2); ++i)
        lifted.digits.push_back(at(i));
    DigitWord lowered = borrow_t_minus(params, lifted, log);
    out.digits.insert(out.digits.end(), lowered.digits.begin(), lowered.digits.end());
    detail::log_step(log, "mul-beta", 2 * blocks + 2);
    return out;
}

namespace detail {

inline DigitWord trim_trailing_zeros(DigitWord w)
{
    while (w.digits.size() > 1 && w.digits.back() == 0)
        w.digits.pop_back();
    return w;
}

} // namespace detail

/// x + y. Both are reduced to digits {0..k+1}; positions summing to 2k+2
/// are split as (2k+1) + 1, the (2k+1)-part is reduced again and the
/// 1-part added back, giving fractional digits <= k+2. The integer part is
/// unbounded. Trailing zeros are dropped (at least one digit is kept).
inline DigitWord add_words(const Params& params, const DigitWord& x, const DigitWord& y, RewriteLog* log = nullptr)
{
    require_odd(params, "addition");
    detail::require_valid(params, x, "addition");
    detail::require_valid(params, y, "addition");
    const int k = params.k();
    const DigitWord xr = reduce_digits(params, x, log);
    const DigitWord yr = reduce_digits(params, y, log);
    const std::size_t n = std::max(xr.digits.size(), yr.digits.size());

    DigitWord big{0, std::vector<int>(n, 0)};
    std::vector<int> ones(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const int z = (j < xr.digits.size() ? xr.digits[j] : 0) + (j < yr.digits.size() ? yr.digits[j] : 0);
        if (z == 2 * k + 2) {
            big.digits[j] = 2 * k + 1;
            ones[j] = 1;
        } else {
            big.digits[j] = z;
        }
    }
    DigitWord reduced = reduce_digits(params, big, log);
    DigitWord out{xr.int_part + yr.int_part + reduced.int_part, std::move(reduced.digits)};
    if (out.digits.size() < n)
        out.digits.resize(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        out.digits[j] += ones[j];
    detail::log_step(log, "add", n);
    return detail::trim_trailing_zeros(std::move(out));
}

/// w / (k+1) for a finite word with integer part 0. Writes each digit e at
/// position j as i(e) at j plus t(e) at j+1 and j+2 (in units of 1/(k+1)),
/// using 1/(k+1) = 1/beta + 1/beta^2; the result has length n+2.
inline DigitWord div_word_by_k1(const Params& params, const DigitWord& w, RewriteLog* log = nullptr)
{
    require_odd(params, "division by k+1");
    detail::require_valid(params, w, "division by k+1");
    if (w.int_part != 0)
        throw domain_error("division by k+1 needs integer part 0, got " + to_string(w));
    const int k1 = params.k() + 1;
    auto at = [&](std::ptrdiff_t j) {
        return (j >= 1 && static_cast<std::size_t>(j) <= w.digits.size()) ? w.digits[static_cast<std::size_t>(j) - 1]
                                                                          : 0;
    };
    auto head = [&](int e) { return params.is_small(e) ? 0 : k1; };
    auto tail = [&](int e) { return params.is_small(e) ? k1 * e : k1 * (e - k1); };

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.digits.size());
    DigitWord out{0, {}};
    out.digits.reserve(static_cast<std::size_t>(n + 2));
    for (std::ptrdiff_t j = 1; j <= n + 2; ++j) {
        const int eta = head(at(j)) + tail(at(j - 1)) + tail(at(j - 2));
        out.digits.push_back(eta / k1);
    }
    detail::log_step(log, "div-k1", static_cast<std::size_t>(n));
    return out;
}

inline RewriteTrace make_trace(const Params& params, Word input, Word output, RewriteLog steps)
{
    FieldElem value = word_value(params, output);
    return RewriteTrace{std::move(input), std::move(output), std::move(steps), std::move(value)};
}

} // namespace gbeta

#endif // GBETA_REWRITE_HPP
