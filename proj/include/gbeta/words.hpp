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

#ifndef GBETA_WORDS_HPP
#define GBETA_WORDS_HPP

#include "gbeta/field.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gbeta {

/// A finite word  int_part . d_1 d_2 ... d_n  with value int_part + sum d_i / beta^i.
///
/// Digits are not range-checked on construction: intermediate words of the
/// rewriting calculus may temporarily leave {0..m}. Use is_valid() where the
/// alphabet matters.
struct DigitWord {
    int int_part = 0;
    std::vector<int> digits;

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// An eventually periodic infinite word  int_part . preperiod (period)^inf.
/// Construct through make() to get the canonical form (shortest period,
/// shortest preperiod). Finite words are the case period == {0}.
class EvPeriodicWord {
public:
    EvPeriodicWord() : period_{0} {}

    static EvPeriodicWord make(int int_part, std::vector<int> preperiod, std::vector<int> period)
    {
        if (period.empty())
            throw domain_error("eventually periodic word needs a nonempty period");
        EvPeriodicWord w;
        w.int_part_ = int_part;
        w.pre_ = std::move(preperiod);
        w.period_ = std::move(period);
        w.canonicalize();
        return w;
    }

    static EvPeriodicWord from_finite(const DigitWord& w) { return make(w.int_part, w.digits, {0}); }

    int int_part() const { return int_part_; }
    const std::vector<int>& preperiod() const { return pre_; }
    const std::vector<int>& period() const { return period_; }

    bool is_finite() const { return period_.size() == 1 && period_[0] == 0; }

    /// Digit at 1-based position i >= 1.
    int at(std::size_t i) const
    {
        if (i <= pre_.size())
            return pre_[i - 1];
        return period_[(i - pre_.size() - 1) % period_.size()];
    }

    /// First n digits.
    std::vector<int> prefix(std::size_t n) const
    {
        std::vector<int> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = at(i + 1);
        return out;
    }

    /// The tail d_{s+1} d_{s+2} ... as a word with integer part 0.
    EvPeriodicWord suffix(std::size_t s) const
    {
        if (s <= pre_.size())
            return make(0, std::vector<int>(pre_.begin() + static_cast<std::ptrdiff_t>(s), pre_.end()), period_);
        std::vector<int> rotated(period_.size());
        for (std::size_t j = 0; j < period_.size(); ++j)
            rotated[j] = at(s + 1 + j);
        return make(0, {}, std::move(rotated));
    }

    friend bool operator==(const EvPeriodicWord&, const EvPeriodicWord&) = default;

private:
    void canonicalize()
    {
        const std::size_t n = period_.size();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0)
                continue;
            bool periodic = true;
            for (std::size_t j = d; j < n && periodic; ++j)
                periodic = period_[j] == period_[j - d];
            if (periodic) {
                period_.resize(d);
                break;
            }
        }
        while (!pre_.empty() && pre_.back() == period_.back()) {
            std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
            pre_.pop_back();
        }
    }

    int int_part_ = 0;
    std::vector<int> pre_;
    std::vector<int> period_;
};

using Word = std::variant<DigitWord, EvPeriodicWord>;

inline bool is_valid(const Params& params, std::span<const int> digits)
{
    return std::all_of(digits.begin(), digits.end(), [&](int d) { return params.is_digit(d); });
}

inline bool is_valid(const Params& params, const DigitWord& w) { return w.int_part >= 0 && is_valid(params, w.digits); }

inline bool is_valid(const Params& params, const EvPeriodicWord& w)
{
    return w.int_part() >= 0 && is_valid(params, w.preperiod()) && is_valid(params, w.period());
}

// ---------------------------------------------------------------------------
// text form:  INT '.' LIST [ ',' ] [ '(' LIST ')' '*' ]
// ---------------------------------------------------------------------------

namespace detail {

inline void append_list(std::string& out, std::span<const int> digits)
{
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(digits[i]);
    }
}

inline int parse_int_token(std::string_view token, std::string_view text)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || token.front() == '+' ||
        token.front() == '-')
        throw parse_error("bad digit token '" + std::string(token) + "' in word '" + std::string(text) + "'");
    return value;
}

inline std::vector<int> parse_list(std::string_view list, std::string_view text)
{
    std::vector<int> out;
    if (list.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = list.find(',', start);
        std::string_view token = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
        out.push_back(parse_int_token(token, text));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace detail

inline std::string to_string(const DigitWord& w)
{
    std::string out = std::to_string(w.int_part) + ".";
    detail::append_list(out, w.digits);
    return out;
}

inline std::string to_string(const EvPeriodicWord& w)
{
    std::string out = std::to_string(w.int_part()) + ".";
    detail::append_list(out, w.preperiod());
    if (!w.preperiod().empty())
        out += ',';
    out += '(';
    detail::append_list(out, w.period());
    out += ")*";
    return out;
}

inline std::string to_string(const Word& w)
{
    return std::visit([](const auto& v) { return to_string(v); }, w);
}

/// Parses a word literal; digits must lie in {0..m}.
inline Word parse_word(const Params& params, std::string_view text)
{
    const std::size_t dot = text.find('.');
    if (dot == std::string_view::npos)
        throw parse_error("word '" + std::string(text) + "' has no '.'");
    const int int_part = detail::parse_int_token(text.substr(0, dot), text);
    std::string_view rest = text.substr(dot + 1);

    auto check = [&](const std::vector<int>& digits) {
        for (int d : digits)
            if (!params.is_digit(d))
                throw parse_error("digit " + std::to_string(d) + " exceeds m=" + std::to_string(params.max_digit()) +
                                  " in word '" + std::string(text) + "'");
    };

    const std::size_t open = rest.find('(');
    if (open == std::string_view::npos) {
        if (rest.find_first_of(")*") != std::string_view::npos)
            throw parse_error("unbalanced period in word '" + std::string(text) + "'");
        DigitWord w{int_part, detail::parse_list(rest, text)};
        check(w.digits);
        return w;
    }

    std::string_view head = rest.substr(0, open);
    if (!head.empty()) {
        if (head.back() != ',')
            throw parse_error("expected ',' before '(' in word '" + std::string(text) + "'");
        head.remove_suffix(1);
    }
    std::string_view tail = rest.substr(open + 1);
    if (tail.size() < 2 || tail.substr(tail.size() - 2) != ")*")
        throw parse_error("period must end with ')*' in word '" + std::string(text) + "'");
    tail.remove_suffix(2);
    if (tail.empty())
        throw parse_error("empty period in word '" + std::string(text) + "'");
    std::vector<int> pre = detail::parse_list(head, text);
    std::vector<int> period = detail::parse_list(tail, text);
    check(pre);
    check(period);
    return EvPeriodicWord::make(int_part, std::move(pre), std::move(period));
}

inline EvPeriodicWord to_periodic(const Word& w)
{
    if (const auto* d = std::get_if<DigitWord>(&w))
        return EvPeriodicWord::from_finite(*d);
    return std::get<EvPeriodicWord>(w);
}

// ---------------------------------------------------------------------------
// values
// ---------------------------------------------------------------------------

/// Value of 0.d_1 ... d_n by Horner's rule from the right.
inline FieldElem fraction_value(const Params& params, std::span<const int> digits)
{
    FieldElem v;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = params.div_beta(v + FieldElem::integer(digits[i]));
    return v;
}

inline FieldElem word_value(const Params& params, const DigitWord& w)
{
    return FieldElem::integer(w.int_part) + fraction_value(params, w.digits);
}

/// Sums the periodic tail in closed form: 0.(c_1..c_L)* = A beta^L / (beta^L - 1)
/// where A = 0.c_1..c_L.
inline FieldElem word_value(const Params& params, const EvPeriodicWord& w)
{
    FieldElem head = fraction_value(params, w.preperiod());
    FieldElem tail;
    if (!w.is_finite()) {
        const FieldElem block = fraction_value(params, w.period());
        const FieldElem bl = params.pow_beta(static_cast<unsigned>(w.period().size()));
        tail = params.div(params.mul(block, bl), bl - params.one());
        for (std::size_t i = 0; i < w.preperiod().size(); ++i)
            tail = params.div_beta(tail);
    }
    return FieldElem::integer(w.int_part()) + head + tail;
}

inline FieldElem word_value(const Params& params, const Word& w)
{
    return std::visit([&](const auto& v) { return word_value(params, v); }, w);
}

// ---------------------------------------------------------------------------
// Ind+ / Ind- and B-separation
// ---------------------------------------------------------------------------

enum class IndSign { plus, minus };

/// A value in {1, 2, ...} or infinity.
class IndValue {
public:
    explicit IndValue(std::size_t v) : v_(v)
    {
        if (v == 0)
            throw domain_error("index value must be >= 1");
    }

    static IndValue infinite()
    {
        IndValue out(1);
        out.v_ = 0;
        return out;
    }

    bool is_infinite() const { return v_ == 0; }
    std::size_t value() const { return v_; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

    friend bool operator==(const IndValue&, const IndValue&) = default;

private:
    std::size_t v_;
};

namespace detail {

/// Scans pairs (x_{2i-1}, x_{2i}) of a digit stream. For Ind+ the
/// continuing pattern is (small, big); for Ind- it is (big, small). Beyond
/// `horizon` the pattern repeats forever.
template <class DigitAt>
IndValue ind_scan(const Params& params, IndSign sign, DigitAt&& at, std::size_t horizon)
{
    auto first_ok = [&](int d) { return sign == IndSign::plus ? params.is_small(d) : params.is_big(d); };
    for (std::size_t i = 1;; ++i) {
        const std::size_t odd = 2 * i - 1;
        if (odd > horizon)
            return IndValue::infinite();
        if (!first_ok(at(odd)))
            return IndValue(odd);
        if (first_ok(at(odd + 1)))
            return IndValue(odd + 1);
    }
}

} // namespace detail

/// Ind of a finite tail continued by 0^inf.
inline IndValue ind(const Params& params, IndSign sign, std::span<const int> tail)
{
    auto at = [&](std::size_t i) { return i <= tail.size() ? tail[i - 1] : 0; };
    // a zero continuation breaks both patterns within two positions
    return detail::ind_scan(params, sign, at, tail.size() + 4);
}

/// Ind of an eventually periodic tail (the integer part is ignored).
inline IndValue ind(const Params& params, IndSign sign, const EvPeriodicWord& tail)
{
    auto at = [&](std::size_t i) { return tail.at(i); };
    // the pair pattern depends on (position parity, position mod period),
    // which repeats after two periods
    return detail::ind_scan(params, sign, at, tail.preperiod().size() + 2 * tail.period().size() + 2);
}

/// First l with d_l, d_{l+1} both big (1-based), or 0 when there is none.
inline std::size_t first_big_pair(const Params& params, std::span<const int> digits)
{
    for (std::size_t i = 0; i + 1 < digits.size(); ++i)
        if (params.is_big(digits[i]) && params.is_big(digits[i + 1]))
            return i + 1;
    return 0;
}

/// No two consecutive digits both big.
inline bool is_b_separated(const Params& params, std::span<const int> digits)
{
    return first_big_pair(params, digits) == 0;
}

inline bool is_b_separated(const Params& params, const DigitWord& w) { return is_b_separated(params, w.digits); }

} // namespace gbeta

#endif // GBETA_WORDS_HPP
