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

#ifndef GBETA_FIELD_HPP
#define GBETA_FIELD_HPP

#include "gbeta/bigint.hpp"
#include "gbeta/error.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/*
 * Exact arithmetic in Q(beta).
 *
 * For an odd digit bound m = 2k+1 the base is the generalized golden ratio
 *
 *     beta = (k+1 + sqrt(D)) / 2,   D = k^2 + 6k + 5 = (k+1)(k+5),
 *
 * the positive root of beta^2 = (k+1) beta + (k+1). D is never a perfect
 * square ((k+3)^2 - 4 lies strictly between two consecutive squares), so
 * {1, beta} is a basis of Q(beta) over Q and every element has a unique
 * representation (p beta + q) / r. The conjugate root is k+1 - beta, which
 * gives the norm
 *
 *     N(q + p beta) = q^2 + (k+1) p q - (k+1) p^2.
 *
 * For an even digit bound m = 2k the base is the integer k+1 and the field
 * degenerates to Q; elements then always have p = 0.
 */

namespace gbeta {

enum class Parity { odd, even };

inline std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline Parity parse_parity(std::string_view text)
{
    if (text == "odd")
        return Parity::odd;
    if (text == "even")
        return Parity::even;
    throw invalid_parameter("unknown parity '" + std::string(text) + "' (expected odd or even)");
}

/// An element (p beta + q) / r of Q(beta), kept in lowest terms with r > 0.
class FieldElem {
public:
    FieldElem() = default;

    FieldElem(BigInt beta_coeff, BigInt rational, BigInt denominator)
        : beta_(std::move(beta_coeff)), rat_(std::move(rational)), den_(std::move(denominator))
    {
        normalize();
    }

    static FieldElem integer(BigInt n) { return FieldElem(0, std::move(n), 1); }
    static FieldElem rational(BigInt num, BigInt den) { return FieldElem(0, std::move(num), std::move(den)); }

    const BigInt& beta_coeff() const { return beta_; }
    const BigInt& rational_part() const { return rat_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return beta_ == 0 && rat_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b)
    {
        if (a.den_ == b.den_)
            return FieldElem(a.beta_ + b.beta_, a.rat_ + b.rat_, a.den_);
        return FieldElem(a.beta_ * b.den_ + b.beta_ * a.den_, a.rat_ * b.den_ + b.rat_ * a.den_,
                         a.den_ * b.den_);
    }

    friend FieldElem operator-(const FieldElem& a) { return FieldElem(-a.beta_, -a.rat_, a.den_); }

    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

    friend FieldElem operator*(const FieldElem& a, const BigInt& n)
    {
        return FieldElem(a.beta_ * n, a.rat_ * n, a.den_);
    }

    friend FieldElem operator/(const FieldElem& a, const BigInt& n)
    {
        if (n == 0)
            throw domain_error("division of a field element by zero");
        return FieldElem(a.beta_, a.rat_, a.den_ * n);
    }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

private:
    void normalize()
    {
        if (den_ == 0)
            throw domain_error("field element with zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            beta_ = -beta_;
            rat_ = -rat_;
        }
        if (beta_ == 0 && rat_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(gcd(beta_, rat_), den_);
        if (g != 1) {
            beta_ /= g;
            rat_ /= g;
            den_ /= g;
        }
    }

    BigInt beta_ = 0;
    BigInt rat_ = 0;
    BigInt den_ = 1;
};

/// Strict weak order on the stored triple (not on values); for use as a map key.
struct RepresentationLess {
    bool operator()(const FieldElem& a, const FieldElem& b) const
    {
        if (a.denominator() != b.denominator())
            return a.denominator() < b.denominator();
        if (a.beta_coeff() != b.beta_coeff())
            return a.beta_coeff() < b.beta_coeff();
        return a.rational_part() < b.rational_part();
    }
};

enum class Membership { in_S, not_in_S, in_F, not_in_F };

inline bool is_member(Membership m) { return m == Membership::in_S || m == Membership::in_F; }

inline std::string_view to_string(Membership m)
{
    switch (m) {
    case Membership::in_S: return "InS";
    case Membership::not_in_S: return "NotInS";
    case Membership::in_F: return "InF";
    case Membership::not_in_F: return "NotInF";
    }
    return "?";
}

/// The numeration system: base, digit alphabet {0..m} and the digit classes.
class Params {
public:
    static Params make(int k, Parity parity)
    {
        if (k < 1)
            throw invalid_parameter("k must be a positive integer, got " + std::to_string(k));
        return Params(k, parity);
    }

    int k() const { return k_; }
    Parity parity() const { return parity_; }
    bool is_odd() const { return parity_ == Parity::odd; }

    /// Largest digit m.
    int max_digit() const { return is_odd() ? 2 * k_ + 1 : 2 * k_; }

    /// k^2 + 6k + 5 for odd parity; 0 for even parity (no surd).
    BigInt discriminant() const { return is_odd() ? BigInt(k_ * k_ + 6 * k_ + 5) : BigInt(0); }

    FieldElem zero() const { return {}; }
    FieldElem one() const { return FieldElem::integer(1); }

    FieldElem beta() const { return is_odd() ? FieldElem(1, 0, 1) : FieldElem::integer(k_ + 1); }

    /// Right end m/(beta-1) of the expansion interval: beta-k (odd), 2 (even).
    FieldElem interval_bound() const { return is_odd() ? FieldElem(1, -k_, 1) : FieldElem::integer(2); }

    /// Folds a beta coefficient into the rational part for even parity.
    FieldElem canonical(const FieldElem& x) const
    {
        if (is_odd() || x.beta_coeff() == 0)
            return x;
        return FieldElem(0, x.beta_coeff() * (k_ + 1) + x.rational_part(), x.denominator());
    }

    FieldElem mul_beta(const FieldElem& x) const
    {
        if (!is_odd())
            return canonical(x) * BigInt(k_ + 1);
        // beta (p beta + q) = p beta^2 + q beta = (p(k+1) + q) beta + p(k+1)
        const BigInt k1 = k_ + 1;
        return FieldElem(x.beta_coeff() * k1 + x.rational_part(), x.beta_coeff() * k1, x.denominator());
    }

    /// x / beta, using 1/beta = (beta - (k+1)) / (k+1).
    FieldElem div_beta(const FieldElem& x) const
    {
        if (!is_odd())
            return canonical(x) / BigInt(k_ + 1);
        // (p beta + q)(beta - (k+1)) = p beta^2 + (q - p(k+1)) beta - q(k+1)
        //                            = q beta + (p - q)(k+1)
        const BigInt k1 = k_ + 1;
        return FieldElem(x.rational_part(), (x.beta_coeff() - x.rational_part()) * k1, x.denominator() * k1);
    }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const
    {
        if (!is_odd()) {
            FieldElem ca = canonical(a), cb = canonical(b);
            return FieldElem(0, ca.rational_part() * cb.rational_part(), ca.denominator() * cb.denominator());
        }
        const BigInt k1 = k_ + 1;
        const BigInt pp = a.beta_coeff() * b.beta_coeff();
        return FieldElem(pp * k1 + a.beta_coeff() * b.rational_part() + b.beta_coeff() * a.rational_part(),
                         pp * k1 + a.rational_part() * b.rational_part(), a.denominator() * b.denominator());
    }

    FieldElem inverse(const FieldElem& x) const
    {
        if (x.is_zero())
            throw domain_error("inverse of zero");
        if (!is_odd()) {
            FieldElem c = canonical(x);
            return FieldElem(0, c.denominator(), c.rational_part());
        }
        const BigInt k1 = k_ + 1;
        const BigInt& p = x.beta_coeff();
        const BigInt& q = x.rational_part();
        BigInt norm = q * q + k1 * p * q - k1 * p * p;
        // r / (q + p beta) = r (q + p(k+1) - p beta) / N
        return FieldElem(-p * x.denominator(), (q + p * k1) * x.denominator(), norm);
    }

    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inverse(b)); }

    FieldElem pow_beta(unsigned n) const
    {
        FieldElem result = one();
        for (unsigned i = 0; i < n; ++i)
            result = mul_beta(result);
        return result;
    }

    /// Sign of x, decided with integer arithmetic only.
    int sign(const FieldElem& x) const
    {
        if (!is_odd())
            return gbeta::sign(canonical(x).rational_part());
        // 2 (p beta + q) = u + v sqrt(D) with u = p(k+1) + 2q, v = p.
        const BigInt u = x.beta_coeff() * (k_ + 1) + 2 * x.rational_part();
        const BigInt& v = x.beta_coeff();
        const int su = gbeta::sign(u), sv = gbeta::sign(v);
        if (su >= 0 && sv >= 0)
            return (su > 0 || sv > 0) ? 1 : 0;
        if (su <= 0 && sv <= 0)
            return -1;
        const BigInt uu = u * u, vvd = v * v * discriminant();
        // opposite signs and D not a square: |u| != |v| sqrt(D)
        if (uu > vvd)
            return su;
        return sv;
    }

    std::strong_ordering compare(const FieldElem& a, const FieldElem& b) const
    {
        int s = sign(a - b);
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool less(const FieldElem& a, const FieldElem& b) const { return sign(a - b) < 0; }

    /// 0 <= x <= m/(beta-1).
    bool in_closed_interval(const FieldElem& x) const
    {
        return sign(x) >= 0 && sign(interval_bound() - x) >= 0;
    }

    bool in_open_interval(const FieldElem& x) const { return sign(x) > 0 && sign(interval_bound() - x) > 0; }

    /// Decides x in S = {(p beta + q)/(k+1)^n} (odd) or x in F = {p/(k+1)^n} (even).
    ///
    /// Since {1, beta} is a basis, (p beta + q)/r = (p' beta + q')/(k+1)^n
    /// forces r | (k+1)^n for the reduced triple, i.e. every prime of r
    /// divides k+1.
    Membership membership(const FieldElem& x) const
    {
        FieldElem c = canonical(x);
        if (!in_open_interval(c))
            throw domain_error("membership is defined on the open interval (0, m/(beta-1)) only");
        const bool member = strip_common_primes(c.denominator(), BigInt(k_ + 1)) == 1;
        if (is_odd())
            return member ? Membership::in_S : Membership::not_in_S;
        return member ? Membership::in_F : Membership::not_in_F;
    }

    // digit classes

    bool is_small(int d) const { return d <= k_; }
    bool is_big(int d) const { return d >= k_ + 1; }
    bool in_S_minus(int d) const { return d >= 0 && d <= k_ - 1; }
    bool in_S_lower(int d) const { return d >= 1 && d <= k_; }
    bool in_B_minus(int d) const { return d >= k_ + 1 && d <= max_digit() - 1; }
    bool in_B_lower(int d) const { return d >= k_ + 2 && d <= max_digit(); }
    bool is_digit(int d) const { return d >= 0 && d <= max_digit(); }

    std::vector<int> small_digits() const { return range(0, k_); }
    std::vector<int> big_digits() const { return range(k_ + 1, max_digit()); }
    std::vector<int> S_minus() const { return range(0, k_ - 1); }
    std::vector<int> S_lower() const { return range(1, k_); }
    std::vector<int> B_minus() const { return range(k_ + 1, max_digit() - 1); }
    std::vector<int> B_lower() const { return range(k_ + 2, max_digit()); }

    friend bool operator==(const Params&, const Params&) = default;

private:
    Params(int k, Parity parity) : k_(k), parity_(parity) {}

    static std::vector<int> range(int lo, int hi)
    {
        std::vector<int> out;
        for (int d = lo; d <= hi; ++d)
            out.push_back(d);
        return out;
    }

    int k_;
    Parity parity_;
};

inline Params make_params(int k, Parity parity) { return Params::make(k, parity); }

inline void require_odd(const Params& params, std::string_view what)
{
    if (!params.is_odd())
        throw unsupported(std::string(what) + ": defined for odd digit bounds only");
}

} // namespace gbeta

#endif // GBETA_FIELD_HPP
