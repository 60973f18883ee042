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

#ifndef GBETA_BIGINT_HPP
#define GBETA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gbeta {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(BigInt a, BigInt b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline BigInt pow(BigInt base, unsigned exp)
{
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1u)
            result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline int sign(const BigInt& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline std::string to_string(const BigInt& a) { return a.str(); }

/// Removes from `n` every prime factor it shares with `m`.
inline BigInt strip_common_primes(BigInt n, const BigInt& m)
{
    for (BigInt g = gcd(n, m); g > 1; g = gcd(n, m))
        n /= g;
    return n;
}

/// Smallest prime factor of n > 1, found by trial division up to `limit`.
/// Returns nullopt when no factor is found below the limit (n is then either
/// prime or has only large factors).
inline std::optional<BigInt> smallest_prime_factor(const BigInt& n, unsigned long limit = 1000000)
{
    if (n < 2)
        return std::nullopt;
    if (n % 2 == 0)
        return BigInt(2);
    for (unsigned long d = 3; d <= limit; d += 2) {
        BigInt dd = d;
        if (dd * dd > n)
            return n;
        if (n % d == 0)
            return dd;
    }
    return std::nullopt;
}

} // namespace gbeta

#endif // GBETA_BIGINT_HPP
