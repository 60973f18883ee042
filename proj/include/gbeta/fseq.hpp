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

#ifndef GBETA_FSEQ_HPP
#define GBETA_FSEQ_HPP

#include "gbeta/field.hpp"

#include <cstddef>
#include <vector>

// The sequence F_1 = 1, F_2 = k+1, F_{n+1} = (k+1)(F_n + F_{n-1}) and the
// greedy decomposition n = sum n_i F_i with n_i in {0..k+1}.

namespace gbeta {

/// [F_1, ..., F_up_to].
inline std::vector<BigInt> f_sequence(const Params& params, std::size_t up_to)
{
    std::vector<BigInt> f;
    f.reserve(up_to);
    const BigInt k1 = params.k() + 1;
    for (std::size_t i = 0; i < up_to; ++i) {
        if (i == 0)
            f.emplace_back(1);
        else if (i == 1)
            f.push_back(k1);
        else
            f.push_back(k1 * (f[i - 1] + f[i - 2]));
    }
    return f;
}

struct FDecomposition {
    BigInt n;
    /// coeffs[i] multiplies F_{i+1}; no trailing zeros.
    std::vector<int> coeffs;

    std::size_t length() const { return coeffs.size(); }
};

/// Greedy decomposition: take the largest F_j <= |n| with coefficient
/// floor(|n| / F_j), which never exceeds k+1 because F_{j+1} <= (k+2) F_j,
/// then recurse on the remainder. Negative n gets negated coefficients.
inline FDecomposition decompose_f(const Params& params, const BigInt& n)
{
    FDecomposition out{n, {}};
    BigInt rest = abs(n);
    if (rest == 0)
        return out;

    std::vector<BigInt> f = f_sequence(params, 2);
    while (f.back() <= rest)
        f = f_sequence(params, f.size() + 1);
    f.pop_back();

    out.coeffs.assign(f.size(), 0);
    const int sgn = n < 0 ? -1 : 1;
    for (std::size_t j = f.size(); j-- > 0 && rest != 0;) {
        if (f[j] > rest)
            continue;
        BigInt q = rest / f[j];
        rest -= q * f[j];
        out.coeffs[j] = sgn * q.convert_to<int>();
    }
    while (!out.coeffs.empty() && out.coeffs.back() == 0)
        out.coeffs.pop_back();
    return out;
}

/// Checks F_n beta = F_{n+1} - (-(k+1)/beta)^n exactly in Q(beta).
inline bool fn_identity_check(const Params& params, std::size_t n)
{
    require_odd(params, "F_n / beta identity");
    if (n < 1)
        throw domain_error("fn_identity_check needs n >= 1");
    const std::vector<BigInt> f = f_sequence(params, n + 1);
    // -(k+1)/beta = (k+1) - beta
    const FieldElem ratio = FieldElem(-1, params.k() + 1, 1);
    FieldElem power = params.one();
    for (std::size_t i = 0; i < n; ++i)
        power = params.mul(power, ratio);
    FieldElem lhs = params.beta() * f[n - 1];
    FieldElem rhs = FieldElem::integer(f[n]) - power;
    return lhs == rhs;
}

} // namespace gbeta

#endif // GBETA_FSEQ_HPP
