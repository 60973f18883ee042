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

#ifndef GBETA_LITERAL_HPP
#define GBETA_LITERAL_HPP

#include "gbeta/error.hpp"
#include "gbeta/field.hpp"

#include <regex>
#include <string>
#include <string_view>

// Text form of field elements, `b` standing for beta:
//
//     (q+p*b)/r   (q-p*b)/r   (q+p*b)   q/r   q
//
// Whitespace is ignored. Printing emits the shortest of these forms.

namespace gbeta {

inline FieldElem parse_field_elem(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s.push_back(c);

    static const std::regex surd(R"(^\(([+-]?\d+)([+-])(\d+)\*b\)(?:/(\d+))?$)");
    static const std::regex ratio(R"(^([+-]?\d+)(?:/(\d+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, surd)) {
        const BigInt r = m[4].matched ? BigInt(m[4].str()) : BigInt(1);
        if (r == 0)
            throw parse_error("zero denominator in '" + std::string(text) + "'");
        BigInt p(m[3].str());
        if (m[2].str() == "-")
            p = -p;
        return FieldElem(p, BigInt(m[1].str()), r);
    }
    if (std::regex_match(s, m, ratio)) {
        const BigInt r = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
        if (r == 0)
            throw parse_error("zero denominator in '" + std::string(text) + "'");
        return FieldElem(0, BigInt(m[1].str()), r);
    }
    throw parse_error("not a field element literal: '" + std::string(text) + "'");
}

inline std::string format_field_elem(const FieldElem& x)
{
    const BigInt& p = x.beta_coeff();
    const BigInt& q = x.rational_part();
    const BigInt& r = x.denominator();
    std::string out;
    if (p == 0) {
        out = to_string(q);
    } else {
        out = "(" + to_string(q) + (p < 0 ? "-" : "+") + to_string(abs(p)) + "*b)";
    }
    if (r != 1)
        out += "/" + to_string(r);
    return out;
}

} // namespace gbeta

#endif // GBETA_LITERAL_HPP
