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

// Walks through the main operations for m = 3 (k = 1), where
// beta = 1 + sqrt(3) and the digits are {0, 1, 2, 3}.

#include "gbeta/gbeta.hpp"

#include <iostream>

int main()
{
    using namespace gbeta;
    const Params params = make_params(1, Parity::odd);

    // 1 has countably many expansions; list those that differ in the first 6 digits.
    for (const auto& w : expansions_of_one(params, 6))
        std::cout << "1 = " << display_word(w) << "\n";

    // A point of the form (q + p beta)/2^n has a finite expansion.
    const FieldElem half = parse_field_elem("1/2");
    std::cout << "1/2 = " << to_string(synth_finite(params, half)) << "\n";

    // Words are rewritten without changing their value.
    const DigitWord w = std::get<DigitWord>(parse_word(params, "0.2,3"));
    const DigitWord r = reduce_digits(params, w);
    std::cout << to_string(w) << " -> " << to_string(r) << "  (equal: " << std::boolalpha
              << (word_value(params, w) == word_value(params, r)) << ")\n";

    // Any other point has a continuum of expansions; count prefixes to see it branch.
    const FieldElem x = parse_field_elem("(1+1*b)/6");
    const Classification c = classify(params, x);
    std::cout << format_field_elem(x) << ": " << to_string(c.verdict) << ", prime " << to_string(*c.prime) << "\n";
    const std::vector<BigInt> counts = prefix_counts(params, x, 16);
    std::cout << "prefixes at depth 16: " << counts.back() << "\n";
    return 0;
}
