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

#ifndef GBETA_CENSUS_HPP
#define GBETA_CENSUS_HPP

#include "gbeta/expand.hpp"
#include "gbeta/field.hpp"
#include "gbeta/parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace gbeta {

struct CensusRow {
    FieldElem x;
    Classification classification;
    /// (depth, number of valid prefixes at that depth)
    std::vector<std::pair<std::size_t, BigInt>> prefix_counts;
};

/// Every distinct canonical (q + p*beta)/r in the open interval with
/// 1 <= r <= denominator_bound and |p|, |q| <= numerator_bound (p = 0 for even
/// parity), sorted by value.
inline std::vector<FieldElem> census_points(const Params& params, int denominator_bound, int numerator_bound)
{
    std::set<FieldElem, RepresentationLess> seen;
    const int pmax = params.is_odd() ? numerator_bound : 0;
    for (int r = 1; r <= denominator_bound; ++r)
        for (int p = -pmax; p <= pmax; ++p)
            for (int q = -numerator_bound; q <= numerator_bound; ++q) {
                FieldElem x = params.canonical(FieldElem(p, q, r));
                if (params.in_open_interval(x))
                    seen.insert(std::move(x));
            }
    std::vector<FieldElem> points(seen.begin(), seen.end());
    std::sort(points.begin(), points.end(),
              [&](const FieldElem& a, const FieldElem& b) { return params.less(a, b); });
    return points;
}

/// Classifies and counts prefixes for each census point. Rows are computed
/// on up to `threads` workers; the order is the value order of the points.
inline std::vector<CensusRow> census_sweep(const Params& params, int denominator_bound, int numerator_bound,
                                           const std::vector<std::size_t>& depths, unsigned threads = 1)
{
    if (denominator_bound < 1 || numerator_bound < 0)
        throw domain_error("census bounds must satisfy r >= 1 and numerator bound >= 0");
    const std::vector<FieldElem> points = census_points(params, denominator_bound, numerator_bound);
    const std::size_t max_depth = depths.empty() ? 0 : *std::max_element(depths.begin(), depths.end());

    std::vector<CensusRow> rows(points.size());
    parallel_for(points.size(), threads, [&](std::size_t i) {
        CensusRow row{points[i], classify(params, points[i]), {}};
        const std::vector<BigInt> counts = prefix_counts(params, points[i], max_depth);
        for (std::size_t d : depths)
            row.prefix_counts.emplace_back(d, d == 0 ? BigInt(1) : counts[d - 1]);
        rows[i] = std::move(row);
    });
    return rows;
}

} // namespace gbeta

#endif // GBETA_CENSUS_HPP
