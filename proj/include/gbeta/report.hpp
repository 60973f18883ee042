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

#ifndef GBETA_REPORT_HPP
#define GBETA_REPORT_HPP

// JSON and CSV output. Requires the single-header nlohmann json.hpp on the
// include path (vendor/).

#include "gbeta/census.hpp"
#include "gbeta/expand.hpp"
#include "gbeta/literal.hpp"
#include "gbeta/rewrite.hpp"
#include "gbeta/words.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace gbeta {

using json = nlohmann::ordered_json;

inline json params_json(const Params& params)
{
    return json{{"k", params.k()}, {"parity", std::string(to_string(params.parity()))}};
}

/// The top-level object every CLI command prints.
inline json envelope(const Params& params, json input, json result, json certificate = nullptr)
{
    json out;
    out["params"] = params_json(params);
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["certificate"] = std::move(certificate);
    return out;
}

/// Finite periodic words print in their finite form.
inline std::string display_word(const EvPeriodicWord& w)
{
    if (w.is_finite())
        return to_string(DigitWord{w.int_part(), w.preperiod()});
    return to_string(w);
}

inline json steps_json(const RewriteLog& steps)
{
    json out = json::array();
    for (const auto& s : steps)
        out.push_back(json{{"rule", s.rule}, {"position", s.position}});
    return out;
}

inline json certificate_json(const Classification& c)
{
    switch (c.verdict) {
    case Verdict::countably_infinite:
        return json{{"kind", "finite_expansion"}, {"word", to_string(*c.expansion)}};
    case Verdict::continuum: {
        json out{{"kind", "denominator"}, {"denominator", to_string(*c.denominator)}};
        out["prime"] = c.prime ? json(to_string(*c.prime)) : json(nullptr);
        return out;
    }
    case Verdict::unique_endpoint:
        return json{{"kind", "endpoint"}, {"expansion", c.endpoint}};
    }
    return nullptr;
}

/// One-line text form of a certificate, used in CSV.
inline std::string certificate_text(const Classification& c)
{
    switch (c.verdict) {
    case Verdict::countably_infinite: return to_string(*c.expansion);
    case Verdict::continuum:
        return c.prime ? "prime " + to_string(*c.prime) : "denominator " + to_string(*c.denominator);
    case Verdict::unique_endpoint: return c.endpoint;
    }
    return {};
}

inline json census_json(const Params& params, const std::vector<CensusRow>& rows)
{
    json out = json::array();
    for (const auto& row : rows) {
        json counts = json::array();
        for (const auto& [d, n] : row.prefix_counts)
            counts.push_back(json{{"depth", d}, {"count", to_string(n)}});
        out.push_back(json{{"x", format_field_elem(row.x)},
                           {"parity", std::string(to_string(params.parity()))},
                           {"k", params.k()},
                           {"verdict", std::string(to_string(row.classification.verdict))},
                           {"certificate", certificate_json(row.classification)},
                           {"prefix_count_at_depth", std::move(counts)}});
    }
    return out;
}

inline std::string census_csv(const Params& params, const std::vector<CensusRow>& rows)
{
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"')
                q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "x,parity,k,verdict,certificate";
    if (!rows.empty())
        for (const auto& [d, n] : rows.front().prefix_counts)
            out << ",count_d" << d;
    out << "\n";
    for (const auto& row : rows) {
        out << quote(format_field_elem(row.x)) << ',' << to_string(params.parity()) << ',' << params.k() << ','
            << to_string(row.classification.verdict) << ',' << quote(certificate_text(row.classification));
        for (const auto& [d, n] : row.prefix_counts)
            out << ',' << n;
        out << "\n";
    }
    return out.str();
}

} // namespace gbeta

#endif // GBETA_REPORT_HPP
