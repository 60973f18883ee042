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

// gbeta: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error.

#include "gbeta/gbeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace gbeta;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Options {
    int k = 1;
    std::string parity = "odd";
    std::string format = "json";
    std::string out;
    std::size_t depth = 0;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    std::string x;
    std::string rule;
    std::vector<std::string> words;
    std::string route = "search";
    std::string level = "fast";
    int den_bound = 4;
    int num_bound = 4;
    std::vector<std::size_t> depths;
};

DigitWord parse_finite(const Params& params, const std::string& text)
{
    const Word w = parse_word(params, text);
    if (const auto* d = std::get_if<DigitWord>(&w))
        return *d;
    const auto& e = std::get<EvPeriodicWord>(w);
    if (e.is_finite())
        return DigitWord{e.int_part(), e.preperiod()};
    throw parse_error("rule needs a finite word, got '" + text + "'");
}

json run_classify(const Params& params, const Options& o)
{
    const FieldElem x = parse_field_elem(o.x);
    const Classification c = classify(params, x);
    json cert = certificate_json(c);
    if (c.verdict == Verdict::continuum && o.budget > 0) {
        const BranchWitness bw = branch_witness(params, x, o.depth == 0 ? 24 : o.depth, o.budget);
        json prefixes = json::array();
        for (const auto& p : bw.prefixes)
            prefixes.push_back(to_string(DigitWord{0, p}));
        cert["witness"] = json{{"depth", bw.depth}, {"count", bw.prefixes.size()}, {"prefixes", std::move(prefixes)}};
    }
    return envelope(params, format_field_elem(params.canonical(x)), std::string(to_string(c.verdict)), std::move(cert));
}

json run_enumerate(const Params& params, const Options& o)
{
    const FieldElem x = parse_field_elem(o.x);
    const std::size_t depth = o.depth == 0 ? 6 : o.depth;
    const PrefixTree tree = enumerate_prefixes(params, x, depth);
    json leaves = json::array();
    for (const auto& leaf : tree.leaves)
        leaves.push_back(json{{"prefix", to_string(DigitWord{0, leaf.digits})},
                              {"remainder", format_field_elem(leaf.remainder)}});
    json counts = json::array();
    for (const auto& n : prefix_counts(params, x, depth))
        counts.push_back(to_string(n));
    return envelope(params, json{{"x", format_field_elem(tree.root)}, {"depth", depth}},
                    json{{"count", tree.leaves.size()}, {"prefixes", std::move(leaves)}},
                    json{{"counts_by_depth", std::move(counts)}});
}

json run_ones(const Params& params, const Options& o)
{
    const std::size_t depth = o.depth == 0 ? 6 : o.depth;
    json words = json::array();
    for (const auto& w : expansions_of_one(params, depth)) {
        if (!(word_value(params, w) == params.one()))
            throw error("internal: " + to_string(w) + " does not evaluate to 1");
        words.push_back(display_word(w));
    }
    return envelope(params, json{{"depth", depth}}, std::move(words), json{{"all_evaluate_to", "1"}});
}

json run_synth(const Params& params, const Options& o)
{
    const FieldElem x = parse_field_elem(o.x);
    json cert{{"route", o.route}};
    DigitWord w;
    if (o.route == "search") {
        w = synth_finite(params, x);
    } else if (o.route == "constructive") {
        ConstructiveResult r = synth_finite_constructive(params, x);
        w = r.word;
        cert["used_constructive_route"] = r.used_constructive_route;
        cert["diagnostic"] = r.diagnostic;
    } else {
        throw invalid_parameter("--route must be 'search' or 'constructive'");
    }
    cert["value"] = format_field_elem(word_value(params, w));
    return envelope(params, format_field_elem(params.canonical(x)), to_string(w), std::move(cert));
}

json run_rewrite(const Params& params, const Options& o)
{
    const std::size_t want = o.rule == "add" ? 2 : 1;
    if (o.words.size() != want)
        throw invalid_parameter("rule '" + o.rule + "' takes " + std::to_string(want) + " word(s)");

    RewriteLog steps;
    json input = o.words.size() == 1 ? json(o.words[0]) : json(o.words);
    std::string output;
    FieldElem value;

    const Word in = parse_word(params, o.words[0]);
    const bool periodic = std::holds_alternative<EvPeriodicWord>(in);
    if (periodic && (o.rule == "carry" || o.rule == "borrow")) {
        const auto& w = std::get<EvPeriodicWord>(in);
        const EvPeriodicWord r = o.rule == "carry" ? carry_t_plus(params, w, &steps) : borrow_t_minus(params, w, &steps);
        output = to_string(r);
        value = word_value(params, r);
    } else {
        const DigitWord w = parse_finite(params, o.words[0]);
        DigitWord r;
        if (o.rule == "cr")
            r = cr_step(params, w, &steps);
        else if (o.rule == "bsep")
            r = b_separate(params, w, &steps);
        else if (o.rule == "carry")
            r = carry_t_plus(params, w, &steps);
        else if (o.rule == "borrow")
            r = borrow_t_minus(params, w, &steps);
        else if (o.rule == "reduce")
            r = reduce_digits(params, w, &steps);
        else if (o.rule == "mulbeta")
            r = mul_beta_word(params, w, &steps);
        else if (o.rule == "add")
            r = add_words(params, w, parse_finite(params, o.words[1]), &steps);
        else if (o.rule == "div")
            r = div_word_by_k1(params, w, &steps);
        else
            throw invalid_parameter("unknown rule '" + o.rule + "'");
        output = to_string(r);
        value = word_value(params, r);
    }
    return envelope(params, std::move(input), output,
                    json{{"value", format_field_elem(value)}, {"steps", steps_json(steps)}});
}

std::string run_census(const Params& params, const Options& o)
{
    std::vector<std::size_t> depths = o.depths;
    if (depths.empty())
        depths.push_back(o.depth == 0 ? 6 : o.depth);
    const std::vector<CensusRow> rows = census_sweep(params, o.den_bound, o.num_bound, depths, o.threads);
    if (o.format == "csv")
        return census_csv(params, rows);
    return envelope(params,
                    json{{"denominator_bound", o.den_bound}, {"numerator_bound", o.num_bound}, {"depths", depths}},
                    census_json(params, rows))
               .dump(2) +
           "\n";
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw invalid_parameter("cannot open '" + o.out + "' for writing");
    file << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Expansions in generalized golden ratio bases"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--k", o.k, "k >= 1; m = 2k+1 (odd) or 2k (even)")->check(CLI::PositiveNumber);
    app.add_option("--parity", o.parity, "digit-set parity")->check(CLI::IsMember({"odd", "even"}));
    app.add_option("--format", o.format, "output format (csv: census only)")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", o.out, "write output to PATH instead of stdout");
    app.add_option("--depth", o.depth, "prefix depth");
    app.add_option("--budget", o.budget, "branch witness size (classify)");
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "countable or continuum, with a certificate");
    classify_cmd->add_option("x", o.x, "field element, e.g. (1+1*b)/6")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all expansion prefixes of x to --depth");
    enumerate_cmd->add_option("x", o.x, "field element")->required();

    auto* ones_cmd = app.add_subcommand("ones", "the expansions of 1 (odd parity)");

    auto* synth_cmd = app.add_subcommand("synth", "a finite expansion of x");
    synth_cmd->add_option("x", o.x, "field element")->required();
    synth_cmd->add_option("--route", o.route, "search or constructive")->check(CLI::IsMember({"search", "constructive"}));

    auto* rewrite_cmd = app.add_subcommand("rewrite", "apply one word operation");
    rewrite_cmd->add_option("rule", o.rule, "cr, bsep, carry, borrow, reduce, mulbeta, add, div")
        ->required()
        ->check(CLI::IsMember({"cr", "bsep", "carry", "borrow", "reduce", "mulbeta", "add", "div"}));
    rewrite_cmd->add_option("words", o.words, "word literal(s), e.g. 0.2,3 or 0.1,(3)*")->required();

    auto* census_cmd = app.add_subcommand("census", "classify every point of a bounded grid");
    census_cmd->add_option("--den-bound", o.den_bound, "largest denominator r")->check(CLI::PositiveNumber);
    census_cmd->add_option("--num-bound", o.num_bound, "largest |p|, |q|")->check(CLI::NonNegativeNumber);
    census_cmd->add_option("--depths", o.depths, "depths at which to count prefixes");

    auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suite");
    verify_cmd->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Params params = make_params(o.k, parse_parity(o.parity));
        if (o.format == "csv" && !census_cmd->parsed())
            throw invalid_parameter("--format csv is only available for census");

        if (census_cmd->parsed()) {
            emit(o, run_census(params, o));
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const VerifyReport report = verify_suite(parse_verify_level(o.level), o.seed, o.threads);
            emit(o, envelope(params, json{{"level", o.level}, {"seed", o.seed}}, to_json(report)).dump(2) + "\n");
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }

        json out;
        if (classify_cmd->parsed())
            out = run_classify(params, o);
        else if (enumerate_cmd->parsed())
            out = run_enumerate(params, o);
        else if (ones_cmd->parsed())
            out = run_ones(params, o);
        else if (synth_cmd->parsed())
            out = run_synth(params, o);
        else if (rewrite_cmd->parsed())
            out = run_rewrite(params, o);
        emit(o, out.dump(2) + "\n");
        return kExitOk;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
