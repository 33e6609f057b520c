/*
 * rlbwt-merge: build, merge, verify and measure run-length compressed
 * (e)BWTs of string collections.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or format error.
 */

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlbwt_merge/corpus_tools.hpp"

namespace {

using namespace rlm;

constexpr std::uint64_t default_limit = 100000;

void check_limit(std::uint64_t total, std::uint64_t limit) {
    if (total > limit) {
        std::ostringstream msg;
        msg << "input of " << total << " symbols exceeds limit " << limit
            << " (raise with --limit)";
        throw config_error(msg.str());
    }
}

int run_build(const std::string& in_path, const std::string& out_path,
              std::uint64_t limit) {
    text_collection coll = parse_collection_file(in_path, 1);
    check_limit(coll.total_length(), limit);
    rlbwt bwt = rlbwt_of_collection(coll);
    bwt.write_file(out_path);
    return 0;
}

int run_merge(const std::vector<std::string>& inputs, const std::string& out_path,
              bool print_stats) {
    std::vector<rlbwt> structures;
    structures.reserve(inputs.size());
    for (const std::string& path : inputs)
        structures.push_back(rlbwt::read_file(path));

    if (print_stats)
        std::cerr << "n,sigma,r1,r2,r_out,blocks,chars_extracted,comparisons\n";

    rlbwt combined = std::move(structures.front());
    for (std::size_t i = 1; i < structures.size(); ++i) {
        alphabet alpha = alphabet::union_of(combined.alpha(), structures[i].alpha());
        rlbwt left = combined.rebased(alpha);
        rlbwt right = structures[i].rebased(alpha);
        combine_outcome out = merge_and_combine(left, right);
        if (print_stats) {
            std::cerr << out.stats.total_rows << ',' << out.stats.sigma << ','
                      << left.run_count() << ',' << right.run_count() << ','
                      << out.combined.run_count() << ',' << out.stats.blocks_emitted
                      << ',' << out.stats.chars_extracted << ','
                      << out.stats.comparisons << "\n";
        }
        combined = std::move(out.combined);
    }
    combined.write_file(out_path);
    return 0;
}

int run_verify(const std::string& path_a, const std::string& path_b,
               std::uint64_t limit, bool debug_corrupt) {
    text_collection a = parse_collection_file(path_a, 1);
    text_collection b = parse_collection_file(path_b, 2);
    check_limit(a.total_length() + b.total_length(), limit);

    alphabet alpha = union_alphabet(a, b);
    rlbwt bwt1 = rlbwt_of_collection(a, alpha);
    rlbwt bwt2 = rlbwt_of_collection(b, alpha);
    combine_outcome fast = merge_and_combine(bwt1, bwt2);

    std::vector<run> fast_runs(fast.combined.runs().begin(), fast.combined.runs().end());
    if (debug_corrupt && !fast_runs.empty())
        ++fast_runs.front().length;

    ebwt_table combined = build_ebwt(a, b);
    std::vector<symbol> column = combined.bwt_column();
    std::vector<run> oracle_runs = run_length_encode(column);

    if (auto pos = first_divergence(fast_runs, oracle_runs)) {
        std::cout << "divergence at position " << *pos << "\n";
        return 1;
    }
    std::cout << "identical (" << combined.row_count() << " rows, "
              << oracle_runs.size() << " runs)\n";
    return 0;
}

int run_stats(const std::vector<std::string>& inputs) {
    std::vector<text_collection> collections;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        collections.push_back(parse_collection_file(inputs[i], static_cast<int>(i + 1)));

    ebwt_table table = build_ebwt(collections);
    boundary_report report = report_boundaries(table);

    alphabet alpha = collections.front().symbols();
    for (std::size_t i = 1; i < collections.size(); ++i)
        alpha = alphabet::union_of(alpha, collections[i].symbols());

    std::cout << "n,sigma,blocks,L,boundary_lcps\n";
    std::cout << table.row_count() << ',' << alpha.size() << ','
              << report.block_count() << ',' << report.lcp_sum << ',';
    for (std::size_t i = 0; i < report.boundary_lcps.size(); ++i) {
        if (i > 0)
            std::cout << ';';
        std::cout << report.boundary_lcps[i];
    }
    std::cout << "\n";
    return 0;
}

int run_measure(const std::string& kind, const generator_spec& base,
                std::uint64_t count) {
    if (kind != "shared-duplicates" && kind != "reverse-complement")
        parse_generator_kind(kind); // reject unknown kinds before any output

    std::cout << measurement_csv_header << "\n";
    for (std::uint64_t i = 0; i < count; ++i) {
        generator_spec spec = base;
        spec.seed = base.seed + i;
        instance_pair pair = make_instance_pair(kind, spec);
        measurement_row row = measure_merge(pair.a, pair.b, pair.kind);
        std::cout << to_csv(row) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Merge run-length compressed (e)BWTs adaptively"};
    app.require_subcommand(1);

    std::string in_path, out_path, path_a, path_b;
    std::vector<std::string> inputs;
    std::uint64_t limit = default_limit;
    bool print_stats = false;
    bool debug_corrupt = false;

    auto* build = app.add_subcommand(
        "build", "Build the RLBWT of a text collection (one string per line)");
    build->add_option("input", in_path, "input text file")->required();
    build->add_option("output", out_path, "output RLBWT file")->required();
    build->add_option("--limit", limit,
                      "maximum input symbols (default 100000)");

    auto* merge = app.add_subcommand(
        "merge", "Merge two or more RLBWT files into their combined RLBWT");
    merge->add_option("inputs", inputs, "RLBWT files, folded left to right")
        ->required()
        ->expected(2, -1);
    merge->add_option("-o,--output", out_path, "output RLBWT file")->required();
    merge->add_flag("--stats", print_stats, "print merge statistics CSV to stderr");

    auto* verify = app.add_subcommand(
        "verify", "Check the fast merge of two text files against brute force");
    verify->add_option("text1", path_a, "first text file")->required();
    verify->add_option("text2", path_b, "second text file")->required();
    verify->add_option("--limit", limit,
                       "maximum total symbols (default 100000)");
    verify->add_flag("--debug-corrupt", debug_corrupt,
                     "corrupt the fast result first (negative control)");

    auto* stats = app.add_subcommand(
        "stats", "Block and boundary-LCP report for text collections");
    stats->add_option("inputs", inputs, "text files, one collection each")
        ->required()
        ->expected(1, -1);

    generator_spec spec;
    std::string kind = "random";
    std::uint64_t count = 1;
    auto* measure = app.add_subcommand(
        "measure", "Generate instance pairs, merge them, and emit CSV measurements");
    measure->add_option("--kind", kind,
                        "random | mutated-copies | reverse-complement | "
                        "concatenated-period | shared-duplicates");
    measure->add_option("--seed", spec.seed, "random seed (default 0)");
    measure->add_option("--copies", spec.copies, "strings per collection (default 4)");
    measure->add_option("--mutation-rate", spec.mutation_rate,
                        "per-position substitution rate (default 0.05)");
    measure->add_option("--base-length", spec.base_length,
                        "base string length (default 16)");
    measure->add_option("--alphabet", spec.alphabet,
                        "generator alphabet (default ACGT)");
    measure->add_option("--count", count, "number of instances (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return run_build(in_path, out_path, limit);
        if (merge->parsed())
            return run_merge(inputs, out_path, print_stats);
        if (verify->parsed())
            return run_verify(path_a, path_b, limit, debug_corrupt);
        if (stats->parsed())
            return run_stats(inputs);
        if (measure->parsed())
            return run_measure(kind, spec, count);
    } catch (const verify_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
