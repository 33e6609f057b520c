/*
 * corpus_tools.hpp
 *
 * Deterministic collection generators (repetitive-but-dissimilar proxies)
 * and the measurement harness: run the full pipeline and the brute-force
 * reference on the same pair, cross-check them, and report the size and
 * cost statistics as CSV. The boundary-LCP sum is reported for inspection,
 * never asserted against a threshold; only degenerate constructions (eg
 * disjoint alphabets) pin its value exactly.
 */

#ifndef RLM_CORPUS_TOOLS_HPP
#define RLM_CORPUS_TOOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rlbwt_merge/ebwt_oracle.hpp"
#include "rlbwt_merge/rlbwt_combine.hpp"

namespace rlm {

enum class generator_kind {
    random_strings,
    mutated_copies,
    reverse_complement,
    concatenated_period,
};

generator_kind parse_generator_kind(std::string_view name); // config_error if unknown
std::string_view to_string(generator_kind kind);

struct generator_spec {
    generator_kind kind = generator_kind::random_strings;
    std::size_t base_length = 16;
    std::size_t copies = 4;
    double mutation_rate = 0.05;
    std::string alphabet = "ACGT"; // terminator excluded, appended by the model
    std::uint64_t seed = 0;
};

// Same spec and seed always produce the same collection.
text_collection generate(const generator_spec& spec, int set_label = 1);

// Per-string reverse complement (A<->T, C<->G); config_error for symbols
// without a complement.
text_collection reverse_complement_of(const text_collection& coll, int set_label);

// A merge problem instance. Kinds: random | mutated-copies |
// reverse-complement | concatenated-period | shared-duplicates.
struct instance_pair {
    text_collection a;
    text_collection b;
    std::string kind;
};

instance_pair make_instance_pair(std::string_view kind, const generator_spec& base);

// eBWT of the collection via the oracle, run-length compressed over the
// given alphabet (desk-scale input sizes).
rlbwt rlbwt_of_collection(const text_collection& coll, const alphabet& alpha);
rlbwt rlbwt_of_collection(const text_collection& coll);

// First symbol position at which the decompressions of two run lists
// differ; nullopt when identical.
std::optional<std::uint64_t> first_divergence(std::span<const run> a,
                                              std::span<const run> b);

inline constexpr std::string_view measurement_csv_header =
    "kind,n,sigma,r1,r2,r_out,L,blocks,chars_extracted,comparisons";

struct measurement_row {
    std::string kind;
    std::uint64_t n = 0;
    std::size_t sigma = 0;
    std::size_t r1 = 0;
    std::size_t r2 = 0;
    std::size_t r_out = 0;
    std::uint64_t lcp_sum = 0; // the L column
    std::uint64_t blocks = 0;
    std::uint64_t chars_extracted = 0;
    std::uint64_t comparisons = 0;
};

std::string to_csv(const measurement_row& row);

// Full pipeline + oracle on one pair; verify_error if they disagree.
measurement_row measure_merge(const text_collection& a, const text_collection& b,
                              std::string kind_label = "");

} // namespace rlm

#endif // RLM_CORPUS_TOOLS_HPP
