/*
 * ebwt_oracle.hpp
 *
 * Brute-force construction of the (e)BWT of one or more text collections,
 * plus block/boundary-LCP statistics over the sorted table. Quadratic and
 * proud of it: this is the ground truth the fast structures are tested
 * against, usable up to a few tens of thousands of symbols.
 *
 * Rows are all rotations of all strings, sorted by circular context with
 * ties broken by (set_label, collection, string, offset); the BWT symbol
 * of a row is the character immediately preceding its context.
 */

#ifndef RLM_EBWT_ORACLE_HPP
#define RLM_EBWT_ORACLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rlbwt_merge/text_model.hpp"

namespace rlm {

struct ebwt_row {
    symbol bwt;                       // symbol preceding the context
    int source_label = 0;             // set_label of the owning collection
    std::uint32_t collection_index = 0;
    rotation rot;
};

class ebwt_table {
  public:
    ebwt_table(std::vector<text_collection> collections, std::vector<ebwt_row> rows)
        : collections_(std::move(collections)), rows_(std::move(rows)) {}

    std::span<const ebwt_row> rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    std::span<const text_collection> collections() const { return collections_; }

    const text_collection& collection_of(const ebwt_row& r) const {
        return collections_[r.collection_index];
    }
    // length of the string underlying a row (= period of its context)
    std::size_t context_length(std::size_t row) const;
    symbol context_symbol_at(std::size_t row, std::size_t k) const;
    // the full rotation, context first; its last character is the BWT symbol
    std::string rotation_text(std::size_t row) const;

    std::vector<symbol> bwt_column() const;
    std::vector<int> label_column() const;

    context_order compare_rows(std::size_t i, std::size_t j) const;

  private:
    std::vector<text_collection> collections_;
    std::vector<ebwt_row> rows_;
};

ebwt_table build_ebwt(std::span<const text_collection> collections);
ebwt_table build_ebwt(const text_collection& a);
ebwt_table build_ebwt(const text_collection& a, const text_collection& b);

struct boundary_block {
    int label = 0;
    std::size_t first_row = 0;
    std::size_t length = 0;
};

// Maximal same-label blocks and the context LCP across each boundary
// between consecutive blocks (block_count - 1 values). lcp_sum is the
// merge-difficulty statistic the adaptive path's cost is charged to.
struct boundary_report {
    std::vector<boundary_block> blocks;
    std::vector<std::uint64_t> boundary_lcps;
    std::uint64_t lcp_sum = 0;

    std::size_t block_count() const { return blocks.size(); }
};

boundary_report report_boundaries(const ebwt_table& table);
boundary_report report_boundaries(const ebwt_table& table, std::span<const int> labels);

// Source-label column of build_ebwt(a, b): how the two collections' rows
// interleave in the combined table.
std::vector<int> interleave_oracle(const text_collection& a, const text_collection& b);

} // namespace rlm

#endif // RLM_EBWT_ORACLE_HPP
