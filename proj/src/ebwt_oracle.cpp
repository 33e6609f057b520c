#include "rlbwt_merge/ebwt_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace rlm {

std::size_t ebwt_table::context_length(std::size_t row) const {
    const ebwt_row& r = rows_.at(row);
    return collection_of(r).strings[r.rot.string_index].size();
}

symbol ebwt_table::context_symbol_at(std::size_t row, std::size_t k) const {
    const ebwt_row& r = rows_.at(row);
    return context_symbol(collection_of(r), r.rot, k);
}

std::string ebwt_table::rotation_text(std::size_t row) const {
    std::size_t len = context_length(row);
    std::string out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
        out.push_back(static_cast<char>(context_symbol_at(row, k).byte()));
    return out;
}

std::vector<symbol> ebwt_table::bwt_column() const {
    std::vector<symbol> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_)
        col.push_back(r.bwt);
    return col;
}

std::vector<int> ebwt_table::label_column() const {
    std::vector<int> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_)
        col.push_back(r.source_label);
    return col;
}

context_order ebwt_table::compare_rows(std::size_t i, std::size_t j) const {
    const ebwt_row& a = rows_.at(i);
    const ebwt_row& b = rows_.at(j);
    return compare_contexts(collection_of(a), a.rot, collection_of(b), b.rot);
}

ebwt_table build_ebwt(std::span<const text_collection> collections) {
    if (collections.empty())
        throw std::invalid_argument("build_ebwt: no collections");

    std::vector<text_collection> owned(collections.begin(), collections.end());
    std::vector<ebwt_row> rows;
    for (std::uint32_t ci = 0; ci < owned.size(); ++ci) {
        const text_collection& coll = owned[ci];
        if (coll.strings.empty())
            throw std::invalid_argument("build_ebwt: empty collection");
        for (std::uint32_t si = 0; si < coll.strings.size(); ++si) {
            const std::size_t len = coll.strings[si].size();
            for (std::uint32_t off = 0; off < len; ++off) {
                rotation rot{si, off};
                rows.push_back(ebwt_row{context_symbol(coll, rot, len - 1),
                                        coll.set_label, ci, rot});
            }
        }
    }

    auto tie_key = [](const ebwt_row& r) {
        return std::make_tuple(r.source_label, r.collection_index,
                               r.rot.string_index, r.rot.offset);
    };
    std::sort(rows.begin(), rows.end(), [&](const ebwt_row& a, const ebwt_row& b) {
        context_order c = compare_contexts(owned[a.collection_index], a.rot,
                                           owned[b.collection_index], b.rot);
        if (c.order != std::weak_ordering::equivalent)
            return c.order == std::weak_ordering::less;
        return tie_key(a) < tie_key(b);
    });

    return ebwt_table(std::move(owned), std::move(rows));
}

ebwt_table build_ebwt(const text_collection& a) {
    return build_ebwt(std::span<const text_collection>(&a, 1));
}

ebwt_table build_ebwt(const text_collection& a, const text_collection& b) {
    std::vector<text_collection> cs{a, b};
    return build_ebwt(cs);
}

boundary_report report_boundaries(const ebwt_table& table) {
    std::vector<int> labels = table.label_column();
    return report_boundaries(table, labels);
}

boundary_report report_boundaries(const ebwt_table& table, std::span<const int> labels) {
    if (table.row_count() == 0)
        throw std::invalid_argument("report_boundaries: empty table");
    if (labels.size() != table.row_count())
        throw std::invalid_argument("report_boundaries: label count mismatch");

    boundary_report rep;
    std::size_t block_start = 0;
    for (std::size_t i = 1; i <= labels.size(); ++i) {
        if (i == labels.size() || labels[i] != labels[block_start]) {
            rep.blocks.push_back(
                boundary_block{labels[block_start], block_start, i - block_start});
            block_start = i;
        }
    }
    for (std::size_t b = 0; b + 1 < rep.blocks.size(); ++b) {
        std::size_t last_of_block = rep.blocks[b].first_row + rep.blocks[b].length - 1;
        std::size_t first_of_next = rep.blocks[b + 1].first_row;
        context_order c = table.compare_rows(last_of_block, first_of_next);
        rep.boundary_lcps.push_back(c.lcp);
        rep.lcp_sum += c.lcp;
    }
    return rep;
}

std::vector<int> interleave_oracle(const text_collection& a, const text_collection& b) {
    return build_ebwt(a, b).label_column();
}

} // namespace rlm
