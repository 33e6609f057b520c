/*
 * context_extract.hpp
 *
 * Lazy extraction of the context of a row, one symbol per pull. A cursor
 * never exhausts (contexts are circular); the caller decides when to stop.
 *
 * Cursors report their context's period once it becomes known: the string
 * source knows it upfront, the RLBWT cursor learns it when its psi walk
 * first returns to the starting row. Two contexts that agree for
 * period_a + period_b pulls are equal (Fine and Wilf), which lets the
 * comparison loop stop long before the worst-case cap on tied rows.
 */

#ifndef RLM_CONTEXT_EXTRACT_HPP
#define RLM_CONTEXT_EXTRACT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlbwt_merge/rlbwt.hpp"
#include "rlbwt_merge/text_model.hpp"

namespace rlm {

class context_cursor {
  public:
    context_cursor(const rlbwt& bwt, std::size_t row)
        : bwt_(&bwt), start_row_(row), row_(row) {
        if (row >= bwt.size())
            throw std::out_of_range("open_context: row out of range");
    }

    // Yields f_symbol(current row), then advances the row by psi.
    symbol next() {
        unsigned code = bwt_->f_code(row_);
        symbol s = bwt_->alpha().at(code);
        row_ = bwt_->select_code(code, row_ - bwt_->c_array(code) + 1);
        ++emitted_;
        if (period_ == 0 && row_ == start_row_)
            period_ = emitted_;
        return s;
    }

    std::uint64_t extraction_count() const { return emitted_; }
    std::size_t current_row() const { return row_; }

    std::optional<std::uint64_t> period() const {
        if (period_ == 0)
            return std::nullopt;
        return period_;
    }

  private:
    const rlbwt* bwt_;
    std::size_t start_row_;
    std::size_t row_;
    std::uint64_t emitted_ = 0;
    std::uint64_t period_ = 0; // 0 while unknown
};

inline context_cursor open_context(const rlbwt& bwt, std::size_t row) {
    return context_cursor(bwt, row);
}

// The RLBWT as a sorted set of contexts, one per row.
class rlbwt_context_source {
  public:
    explicit rlbwt_context_source(const rlbwt& bwt) : bwt_(&bwt) {}

    std::size_t rows() const { return bwt_->size(); }
    std::uint64_t total_symbols() const { return bwt_->size(); }
    context_cursor open(std::size_t row) const { return context_cursor(*bwt_, row); }
    const rlbwt& structure() const { return *bwt_; }

  private:
    const rlbwt* bwt_;
};

// A plain sorted set of strings read circularly, one context per string.
// Same surface as rlbwt_context_source, for merging sorted string sets
// directly and for mirroring worked examples in tests.
class string_context_source {
  public:
    class cursor {
      public:
        cursor(const std::vector<symbol>& s) : str_(&s) {}

        symbol next() {
            symbol c = (*str_)[pos_];
            pos_ = (pos_ + 1) % str_->size();
            ++emitted_;
            return c;
        }
        std::uint64_t extraction_count() const { return emitted_; }
        std::optional<std::uint64_t> period() const { return str_->size(); }

      private:
        const std::vector<symbol>* str_;
        std::size_t pos_ = 0;
        std::uint64_t emitted_ = 0;
    };

    // Sorts the strings by circular comparison (stable on ties).
    static string_context_source from_strings(const std::vector<std::string>& texts);

    std::size_t rows() const { return strings_.size(); }
    std::uint64_t total_symbols() const { return total_; }
    cursor open(std::size_t row) const { return cursor(strings_.at(row)); }
    const std::vector<symbol>& row_symbols(std::size_t row) const {
        return strings_.at(row);
    }

  private:
    std::vector<std::vector<symbol>> strings_;
    std::uint64_t total_ = 0;
};

} // namespace rlm

#endif // RLM_CONTEXT_EXTRACT_HPP
