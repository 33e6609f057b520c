/*
 * rlbwt_combine.hpp
 *
 * Builds the combined RLBWT from the two source structures and the
 * interleave-run stream, copying whole runs wherever possible: a block of
 * count symbols touches at most (runs fully inside) + 2 partial runs, so
 * the total work is proportional to R plus the number of blocks. The
 * stream is consumed as the merge produces it; it is never stored.
 */

#ifndef RLM_RLBWT_COMBINE_HPP
#define RLM_RLBWT_COMBINE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rlbwt_merge/adaptive_merge.hpp"
#include "rlbwt_merge/rlbwt.hpp"

namespace rlm {

// Reading position inside a source structure's run list.
class run_cursor {
  public:
    explicit run_cursor(const rlbwt& bwt) : bwt_(&bwt) {}

    std::uint64_t remaining() const { return bwt_->size() - consumed_; }
    bool exhausted() const { return remaining() == 0; }
    std::uint64_t runs_touched() const { return runs_touched_; }

    const rlbwt& structure() const { return *bwt_; }
    std::size_t run_index() const { return run_index_; }
    std::uint64_t offset_in_run() const { return offset_in_run_; }

  private:
    friend void take_block(run_cursor&, std::uint64_t, class run_builder&);

    const rlbwt* bwt_;
    std::size_t run_index_ = 0;
    std::uint64_t offset_in_run_ = 0;
    std::uint64_t consumed_ = 0;
    std::uint64_t runs_touched_ = 0;
};

// Accumulates output runs, keeping them maximal.
class run_builder {
  public:
    void append(symbol s, std::uint64_t count) {
        if (count == 0)
            return;
        if (!runs_.empty() && runs_.back().sym == s)
            runs_.back().length += count;
        else
            runs_.push_back(run{s, count});
        total_ += count;
    }

    std::size_t run_count() const { return runs_.size(); }
    std::uint64_t total() const { return total_; }
    std::vector<run> take() { return std::move(runs_); }

  private:
    std::vector<run> runs_;
    std::uint64_t total_ = 0;
};

// Moves exactly `count` symbols from the cursor into the builder.
// stream_error if the cursor holds fewer than `count` symbols.
void take_block(run_cursor& cursor, std::uint64_t count, run_builder& builder);

struct combine_outcome {
    rlbwt combined;
    merge_stats stats;
    std::vector<interleave_run> interleave; // O(blocks) space, kept for reporting
    std::uint64_t runs_touched = 0;
};

// Fused pipeline: merge_rlbwts streams straight into take_block, one pass.
combine_outcome merge_and_combine(const rlbwt& a, const rlbwt& b);

// Combine from an explicit interleave stream (tests, replay).
rlbwt combine(const rlbwt& a, const rlbwt& b, std::span<const interleave_run> interleave);

} // namespace rlm

#endif // RLM_RLBWT_COMBINE_HPP
