#include "rlbwt_merge/rlbwt_combine.hpp"

#include <algorithm>

namespace rlm {

void take_block(run_cursor& cursor, std::uint64_t count, run_builder& builder) {
    if (count == 0)
        return;
    if (count > cursor.remaining())
        throw stream_error("take_block: count exceeds remaining symbols");

    std::span<const run> runs = cursor.bwt_->runs();
    while (count > 0) {
        const run& r = runs[cursor.run_index_];
        std::uint64_t available = r.length - cursor.offset_in_run_;
        std::uint64_t taken = std::min(available, count);
        builder.append(r.sym, taken);
        ++cursor.runs_touched_;
        cursor.offset_in_run_ += taken;
        cursor.consumed_ += taken;
        count -= taken;
        if (cursor.offset_in_run_ == r.length) {
            ++cursor.run_index_;
            cursor.offset_in_run_ = 0;
        }
    }
}

namespace {

struct combine_state {
    run_cursor cursor1;
    run_cursor cursor2;
    run_builder builder;

    combine_state(const rlbwt& a, const rlbwt& b) : cursor1(a), cursor2(b) {}

    void push(interleave_run r) {
        if (r.label == 1)
            take_block(cursor1, r.count, builder);
        else if (r.label == 2)
            take_block(cursor2, r.count, builder);
        else
            throw stream_error("interleave run with label outside {1,2}");
    }

    rlbwt finish(const alphabet& alpha) {
        if (!cursor1.exhausted() || !cursor2.exhausted())
            throw stream_error("interleave stream ended before sources were consumed");
        return rlbwt::from_runs(builder.take(), alpha);
    }

    std::uint64_t runs_touched() const {
        return cursor1.runs_touched() + cursor2.runs_touched();
    }
};

} // namespace

combine_outcome merge_and_combine(const rlbwt& a, const rlbwt& b) {
    combine_state state(a, b);
    combine_outcome out;
    merge_stats stats = merge_rlbwts(a, b, [&](interleave_run r) {
        state.push(r);
        out.interleave.push_back(r);
    });
    out.combined = state.finish(a.alpha());
    out.stats = stats;
    out.runs_touched = state.runs_touched();
    return out;
}

rlbwt combine(const rlbwt& a, const rlbwt& b, std::span<const interleave_run> interleave) {
    combine_state state(a, b);
    for (interleave_run r : interleave)
        state.push(r);
    return state.finish(alphabet::union_of(a.alpha(), b.alpha()));
}

} // namespace rlm
