/*
 * adaptive_merge.hpp
 *
 * Adaptive merge of two sorted context sets into a run-length compressed
 * interleave stream. The loop alternates between the sets: take the
 * frontier row x of the active set, doubling-search its insertion point in
 * the other set starting from that set's frontier, emit the skipped rows
 * as one run, advance, and switch sides. A frontier row itself is emitted
 * when the other side's search passes it. Working state beyond the two
 * structures is O(1); the output is streamed to a sink.
 *
 * Comparisons extract characters lazily and pay for what they touch, so a
 * merge whose block boundaries have short context LCPs is cheap no matter
 * how large the inputs are.
 *
 * Ties (equal contexts across the sets) place set-1 rows first: searches
 * into set 2 use the lower insertion point, searches into set 1 the upper.
 */

#ifndef RLM_ADAPTIVE_MERGE_HPP
#define RLM_ADAPTIVE_MERGE_HPP

#include <compare>
#include <cstdint>
#include <utility>

#include "rlbwt_merge/context_extract.hpp"
#include "rlbwt_merge/errors.hpp"

namespace rlm {

// (source label, row count) unit of the streamed merge output
struct interleave_run {
    int label = 0;
    std::uint64_t count = 0;

    bool operator==(const interleave_run&) const = default;
};

struct merge_stats {
    std::uint64_t total_rows = 0;      // n1 + n2
    std::size_t sigma = 0;             // union alphabet size
    std::uint64_t chars_extracted = 0; // next() pulls, both sides
    std::uint64_t comparisons = 0;     // context comparisons performed
    std::uint64_t blocks_emitted = 0;  // interleave runs emitted
};

enum class search_mode {
    lower, // first row >= x
    upper  // first row > x
};

// Order of row i of a vs row j of b, pulling symbols in lockstep until the
// first mismatch. On tied rows the loop stops as soon as both cursors know
// their period and lcp >= period_a + period_b (provably equal); the hard
// cap of total_symbols(a) + total_symbols(b) pulls per side guarantees
// termination regardless.
template <class SourceA, class SourceB>
std::weak_ordering compare_rows(const SourceA& a, std::size_t i,
                                const SourceB& b, std::size_t j,
                                merge_stats& stats) {
    auto ca = a.open(i);
    auto cb = b.open(j);
    const std::uint64_t cap = a.total_symbols() + b.total_symbols();
    std::weak_ordering result = std::weak_ordering::equivalent;
    for (std::uint64_t pulls = 0; pulls < cap;) {
        symbol x = ca.next();
        symbol y = cb.next();
        ++pulls;
        stats.chars_extracted += 2;
        if (x != y) {
            result = x <=> y;
            break;
        }
        auto pa = ca.period();
        auto pb = cb.period();
        if (pa && pb && pulls >= *pa + *pb)
            break;
    }
    ++stats.comparisons;
    return result;
}

// Smallest row r in [start, target.rows()] such that target[r] >= x
// (lower) or target[r] > x (upper); target.rows() if none. Gallops at
// offsets 2^k - 1 from start, then binary-searches the final bracket;
// O(log n) comparisons.
template <class Target, class Probe>
std::size_t doubling_search(const Target& target, std::size_t start,
                            const Probe& probe, std::size_t probe_row,
                            search_mode mode, merge_stats& stats) {
    const std::size_t n = target.rows();
    if (start >= n)
        return n;

    auto at_or_after = [&](std::size_t pos) {
        std::weak_ordering ord = compare_rows(target, pos, probe, probe_row, stats);
        return mode == search_mode::lower ? ord != std::weak_ordering::less
                                          : ord == std::weak_ordering::greater;
    };

    if (at_or_after(start))
        return start;

    std::size_t lo = start; // predicate known false
    std::size_t hi = n;     // predicate true or one past the end
    for (unsigned k = 1; k < 64; ++k) {
        std::size_t pos = start + ((std::size_t{1} << k) - 1);
        if (pos >= n || pos < start)
            break;
        if (at_or_after(pos)) {
            hi = pos;
            break;
        }
        lo = pos;
    }
    while (lo + 1 < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (at_or_after(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Streams the run-length compressed interleave of the two sorted context
// sets to the sink. Returns stats with sigma left to the caller.
template <class Source1, class Source2, class Sink>
merge_stats merge_interleave(const Source1& a, const Source2& b, Sink&& sink) {
    const std::size_t n1 = a.rows(), n2 = b.rows();
    if (n1 == 0 || n2 == 0)
        throw std::invalid_argument("merge_interleave: empty input");

    merge_stats stats;
    stats.total_rows = n1 + n2;

    interleave_run pending{0, 0};
    auto emit = [&](int label, std::uint64_t count) {
        if (count == 0)
            return;
        if (pending.label == label) {
            pending.count += count;
            return;
        }
        if (pending.count > 0) {
            sink(pending);
            ++stats.blocks_emitted;
        }
        pending = interleave_run{label, count};
    };

    std::size_t p1 = 0, p2 = 0;
    int s = 1;
    for (;;) {
        if (s == 1) {
            if (p1 == n1) {
                emit(2, n2 - p2);
                break;
            }
            std::size_t j = doubling_search(b, p2, a, p1, search_mode::lower, stats);
            emit(2, j - p2);
            p2 = j;
            s = 2;
        } else {
            if (p2 == n2) {
                emit(1, n1 - p1);
                break;
            }
            std::size_t j = doubling_search(a, p1, b, p2, search_mode::upper, stats);
            emit(1, j - p1);
            p1 = j;
            s = 1;
        }
    }
    if (pending.count > 0) {
        sink(pending);
        ++stats.blocks_emitted;
    }
    return stats;
}

// RLBWT front end: checks that both structures share one alphabet (rebase
// onto the union first) and fills sigma.
template <class Sink>
merge_stats merge_rlbwts(const rlbwt& a, const rlbwt& b, Sink&& sink) {
    if (!(a.alpha() == b.alpha()))
        throw config_error("merge: inputs must share the union alphabet");
    merge_stats stats = merge_interleave(rlbwt_context_source(a),
                                         rlbwt_context_source(b),
                                         std::forward<Sink>(sink));
    stats.sigma = a.sigma();
    return stats;
}

} // namespace rlm

#endif // RLM_ADAPTIVE_MERGE_HPP
