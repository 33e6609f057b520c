/*
 * rlbwt.hpp
 *
 * A run-length compressed (e)BWT with O(R)-entry directories:
 *
 *   access(i)    symbol at position i              O(log R)
 *   select(c,k)  position of the k-th c (1-based)  O(log R)
 *   f_symbol(i)  F-column symbol at position i     O(log sigma)
 *   psi(i)       row whose context is row i's context advanced one symbol
 *
 * Directories: cumulative run start positions, per-symbol run lists with
 * cumulative symbol counts, and the C-array over a dense code alphabet.
 * Total stored entries are 3R + sigma + 2, countable via
 * directory_entries(). The alphabet may be wider than the symbols present
 * (zero-width C-intervals), so two merge inputs rebased onto their union
 * alphabet agree on f_symbol/psi.
 */

#ifndef RLM_RLBWT_HPP
#define RLM_RLBWT_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rlbwt_merge/text_model.hpp"

namespace rlm {

struct run {
    symbol sym;
    std::uint64_t length = 0;

    bool operator==(const run&) const = default;
};

std::vector<run> run_length_encode(std::span<const symbol> symbols);

class rlbwt {
  public:
    rlbwt() = default;

    // Coalesces adjacent equal-symbol runs; rejects empty input and
    // zero-length runs. The one-argument form infers the alphabet from the
    // symbols present.
    static rlbwt from_runs(std::vector<run> runs);
    static rlbwt from_runs(std::vector<run> runs, alphabet alpha);

    // Same content, directories rebuilt over a (wider) alphabet.
    rlbwt rebased(const alphabet& alpha) const;

    std::size_t size() const { return n_; }
    std::size_t run_count() const { return runs_.size(); }
    std::size_t sigma() const { return alpha_.size(); }
    const alphabet& alpha() const { return alpha_; }
    std::span<const run> runs() const { return runs_; }

    symbol access(std::size_t i) const;
    std::size_t select(symbol c, std::uint64_t k) const; // k is 1-based
    symbol f_symbol(std::size_t i) const;
    std::size_t psi(std::size_t i) const;

    // code-level variants used on hot paths
    unsigned f_code(std::size_t i) const;
    std::size_t select_code(unsigned code, std::uint64_t k) const;
    std::uint64_t c_array(unsigned code) const { return c_.at(code); }
    std::uint64_t occurrences(symbol c) const;

    // structural space counter: runs + run starts + per-symbol entries +
    // C-array = 3R + sigma + 2
    std::uint64_t directory_entries() const;

    std::vector<symbol> decompress() const;

    bool operator==(const rlbwt& o) const {
        return runs_ == o.runs_ && alpha_ == o.alpha_;
    }

    // Text serialization:
    //   RLBWT 1
    //   runs <R> length <n>
    //   <symbol> <length>          (R lines; byte printable or \xHH)
    void write(std::ostream& out) const;
    static rlbwt read(std::istream& in);
    void write_file(const std::string& path) const;
    static rlbwt read_file(const std::string& path);

  private:
    struct sym_run {
        std::uint32_t run_index = 0;
        std::uint64_t count_before = 0; // occurrences of the symbol in earlier runs
    };

    std::vector<run> runs_;
    std::vector<std::uint64_t> run_start_;   // R+1 cumulative positions
    std::vector<std::vector<sym_run>> dir_;  // per code, ordered by run index
    std::vector<std::uint64_t> c_;           // sigma+1 cumulative counts
    alphabet alpha_;
    std::size_t n_ = 0;
};

} // namespace rlm

#endif // RLM_RLBWT_HPP
