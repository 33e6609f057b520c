/*
 * text_model.hpp
 *
 * Symbols, terminated strings, text collections, and the circular-context
 * comparison order that the oracle and the fast merge path both agree on.
 *
 * Every string carries exactly one terminator ('$' externally) in its last
 * position, and the terminator sorts strictly below every other byte. The
 * context of a character is the circular suffix starting right after it;
 * contexts are compared symbol-by-symbol with wraparound, capped at
 * len(a)+len(b) positions (two circular strings agreeing that long are
 * rotation-equivalent, so reporting equality is sound).
 */

#ifndef RLM_TEXT_MODEL_HPP
#define RLM_TEXT_MODEL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlbwt_merge/errors.hpp"

namespace rlm {

// One byte of text. The terminator compares below every other byte.
class symbol {
  public:
    static constexpr unsigned char terminator_byte = '$';

    constexpr symbol() = default;
    constexpr explicit symbol(unsigned char b) : b_(b) {}
    constexpr explicit symbol(char b) : b_(static_cast<unsigned char>(b)) {}

    static constexpr symbol terminator() { return symbol(terminator_byte); }

    constexpr unsigned char byte() const { return b_; }
    constexpr bool is_terminator() const { return b_ == terminator_byte; }

    constexpr std::strong_ordering operator<=>(const symbol& o) const {
        return sort_key() <=> o.sort_key();
    }
    constexpr bool operator==(const symbol& o) const { return b_ == o.b_; }

  private:
    // terminator -> 0, any other byte b -> 1+b; injective and monotone
    constexpr unsigned sort_key() const { return is_terminator() ? 0u : 1u + b_; }

    unsigned char b_ = terminator_byte;
};

std::ostream& operator<<(std::ostream& os, symbol s);

// Dense 0..sigma-1 code assignment over a symbol set, in symbol order.
// Merge inputs are rebased onto the union alphabet so both sides agree on
// codes and C-array layout.
class alphabet {
  public:
    alphabet() { code_of_.fill(-1); }

    static alphabet from_symbols(std::span<const symbol> syms);
    static alphabet union_of(const alphabet& a, const alphabet& b);

    std::size_t size() const { return symbols_.size(); }
    bool contains(symbol s) const { return code_of_[s.byte()] >= 0; }

    // dense code of s; config_error if absent
    unsigned code(symbol s) const;
    symbol at(unsigned code) const;

    std::span<const symbol> symbols() const { return symbols_; }

    bool operator==(const alphabet& o) const { return symbols_ == o.symbols_; }

  private:
    std::vector<symbol> symbols_;           // sorted ascending
    std::array<std::int16_t, 256> code_of_; // -1 where absent
};

// A string with its terminator in the last (and only the last) position.
// The minimum legal string is the bare terminator.
class terminated_string {
  public:
    explicit terminated_string(std::vector<symbol> syms);

    // Appends the terminator; rejects '$' and non-ASCII bytes in `text`.
    static terminated_string from_text(std::string_view text);

    std::size_t size() const { return syms_.size(); }
    symbol at(std::size_t i) const { return syms_.at(i); }
    std::span<const symbol> symbols() const { return syms_; }

    bool operator==(const terminated_string&) const = default;

  private:
    std::vector<symbol> syms_;
};

std::string to_text(const terminated_string& s); // includes the '$'

struct text_collection {
    std::vector<terminated_string> strings;
    int set_label = 1;

    std::size_t total_length() const;
    // distinct symbols present (terminator included), as an alphabet
    alphabet symbols() const;
};

alphabet union_alphabet(const text_collection& a, const text_collection& b);

// A context: the circular suffix of a string starting at `offset`.
struct rotation {
    std::uint32_t string_index = 0;
    std::uint32_t offset = 0;

    bool operator==(const rotation&) const = default;
};

// Symbol at position (offset+k) mod len of the rotation's string.
// Invalid rotations raise std::out_of_range.
symbol context_symbol(const text_collection& coll, rotation rot, std::size_t k);

struct context_order {
    std::weak_ordering order = std::weak_ordering::equivalent;
    std::uint64_t lcp = 0; // equal leading symbols consumed, capped
};

// Lexicographic order of two circular contexts, capped at len(a)+len(b)
// compared positions; reaching the cap with no mismatch reports equality.
context_order compare_contexts(const text_collection& ca, rotation a,
                               const text_collection& cb, rotation b);

// Text input format: one string per line, single-byte symbols only, '$'
// forbidden (appended automatically); lines starting '>' are ignored.
text_collection parse_collection(std::istream& in, int set_label = 1);
text_collection parse_collection_file(const std::string& path, int set_label = 1);

// Convenience for tests and generators: builds a collection from raw
// strings without terminators.
text_collection make_collection(std::span<const std::string> texts, int set_label = 1);

} // namespace rlm

#endif // RLM_TEXT_MODEL_HPP
