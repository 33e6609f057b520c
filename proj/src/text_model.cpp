#include "rlbwt_merge/text_model.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rlm {

std::ostream& operator<<(std::ostream& os, symbol s) {
    unsigned char b = s.byte();
    if (b >= 0x21 && b <= 0x7e) {
        os << static_cast<char>(b);
    } else {
        static const char* hex = "0123456789abcdef";
        os << "\\x" << hex[b >> 4] << hex[b & 0xf];
    }
    return os;
}

alphabet alphabet::from_symbols(std::span<const symbol> syms) {
    alphabet a;
    a.symbols_.assign(syms.begin(), syms.end());
    std::sort(a.symbols_.begin(), a.symbols_.end());
    a.symbols_.erase(std::unique(a.symbols_.begin(), a.symbols_.end()), a.symbols_.end());
    for (std::size_t i = 0; i < a.symbols_.size(); ++i)
        a.code_of_[a.symbols_[i].byte()] = static_cast<std::int16_t>(i);
    return a;
}

alphabet alphabet::union_of(const alphabet& a, const alphabet& b) {
    std::vector<symbol> syms(a.symbols_.begin(), a.symbols_.end());
    syms.insert(syms.end(), b.symbols_.begin(), b.symbols_.end());
    return from_symbols(syms);
}

unsigned alphabet::code(symbol s) const {
    std::int16_t c = code_of_[s.byte()];
    if (c < 0) {
        std::ostringstream msg;
        msg << "symbol " << s << " not in alphabet";
        throw config_error(msg.str());
    }
    return static_cast<unsigned>(c);
}

symbol alphabet::at(unsigned code) const {
    if (code >= symbols_.size())
        throw std::out_of_range("alphabet code out of range");
    return symbols_[code];
}

terminated_string::terminated_string(std::vector<symbol> syms) : syms_(std::move(syms)) {
    if (syms_.empty())
        throw parse_error("string must contain at least the terminator");
    if (!syms_.back().is_terminator())
        throw parse_error("string must end with the terminator");
    for (std::size_t i = 0; i + 1 < syms_.size(); ++i)
        if (syms_[i].is_terminator())
            throw parse_error("terminator before final position");
}

terminated_string terminated_string::from_text(std::string_view text) {
    std::vector<symbol> syms;
    syms.reserve(text.size() + 1);
    for (char ch : text) {
        unsigned char b = static_cast<unsigned char>(ch);
        if (b == symbol::terminator_byte)
            throw parse_error("'$' is reserved for the terminator");
        if (b >= 0x80)
            throw parse_error("multi-byte characters are not supported");
        syms.push_back(symbol(b));
    }
    syms.push_back(symbol::terminator());
    return terminated_string(std::move(syms));
}

std::string to_text(const terminated_string& s) {
    std::string out;
    out.reserve(s.size());
    for (symbol sym : s.symbols())
        out.push_back(static_cast<char>(sym.byte()));
    return out;
}

std::size_t text_collection::total_length() const {
    std::size_t n = 0;
    for (const auto& s : strings)
        n += s.size();
    return n;
}

alphabet text_collection::symbols() const {
    std::vector<symbol> syms;
    for (const auto& s : strings)
        syms.insert(syms.end(), s.symbols().begin(), s.symbols().end());
    return alphabet::from_symbols(syms);
}

alphabet union_alphabet(const text_collection& a, const text_collection& b) {
    return alphabet::union_of(a.symbols(), b.symbols());
}

symbol context_symbol(const text_collection& coll, rotation rot, std::size_t k) {
    if (rot.string_index >= coll.strings.size())
        throw std::out_of_range("rotation string index out of range");
    const terminated_string& s = coll.strings[rot.string_index];
    if (rot.offset >= s.size())
        throw std::out_of_range("rotation offset out of range");
    return s.at((rot.offset + k) % s.size());
}

context_order compare_contexts(const text_collection& ca, rotation a,
                               const text_collection& cb, rotation b) {
    const terminated_string& sa = ca.strings.at(a.string_index);
    const terminated_string& sb = cb.strings.at(b.string_index);
    if (a.offset >= sa.size() || b.offset >= sb.size())
        throw std::out_of_range("rotation offset out of range");

    const std::size_t la = sa.size(), lb = sb.size();
    const std::uint64_t cap = la + lb;
    for (std::uint64_t k = 0; k < cap; ++k) {
        symbol x = sa.at((a.offset + k) % la);
        symbol y = sb.at((b.offset + k) % lb);
        if (x != y)
            return {x <=> y, k};
    }
    return {std::weak_ordering::equivalent, cap};
}

text_collection parse_collection(std::istream& in, int set_label) {
    text_collection coll;
    coll.set_label = set_label;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && line.front() == '>')
            continue; // FASTA-header tolerance
        try {
            coll.strings.push_back(terminated_string::from_text(line));
        } catch (const parse_error& e) {
            std::ostringstream msg;
            msg << "line " << line_no << ": " << e.what();
            throw parse_error(msg.str());
        }
    }
    if (coll.strings.empty())
        throw parse_error("input contains no strings");
    return coll;
}

text_collection parse_collection_file(const std::string& path, int set_label) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    return parse_collection(in, set_label);
}

text_collection make_collection(std::span<const std::string> texts, int set_label) {
    text_collection coll;
    coll.set_label = set_label;
    for (const auto& t : texts)
        coll.strings.push_back(terminated_string::from_text(t));
    if (coll.strings.empty())
        throw parse_error("collection must contain at least one string");
    return coll;
}

} // namespace rlm
