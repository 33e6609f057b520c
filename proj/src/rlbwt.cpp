#include "rlbwt_merge/rlbwt.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rlm {

namespace {

std::string symbol_token(symbol s) {
    unsigned char b = s.byte();
    if (b >= 0x21 && b <= 0x7e)
        return std::string(1, static_cast<char>(b));
    static const char* hex = "0123456789abcdef";
    std::string t = "\\x";
    t.push_back(hex[b >> 4]);
    t.push_back(hex[b & 0xf]);
    return t;
}

symbol parse_symbol_token(const std::string& tok) {
    if (tok.size() == 1)
        return symbol(tok[0]);
    if (tok.size() == 4 && tok[0] == '\\' && (tok[1] == 'x' || tok[1] == 'X')) {
        auto hex_val = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
        };
        int hi = hex_val(tok[2]), lo = hex_val(tok[3]);
        if (hi >= 0 && lo >= 0)
            return symbol(static_cast<unsigned char>(hi * 16 + lo));
    }
    throw parse_error("bad symbol token '" + tok + "'");
}

} // namespace

std::vector<run> run_length_encode(std::span<const symbol> symbols) {
    std::vector<run> runs;
    for (symbol s : symbols) {
        if (!runs.empty() && runs.back().sym == s)
            ++runs.back().length;
        else
            runs.push_back(run{s, 1});
    }
    return runs;
}

rlbwt rlbwt::from_runs(std::vector<run> runs) {
    std::vector<symbol> syms;
    syms.reserve(runs.size());
    for (const run& r : runs)
        syms.push_back(r.sym);
    return from_runs(std::move(runs), alphabet::from_symbols(syms));
}

rlbwt rlbwt::from_runs(std::vector<run> input, alphabet alpha) {
    if (input.empty())
        throw std::invalid_argument("from_runs: no runs");

    rlbwt b;
    b.alpha_ = std::move(alpha);
    b.runs_.reserve(input.size());
    for (const run& r : input) {
        if (r.length == 0)
            throw std::invalid_argument("from_runs: zero-length run");
        b.alpha_.code(r.sym); // throws config_error if outside the alphabet
        if (!b.runs_.empty() && b.runs_.back().sym == r.sym)
            b.runs_.back().length += r.length;
        else
            b.runs_.push_back(r);
    }

    const std::size_t sigma = b.alpha_.size();
    std::vector<std::uint64_t> occ(sigma, 0);

    b.run_start_.reserve(b.runs_.size() + 1);
    b.run_start_.push_back(0);
    b.dir_.assign(sigma, {});
    for (std::uint32_t i = 0; i < b.runs_.size(); ++i) {
        const run& r = b.runs_[i];
        unsigned code = b.alpha_.code(r.sym);
        b.dir_[code].push_back(sym_run{i, occ[code]});
        occ[code] += r.length;
        b.run_start_.push_back(b.run_start_.back() + r.length);
    }
    b.n_ = b.run_start_.back();

    b.c_.assign(sigma + 1, 0);
    for (std::size_t c = 0; c < sigma; ++c)
        b.c_[c + 1] = b.c_[c] + occ[c];
    return b;
}

rlbwt rlbwt::rebased(const alphabet& alpha) const {
    return from_runs(std::vector<run>(runs_.begin(), runs_.end()), alpha);
}

symbol rlbwt::access(std::size_t i) const {
    if (i >= n_)
        throw std::out_of_range("access: position out of range");
    auto it = std::upper_bound(run_start_.begin(), run_start_.end(), i);
    return runs_[static_cast<std::size_t>(it - run_start_.begin()) - 1].sym;
}

std::size_t rlbwt::select_code(unsigned code, std::uint64_t k) const {
    const auto& entries = dir_.at(code);
    std::uint64_t total = c_[code + 1] - c_[code];
    if (k < 1 || k > total)
        throw std::out_of_range("select: rank out of range");
    // last entry with count_before < k
    auto it = std::upper_bound(entries.begin(), entries.end(), k - 1,
                               [](std::uint64_t v, const sym_run& e) {
                                   return v < e.count_before;
                               });
    const sym_run& e = *(it - 1);
    return run_start_[e.run_index] + (k - 1 - e.count_before);
}

std::size_t rlbwt::select(symbol c, std::uint64_t k) const {
    if (!alpha_.contains(c))
        throw std::out_of_range("select: symbol absent");
    return select_code(alpha_.code(c), k);
}

unsigned rlbwt::f_code(std::size_t i) const {
    if (i >= n_)
        throw std::out_of_range("f_symbol: position out of range");
    // last code with c_[code] <= i; zero-width intervals are skipped
    auto it = std::upper_bound(c_.begin(), c_.end(), i);
    return static_cast<unsigned>(it - c_.begin()) - 1;
}

symbol rlbwt::f_symbol(std::size_t i) const { return alpha_.at(f_code(i)); }

std::size_t rlbwt::psi(std::size_t i) const {
    unsigned code = f_code(i);
    return select_code(code, i - c_[code] + 1);
}

std::uint64_t rlbwt::occurrences(symbol c) const {
    if (!alpha_.contains(c))
        return 0;
    unsigned code = alpha_.code(c);
    return c_[code + 1] - c_[code];
}

std::uint64_t rlbwt::directory_entries() const {
    std::uint64_t entries = runs_.size() + run_start_.size() + c_.size();
    for (const auto& d : dir_)
        entries += d.size();
    return entries;
}

std::vector<symbol> rlbwt::decompress() const {
    std::vector<symbol> out;
    out.reserve(n_);
    for (const run& r : runs_)
        out.insert(out.end(), r.length, r.sym);
    return out;
}

void rlbwt::write(std::ostream& out) const {
    out << "RLBWT 1\n";
    out << "runs " << runs_.size() << " length " << n_ << "\n";
    for (const run& r : runs_)
        out << symbol_token(r.sym) << ' ' << r.length << "\n";
}

rlbwt rlbwt::read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "RLBWT 1")
        throw parse_error("missing 'RLBWT 1' magic line");
    if (!std::getline(in, line))
        throw parse_error("missing header line");
    std::istringstream header(line);
    std::string runs_word, length_word;
    std::uint64_t r_count = 0, n = 0;
    header >> runs_word >> r_count >> length_word >> n;
    if (!header || runs_word != "runs" || length_word != "length")
        throw parse_error("bad header line '" + line + "'");
    if (r_count == 0)
        throw parse_error("empty RLBWT");

    std::vector<run> runs;
    runs.reserve(r_count);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < r_count; ++i) {
        if (!std::getline(in, line))
            throw parse_error("unexpected end of file in run list");
        std::istringstream rl(line);
        std::string tok;
        std::uint64_t len = 0;
        rl >> tok >> len;
        if (!rl || len == 0)
            throw parse_error("bad run line '" + line + "'");
        runs.push_back(run{parse_symbol_token(tok), len});
        total += len;
    }
    if (total != n)
        throw parse_error("run lengths do not sum to declared length");
    return from_runs(std::move(runs));
}

void rlbwt::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open " + path + " for writing");
    write(out);
    out.flush();
    if (!out)
        throw parse_error("write to " + path + " failed");
}

rlbwt rlbwt::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    return read(in);
}

} // namespace rlm
