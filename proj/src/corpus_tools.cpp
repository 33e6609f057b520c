#include "rlbwt_merge/corpus_tools.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace rlm {

namespace {

void check_alphabet(const std::string& alpha) {
    if (alpha.empty())
        throw config_error("generator alphabet is empty");
    for (char c : alpha) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b == symbol::terminator_byte || b >= 0x80)
            throw config_error("generator alphabet contains an invalid symbol");
    }
    std::string sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw config_error("generator alphabet contains duplicates");
}

// independent stream per (seed, salt) pair
std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{seed, salt};
    return std::mt19937_64(seq);
}

std::string random_text(std::mt19937_64& rng, const std::string& alpha, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(alpha[pick(rng)]);
    return s;
}

void mutate(std::mt19937_64& rng, std::string& s, const std::string& alpha, double rate) {
    if (rate <= 0.0 || alpha.size() < 2)
        return;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 2);
    for (char& c : s) {
        if (coin(rng) >= rate)
            continue;
        std::size_t k = pick(rng);
        // choose uniformly among the other alphabet characters
        if (alpha[k] == c)
            k = alpha.size() - 1;
        c = alpha[k];
    }
}

char complement_of(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default:
            throw config_error(std::string("no reverse complement for '") + c + "'");
    }
}

} // namespace

generator_kind parse_generator_kind(std::string_view name) {
    if (name == "random") return generator_kind::random_strings;
    if (name == "mutated-copies") return generator_kind::mutated_copies;
    if (name == "reverse-complement") return generator_kind::reverse_complement;
    if (name == "concatenated-period") return generator_kind::concatenated_period;
    throw config_error("unknown generator kind '" + std::string(name) + "'");
}

std::string_view to_string(generator_kind kind) {
    switch (kind) {
        case generator_kind::random_strings: return "random";
        case generator_kind::mutated_copies: return "mutated-copies";
        case generator_kind::reverse_complement: return "reverse-complement";
        case generator_kind::concatenated_period: return "concatenated-period";
    }
    return "?";
}

text_collection generate(const generator_spec& spec, int set_label) {
    check_alphabet(spec.alphabet);
    if (spec.copies == 0 || spec.base_length == 0)
        throw config_error("generator needs copies >= 1 and base_length >= 1");

    std::mt19937_64 rng = rng_for(spec.seed, static_cast<std::uint64_t>(spec.kind));
    std::vector<std::string> texts;
    switch (spec.kind) {
        case generator_kind::random_strings: {
            std::uniform_int_distribution<std::size_t> len(1, spec.base_length);
            for (std::size_t i = 0; i < spec.copies; ++i)
                texts.push_back(random_text(rng, spec.alphabet, len(rng)));
            break;
        }
        case generator_kind::mutated_copies: {
            std::string base = random_text(rng, spec.alphabet, spec.base_length);
            for (std::size_t i = 0; i < spec.copies; ++i) {
                std::string s = base;
                mutate(rng, s, spec.alphabet, spec.mutation_rate);
                texts.push_back(std::move(s));
            }
            break;
        }
        case generator_kind::reverse_complement: {
            generator_spec inner = spec;
            inner.kind = generator_kind::mutated_copies;
            return reverse_complement_of(generate(inner, set_label), set_label);
        }
        case generator_kind::concatenated_period: {
            std::size_t period_len = std::max<std::size_t>(1, spec.base_length / 4);
            std::string period = random_text(rng, spec.alphabet, period_len);
            for (std::size_t i = 0; i < spec.copies; ++i) {
                std::string s;
                while (s.size() < spec.base_length)
                    s.append(period, 0, std::min(period.size(), spec.base_length - s.size()));
                mutate(rng, s, spec.alphabet, spec.mutation_rate);
                texts.push_back(std::move(s));
            }
            break;
        }
    }
    return make_collection(texts, set_label);
}

text_collection reverse_complement_of(const text_collection& coll, int set_label) {
    std::vector<std::string> texts;
    for (const auto& s : coll.strings) {
        std::string t = to_text(s);
        t.pop_back(); // terminator
        std::string rc;
        rc.reserve(t.size());
        for (auto it = t.rbegin(); it != t.rend(); ++it)
            rc.push_back(complement_of(*it));
        texts.push_back(std::move(rc));
    }
    return make_collection(texts, set_label);
}

instance_pair make_instance_pair(std::string_view kind, const generator_spec& base) {
    generator_spec spec_a = base;
    generator_spec spec_b = base;
    spec_b.seed = base.seed + 0x9e3779b97f4a7c15ull; // independent stream

    if (kind == "reverse-complement") {
        spec_a.kind = generator_kind::mutated_copies;
        text_collection a = generate(spec_a, 1);
        return {a, reverse_complement_of(a, 2), std::string(kind)};
    }
    if (kind == "shared-duplicates") {
        spec_a.kind = spec_b.kind = generator_kind::random_strings;
        text_collection a = generate(spec_a, 1);
        text_collection b = generate(spec_b, 2);
        // copy some of a's strings into b so ties across the sets exist
        std::mt19937_64 rng = rng_for(base.seed, 0x5eed);
        std::size_t shared = 1 + rng() % a.strings.size();
        for (std::size_t i = 0; i < shared && i < b.strings.size(); ++i) {
            std::uniform_int_distribution<std::size_t> pick_a(0, a.strings.size() - 1);
            std::uniform_int_distribution<std::size_t> pick_b(0, b.strings.size() - 1);
            b.strings[pick_b(rng)] = a.strings[pick_a(rng)];
        }
        return {std::move(a), std::move(b), std::string(kind)};
    }

    spec_a.kind = spec_b.kind = parse_generator_kind(kind);
    return {generate(spec_a, 1), generate(spec_b, 2), std::string(kind)};
}

rlbwt rlbwt_of_collection(const text_collection& coll, const alphabet& alpha) {
    ebwt_table table = build_ebwt(coll);
    std::vector<symbol> column = table.bwt_column();
    return rlbwt::from_runs(run_length_encode(column), alpha);
}

rlbwt rlbwt_of_collection(const text_collection& coll) {
    return rlbwt_of_collection(coll, coll.symbols());
}

std::optional<std::uint64_t> first_divergence(std::span<const run> a,
                                              std::span<const run> b) {
    std::size_t ia = 0, ib = 0;
    std::uint64_t pos = 0, offa = 0, offb = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].sym != b[ib].sym)
            return pos;
        std::uint64_t step = std::min(a[ia].length - offa, b[ib].length - offb);
        pos += step;
        offa += step;
        offb += step;
        if (offa == a[ia].length) { ++ia; offa = 0; }
        if (offb == b[ib].length) { ++ib; offb = 0; }
    }
    if (ia < a.size() || ib < b.size())
        return pos;
    return std::nullopt;
}

std::string to_csv(const measurement_row& row) {
    std::ostringstream os;
    os << row.kind << ',' << row.n << ',' << row.sigma << ',' << row.r1 << ','
       << row.r2 << ',' << row.r_out << ',' << row.lcp_sum << ',' << row.blocks
       << ',' << row.chars_extracted << ',' << row.comparisons;
    return os.str();
}

measurement_row measure_merge(const text_collection& a, const text_collection& b,
                              std::string kind_label) {
    alphabet alpha = union_alphabet(a, b);
    rlbwt bwt1 = rlbwt_of_collection(a, alpha);
    rlbwt bwt2 = rlbwt_of_collection(b, alpha);
    combine_outcome fast = merge_and_combine(bwt1, bwt2);

    ebwt_table combined = build_ebwt(a, b);
    std::vector<symbol> column = combined.bwt_column();
    std::vector<run> expected = run_length_encode(column);
    if (auto pos = first_divergence(fast.combined.runs(), expected)) {
        std::ostringstream msg;
        msg << "fast path diverges from oracle at position " << *pos;
        throw verify_error(msg.str());
    }

    boundary_report report = report_boundaries(combined);

    measurement_row row;
    row.kind = std::move(kind_label);
    row.n = combined.row_count();
    row.sigma = alpha.size();
    row.r1 = bwt1.run_count();
    row.r2 = bwt2.run_count();
    row.r_out = fast.combined.run_count();
    row.lcp_sum = report.lcp_sum;
    row.blocks = report.block_count();
    row.chars_extracted = fast.stats.chars_extracted;
    row.comparisons = fast.stats.comparisons;
    return row;
}

} // namespace rlm
