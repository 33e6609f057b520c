#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "rlbwt_merge/ebwt_oracle.hpp"
#include "test_support.hpp"

using namespace rlm;
using test_support::column_to_text;
using test_support::render_rows;

namespace {

text_collection coll(std::initializer_list<std::string> texts, int label = 1) {
    std::vector<std::string> v(texts);
    return make_collection(v, label);
}

void check_against_fixture(const ebwt_table& table,
                          const std::vector<fixtures::table_row>& expected,
                          bool per_string_labels, bool check_labels) {
    REQUIRE(table.row_count() == expected.size());
    auto rendered = render_rows(table, per_string_labels);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(std::get<0>(rendered[i]) == expected[i].bwt);
        CHECK(std::get<1>(rendered[i]) == expected[i].display);
        if (check_labels)
            CHECK(std::get<2>(rendered[i]) == expected[i].label);
    }
}

// boundary LCPs attached to the first row of each new block, -1 elsewhere
std::vector<int> lcp_by_row(const ebwt_table& table, const boundary_report& rep) {
    std::vector<int> out(table.row_count(), -1);
    for (std::size_t b = 1; b < rep.blocks.size(); ++b)
        out[rep.blocks[b].first_row] = static_cast<int>(rep.boundary_lcps[b - 1]);
    return out;
}

} // namespace

TEST_CASE("BWT of a single string matches the worked table") {
    ebwt_table t = build_ebwt(coll({"GATTACAT"}));
    CHECK(column_to_text(t.bwt_column()) == "TTCGA$ATA");
    check_against_fixture(t, fixtures::bwt_gattacat, true, false);

    ebwt_table t2 = build_ebwt(coll({"GATACAT"}));
    CHECK(column_to_text(t2.bwt_column()) == "TTCGA$AA");
    check_against_fixture(t2, fixtures::bwt_gatacat, true, false);

    ebwt_table t3 = build_ebwt(coll({"GATTAGATA"}));
    CHECK(column_to_text(t3.bwt_column()) == "ATTGGA$ATA");
    check_against_fixture(t3, fixtures::bwt_gattagata, true, false);
}

TEST_CASE("bare terminator has a single row") {
    ebwt_table t = build_ebwt(coll({""}));
    REQUIRE(t.row_count() == 1);
    CHECK(t.rows()[0].bwt.is_terminator());
}

TEST_CASE("three-string eBWT matches the worked table") {
    ebwt_table t = build_ebwt(make_collection(fixtures::dna_set1, 1));
    REQUIRE(t.row_count() == 27);

    // first three rows come from strings 2, 1, 3
    CHECK(t.rows()[0].bwt == symbol('T'));
    CHECK(t.rows()[1].bwt == symbol('T'));
    CHECK(t.rows()[2].bwt == symbol('A'));
    CHECK(t.rows()[0].rot.string_index == 1);
    CHECK(t.rows()[1].rot.string_index == 0);
    CHECK(t.rows()[2].rot.string_index == 2);

    check_against_fixture(t, fixtures::ebwt_set1, true, true);

    // per-string blocks and their boundary LCP column
    std::vector<int> labels;
    for (const auto& r : t.rows())
        labels.push_back(static_cast<int>(r.rot.string_index) + 1);
    boundary_report rep = report_boundaries(t, labels);
    CHECK(rep.block_count() == 26);
    std::vector<int> by_row = lcp_by_row(t, rep);
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        CAPTURE(i);
        CHECK(by_row[i] == fixtures::ebwt_set1[i].lcp);
    }
}

TEST_CASE("reverse-complement set eBWT matches the worked table") {
    ebwt_table t = build_ebwt(make_collection(fixtures::dna_set2, 1));
    check_against_fixture(t, fixtures::ebwt_set2, true, false);
}

TEST_CASE("combined eBWT of both sets matches the worked table") {
    text_collection a = make_collection(fixtures::dna_set1, 1);
    text_collection b = make_collection(fixtures::dna_set2, 2);
    ebwt_table t = build_ebwt(a, b);
    check_against_fixture(t, fixtures::ebwt_combined, false, true);

    boundary_report rep = report_boundaries(t);
    CHECK(rep.block_count() == 18);
    CHECK(rep.lcp_sum == 18);
    std::vector<int> by_row = lcp_by_row(t, rep);
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        CAPTURE(i);
        CHECK(by_row[i] == fixtures::ebwt_combined[i].lcp);
    }

    std::vector<int> labels = interleave_oracle(a, b);
    std::vector<int> expected;
    for (const auto& row : fixtures::ebwt_combined)
        expected.push_back(row.label);
    CHECK(labels == expected);
}

TEST_CASE("sorted-name merge: interleave and boundary LCPs") {
    // one row per name: offset-0 rotations of single-name strings, the
    // string-set view of the same comparison order
    text_collection set1 = make_collection(fixtures::animals_set1, 1);
    text_collection set2 = make_collection(fixtures::animals_set2, 2);

    struct row {
        const text_collection* c;
        rotation rot;
        int label;
    };
    std::vector<row> rows;
    for (std::uint32_t i = 0; i < set1.strings.size(); ++i)
        rows.push_back({&set1, {i, 0}, 1});
    for (std::uint32_t i = 0; i < set2.strings.size(); ++i)
        rows.push_back({&set2, {i, 0}, 2});
    std::stable_sort(rows.begin(), rows.end(), [](const row& x, const row& y) {
        return compare_contexts(*x.c, x.rot, *y.c, y.rot).order ==
               std::weak_ordering::less;
    });

    std::vector<int> labels;
    for (const row& r : rows)
        labels.push_back(r.label);
    CHECK(labels == fixtures::animals_interleave);

    std::vector<std::uint64_t> lcps;
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].label == rows[i - 1].label)
            continue;
        context_order c = compare_contexts(*rows[i - 1].c, rows[i - 1].rot,
                                           *rows[i].c, rows[i].rot);
        lcps.push_back(c.lcp);
        sum += c.lcp;
    }
    CHECK(lcps == fixtures::animals_boundary_lcps);
    CHECK(sum == fixtures::animals_lcp_sum);
}

TEST_CASE("interleave on bare terminators follows set-1-first stability") {
    text_collection a = coll({""}, 1);
    text_collection b = coll({""}, 2);
    CHECK(interleave_oracle(a, b) == std::vector<int>{1, 2});
}

TEST_CASE("the name interleave reappears as the terminator block of the eBWT") {
    // the '$'-contexts sort by the name that follows, so the first ten
    // labels of the full character-level interleave repeat the name merge
    text_collection a = make_collection(fixtures::animals_set1, 1);
    text_collection b = make_collection(fixtures::animals_set2, 2);
    std::vector<int> labels = interleave_oracle(a, b);
    REQUIRE(labels.size() == a.total_length() + b.total_length());
    std::vector<int> head(labels.begin(), labels.begin() + 10);
    CHECK(head == fixtures::animals_interleave);
}

TEST_CASE("single collection is one block with no boundaries") {
    ebwt_table t = build_ebwt(coll({"GATTACAT", "GATACAT"}));
    boundary_report rep = report_boundaries(t);
    CHECK(rep.block_count() == 1);
    CHECK(rep.boundary_lcps.empty());
    CHECK(rep.lcp_sum == 0);
}

TEST_CASE("blocks split at first-symbol changes have an LCP sum of zero") {
    // group rows by the first symbol of their context: every boundary then
    // separates contexts with different first symbols
    ebwt_table t = build_ebwt(coll({"ABCA", "CAB"}));
    std::vector<int> labels;
    for (std::size_t i = 0; i < t.row_count(); ++i)
        labels.push_back(static_cast<int>(t.context_symbol_at(i, 0).byte()));
    boundary_report rep = report_boundaries(t, labels);
    CHECK(rep.block_count() == 4); // $ A B C
    for (std::uint64_t lcp : rep.boundary_lcps)
        CHECK(lcp == 0);
    CHECK(rep.lcp_sum == 0);
}

TEST_CASE("disjoint letter alphabets leave only the terminator boundary") {
    text_collection a = coll({"AAAA", "AAA"}, 1);
    text_collection b = coll({"BBBB", "BB"}, 2);
    ebwt_table t = build_ebwt(a, b);
    boundary_report rep = report_boundaries(t);
    // the shared '$' block always contributes one boundary of LCP 1; all
    // letter boundaries are 0 because the alphabets are disjoint
    std::size_t ones = 0;
    for (std::uint64_t lcp : rep.boundary_lcps) {
        CHECK(lcp <= 1);
        ones += lcp == 1;
    }
    CHECK(ones == 1);
    CHECK(rep.lcp_sum == 1);
}

TEST_CASE("oracle self-consistency on random pairs") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 30; ++round) {
        auto random_coll = [&](int label) {
            std::vector<std::string> texts;
            std::size_t count = 1 + rng() % 4;
            for (std::size_t i = 0; i < count; ++i) {
                std::string t;
                std::size_t len = rng() % 8;
                for (std::size_t k = 0; k < len; ++k)
                    t.push_back("ACGT"[rng() % 4]);
                texts.push_back(t);
            }
            return make_collection(texts, label);
        };
        text_collection a = random_coll(1);
        text_collection b = random_coll(2);

        ebwt_table combined = build_ebwt(a, b);
        std::vector<symbol> col = combined.bwt_column();

        // row count conservation
        CHECK(combined.row_count() == a.total_length() + b.total_length());

        // multiset of BWT symbols equals the multiset of input symbols
        std::map<unsigned char, std::size_t> input_counts, bwt_counts;
        for (const auto& c : {a, b})
            for (const auto& s : c.strings)
                for (symbol sym : s.symbols())
                    ++input_counts[sym.byte()];
        for (symbol sym : col)
            ++bwt_counts[sym.byte()];
        CHECK(input_counts == bwt_counts);

        // interleaving the per-side columns by the oracle labels
        // reproduces the combined column
        std::vector<symbol> col_a = build_ebwt(a).bwt_column();
        std::vector<symbol> col_b = build_ebwt(b).bwt_column();
        std::vector<int> labels = combined.label_column();
        std::vector<symbol> stitched;
        std::size_t ia = 0, ib = 0;
        for (int label : labels)
            stitched.push_back(label == 1 ? col_a[ia++] : col_b[ib++]);
        CHECK(ia == col_a.size());
        CHECK(ib == col_b.size());
        CHECK(column_to_text(stitched) == column_to_text(col));
    }
}
