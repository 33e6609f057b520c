/*
 * fixtures.hpp
 *
 * Frozen worked examples used across the test suites: the animal-name
 * merge and the GATTACA-family (e)BWT tables with their block labels and
 * boundary LCP values. Each table row is (bwt char, rotation minus its
 * last char, source label, LCP at the start of a new block or -1).
 */

#ifndef RLM_TESTS_FIXTURES_HPP
#define RLM_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

namespace fixtures {

struct table_row {
    char bwt;
    const char* display; // rotation text without its final character
    int label;           // source string or source set; 0 when untracked
    int lcp;             // boundary LCP shown at this row, -1 when none
};

// ---- sorted-name merge (names without terminators) -------------------

inline const std::vector<std::string> animals_set1 = {
    "CAT", "DOG", "ELEPHANT", "FOX", "HORSE", "PIG"};
inline const std::vector<std::string> animals_set2 = {
    "FISH", "FROG", "LIZARD", "SNAKE"};

inline const std::vector<int> animals_interleave = {1, 1, 1, 2, 1, 2, 1, 2, 1, 2};
inline const std::vector<std::uint64_t> animals_boundary_lcps = {0, 1, 1, 0, 0, 0, 0};
inline constexpr std::uint64_t animals_lcp_sum = 2;

// ---- single-string BWTs ---------------------------------------------

inline const std::vector<table_row> bwt_gattacat = {
    {'T', "$GATTACA", 0, -1}, {'T', "ACAT$GAT", 0, -1}, {'C', "AT$GATTA", 0, -1},
    {'G', "ATTACAT$", 0, -1}, {'A', "CAT$GATT", 0, -1}, {'$', "GATTACAT", 0, -1},
    {'A', "T$GATTAC", 0, -1}, {'T', "TACAT$GA", 0, -1}, {'A', "TTACAT$G", 0, -1},
};

inline const std::vector<table_row> bwt_gatacat = {
    {'T', "$GATACA", 0, -1}, {'T', "ACAT$GA", 0, -1}, {'C', "AT$GATA", 0, -1},
    {'G', "ATACAT$", 0, -1}, {'A', "CAT$GAT", 0, -1}, {'$', "GATACAT", 0, -1},
    {'A', "T$GATAC", 0, -1}, {'A', "TACAT$G", 0, -1},
};

inline const std::vector<table_row> bwt_gattagata = {
    {'A', "$GATTAGAT", 0, -1}, {'T', "A$GATTAGA", 0, -1}, {'T', "AGATA$GAT", 0, -1},
    {'G', "ATA$GATTA", 0, -1}, {'G', "ATTAGATA$", 0, -1}, {'A', "GATA$GATT", 0, -1},
    {'$', "GATTAGATA", 0, -1}, {'A', "TA$GATTAG", 0, -1}, {'T', "TAGATA$GA", 0, -1},
    {'A', "TTAGATA$G", 0, -1},
};

// ---- three-string eBWTs ---------------------------------------------

inline const std::vector<std::string> dna_set1 = {"GATTACAT", "GATACAT", "GATTAGATA"};
inline const std::vector<std::string> dna_set2 = {"ATGTAATC", "ATGTATC", "TATCTAATC"};

// eBWT of dna_set1; labels are string numbers, LCPs at per-string block starts
inline const std::vector<table_row> ebwt_set1 = {
    {'T', "$GATACA", 2, -1},   {'T', "$GATTACA", 1, 4},  {'A', "$GATTAGAT", 3, 6},
    {'T', "A$GATTAGA", 3, -1}, {'T', "ACAT$GA", 2, 1},   {'T', "ACAT$GAT", 1, 8},
    {'T', "AGATA$GAT", 3, 1},  {'C', "AT$GATA", 2, 1},   {'C', "AT$GATTA", 1, 6},
    {'G', "ATA$GATTA", 3, 2},  {'G', "ATACAT$", 2, 3},   {'G', "ATTACAT$", 1, 2},
    {'G', "ATTAGATA$", 3, 4},  {'A', "CAT$GAT", 2, 0},   {'A', "CAT$GATT", 1, 7},
    {'A', "GATA$GATT", 3, 0},  {'$', "GATACAT", 2, 4},   {'$', "GATTACAT", 1, 3},
    {'$', "GATTAGATA", 3, 5},  {'A', "T$GATAC", 2, 0},   {'A', "T$GATTAC", 1, 5},
    {'A', "TA$GATTAG", 3, 1},  {'A', "TACAT$G", 2, 2},   {'T', "TACAT$GA", 1, 9},
    {'T', "TAGATA$GA", 3, 2},  {'A', "TTACAT$G", 1, 1},  {'A', "TTAGATA$G", 3, 3},
};

// eBWT of dna_set2 (the reverse complements); labels untracked here
inline const std::vector<table_row> ebwt_set2 = {
    {'C', "$ATGTAAT", 0, -1},  {'C', "$ATGTAT", 0, -1},   {'C', "$TATCTAAT", 0, -1},
    {'T', "AATC$ATG", 0, -1},  {'T', "AATC$TATC", 0, -1}, {'A', "ATC$ATGT", 0, -1},
    {'T', "ATC$ATG", 0, -1},   {'A', "ATC$TATCT", 0, -1}, {'T', "ATCTAATC$", 0, -1},
    {'$', "ATGTAATC", 0, -1},  {'$', "ATGTATC", 0, -1},   {'T', "C$ATGTAA", 0, -1},
    {'T', "C$ATGTA", 0, -1},   {'T', "C$TATCTAA", 0, -1}, {'T', "CTAATC$TA", 0, -1},
    {'T', "GTAATC$A", 0, -1},  {'T', "GTATC$A", 0, -1},   {'G', "TAATC$AT", 0, -1},
    {'C', "TAATC$TAT", 0, -1}, {'G', "TATC$AT", 0, -1},   {'$', "TATCTAATC", 0, -1},
    {'A', "TC$ATGTA", 0, -1},  {'A', "TC$ATGT", 0, -1},   {'A', "TC$TATCTA", 0, -1},
    {'A', "TCTAATC$T", 0, -1}, {'A', "TGTAATC$", 0, -1},  {'A', "TGTATC$", 0, -1},
};

// combined eBWT of both sets; labels are set numbers, LCPs at set-block starts
inline const std::vector<table_row> ebwt_combined = {
    {'C', "$ATGTAAT", 2, -1},  {'C', "$ATGTAT", 2, -1},   {'T', "$GATACA", 1, 1},
    {'T', "$GATTACA", 1, -1},  {'A', "$GATTAGAT", 1, -1}, {'C', "$TATCTAAT", 2, 1},
    {'T', "A$GATTAGA", 1, 0},  {'T', "AATC$ATG", 2, 1},   {'T', "AATC$TATC", 2, -1},
    {'T', "ACAT$GA", 1, 1},    {'T', "ACAT$GAT", 1, -1},  {'T', "AGATA$GAT", 1, -1},
    {'C', "AT$GATA", 1, -1},   {'C', "AT$GATTA", 1, -1},  {'G', "ATA$GATTA", 1, -1},
    {'G', "ATACAT$", 1, -1},   {'A', "ATC$ATGT", 2, 2},   {'T', "ATC$ATG", 2, -1},
    {'A', "ATC$TATCT", 2, -1}, {'T', "ATCTAATC$", 2, -1}, {'$', "ATGTAATC", 2, -1},
    {'$', "ATGTATC", 2, -1},   {'G', "ATTACAT$", 1, 2},   {'G', "ATTAGATA$", 1, -1},
    {'T', "C$ATGTAA", 2, 0},   {'T', "C$ATGTA", 2, -1},   {'T', "C$TATCTAA", 2, -1},
    {'A', "CAT$GAT", 1, 1},    {'A', "CAT$GATT", 1, -1},  {'T', "CTAATC$TA", 2, 1},
    {'A', "GATA$GATT", 1, 0},  {'$', "GATACAT", 1, -1},   {'$', "GATTACAT", 1, -1},
    {'$', "GATTAGATA", 1, -1}, {'T', "GTAATC$A", 2, 1},   {'T', "GTATC$A", 2, -1},
    {'A', "T$GATAC", 1, 0},    {'A', "T$GATTAC", 1, -1},  {'A', "TA$GATTAG", 1, -1},
    {'G', "TAATC$AT", 2, 2},   {'C', "TAATC$TAT", 2, -1}, {'A', "TACAT$G", 1, 2},
    {'T', "TACAT$GA", 1, -1},  {'T', "TAGATA$GA", 1, -1}, {'G', "TATC$AT", 2, 2},
    {'$', "TATCTAATC", 2, -1}, {'A', "TC$ATGTA", 2, -1},  {'A', "TC$ATGT", 2, -1},
    {'A', "TC$TATCTA", 2, -1}, {'A', "TCTAATC$T", 2, -1}, {'A', "TGTAATC$", 2, -1},
    {'A', "TGTATC$", 2, -1},   {'A', "TTACAT$G", 1, 1},   {'A', "TTAGATA$G", 1, -1},
};

} // namespace fixtures

#endif // RLM_TESTS_FIXTURES_HPP
