#pragma once

#include <string>
#include <vector>

#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

// Damerau-Levenshtein distance, optimal-string-alignment variant:
// insertion, deletion, substitution of one character, or transposition of
// two adjacent characters, each substring edited at most once around a
// transposition. Operates on Unicode scalar values.
int dl_distance(const std::u32string& a, const std::u32string& b);
int dl_distance(const std::string& a, const std::string& b);

// Same distance, but gives up once the result provably exceeds `cap` and
// returns cap + 1.
int dl_distance_capped(const std::u32string& a, const std::u32string& b, int cap);

// Length-banded correction thresholds: 3-5 -> 1, 6-9 -> 2, >= 10 -> 3.
// Throws std::invalid_argument for len < 3 (such tokens are never corrected).
int threshold_for_length(std::size_t len);

struct Candidate {
    std::string word;
    long freq = 0;
};

struct CandidateSet {
    std::string error;
    int threshold = 0;
    // tiers[d - 1] holds lexicon words at distance exactly d,
    // frequency-descending then lexicographic.
    std::vector<std::vector<Candidate>> tiers;

    bool empty() const {
        for (const auto& t : tiers)
            if (!t.empty()) return false;
        return true;
    }
};

// Length-band pruned, early-abandoning lexicon scan; inner loop is
// OpenMP-parallel. An empty result marks the error uncorrectable.
CandidateSet candidates_within(const std::string& error, const Lexicon& lexicon);

// Serial full-lexicon reference scan, kept as the oracle for the pruned
// path and for benchmarking.
CandidateSet candidates_within_serial(const std::string& error, const Lexicon& lexicon);

}  // namespace ocrpost
