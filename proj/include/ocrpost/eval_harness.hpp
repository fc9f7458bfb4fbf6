#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocrpost/report.hpp"

namespace ocrpost {

struct GoldAnnotation {
    std::size_t error_position = 0;  // token index in the dirty text
    std::size_t span_length = 1;     // dirty tokens covered
    std::string gold;                // replacement; may contain spaces, never tabs
};

struct EvalReport {
    long detected = 0;
    long uncorrectable = 0;
    long right = 0;
    long partial = 0;  // counted within right, broken out separately
    double uncorrectable_rate = 0.0;
    double right_rate = 0.0;
    std::vector<std::size_t> detection_misses;  // gold positions nothing covered

    static EvalReport from_counts(long detected, long uncorrectable, long right,
                                  long partial);
    // Structured text with fixed key names; rates as percentages, one decimal.
    std::string to_text() const;
};

// A correction is right iff its output equals the gold string after
// normalization; partial when the word sets overlap without matching.
// Rates condition on detected errors; gold spans no decision covers are
// reported as detection misses.
EvalReport evaluate(const CorrectionReport& report, std::vector<GoldAnnotation> gold);

struct InjectionRates {
    double single_word = 0.0;
    double run_on = 0.0;
    double split = 0.0;
};

struct InjectionResult {
    std::vector<std::string> dirty_tokens;
    std::vector<GoldAnnotation> gold;

    std::string dirty_text() const;
};

// Per eligible token (length >= 3, alphabetic) applies at most one of: a
// random DL-1 character mutation, a run-on with the next token, or a split
// at a random interior position. Deterministic under the seed.
InjectionResult inject_errors(const std::vector<std::string>& clean_tokens,
                              const InjectionRates& rates, std::uint64_t seed);

void save_gold(const std::vector<GoldAnnotation>& gold, const std::string& path);
std::vector<GoldAnnotation> load_gold(const std::string& path);

}  // namespace ocrpost
