#pragma once

#include <optional>
#include <string>

#include "ocrpost/edit_distance.hpp"
#include "ocrpost/error_detect.hpp"
#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

struct CorrectionDecision {
    std::string original;
    bool corrected = false;
    std::string word;       // valid when corrected
    int distance_tier = 0;  // DL distance of the chosen word
    int method_used = 0;
    long score = 0;

    static CorrectionDecision uncorrectable(std::string original) {
        CorrectionDecision d;
        d.original = std::move(original);
        return d;
    }
};

// Context words usable for n-gram scoring; absent entries trigger the
// fallback ladder.
struct NgramContext {
    std::optional<std::string> prev2, prev1, next1;

    static NgramContext from_span(const ErrorSpan& span);
};

// Method 1: lowest non-empty tier, then largest lexicon frequency.
CorrectionDecision correct_method1(const CandidateSet& cands);

// Methods 2-4. Scores candidates in the lowest non-empty tier:
//   2: bigram(prev1, c)   3: trigram(prev2, prev1, c)   4: trigram(prev1, c, next1)
// All-zero scores or missing context fall back: Method 4 tries the sum of
// left and right bigram counts first; everything else drops to Method 1.
CorrectionDecision correct_with_context(int method, const CandidateSet& cands,
                                        const NgramContext& ctx,
                                        const NGramModel& ngrams);

}  // namespace ocrpost
