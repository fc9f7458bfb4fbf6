#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocrpost/boundary_segment.hpp"
#include "ocrpost/ngram_correct.hpp"
#include "ocrpost/report.hpp"
#include "ocrpost/topic_model.hpp"

namespace ocrpost {

struct ScoredCombination {
    std::string corrected_text;  // space-joined, free of '_'
    int remaining_errors = 0;
    int dl_to_original = 0;
    double topic_score = 0.0;
};

struct Method5Options {
    SplitOptions split;
};

// Step 2: every error chunk of length >= 3 goes through Method 4, with the
// adjacent lexicon-word chunk as context, falling back to the nearest
// non-error token outside the span. Leftover '_' inside an uncorrectable
// chunk becomes a space; a standalone '_' chunk is dropped.
std::vector<std::string> correct_combination(const SplitCombination& combo,
                                             const std::optional<std::string>& outer_left,
                                             const std::optional<std::string>& outer_right,
                                             const Lexicon& lexicon,
                                             const NGramModel& ngrams);

// Step 3: remaining errors by re-detection, DL distance to the original
// surface, and the best per-topic probability sum of the lexicon words.
ScoredCombination score_combination(const std::vector<std::string>& corrected_words,
                                    const std::string& original_surface,
                                    const Lexicon& lexicon, const TopicModel& tm);

// Step 4: lexicographic minimum of (remaining_errors, dl_to_original,
// -topic_score); first in generation order on full ties.
const ScoredCombination& select_best(const std::vector<ScoredCombination>& scored);

// Method 5 over one document. Single left-to-right pass; consecutive error
// runs consume their first two tokens, replacements are not re-processed.
CorrectionReport method5_pipeline(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                  const NGramModel& ngrams, const TopicModel& tm,
                                  const Method5Options& opts = {});

// Methods 1-4 over one document; errors are corrected against original
// context only, so the per-error loop is parallel.
CorrectionReport correct_document(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                  const NGramModel& ngrams, int method);

// Multi-document drivers; documents are blank-line-separated blocks and
// positions in the report are global across them.
CorrectionReport correct_text(const std::string& text, const Lexicon& lexicon,
                              const NGramModel& ngrams, int method, const TopicModel* tm,
                              const Method5Options& opts = {});

}  // namespace ocrpost
