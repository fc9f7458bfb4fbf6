#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

struct ContextWord {
    std::string word;
    bool usable = true;  // false when the neighbor is itself a detected error
};

struct ErrorSpan {
    enum class Pattern { Isolated, ConsecutivePair };

    std::size_t position = 0;  // index into the document's token sequence
    std::string error;         // normalized form
    std::optional<ContextWord> prev2, prev1, next1;
    Pattern pattern = Pattern::Isolated;
    std::size_t second_position = 0;  // valid when pattern == ConsecutivePair
    std::string second_error;
};

// Flags every token of normalized length >= 3 that is alphabetic and absent
// from the lexicon. Digit-bearing tokens and 1-2 character tokens are never
// flagged. Pattern is ConsecutivePair when the next token is also flagged.
std::vector<ErrorSpan> detect_errors(const std::vector<Token>& tokens,
                                     const Lexicon& lexicon);

bool is_nonword_error(const Token& token, const Lexicon& lexicon);

}  // namespace ocrpost
