#include "ocrpost/error_detect.hpp"

namespace ocrpost {

bool is_nonword_error(const Token& token, const Lexicon& lexicon) {
    const std::string& w = token.normalized;
    if (!is_correctable_word(w)) return false;
    if (codepoint_length(w) < 3) return false;
    return !lexicon.contains(w);
}

std::vector<ErrorSpan> detect_errors(const std::vector<Token>& tokens,
                                     const Lexicon& lexicon) {
    std::vector<bool> flagged(tokens.size(), false);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        flagged[i] = is_nonword_error(tokens[i], lexicon);
    }

    std::vector<ErrorSpan> spans;
    auto context_at = [&](std::size_t i) -> std::optional<ContextWord> {
        if (i >= tokens.size()) return std::nullopt;
        return ContextWord{tokens[i].normalized, !flagged[i]};
    };

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!flagged[i]) continue;
        ErrorSpan span;
        span.position = i;
        span.error = tokens[i].normalized;
        if (i >= 1) span.prev1 = context_at(i - 1);
        if (i >= 2) span.prev2 = context_at(i - 2);
        span.next1 = context_at(i + 1);
        if (i + 1 < tokens.size() && flagged[i + 1]) {
            span.pattern = ErrorSpan::Pattern::ConsecutivePair;
            span.second_position = i + 1;
            span.second_error = tokens[i + 1].normalized;
        }
        spans.push_back(std::move(span));
    }
    return spans;
}

}  // namespace ocrpost
