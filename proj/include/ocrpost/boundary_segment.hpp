#pragma once

#include <string>
#include <vector>

#include "ocrpost/error_detect.hpp"
#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

struct ZeroBlankString {
    std::string text;  // no whitespace; at most one '_' at the original boundary
    std::size_t span_begin = 0;  // first consumed token index
    std::size_t span_length = 1;
    std::string original_surface;  // space-separated normalized source tokens
};

enum class ChunkKind { LexiconWord, SegmentSymbol, ErrorChunk };

struct Chunk {
    std::string text;
    ChunkKind kind = ChunkKind::ErrorChunk;

    bool operator==(const Chunk&) const = default;
};

struct SplitCombination {
    std::vector<Chunk> chunks;

    bool operator==(const SplitCombination&) const = default;
    std::string concatenated() const;
};

struct SplitOptions {
    // Zero-blank strings longer than this (code points, '_' excluded)
    // degrade to the whole-string combination only; generous enough for a
    // run-on pair of two average-length words.
    std::size_t max_length = 18;
    std::size_t max_combinations = 4096;
};

ZeroBlankString build_zero_blank(const ErrorSpan& span, const std::vector<Token>& tokens);

// Enumerates every dictionary-consistent split of the zero-blank string.
// At each scan position with a lexicon match the search branches between
// cutting the match off (preceding unmatched characters become one error
// chunk) and scanning past it; the all-skip terminal yields the whole
// remaining string as a single chunk. The splitting dictionary is the
// lexicon plus the segmentation symbol "_". Results are deduplicated,
// generation order, cut before skip.
std::vector<SplitCombination> dfs_split(const ZeroBlankString& zbs, const Lexicon& lexicon,
                                        const SplitOptions& opts = {});

}  // namespace ocrpost
