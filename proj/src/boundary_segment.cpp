#include "ocrpost/boundary_segment.hpp"

#include <map>
#include <set>

namespace ocrpost {

std::string SplitCombination::concatenated() const {
    std::string out;
    for (const Chunk& c : chunks) out += c.text;
    return out;
}

ZeroBlankString build_zero_blank(const ErrorSpan& span, const std::vector<Token>& tokens) {
    ZeroBlankString zbs;
    zbs.span_begin = span.position;
    if (span.pattern == ErrorSpan::Pattern::ConsecutivePair) {
        zbs.text = span.error + "_" + span.second_error;
        zbs.span_length = 2;
        zbs.original_surface = span.error + " " + span.second_error;
    } else {
        zbs.text = span.error;
        zbs.span_length = 1;
        zbs.original_surface = span.error;
    }
    (void)tokens;
    return zbs;
}

namespace {

using PieceSeq = std::vector<std::u32string>;

struct Splitter {
    const std::u32string s;
    const Lexicon& lexicon;
    std::size_t cap;
    std::map<std::size_t, std::vector<PieceSeq>> memo;

    // Enumerates piece sequences for the suffix starting at `from`. Pieces
    // alternate between unmatched residuals and dictionary matches; the
    // all-skip terminal is the whole suffix as one piece.
    const std::vector<PieceSeq>& enumerate(std::size_t from) {
        auto it = memo.find(from);
        if (it != memo.end()) return it->second;
        std::vector<PieceSeq> results;
        if (from == s.size()) {
            results.push_back({});
            memo.emplace(from, std::move(results));
            return memo.at(from);
        }
        for (std::size_t j = from; j < s.size() && results.size() < cap; ++j) {
            for (std::size_t len : match_lengths(j)) {
                const auto& rests = enumerate(j + len);
                for (const PieceSeq& rest : rests) {
                    if (results.size() >= cap) break;
                    PieceSeq combo;
                    if (j > from) combo.push_back(s.substr(from, j - from));
                    combo.push_back(s.substr(j, len));
                    combo.insert(combo.end(), rest.begin(), rest.end());
                    results.push_back(std::move(combo));
                }
            }
        }
        if (results.size() < cap) {
            results.push_back({s.substr(from)});
        }
        memo.emplace(from, std::move(results));
        return memo.at(from);
    }

    // Dictionary match lengths at position j, ascending. The segmentation
    // symbol acts as a one-character dictionary entry.
    std::vector<std::size_t> match_lengths(std::size_t j) const {
        std::vector<std::size_t> out;
        if (s[j] == U'_') out.push_back(1);
        for (std::size_t len : lexicon.lengths()) {
            if (j + len > s.size()) break;
            if (lexicon.contains(to_utf8(s.substr(j, len)))) out.push_back(len);
        }
        return out;
    }
};

Chunk classify(const std::u32string& piece, const Lexicon& lexicon) {
    Chunk c;
    c.text = to_utf8(piece);
    if (c.text == "_") {
        c.kind = ChunkKind::SegmentSymbol;
    } else if (lexicon.contains(c.text)) {
        c.kind = ChunkKind::LexiconWord;
    } else {
        c.kind = ChunkKind::ErrorChunk;
    }
    return c;
}

}  // namespace

std::vector<SplitCombination> dfs_split(const ZeroBlankString& zbs, const Lexicon& lexicon,
                                        const SplitOptions& opts) {
    const std::u32string s = to_u32(zbs.text);

    std::size_t effective_len = 0;
    for (char32_t cp : s) {
        if (cp != U'_') ++effective_len;
    }

    auto make_combo = [&](const PieceSeq& pieces) {
        SplitCombination combo;
        combo.chunks.reserve(pieces.size());
        for (const auto& p : pieces) combo.chunks.push_back(classify(p, lexicon));
        return combo;
    };

    if (effective_len > opts.max_length) {
        // Degrades to the trivial whole-string combination; the caller
        // falls back to per-token correction.
        return {make_combo({s})};
    }

    Splitter splitter{s, lexicon, opts.max_combinations, {}};
    const auto& raw = splitter.enumerate(0);

    auto key_of = [](const SplitCombination& combo) {
        std::string key;
        for (const Chunk& c : combo.chunks) {
            key += c.text;
            key.push_back(static_cast<char>('0' + static_cast<int>(c.kind)));
            key.push_back('\x1f');
        }
        return key;
    };

    std::vector<SplitCombination> out;
    std::set<std::string> seen;
    for (const PieceSeq& pieces : raw) {
        SplitCombination combo = make_combo(pieces);
        if (seen.insert(key_of(combo)).second) {
            out.push_back(std::move(combo));
        }
        if (out.size() >= opts.max_combinations) break;
    }

    // The whole-string terminal is part of the contract even when the
    // combination cap truncates generation.
    SplitCombination terminal = make_combo({s});
    if (seen.insert(key_of(terminal)).second) {
        if (out.size() >= opts.max_combinations) out.pop_back();
        out.push_back(std::move(terminal));
    }
    return out;
}

}  // namespace ocrpost
