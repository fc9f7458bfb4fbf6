#include "ocrpost/boundary_correct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ocrpost/edit_distance.hpp"
#include "ocrpost/error_detect.hpp"

namespace ocrpost {

namespace {

void push_pieces(std::vector<std::string>& out, const std::string& text) {
    // '_' inside an uncorrectable chunk becomes a space.
    std::string piece;
    for (char ch : text) {
        if (ch == '_') {
            if (!piece.empty()) out.push_back(std::move(piece));
            piece.clear();
        } else {
            piece.push_back(ch);
        }
    }
    if (!piece.empty()) out.push_back(std::move(piece));
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += words[i];
    }
    return out;
}

}  // namespace

std::vector<std::string> correct_combination(const SplitCombination& combo,
                                             const std::optional<std::string>& outer_left,
                                             const std::optional<std::string>& outer_right,
                                             const Lexicon& lexicon,
                                             const NGramModel& ngrams) {
    const auto& chunks = combo.chunks;
    auto neighbor_word = [&](std::size_t i, int dir,
                             const std::optional<std::string>& outer)
        -> std::optional<std::string> {
        long j = static_cast<long>(i) + dir;
        while (j >= 0 && j < static_cast<long>(chunks.size()) &&
               chunks[j].kind == ChunkKind::SegmentSymbol) {
            j += dir;
        }
        if (j >= 0 && j < static_cast<long>(chunks.size())) {
            if (chunks[j].kind == ChunkKind::LexiconWord) return chunks[j].text;
            return outer;  // adjacent chunk is an error; use outside context
        }
        return outer;
    };

    std::vector<std::string> out;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        const Chunk& chunk = chunks[i];
        switch (chunk.kind) {
            case ChunkKind::SegmentSymbol:
                break;  // standalone symbol is unnecessary
            case ChunkKind::LexiconWord:
                out.push_back(chunk.text);
                break;
            case ChunkKind::ErrorChunk: {
                if (codepoint_length(chunk.text) >= 3) {
                    CandidateSet cands = candidates_within(chunk.text, lexicon);
                    NgramContext ctx;
                    ctx.prev1 = neighbor_word(i, -1, outer_left);
                    ctx.next1 = neighbor_word(i, +1, outer_right);
                    CorrectionDecision d = correct_with_context(4, cands, ctx, ngrams);
                    if (d.corrected) {
                        out.push_back(d.word);
                        break;
                    }
                }
                push_pieces(out, chunk.text);
                break;
            }
        }
    }
    return out;
}

ScoredCombination score_combination(const std::vector<std::string>& corrected_words,
                                    const std::string& original_surface,
                                    const Lexicon& lexicon, const TopicModel& tm) {
    ScoredCombination sc;
    sc.corrected_text = join_words(corrected_words);

    std::vector<std::string> lexicon_words;
    for (const std::string& w : corrected_words) {
        if (lexicon.contains(w)) {
            lexicon_words.push_back(w);
        } else if (is_correctable_word(w) && codepoint_length(w) >= 3) {
            ++sc.remaining_errors;
        }
    }
    sc.dl_to_original = dl_distance(sc.corrected_text, original_surface);
    sc.topic_score = combination_topic_score(tm, lexicon_words);
    return sc;
}

namespace {

bool better(const ScoredCombination& a, const ScoredCombination& b) {
    if (a.remaining_errors != b.remaining_errors)
        return a.remaining_errors < b.remaining_errors;
    if (a.dl_to_original != b.dl_to_original) return a.dl_to_original < b.dl_to_original;
    return a.topic_score > b.topic_score;
}

}  // namespace

const ScoredCombination& select_best(const std::vector<ScoredCombination>& scored) {
    if (scored.empty()) throw std::invalid_argument("select_best on empty list");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scored.size(); ++i) {
        if (better(scored[i], scored[best])) best = i;
    }
    return scored[best];
}

namespace {

// Nearest token outside [begin, end) in the given direction that is not
// itself a non-word error.
std::optional<std::string> outer_context(const std::vector<Token>& tokens,
                                         const Lexicon& lexicon, long from, int dir) {
    for (long j = from; j >= 0 && j < static_cast<long>(tokens.size()); j += dir) {
        if (!is_nonword_error(tokens[j], lexicon)) return tokens[j].normalized;
    }
    return std::nullopt;
}

NgramContext context_at(const std::vector<Token>& tokens, const Lexicon& lexicon,
                        std::size_t i) {
    NgramContext ctx;
    auto usable = [&](std::size_t j) -> std::optional<std::string> {
        if (j >= tokens.size() || is_nonword_error(tokens[j], lexicon)) return std::nullopt;
        return tokens[j].normalized;
    };
    if (i >= 1) ctx.prev1 = usable(i - 1);
    if (i >= 2) ctx.prev2 = usable(i - 2);
    ctx.next1 = usable(i + 1);
    return ctx;
}

struct Replacement {
    std::size_t span_length = 1;
    std::vector<std::string> words;
};

std::string assemble_output(const std::vector<Token>& tokens,
                            const std::map<std::size_t, Replacement>& replacements) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        auto it = replacements.find(i);
        if (it == replacements.end()) {
            out.push_back(tokens[i].surface);
            ++i;
            continue;
        }
        const Replacement& rep = it->second;
        std::vector<std::string> words = rep.words;
        if (!words.empty()) {
            auto [lead, _t] = surrounding_punctuation(tokens[i].surface);
            auto [_l, trail] =
                surrounding_punctuation(tokens[i + rep.span_length - 1].surface);
            words.front() = lead + words.front();
            words.back() += trail;
        }
        for (std::string& w : words) out.push_back(std::move(w));
        i += rep.span_length;
    }
    return join_words(out);
}

}  // namespace

CorrectionReport method5_pipeline(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                  const NGramModel& ngrams, const TopicModel& tm,
                                  const Method5Options& opts) {
    CorrectionReport report;
    std::map<std::size_t, Replacement> replacements;

    const std::vector<ErrorSpan> spans = detect_errors(tokens, lexicon);
    std::size_t resume = 0;
    for (const ErrorSpan& span : spans) {
        if (span.position < resume) continue;

        ZeroBlankString zbs = build_zero_blank(span, tokens);
        const std::size_t span_end = span.position + zbs.span_length;

        std::size_t effective_len = 0;
        for (char32_t cp : to_u32(zbs.text)) {
            if (cp != U'_') ++effective_len;
        }

        if (effective_len > opts.split.max_length) {
            // Too long to split; each consumed token goes through Method 4
            // on its own.
            for (std::size_t i = span.position; i < span_end; ++i) {
                CandidateSet cands = candidates_within(tokens[i].normalized, lexicon);
                CorrectionDecision d = correct_with_context(
                    4, cands, context_at(tokens, lexicon, i), ngrams);
                Decision rec;
                rec.position = i;
                rec.span_length = 1;
                rec.detected = 1;
                rec.remaining = d.corrected ? 0 : 1;
                rec.original = tokens[i].normalized;
                rec.output = d.corrected ? d.word : tokens[i].normalized;
                rec.method = 4;
                report.decisions.push_back(std::move(rec));
                if (d.corrected) {
                    replacements[i] = Replacement{1, {d.word}};
                }
            }
            resume = span_end;
            continue;
        }

        const std::vector<SplitCombination> combos = dfs_split(zbs, lexicon, opts.split);
        const std::optional<std::string> left =
            outer_context(tokens, lexicon, static_cast<long>(span.position) - 1, -1);
        const std::optional<std::string> right =
            outer_context(tokens, lexicon, static_cast<long>(span_end), +1);

        std::vector<std::vector<std::string>> corrected(combos.size());
        std::vector<ScoredCombination> scored(combos.size());
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < static_cast<long>(combos.size()); ++c) {
            corrected[c] = correct_combination(combos[c], left, right, lexicon, ngrams);
            scored[c] = score_combination(corrected[c], zbs.original_surface, lexicon, tm);
        }

        std::size_t best = 0;
        for (std::size_t c = 1; c < scored.size(); ++c) {
            if (better(scored[c], scored[best])) best = c;
        }

        replacements[span.position] = Replacement{zbs.span_length, corrected[best]};

        Decision rec;
        rec.position = span.position;
        rec.span_length = zbs.span_length;
        rec.detected = static_cast<int>(zbs.span_length);
        rec.remaining = scored[best].remaining_errors;
        rec.original = zbs.original_surface;
        rec.output = scored[best].corrected_text;
        rec.method = 5;
        report.decisions.push_back(std::move(rec));

        resume = span_end;
    }

    report.corrected_text = assemble_output(tokens, replacements);
    return report;
}

CorrectionReport correct_document(const std::vector<Token>& tokens, const Lexicon& lexicon,
                                  const NGramModel& ngrams, int method) {
    if (method < 1 || method > 4) throw std::invalid_argument("method must be in 1..4");
    CorrectionReport report;
    const std::vector<ErrorSpan> spans = detect_errors(tokens, lexicon);

    std::vector<CorrectionDecision> decisions(spans.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(spans.size()); ++i) {
        CandidateSet cands = candidates_within(spans[i].error, lexicon);
        decisions[i] = method == 1
                           ? correct_method1(cands)
                           : correct_with_context(method, cands,
                                                  NgramContext::from_span(spans[i]), ngrams);
    }

    std::map<std::size_t, Replacement> replacements;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const CorrectionDecision& d = decisions[i];
        Decision rec;
        rec.position = spans[i].position;
        rec.span_length = 1;
        rec.detected = 1;
        rec.remaining = d.corrected ? 0 : 1;
        rec.original = spans[i].error;
        rec.output = d.corrected ? d.word : spans[i].error;
        rec.method = method;
        report.decisions.push_back(std::move(rec));
        if (d.corrected) {
            replacements[spans[i].position] = Replacement{1, {d.word}};
        }
    }

    report.corrected_text = assemble_output(tokens, replacements);
    return report;
}

CorrectionReport correct_text(const std::string& text, const Lexicon& lexicon,
                              const NGramModel& ngrams, int method, const TopicModel* tm,
                              const Method5Options& opts) {
    CorrectionReport report;
    std::size_t offset = 0;
    bool first = true;
    for (const auto& doc : tokenize_documents(text)) {
        CorrectionReport part;
        if (method == 5) {
            static const TopicModel empty_tm;
            part = method5_pipeline(doc, lexicon, ngrams, tm ? *tm : empty_tm, opts);
        } else {
            part = correct_document(doc, lexicon, ngrams, method);
        }
        for (Decision& d : part.decisions) {
            d.position += offset;
            report.decisions.push_back(std::move(d));
        }
        if (!first) report.corrected_text += "\n\n";
        report.corrected_text += part.corrected_text;
        offset += doc.size();
        first = false;
    }
    return report;
}

}  // namespace ocrpost
