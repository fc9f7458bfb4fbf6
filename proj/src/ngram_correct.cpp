#include "ocrpost/ngram_correct.hpp"

#include <stdexcept>

namespace ocrpost {

NgramContext NgramContext::from_span(const ErrorSpan& span) {
    NgramContext ctx;
    if (span.prev2 && span.prev2->usable) ctx.prev2 = span.prev2->word;
    if (span.prev1 && span.prev1->usable) ctx.prev1 = span.prev1->word;
    if (span.next1 && span.next1->usable) ctx.next1 = span.next1->word;
    return ctx;
}

namespace {

int lowest_tier(const CandidateSet& cands) {
    for (std::size_t i = 0; i < cands.tiers.size(); ++i) {
        if (!cands.tiers[i].empty()) return static_cast<int>(i) + 1;
    }
    return 0;
}

}  // namespace

CorrectionDecision correct_method1(const CandidateSet& cands) {
    int tier = lowest_tier(cands);
    if (tier == 0) return CorrectionDecision::uncorrectable(cands.error);
    // First element of the tier already is the frequency argmax.
    const Candidate& c = cands.tiers[tier - 1].front();
    CorrectionDecision d;
    d.original = cands.error;
    d.corrected = true;
    d.word = c.word;
    d.distance_tier = tier;
    d.method_used = 1;
    d.score = c.freq;
    return d;
}

CorrectionDecision correct_with_context(int method, const CandidateSet& cands,
                                        const NgramContext& ctx,
                                        const NGramModel& ngrams) {
    if (method < 2 || method > 4) throw std::invalid_argument("method must be 2, 3 or 4");
    int tier = lowest_tier(cands);
    if (tier == 0) return CorrectionDecision::uncorrectable(cands.error);

    const auto& list = cands.tiers[tier - 1];
    auto argmax = [&](auto&& score_of) -> CorrectionDecision {
        const Candidate* best = nullptr;
        long best_score = -1;
        for (const Candidate& c : list) {
            long s = score_of(c.word);
            if (s > best_score) {
                best = &c;
                best_score = s;
            }
        }
        CorrectionDecision d;
        d.original = cands.error;
        d.corrected = true;
        d.word = best->word;
        d.distance_tier = tier;
        d.method_used = method;
        d.score = best_score;
        return d;
    };
    auto any_nonzero = [&](auto&& score_of) {
        for (const Candidate& c : list)
            if (score_of(c.word) > 0) return true;
        return false;
    };

    if (method == 2 && ctx.prev1) {
        auto score = [&](const std::string& w) { return ngrams.bigram(*ctx.prev1, w); };
        if (any_nonzero(score)) return argmax(score);
    } else if (method == 3 && ctx.prev2 && ctx.prev1) {
        auto score = [&](const std::string& w) {
            return ngrams.trigram(*ctx.prev2, *ctx.prev1, w);
        };
        if (any_nonzero(score)) return argmax(score);
    } else if (method == 4) {
        if (ctx.prev1 && ctx.next1) {
            auto score = [&](const std::string& w) {
                return ngrams.trigram(*ctx.prev1, w, *ctx.next1);
            };
            if (any_nonzero(score)) return argmax(score);
        }
        if (ctx.prev1 || ctx.next1) {
            auto score = [&](const std::string& w) {
                long s = 0;
                if (ctx.prev1) s += ngrams.bigram(*ctx.prev1, w);
                if (ctx.next1) s += ngrams.bigram(w, *ctx.next1);
                return s;
            };
            if (any_nonzero(score)) return argmax(score);
        }
    }

    CorrectionDecision d = correct_method1(cands);
    return d;
}

}  // namespace ocrpost
