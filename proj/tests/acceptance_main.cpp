// Acceptance gate: each numbered criterion prints one [PASS]/[FAIL] line.
// The process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ocrpost/boundary_correct.hpp"
#include "ocrpost/boundary_segment.hpp"
#include "ocrpost/edit_distance.hpp"
#include "ocrpost/error_detect.hpp"
#include "ocrpost/eval_harness.hpp"
#include "ocrpost/text_ingest.hpp"
#include "ocrpost/topic_model.hpp"

using namespace ocrpost;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

void run_criterion(int number, const Criterion& c) {
    std::string detail;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit_seconds) {
        ok = false;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "exceeded %.0fs budget", c.limit_seconds);
        if (!detail.empty()) detail += "; ";
        detail += buf;
    }
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                c.name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

// -------- shared fixtures --------

std::string reference_corpus() {
    std::string text;
    for (int i = 0; i < 6; ++i) {
        text += "the contested election was held these days\n";
        text += "they test and they tested the contest again\n";
        text += "tested election results were contested twice\n";
    }
    return text;
}

struct ReferenceFixture {
    Lexicon lexicon;
    NGramModel ngrams;
    TopicModel tm;

    ReferenceFixture() {
        auto docs = tokenize_documents(reference_corpus());
        lexicon = build_lexicon(docs, 5, 3);
        ngrams = build_ngrams(docs);
        LdaConfig cfg;
        cfg.K = 5;
        cfg.iterations = 100;
        cfg.seed = 13;
        tm = fit_lda(docs, cfg);
    }
};

// Independent recursive reference for optimal string alignment distance,
// memoized over (i, j) prefix pairs.
int osa_oracle(const std::string& a, const std::string& b) {
    std::unordered_map<long, int> memo;
    std::function<int(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t j) -> int {
        if (i == 0) return static_cast<int>(j);
        if (j == 0) return static_cast<int>(i);
        const long key = static_cast<long>(i) * 1000 + static_cast<long>(j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int best = rec(i - 1, j) + 1;
        best = std::min(best, rec(i, j - 1) + 1);
        best = std::min(best, rec(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1));
        if (i >= 2 && j >= 2 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
            best = std::min(best, rec(i - 2, j - 2) + 1);
        }
        memo[key] = best;
        return best;
    };
    return rec(a.size(), b.size());
}

std::vector<std::string> all_strings_up_to(std::size_t max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& s : frontier) {
            for (char ch : {'a', 'b', 'c'}) {
                next.push_back(s + ch);
                out.push_back(next.back());
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<std::string> benchmark_vocabulary() {
    return {"mountain", "river",   "window",  "curtain", "harvest",  "lantern",
            "pasture", "village",  "journal", "evening", "morning",  "thunder",
            "blanket", "ceiling",  "doorway", "feather", "garden",   "history",
            "island",  "kitchen",  "library", "meadow",  "number",   "orchard",
            "pencil",  "quarter",  "ribbon",  "shelter", "timber",   "understand",
            "valley",  "weather",  "yellow",  "zealous", "bridge",   "candle",
            "dinner",  "engine",   "flower",  "ground",  "hollow",   "insect",
            "jacket",  "kindly",   "letter",  "market",  "nation",   "office",
            "people",  "quietly"};
}

std::vector<std::string> sample_tokens(const std::vector<std::string>& vocab,
                                       std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(vocab[pick(rng)]);
    return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) text.push_back(i % 12 == 11 ? '\n' : ' ');
        text += tokens[i];
    }
    return text;
}

std::unordered_map<std::string, long> synthetic_lexicon_counts(std::size_t at_least) {
    static const char* syllables[] = {
        "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du", "fa", "fe", "fi",
        "fo", "fu", "ga", "ge", "gi", "go", "gu", "ka", "ke", "ki", "ko", "ku", "la",
        "le", "li", "lo", "lu", "ma", "me", "mi", "mo", "mu", "na", "ne", "ni", "no",
        "nu"};
    std::unordered_map<std::string, long> counts;
    for (const char* a : syllables) {
        for (const char* b : syllables) {
            for (const char* c : syllables) {
                counts[std::string(a) + b + c] = 1 + (counts.size() % 40);
                if (counts.size() >= at_least) return counts;
            }
        }
    }
    return counts;
}

std::set<std::size_t> uncorrectable_positions(const CorrectionReport& report) {
    std::set<std::size_t> out;
    for (const Decision& d : report.decisions) {
        if (d.remaining > 0) out.insert(d.position);
    }
    return out;
}

}  // namespace

int main() {
    ReferenceFixture fx;

    run_criterion(1, {"golden worked example", 1.0, [&](std::string& detail) {
        auto lex = Lexicon::from_counts({{"contested", 80}, {"election", 90}, {"test", 30},
                                         {"tested", 120}, {"contest", 40}},
                                        1, 3);
        ZeroBlankString zbs;
        zbs.text = "cont_estedelection";
        zbs.original_surface = "cont estedelection";
        auto combos = dfs_split(zbs, lex);
        if (combos.size() != 4) {
            detail = "expected 4 combinations, got " + std::to_string(combos.size());
            return false;
        }
        const std::vector<std::vector<std::string>> expected = {
            {"cont", "_", "ested", "election"},
            {"cont", "_", "estedelection"},
            {"cont_ested", "election"},
            {"cont_estedelection"}};
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<std::string> got;
            for (const Chunk& c : combos[i].chunks) got.push_back(c.text);
            if (got != expected[i]) {
                detail = "combination " + std::to_string(i) + " out of order";
                return false;
            }
        }
        auto report = correct_text("in cont estedelection these", fx.lexicon, fx.ngrams, 5,
                                   &fx.tm);
        if (report.corrected_text != "in contested election these") {
            detail = "pipeline produced: " + report.corrected_text;
            return false;
        }
        return true;
    }});

    run_criterion(2, {"edit distance matches recursive oracle exhaustively", 30.0,
                      [&](std::string& detail) {
        auto strings = all_strings_up_to(5);
        for (const auto& a : strings) {
            for (const auto& b : strings) {
                const int got = dl_distance(a, b);
                const int want = osa_oracle(a, b);
                if (got != want) {
                    detail = "mismatch on (" + a + ", " + b + "): " +
                             std::to_string(got) + " vs " + std::to_string(want);
                    return false;
                }
            }
        }
        detail = std::to_string(strings.size() * strings.size()) + " pairs checked";
        return true;
    }});

    run_criterion(3, {"length-banded candidate thresholds", 5.0, [&](std::string& detail) {
        auto lex = Lexicon::from_counts(
            {{"abcd", 5}, {"abcdx", 5}, {"abcdefx", 5}, {"abcdexy", 5},
             {"abcdefghij", 5}, {"abcdefgxyz", 5}},
            1, 3);
        // length 4: only distance-1 candidates admitted
        auto c4 = candidates_within("abcx", lex);
        if (c4.threshold != 1) { detail = "len-4 threshold"; return false; }
        // length 7: distance 2 admitted, 3 not
        auto c7 = candidates_within("abcdeef", lex);
        if (c7.threshold != 2) { detail = "len-7 threshold"; return false; }
        // length 10: distance 3 admitted
        auto c10 = candidates_within("abcdefghxx", lex);
        if (c10.threshold != 3) { detail = "len-10 threshold"; return false; }
        bool found = false;
        for (const auto& cand : c10.tiers[1]) found |= cand.word == "abcdefghij";
        if (!found) { detail = "distance-2 candidate missing at len 10"; return false; }
        try {
            candidates_within("ab", lex);
            detail = "short input accepted";
            return false;
        } catch (const std::invalid_argument&) {}
        // banded scan agrees with the serial full-lexicon reference
        auto fast = candidates_within("abcdeef", lex);
        auto slow = candidates_within_serial("abcdeef", lex);
        if (fast.tiers.size() != slow.tiers.size()) { detail = "tier shape"; return false; }
        for (std::size_t t = 0; t < fast.tiers.size(); ++t) {
            if (fast.tiers[t].size() != slow.tiers[t].size()) {
                detail = "tier content";
                return false;
            }
            for (std::size_t i = 0; i < fast.tiers[t].size(); ++i) {
                if (fast.tiers[t][i].word != slow.tiers[t][i].word) {
                    detail = "tier order";
                    return false;
                }
            }
        }
        return true;
    }});

    run_criterion(4, {"split enumeration preserves characters (1000 strings)", 60.0,
                      [&](std::string& detail) {
        std::mt19937 rng(53);
        std::uniform_int_distribution<int> letter(0, 3);
        std::uniform_int_distribution<int> wlen(3, 5);
        std::uniform_int_distribution<int> slen(1, 14);
        long combos_seen = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::unordered_map<std::string, long> counts;
            for (int w = 0; w < 5; ++w) {
                std::string word;
                const int n = wlen(rng);
                for (int i = 0; i < n; ++i)
                    word.push_back(static_cast<char>('a' + letter(rng)));
                counts[word] = 10;
            }
            auto lex = Lexicon::from_counts(counts, 1, 3);
            std::string s;
            const int n = slen(rng);
            for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + letter(rng)));
            if (trial % 3 == 0) s.insert(s.size() / 2, "_");
            ZeroBlankString zbs;
            zbs.text = s;
            zbs.original_surface = s;
            bool terminal = false;
            for (const auto& combo : dfs_split(zbs, lex)) {
                ++combos_seen;
                if (combo.concatenated() != s) {
                    detail = "characters lost for input " + s;
                    return false;
                }
                if (combo.chunks.size() == 1 && combo.chunks[0].text == s) terminal = true;
            }
            if (!terminal) {
                detail = "whole-string terminal missing for " + s;
                return false;
            }
        }
        detail = std::to_string(combos_seen) + " combinations checked";
        return true;
    }});

    run_criterion(5, {"boundary-aware method beats per-token method by >= 10 points", 300.0,
                      [&](std::string& detail) {
        const auto vocab = benchmark_vocabulary();
        const auto clean = sample_tokens(vocab, 2000, 71);
        const std::string clean_text = join_tokens(clean);
        const auto docs = tokenize_documents(clean_text);
        const Lexicon lexicon = build_lexicon(docs, 1, 3);
        const NGramModel ngrams = build_ngrams(docs);
        LdaConfig cfg;
        cfg.K = 5;
        cfg.iterations = 200;
        cfg.seed = 7;
        const TopicModel tm = fit_lda(docs, cfg);

        const auto injected = inject_errors(clean, InjectionRates{0.10, 0.05, 0.05}, 29);
        const std::string dirty = injected.dirty_text();

        const auto report4 = correct_text(dirty, lexicon, ngrams, 4, nullptr);
        const auto report5 = correct_text(dirty, lexicon, ngrams, 5, &tm);
        const auto eval4 = evaluate(report4, injected.gold);
        const auto eval5 = evaluate(report5, injected.gold);

        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "right rate %.1f%% (per-token) vs %.1f%% (boundary-aware), %zu errors",
                      eval4.right_rate * 100.0, eval5.right_rate * 100.0,
                      injected.gold.size());
        detail = buf;
        if (eval5.right_rate < eval4.right_rate + 0.10) return false;

        // methods 1-4 must agree on which errors are uncorrectable
        const auto base = uncorrectable_positions(correct_text(dirty, lexicon, ngrams, 1,
                                                               nullptr));
        for (int method = 2; method <= 4; ++method) {
            if (uncorrectable_positions(correct_text(dirty, lexicon, ngrams, method,
                                                     nullptr)) != base) {
                detail += "; uncorrectable sets diverge at method " +
                          std::to_string(method);
                return false;
            }
        }
        return true;
    }});

    run_criterion(6, {"metric arithmetic and formatting", 1.0, [&](std::string& detail) {
        const auto r = EvalReport::from_counts(235, 82, 133, 12);
        const std::string text = r.to_text();
        if (text.find("uncorrectable_rate\t34.9%") == std::string::npos) {
            detail = "uncorrectable rate misformatted";
            return false;
        }
        if (text.find("right_rate\t56.6%") == std::string::npos) {
            detail = "right rate misformatted";
            return false;
        }
        if (std::abs(r.right_rate - 133.0 / 235.0) > 1e-12) {
            detail = "rate arithmetic";
            return false;
        }
        return true;
    }});

    run_criterion(7, {"runtime envelope on a 50k-word lexicon", 1260.0,
                      [&](std::string& detail) {
        const auto counts = synthetic_lexicon_counts(50000);
        const Lexicon lexicon = Lexicon::from_counts(counts, 1, 3);
        std::vector<std::string> vocab;
        vocab.reserve(counts.size());
        for (const auto& [w, c] : counts) vocab.push_back(w);
        std::sort(vocab.begin(), vocab.end());

        const auto clean = sample_tokens(vocab, 2300, 83);
        const std::string clean_text = join_tokens(clean);
        const auto docs = tokenize_documents(clean_text);
        const NGramModel ngrams = build_ngrams(docs);
        LdaConfig cfg;
        cfg.K = 5;
        cfg.iterations = 100;
        cfg.seed = 17;
        const TopicModel tm = fit_lda(docs, cfg);

        const auto injected = inject_errors(clean, InjectionRates{0.05, 0.025, 0.025}, 31);
        const std::string dirty = injected.dirty_text();

        char buf[200];
        for (int method = 1; method <= 4; ++method) {
            const auto t0 = Clock::now();
            const auto report = correct_text(dirty, lexicon, ngrams, method, nullptr);
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (secs > 60.0) {
                std::snprintf(buf, sizeof(buf), "method %d took %.1fs (limit 60s)", method,
                              secs);
                detail = buf;
                return false;
            }
            if (report.decisions.empty()) {
                detail = "no errors detected in benchmark text";
                return false;
            }
        }
        const auto t0 = Clock::now();
        correct_text(dirty, lexicon, ngrams, 5, &tm);
        const double secs5 = std::chrono::duration<double>(Clock::now() - t0).count();
        std::snprintf(buf, sizeof(buf),
                      "lexicon %zu words, %zu injected errors, boundary method %.1fs",
                      counts.size(), injected.gold.size(), secs5);
        detail = buf;
        return secs5 <= 1200.0;
    }});

    run_criterion(8, {"topic model normalization, determinism, monotonicity", 30.0,
                      [&](std::string& detail) {
        auto docs = tokenize_documents(
            "apple apple apple banana\n\ncarrot carrot carrot daikon\n\n"
            "apple banana apple\n\ncarrot daikon carrot\n");
        LdaConfig cfg;
        cfg.K = 2;
        cfg.iterations = 500;
        cfg.seed = 11;
        const auto tm = fit_lda(docs, cfg);
        for (int k = 0; k < tm.K; ++k) {
            double sum = 0.0;
            for (double p : tm.phi[k]) {
                if (p < 0.0) { detail = "negative probability"; return false; }
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                detail = "row " + std::to_string(k) + " sums to " + std::to_string(sum);
                return false;
            }
        }
        const auto again = fit_lda(docs, cfg);
        for (int k = 0; k < tm.K; ++k) {
            for (std::size_t v = 0; v < tm.phi[k].size(); ++v) {
                if (tm.phi[k][v] != again.phi[k][v]) {
                    detail = "same seed, different model";
                    return false;
                }
            }
        }
        const double one = combination_topic_score(tm, {"apple"});
        const double two = combination_topic_score(tm, {"apple", "banana"});
        if (!(one > 0.0) || two < one) {
            detail = "score not monotone under added lexicon words";
            return false;
        }
        return true;
    }});

    run_criterion(9, {"clean text is a fixed point for every method", 30.0,
                      [&](std::string& detail) {
        const std::string clean =
            "the contested election was held these days\n\n"
            "they test and they tested the contest again";
        const std::string expected =
            "the contested election was held these days\n\n"
            "they test and they tested the contest again";
        for (int method = 1; method <= 5; ++method) {
            const auto report = correct_text(clean, fx.lexicon, fx.ngrams, method,
                                             method == 5 ? &fx.tm : nullptr);
            if (!report.decisions.empty()) {
                detail = "method " + std::to_string(method) + " invented decisions";
                return false;
            }
            if (report.corrected_text != expected) {
                detail = "method " + std::to_string(method) + " altered clean text";
                return false;
            }
        }
        return true;
    }});

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
