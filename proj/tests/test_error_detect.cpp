#include <doctest.h>

#include <random>
#include <set>

#include "ocrpost/error_detect.hpp"

using namespace ocrpost;

namespace {

Lexicon small_lexicon() {
    return Lexicon::from_counts({{"reference", 10}, {"these", 20}, {"words", 15},
                                 {"and", 30}, {"correct", 9}},
                                1, 3);
}

}  // namespace

TEST_CASE("isolated error with clean neighbors") {
    auto lex = small_lexicon();
    auto spans = detect_errors(tokenize("in refereneeto these"), lex);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].error == "refereneeto");
    CHECK(spans[0].position == 1);
    CHECK(spans[0].pattern == ErrorSpan::Pattern::Isolated);
    REQUIRE(spans[0].prev1.has_value());
    CHECK(spans[0].prev1->word == "in");
    CHECK(spans[0].prev1->usable);
    REQUIRE(spans[0].next1.has_value());
    CHECK(spans[0].next1->word == "these");
}

TEST_CASE("consecutive errors pair up") {
    auto lex = small_lexicon();
    auto spans = detect_errors(tokenize("in refe rene eto these"), lex);
    REQUIRE(spans.size() == 3);
    CHECK(spans[0].error == "refe");
    CHECK(spans[0].pattern == ErrorSpan::Pattern::ConsecutivePair);
    CHECK(spans[0].second_position == 2);
    CHECK(spans[0].second_error == "rene");
    CHECK(spans[1].error == "rene");
    CHECK(spans[1].pattern == ErrorSpan::Pattern::ConsecutivePair);
    CHECK(spans[2].error == "eto");
    CHECK(spans[2].pattern == ErrorSpan::Pattern::Isolated);
    // neighbors that are themselves errors are recorded but unusable
    REQUIRE(spans[1].prev1.has_value());
    CHECK_FALSE(spans[1].prev1->usable);
    REQUIRE(spans[0].next1.has_value());
    CHECK_FALSE(spans[0].next1->usable);
}

TEST_CASE("clean text yields no errors") {
    auto lex = small_lexicon();
    CHECK(detect_errors(tokenize("these words and these correct words"), lex).empty());
}

TEST_CASE("short and digit-bearing tokens are never flagged") {
    auto lex = small_lexicon();
    auto spans = detect_errors(tokenize("zz 1865 a2c reference"), lex);
    CHECK(spans.empty());
}

TEST_CASE("detection equals set difference on random documents") {
    auto lex = small_lexicon();
    std::mt19937 rng(41);
    static const char* pool[] = {"reference", "these", "words", "qqq", "xyzzy",
                                 "and", "ab", "c3po", "wrrds"};
    for (int trial = 0; trial < 100; ++trial) {
        std::string text;
        std::uniform_int_distribution<int> pick(0, 8);
        std::uniform_int_distribution<int> n(0, 20);
        int count = n(rng);
        for (int i = 0; i < count; ++i) text += std::string(pool[pick(rng)]) + " ";
        auto tokens = tokenize(text);
        auto spans = detect_errors(tokens, lex);

        std::set<std::size_t> flagged;
        for (const auto& s : spans) flagged.insert(s.position);
        for (const Token& t : tokens) {
            bool expected = is_correctable_word(t.normalized) &&
                            codepoint_length(t.normalized) >= 3 &&
                            !lex.contains(t.normalized);
            CHECK(flagged.count(t.position) == (expected ? 1u : 0u));
        }
        // ConsecutivePair spans reference adjacent flagged positions only
        for (const auto& s : spans) {
            if (s.pattern == ErrorSpan::Pattern::ConsecutivePair) {
                CHECK(s.second_position == s.position + 1);
                CHECK(flagged.count(s.second_position) == 1);
            }
        }
    }
}
