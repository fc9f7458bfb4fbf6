#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ocrpost {

// UTF-8 <-> code point helpers. Decoding is lenient: malformed bytes are
// passed through as single code points.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(const std::u32string& cps);
std::size_t codepoint_length(std::string_view utf8);

struct Token {
    std::string surface;     // as it appeared, whitespace-trimmed
    std::string normalized;  // lowercased, surrounding punctuation stripped
    std::size_t position = 0;
};

// Lowercase ASCII letters, strip leading/trailing characters that are not
// letters (non-ASCII bytes count as letters). Interior hyphens and
// apostrophes survive.
std::string normalize_token(std::string_view surface);

// The punctuation stripped off a surface form, so corrections can
// reattach it: {leading, trailing}.
std::pair<std::string, std::string> surrounding_punctuation(std::string_view surface);

// True for tokens eligible for lexicon membership and error flagging:
// letters only, except interior '-' or '\''. Digit-bearing tokens are out.
bool is_correctable_word(std::string_view normalized);

// Whitespace tokenization of a single document. Positions are 0-based
// indices into the returned sequence.
std::vector<Token> tokenize(std::string_view text);

// Blank-line-separated blocks. N-gram windows and LDA documents never cross
// these boundaries.
std::vector<std::string> split_documents(std::string_view text);
std::vector<std::vector<Token>> tokenize_documents(std::string_view text);

class Lexicon {
public:
    struct Entry {
        std::string word;
        long freq = 0;
        std::u32string cp;  // cached code points for distance computations
    };

    Lexicon() = default;

    static Lexicon from_counts(const std::unordered_map<std::string, long>& counts,
                               int min_count, int min_len);

    bool contains(const std::string& word) const { return index_.count(word) != 0; }
    long frequency(const std::string& word) const;
    std::size_t size() const { return entries_.size(); }
    int min_count() const { return min_count_; }
    int min_len() const { return min_len_; }

    const std::vector<Entry>& entries() const { return entries_; }
    // Distinct code-point lengths present, ascending.
    const std::vector<std::size_t>& lengths() const { return lengths_; }
    std::span<const Entry* const> entries_of_length(std::size_t len) const;

    void save(const std::string& path) const;
    // Throws std::runtime_error with a line number on malformed input.
    static Lexicon load(const std::string& path);

private:
    void build_index();

    std::vector<Entry> entries_;  // sorted by word
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_map<std::size_t, std::vector<const Entry*>> by_length_;
    std::vector<std::size_t> lengths_;
    int min_count_ = 5;
    int min_len_ = 3;
};

Lexicon build_lexicon(const std::vector<std::vector<Token>>& docs,
                      int min_count = 5, int min_len = 3);
Lexicon build_lexicon(const std::vector<Token>& tokens,
                      int min_count = 5, int min_len = 3);

class NGramModel {
public:
    void add_document(const std::vector<Token>& tokens);

    long unigram(const std::string& a) const;
    long bigram(const std::string& a, const std::string& b) const;
    long trigram(const std::string& a, const std::string& b, const std::string& c) const;

    long total_unigrams() const { return total_unigrams_; }
    std::size_t unique_unigrams() const { return uni_.size(); }
    std::size_t unique_bigrams() const { return bi_.size(); }
    std::size_t unique_trigrams() const { return tri_.size(); }

    void save(const std::string& path) const;
    static NGramModel load(const std::string& path);

private:
    std::unordered_map<std::string, long> uni_, bi_, tri_;
    long total_unigrams_ = 0;
};

NGramModel build_ngrams(const std::vector<std::vector<Token>>& docs);
NGramModel build_ngrams(const std::vector<Token>& tokens);

}  // namespace ocrpost
