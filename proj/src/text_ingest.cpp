#include "ocrpost/text_ingest.hpp"

#include "ocrpost/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ocrpost {

std::u32string to_u32(std::string_view utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    while (i < utf8.size()) {
        unsigned char c = static_cast<unsigned char>(utf8[i]);
        char32_t cp = 0;
        std::size_t extra = 0;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else {
            out.push_back(c);  // stray continuation byte, pass through
            ++i;
            continue;
        }
        if (extra > 0 && i + extra >= utf8.size()) {
            out.push_back(c);  // truncated sequence
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(utf8[i + k]);
            if ((cc & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok) {
            out.push_back(c);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string to_utf8(const std::u32string& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::size_t codepoint_length(std::string_view utf8) {
    std::size_t n = 0;
    for (char ch : utf8) {
        if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
    }
    return n;
}

namespace {

bool is_letter_byte(unsigned char c) {
    return std::isalpha(c) != 0 || c >= 0x80;
}

}  // namespace

std::string normalize_token(std::string_view surface) {
    std::size_t begin = 0;
    std::size_t end = surface.size();
    while (begin < end && !is_letter_byte(static_cast<unsigned char>(surface[begin])) &&
           !std::isdigit(static_cast<unsigned char>(surface[begin]))) {
        ++begin;
    }
    while (end > begin && !is_letter_byte(static_cast<unsigned char>(surface[end - 1])) &&
           !std::isdigit(static_cast<unsigned char>(surface[end - 1]))) {
        --end;
    }
    std::string out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        unsigned char c = static_cast<unsigned char>(surface[i]);
        out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : surface[i]);
    }
    return out;
}

std::pair<std::string, std::string> surrounding_punctuation(std::string_view surface) {
    std::size_t begin = 0;
    std::size_t end = surface.size();
    while (begin < end && !is_letter_byte(static_cast<unsigned char>(surface[begin])) &&
           !std::isdigit(static_cast<unsigned char>(surface[begin]))) {
        ++begin;
    }
    while (end > begin && !is_letter_byte(static_cast<unsigned char>(surface[end - 1])) &&
           !std::isdigit(static_cast<unsigned char>(surface[end - 1]))) {
        --end;
    }
    return {std::string(surface.substr(0, begin)), std::string(surface.substr(end))};
}

bool is_correctable_word(std::string_view normalized) {
    if (normalized.empty()) return false;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(normalized[i]);
        if (is_letter_byte(c)) continue;
        bool interior = i > 0 && i + 1 < normalized.size();
        if ((c == '-' || c == '\'') && interior) continue;
        return false;
    }
    return true;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            Token t;
            t.surface = std::string(text.substr(start, i - start));
            t.normalized = normalize_token(t.surface);
            t.position = tokens.size();
            tokens.push_back(std::move(t));
        }
    }
    return tokens;
}

std::vector<std::string> split_documents(std::string_view text) {
    std::vector<std::string> docs;
    std::string current;
    std::size_t i = 0;
    bool line_blank = true;
    std::string line;
    auto flush = [&] {
        if (current.find_first_not_of(" \t\r\n") != std::string::npos) {
            docs.push_back(current);
        }
        current.clear();
    };
    while (i <= text.size()) {
        if (i == text.size() || text[i] == '\n') {
            if (line_blank) {
                flush();
            } else {
                current += line;
                current.push_back('\n');
            }
            line.clear();
            line_blank = true;
            if (i == text.size()) break;
        } else {
            line.push_back(text[i]);
            if (!std::isspace(static_cast<unsigned char>(text[i]))) line_blank = false;
        }
        ++i;
    }
    flush();
    return docs;
}

std::vector<std::vector<Token>> tokenize_documents(std::string_view text) {
    std::vector<std::vector<Token>> out;
    for (const std::string& doc : split_documents(text)) {
        out.push_back(tokenize(doc));
    }
    return out;
}

Lexicon Lexicon::from_counts(const std::unordered_map<std::string, long>& counts,
                             int min_count, int min_len) {
    Lexicon lex;
    lex.min_count_ = min_count;
    lex.min_len_ = min_len;
    for (const auto& [word, freq] : counts) {
        if (freq < min_count) continue;
        if (codepoint_length(word) < static_cast<std::size_t>(min_len)) continue;
        if (!is_correctable_word(word)) continue;
        lex.entries_.push_back(Entry{word, freq, to_u32(word)});
    }
    std::sort(lex.entries_.begin(), lex.entries_.end(),
              [](const Entry& a, const Entry& b) { return a.word < b.word; });
    lex.build_index();
    return lex;
}

long Lexicon::frequency(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? 0 : entries_[it->second].freq;
}

std::span<const Lexicon::Entry* const> Lexicon::entries_of_length(std::size_t len) const {
    auto it = by_length_.find(len);
    if (it == by_length_.end()) return {};
    return {it->second.data(), it->second.size()};
}

void Lexicon::build_index() {
    index_.clear();
    by_length_.clear();
    lengths_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        index_.emplace(entries_[i].word, i);
        by_length_[entries_[i].cp.size()].push_back(&entries_[i]);
    }
    for (const auto& [len, _] : by_length_) lengths_.push_back(len);
    std::sort(lengths_.begin(), lengths_.end());
}

void Lexicon::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const Entry& e : entries_) {
        out << e.word << '\t' << e.freq << '\n';
    }
}

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Lexicon lex;
    lex.min_count_ = 1;
    lex.min_len_ = 3;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size() ||
            line.find('\t', tab + 1) != std::string::npos) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": malformed lexicon line");
        }
        std::string word = line.substr(0, tab);
        long freq = 0;
        try {
            std::size_t used = 0;
            freq = std::stol(line.substr(tab + 1), &used);
            if (used != line.size() - tab - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": bad frequency field");
        }
        if (freq < 0) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": negative frequency");
        }
        lex.entries_.push_back(Entry{std::move(word), freq, {}});
    }
    for (Entry& e : lex.entries_) e.cp = to_u32(e.word);
    std::sort(lex.entries_.begin(), lex.entries_.end(),
              [](const Entry& a, const Entry& b) { return a.word < b.word; });
    lex.build_index();
    return lex;
}

Lexicon build_lexicon(const std::vector<std::vector<Token>>& docs,
                      int min_count, int min_len) {
    std::unordered_map<std::string, long> counts;
    for (const auto& doc : docs) {
        for (const Token& t : doc) {
            if (!is_correctable_word(t.normalized)) continue;
            ++counts[t.normalized];
        }
    }
    return Lexicon::from_counts(counts, min_count, min_len);
}

Lexicon build_lexicon(const std::vector<Token>& tokens, int min_count, int min_len) {
    std::vector<std::vector<Token>> docs;
    docs.push_back(tokens);
    return build_lexicon(docs, min_count, min_len);
}

namespace {

std::string ngram_key(const std::string& a, const std::string& b) {
    std::string k = a;
    k.push_back('\t');
    k += b;
    return k;
}

std::string ngram_key(const std::string& a, const std::string& b, const std::string& c) {
    std::string k = a;
    k.push_back('\t');
    k += b;
    k.push_back('\t');
    k += c;
    return k;
}

}  // namespace

void NGramModel::add_document(const std::vector<Token>& tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& w = tokens[i].normalized;
        if (w.empty()) continue;
        ++uni_[w];
        ++total_unigrams_;
        if (i + 1 < tokens.size()) {
            ++bi_[ngram_key(w, tokens[i + 1].normalized)];
        }
        if (i + 2 < tokens.size()) {
            ++tri_[ngram_key(w, tokens[i + 1].normalized, tokens[i + 2].normalized)];
        }
    }
}

long NGramModel::unigram(const std::string& a) const {
    auto it = uni_.find(a);
    return it == uni_.end() ? 0 : it->second;
}

long NGramModel::bigram(const std::string& a, const std::string& b) const {
    auto it = bi_.find(ngram_key(a, b));
    return it == bi_.end() ? 0 : it->second;
}

long NGramModel::trigram(const std::string& a, const std::string& b,
                         const std::string& c) const {
    auto it = tri_.find(ngram_key(a, b, c));
    return it == tri_.end() ? 0 : it->second;
}

void NGramModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    auto dump = [&out](int n, const std::unordered_map<std::string, long>& table) {
        std::vector<const std::pair<const std::string, long>*> rows;
        rows.reserve(table.size());
        for (const auto& kv : table) rows.push_back(&kv);
        std::sort(rows.begin(), rows.end(),
                  [](const auto* a, const auto* b) { return a->first < b->first; });
        for (const auto* kv : rows) {
            out << n << '\t' << kv->first << '\t' << kv->second << '\n';
        }
    };
    dump(1, uni_);
    dump(2, bi_);
    dump(3, tri_);
}

NGramModel NGramModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    NGramModel m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        auto fail = [&](const char* msg) {
            throw FormatError(path + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (fields.size() < 3) fail("too few fields");
        int n = 0;
        long count = 0;
        try {
            n = std::stoi(fields[0]);
            count = std::stol(fields.back());
        } catch (const std::exception&) {
            fail("bad numeric field");
        }
        if (n < 1 || n > 3 || static_cast<std::size_t>(n) != fields.size() - 2 || count < 1) {
            fail("inconsistent n-gram record");
        }
        if (n == 1) {
            m.uni_[fields[1]] += count;
            m.total_unigrams_ += count;
        } else if (n == 2) {
            m.bi_[ngram_key(fields[1], fields[2])] += count;
        } else {
            m.tri_[ngram_key(fields[1], fields[2], fields[3])] += count;
        }
    }
    return m;
}

NGramModel build_ngrams(const std::vector<std::vector<Token>>& docs) {
    NGramModel m;
    for (const auto& doc : docs) m.add_document(doc);
    return m;
}

NGramModel build_ngrams(const std::vector<Token>& tokens) {
    NGramModel m;
    m.add_document(tokens);
    return m;
}

}  // namespace ocrpost
