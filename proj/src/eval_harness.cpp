#include "ocrpost/eval_harness.hpp"

#include "ocrpost/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

namespace {

std::vector<std::string> normalized_words(const std::string& text) {
    std::vector<std::string> words;
    for (const Token& t : tokenize(text)) {
        if (!t.normalized.empty()) words.push_back(t.normalized);
    }
    return words;
}

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", fraction * 100.0);
    return buf;
}

}  // namespace

EvalReport EvalReport::from_counts(long detected, long uncorrectable, long right,
                                   long partial) {
    EvalReport r;
    r.detected = detected;
    r.uncorrectable = uncorrectable;
    r.right = right;
    r.partial = partial;
    if (detected > 0) {
        r.uncorrectable_rate = static_cast<double>(uncorrectable) / detected;
        r.right_rate = static_cast<double>(right) / detected;
    }
    return r;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out << "detected\t" << detected << '\n'
        << "uncorrectable\t" << uncorrectable << '\n'
        << "right\t" << right << '\n'
        << "partial\t" << partial << '\n'
        << "uncorrectable_rate\t" << format_percent(uncorrectable_rate) << '\n'
        << "right_rate\t" << format_percent(right_rate) << '\n';
    if (!detection_misses.empty()) {
        out << "detection_misses\t" << detection_misses.size() << '\n';
    }
    return out.str();
}

EvalReport evaluate(const CorrectionReport& report, std::vector<GoldAnnotation> gold) {
    std::sort(gold.begin(), gold.end(),
              [](const GoldAnnotation& a, const GoldAnnotation& b) {
                  return a.error_position < b.error_position;
              });
    std::unordered_map<std::size_t, const GoldAnnotation*> gold_at;
    for (const GoldAnnotation& g : gold) gold_at[g.error_position] = &g;

    long detected = 0, uncorrectable = 0, right = 0, partial = 0;
    std::set<std::size_t> covered;
    for (const Decision& d : report.decisions) {
        for (std::size_t i = 0; i < d.span_length; ++i) covered.insert(d.position + i);

        const int k = d.detected;
        const int u = std::min(d.remaining, k);
        const int c = k - u;
        detected += k;
        uncorrectable += u;
        if (c == 0) continue;

        auto it = gold_at.find(d.position);
        if (it == gold_at.end()) continue;
        const std::vector<std::string> out_words = normalized_words(d.output);
        const std::vector<std::string> gold_words = normalized_words(it->second->gold);
        if (out_words == gold_words) {
            right += c;
        } else {
            const std::set<std::string> gset(gold_words.begin(), gold_words.end());
            bool overlap = false;
            for (const std::string& w : out_words) {
                if (gset.count(w)) {
                    overlap = true;
                    break;
                }
            }
            if (overlap) {
                right += c;
                partial += c;
            }
        }
    }

    EvalReport result = EvalReport::from_counts(detected, uncorrectable, right, partial);
    for (const GoldAnnotation& g : gold) {
        bool hit = false;
        for (std::size_t i = 0; i < g.span_length; ++i) {
            if (covered.count(g.error_position + i)) {
                hit = true;
                break;
            }
        }
        if (!hit) result.detection_misses.push_back(g.error_position);
    }
    return result;
}

namespace {

bool eligible_token(const std::string& t) {
    if (t.size() < 3) return false;
    for (char ch : t) {
        if (!std::isalpha(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::string mutate_single(const std::string& word, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> op_dist(0, 3);
    std::uniform_int_distribution<int> letter_dist(0, 25);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::string w = word;
        const int op = op_dist(rng);
        switch (op) {
            case 0: {  // insertion
                std::uniform_int_distribution<std::size_t> pos(0, w.size());
                w.insert(w.begin() + pos(rng),
                         static_cast<char>('a' + letter_dist(rng)));
                break;
            }
            case 1: {  // deletion
                std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
                w.erase(w.begin() + pos(rng));
                break;
            }
            case 2: {  // substitution
                std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
                w[pos(rng)] = static_cast<char>('a' + letter_dist(rng));
                break;
            }
            default: {  // adjacent transposition
                std::uniform_int_distribution<std::size_t> pos(0, w.size() - 2);
                std::size_t p = pos(rng);
                std::swap(w[p], w[p + 1]);
                break;
            }
        }
        if (w != word) return w;
    }
    return word + "x";  // degenerate inputs (e.g. "aaa") still mutate
}

}  // namespace

std::string InjectionResult::dirty_text() const {
    std::string out;
    for (std::size_t i = 0; i < dirty_tokens.size(); ++i) {
        if (i > 0) out.push_back(i % 16 == 15 ? '\n' : ' ');
        out += dirty_tokens[i];
    }
    return out;
}

InjectionResult inject_errors(const std::vector<std::string>& clean_tokens,
                              const InjectionRates& rates, std::uint64_t seed) {
    if (rates.single_word < 0 || rates.run_on < 0 || rates.split < 0 ||
        rates.single_word + rates.run_on + rates.split > 1.0) {
        throw std::invalid_argument("injection rates must be in [0,1] and sum to at most 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    InjectionResult result;
    std::size_t i = 0;
    while (i < clean_tokens.size()) {
        const std::string& t = clean_tokens[i];
        if (!eligible_token(t)) {
            result.dirty_tokens.push_back(t);
            ++i;
            continue;
        }
        const double u = unit(rng);
        if (u < rates.single_word) {
            result.dirty_tokens.push_back(mutate_single(t, rng));
            result.gold.push_back(
                GoldAnnotation{result.dirty_tokens.size() - 1, 1, t});
            ++i;
        } else if (u < rates.single_word + rates.run_on && i + 1 < clean_tokens.size() &&
                   eligible_token(clean_tokens[i + 1])) {
            result.dirty_tokens.push_back(t + clean_tokens[i + 1]);
            result.gold.push_back(GoldAnnotation{result.dirty_tokens.size() - 1, 1,
                                                 t + " " + clean_tokens[i + 1]});
            i += 2;
        } else if (u < rates.single_word + rates.run_on + rates.split) {
            std::uniform_int_distribution<std::size_t> cut(1, t.size() - 1);
            const std::size_t c = cut(rng);
            result.gold.push_back(GoldAnnotation{result.dirty_tokens.size(), 2, t});
            result.dirty_tokens.push_back(t.substr(0, c));
            result.dirty_tokens.push_back(t.substr(c));
            ++i;
        } else {
            result.dirty_tokens.push_back(t);
            ++i;
        }
    }
    return result;
}

void save_gold(const std::vector<GoldAnnotation>& gold, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const GoldAnnotation& g : gold) {
        if (g.gold.find('\t') != std::string::npos) {
            throw std::runtime_error("gold strings may not contain tabs");
        }
        out << g.error_position << '\t' << g.span_length << '\t' << g.gold << '\n';
    }
}

std::vector<GoldAnnotation> load_gold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<GoldAnnotation> gold;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fail = [&](const char* msg) {
            throw FormatError(path + ":" + std::to_string(lineno) + ": " + msg);
        };
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos) fail("expected 3 fields");
        GoldAnnotation g;
        try {
            g.error_position = std::stoul(line.substr(0, t1));
            g.span_length = std::stoul(line.substr(t1 + 1, t2 - t1 - 1));
        } catch (const std::exception&) {
            fail("bad numeric field");
        }
        if (g.span_length < 1) fail("span_length must be >= 1");
        g.gold = line.substr(t2 + 1);
        if (g.gold.find('\t') != std::string::npos) fail("tabs forbidden in gold");
        gold.push_back(std::move(g));
    }
    return gold;
}

}  // namespace ocrpost
