#include "ocrpost/topic_model.hpp"

#include "ocrpost/errors.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

namespace ocrpost {

TopicModel fit_lda(const std::vector<std::vector<Token>>& docs, const LdaConfig& cfg) {
    if (cfg.K < 1) throw std::invalid_argument("K must be >= 1");
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");

    TopicModel tm;
    tm.K = cfg.K;
    tm.alpha = cfg.alpha;
    tm.beta = cfg.beta;
    tm.iterations = cfg.iterations;
    tm.seed = cfg.seed;

    // Vocabulary in first-occurrence order keeps the model independent of
    // hash-map iteration order.
    std::vector<std::vector<std::size_t>> doc_words;
    for (const auto& doc : docs) {
        std::vector<std::size_t> ids;
        for (const Token& t : doc) {
            const std::string& w = t.normalized;
            if (!is_correctable_word(w) || codepoint_length(w) < 3) continue;
            auto it = tm.vocab_index.find(w);
            std::size_t id;
            if (it == tm.vocab_index.end()) {
                id = tm.vocabulary.size();
                tm.vocab_index.emplace(w, id);
                tm.vocabulary.push_back(w);
            } else {
                id = it->second;
            }
            ids.push_back(id);
        }
        if (!ids.empty()) doc_words.push_back(std::move(ids));
    }

    const std::size_t V = tm.vocabulary.size();
    const int K = cfg.K;
    if (V == 0 || doc_words.empty()) {
        tm.vocabulary.clear();
        tm.vocab_index.clear();
        return tm;  // unusable: topic measure reads 0 everywhere
    }

    const std::size_t D = doc_words.size();
    std::vector<std::vector<int>> n_dk(D, std::vector<int>(K, 0));
    std::vector<std::vector<int>> n_kw(K, std::vector<int>(V, 0));
    std::vector<long> n_k(K, 0);
    std::vector<std::vector<int>> z(D);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> init_topic(0, K - 1);
    for (std::size_t d = 0; d < D; ++d) {
        z[d].resize(doc_words[d].size());
        for (std::size_t i = 0; i < doc_words[d].size(); ++i) {
            int k = init_topic(rng);
            z[d][i] = k;
            ++n_dk[d][k];
            ++n_kw[k][doc_words[d][i]];
            ++n_k[k];
        }
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> cum(K);
    const double vbeta = static_cast<double>(V) * cfg.beta;
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        for (std::size_t d = 0; d < D; ++d) {
            for (std::size_t i = 0; i < doc_words[d].size(); ++i) {
                const std::size_t w = doc_words[d][i];
                const int old_k = z[d][i];
                --n_dk[d][old_k];
                --n_kw[old_k][w];
                --n_k[old_k];

                double total = 0.0;
                for (int k = 0; k < K; ++k) {
                    double p = (n_dk[d][k] + cfg.alpha) *
                               (n_kw[k][w] + cfg.beta) / (n_k[k] + vbeta);
                    total += p;
                    cum[k] = total;
                }
                const double u = unit(rng) * total;
                int new_k = K - 1;
                for (int k = 0; k < K; ++k) {
                    if (u < cum[k]) {
                        new_k = k;
                        break;
                    }
                }
                z[d][i] = new_k;
                ++n_dk[d][new_k];
                ++n_kw[new_k][w];
                ++n_k[new_k];
            }
        }
    }

    tm.phi.assign(K, std::vector<double>(V, 0.0));
    for (int k = 0; k < K; ++k) {
        const double denom = n_k[k] + vbeta;
        for (std::size_t w = 0; w < V; ++w) {
            tm.phi[k][w] = (n_kw[k][w] + cfg.beta) / denom;
        }
    }
    return tm;
}

double combination_topic_score(const TopicModel& tm, const std::vector<std::string>& words) {
    if (!tm.usable()) return 0.0;
    double best = 0.0;
    for (int k = 0; k < tm.K; ++k) {
        double sum = 0.0;
        for (const std::string& w : words) {
            auto it = tm.vocab_index.find(w);
            if (it != tm.vocab_index.end()) sum += tm.phi[k][it->second];
        }
        best = std::max(best, sum);
    }
    return best;
}

void TopicModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.precision(17);
    out << "# K=" << K << " alpha=" << alpha << " beta=" << beta
        << " iterations=" << iterations << " seed=" << seed << '\n';
    for (int k = 0; k < K && static_cast<std::size_t>(k) < phi.size(); ++k) {
        for (std::size_t v = 0; v < vocabulary.size(); ++v) {
            out << k << '\t' << vocabulary[v] << '\t' << phi[k][v] << '\n';
        }
    }
}

TopicModel TopicModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    TopicModel tm;
    tm.K = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": malformed topic model line");
        }
        int k = 0;
        double p = 0.0;
        try {
            k = std::stoi(line.substr(0, t1));
            p = std::stod(line.substr(t2 + 1));
        } catch (const std::exception&) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": bad numeric field");
        }
        std::string word = line.substr(t1 + 1, t2 - t1 - 1);
        std::size_t id;
        auto it = tm.vocab_index.find(word);
        if (it == tm.vocab_index.end()) {
            id = tm.vocabulary.size();
            tm.vocab_index.emplace(word, id);
            tm.vocabulary.push_back(word);
        } else {
            id = it->second;
        }
        if (k + 1 > tm.K) tm.K = k + 1;
        if (static_cast<std::size_t>(k) >= tm.phi.size()) tm.phi.resize(k + 1);
        if (tm.phi[k].size() <= id) tm.phi[k].resize(id + 1, 0.0);
        tm.phi[k][id] = p;
    }
    for (auto& row : tm.phi) row.resize(tm.vocabulary.size(), 0.0);
    return tm;
}

}  // namespace ocrpost
