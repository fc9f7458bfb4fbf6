#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ocrpost/text_ingest.hpp"

namespace ocrpost {

struct TopicModel {
    int K = 5;
    double alpha = 0.1;
    double beta = 0.01;
    int iterations = 500;
    std::uint64_t seed = 0;

    std::vector<std::string> vocabulary;
    std::unordered_map<std::string, std::size_t> vocab_index;
    // phi[k][v]: word probability under topic k; each row sums to 1.
    std::vector<std::vector<double>> phi;

    bool usable() const { return K > 0 && !vocabulary.empty(); }

    void save(const std::string& path) const;
    static TopicModel load(const std::string& path);
};

struct LdaConfig {
    int K = 5;
    double alpha = 0.1;
    double beta = 0.01;
    int iterations = 500;
    std::uint64_t seed = 1;
};

// Collapsed Gibbs sampling over the token-topic assignments of the
// uncorrected text. Vocabulary is every alphabetic token of length >= 3;
// lexicon membership is not required. Fully determined by the seed.
// An empty vocabulary yields an unusable model (scores all read 0).
TopicModel fit_lda(const std::vector<std::vector<Token>>& docs, const LdaConfig& cfg = {});

// max over topics of the summed per-topic probabilities of the given
// words; out-of-vocabulary words contribute 0.
double combination_topic_score(const TopicModel& tm, const std::vector<std::string>& words);

}  // namespace ocrpost
