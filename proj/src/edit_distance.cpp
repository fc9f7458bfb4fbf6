#include "ocrpost/edit_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ocrpost {

int dl_distance(const std::u32string& a, const std::u32string& b) {
    return dl_distance_capped(a, b, std::numeric_limits<int>::max() / 2);
}

int dl_distance(const std::string& a, const std::string& b) {
    return dl_distance(to_u32(a), to_u32(b));
}

int dl_distance_capped(const std::u32string& a, const std::u32string& b, int cap) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    const long diff = static_cast<long>(m) - static_cast<long>(n);
    if (diff > cap || -diff > cap) return cap + 1;
    if (m == 0) return static_cast<int>(n);
    if (n == 0) return static_cast<int>(m);

    // Three-row OSA dynamic program; prev2 feeds the transposition case.
    std::vector<int> prev2(n + 1), prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);

    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<int>(i);
        int row_min = cur[0];
        for (std::size_t j = 1; j <= n; ++j) {
            int cost = a[i - 1] == b[j - 1] ? 0 : 1;
            int d = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
                d = std::min(d, prev2[j - 2] + 1);
            }
            cur[j] = d;
            row_min = std::min(row_min, d);
        }
        if (row_min > cap) return cap + 1;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    int result = prev[n];
    return result > cap ? cap + 1 : result;
}

int threshold_for_length(std::size_t len) {
    if (len < 3) throw std::invalid_argument("no correction threshold for words shorter than 3");
    if (len <= 5) return 1;
    if (len <= 9) return 2;
    return 3;
}

namespace {

void sort_tiers(CandidateSet& set) {
    for (auto& tier : set.tiers) {
        std::sort(tier.begin(), tier.end(), [](const Candidate& a, const Candidate& b) {
            if (a.freq != b.freq) return a.freq > b.freq;
            return a.word < b.word;
        });
    }
}

}  // namespace

CandidateSet candidates_within(const std::string& error, const Lexicon& lexicon) {
    const std::u32string eu = to_u32(error);
    if (eu.size() < 3) throw std::invalid_argument("error string shorter than 3");
    const int threshold = threshold_for_length(eu.size());

    CandidateSet set;
    set.error = error;
    set.threshold = threshold;
    set.tiers.resize(threshold);

    std::vector<const Lexicon::Entry*> band;
    for (std::size_t len : lexicon.lengths()) {
        const long d = static_cast<long>(len) - static_cast<long>(eu.size());
        if (d < -threshold || d > threshold) continue;
        for (const Lexicon::Entry* e : lexicon.entries_of_length(len)) band.push_back(e);
    }

    std::vector<int> dist(band.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(band.size()); ++i) {
        dist[i] = dl_distance_capped(eu, band[i]->cp, threshold);
    }

    for (std::size_t i = 0; i < band.size(); ++i) {
        if (dist[i] >= 1 && dist[i] <= threshold) {
            set.tiers[dist[i] - 1].push_back(Candidate{band[i]->word, band[i]->freq});
        }
    }
    sort_tiers(set);
    return set;
}

CandidateSet candidates_within_serial(const std::string& error, const Lexicon& lexicon) {
    const std::u32string eu = to_u32(error);
    if (eu.size() < 3) throw std::invalid_argument("error string shorter than 3");
    const int threshold = threshold_for_length(eu.size());

    CandidateSet set;
    set.error = error;
    set.threshold = threshold;
    set.tiers.resize(threshold);

    for (const Lexicon::Entry& e : lexicon.entries()) {
        int d = dl_distance(eu, e.cp);
        if (d >= 1 && d <= threshold) {
            set.tiers[d - 1].push_back(Candidate{e.word, e.freq});
        }
    }
    sort_tiers(set);
    return set;
}

}  // namespace ocrpost
