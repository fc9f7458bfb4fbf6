// Compares the banded OpenMP candidate scan against the serial
// full-lexicon reference on a synthetic dictionary.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ocrpost/edit_distance.hpp"
#include "ocrpost/text_ingest.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

ocrpost::Lexicon synthetic_lexicon(std::size_t target, std::uint64_t seed) {
    static const char* syllables[] = {
        "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du",
        "ka", "ke", "ki", "ko", "ku", "la", "le", "li", "lo", "lu",
        "ma", "me", "mi", "mo", "mu", "na", "ne", "ni", "no", "nu",
        "ra", "re", "ri", "ro", "ru", "sa", "se", "si", "so", "su"};
    constexpr std::size_t S = sizeof(syllables) / sizeof(syllables[0]);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> freq(1, 5000);
    std::unordered_map<std::string, long> counts;
    for (std::size_t a = 0; a < S && counts.size() < target; ++a)
        for (std::size_t b = 0; b < S && counts.size() < target; ++b)
            for (std::size_t c = 0; c < S && counts.size() < target; ++c)
                counts[std::string(syllables[a]) + syllables[b] + syllables[c]] = freq(rng);
    return ocrpost::Lexicon::from_counts(counts, 1, 3);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t lexicon_size = argc > 1 ? std::stoul(argv[1]) : 50000;
    std::size_t n_errors = argc > 2 ? std::stoul(argv[2]) : 200;

    ocrpost::Lexicon lexicon = synthetic_lexicon(lexicon_size, 7);
    std::printf("lexicon entries: %zu\n", lexicon.size());
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::vector<std::string> errors;
    for (std::size_t i = 0; i < n_errors; ++i) {
        std::string w = lexicon.entries()[pick(rng)].word;
        w[w.size() / 2] = static_cast<char>(letter(rng));
        errors.push_back(std::move(w));
    }

    using clock = std::chrono::steady_clock;
    long checksum_par = 0, checksum_ser = 0;

    auto t0 = clock::now();
    for (const std::string& e : errors) {
        auto set = ocrpost::candidates_within(e, lexicon);
        for (const auto& tier : set.tiers) checksum_par += static_cast<long>(tier.size());
    }
    auto t1 = clock::now();
    for (const std::string& e : errors) {
        auto set = ocrpost::candidates_within_serial(e, lexicon);
        for (const auto& tier : set.tiers) checksum_ser += static_cast<long>(tier.size());
    }
    auto t2 = clock::now();

    const double par_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double ser_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("banded + openmp : %8.1f ms  (%zu errors, %ld candidates)\n", par_ms,
                n_errors, checksum_par);
    std::printf("serial reference: %8.1f ms  (%zu errors, %ld candidates)\n", ser_ms,
                n_errors, checksum_ser);
    std::printf("speedup: %.2fx\n", ser_ms / par_ms);
    return checksum_par == checksum_ser ? 0 : 1;
}
