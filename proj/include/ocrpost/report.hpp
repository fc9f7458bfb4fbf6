#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ocrpost {

struct Decision {
    std::size_t position = 0;     // global token index in the input
    std::size_t span_length = 1;  // input tokens consumed
    int detected = 1;             // detected non-word errors in the span
    int remaining = 0;            // errors still present in the output
    std::string original;         // normalized input text of the span
    std::string output;           // replacement text (may contain spaces)
    int method = 0;
};

struct CorrectionReport {
    std::vector<std::pair<std::string, std::string>> config;  // echoed parameters
    std::vector<Decision> decisions;
    std::string corrected_text;

    void save(const std::string& path) const;
    static CorrectionReport load(const std::string& path);
};

}  // namespace ocrpost
