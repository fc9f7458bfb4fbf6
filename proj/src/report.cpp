#include "ocrpost/report.hpp"

#include "ocrpost/errors.hpp"

#include <fstream>
#include <stdexcept>

namespace ocrpost {

void CorrectionReport::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& [key, value] : config) {
        out << "# " << key << '=' << value << '\n';
    }
    out << "# columns: position\tspan\tdetected\tremaining\tmethod\toriginal\toutput\n";
    for (const Decision& d : decisions) {
        out << d.position << '\t' << d.span_length << '\t' << d.detected << '\t'
            << d.remaining << '\t' << d.method << '\t' << d.original << '\t'
            << d.output << '\n';
    }
}

CorrectionReport CorrectionReport::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    CorrectionReport report;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t sp = line.find(' ');
            std::size_t eq = line.find('=');
            if (sp != std::string::npos && eq != std::string::npos && eq > sp) {
                report.config.emplace_back(line.substr(sp + 1, eq - sp - 1),
                                           line.substr(eq + 1));
            }
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 7) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": malformed report line");
        }
        Decision d;
        try {
            d.position = std::stoul(fields[0]);
            d.span_length = std::stoul(fields[1]);
            d.detected = std::stoi(fields[2]);
            d.remaining = std::stoi(fields[3]);
            d.method = std::stoi(fields[4]);
        } catch (const std::exception&) {
            throw FormatError(path + ":" + std::to_string(lineno) +
                                     ": bad numeric field");
        }
        d.original = fields[5];
        d.output = fields[6];
        report.decisions.push_back(std::move(d));
    }
    return report;
}

}  // namespace ocrpost
