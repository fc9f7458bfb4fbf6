#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ocrpost/boundary_correct.hpp"
#include "ocrpost/errors.hpp"
#include "ocrpost/eval_harness.hpp"
#include "ocrpost/text_ingest.hpp"
#include "ocrpost/topic_model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

int run_build_dict(const std::string& corpus_path, const std::string& lexicon_path,
                   const std::string& ngram_path, int min_count, int min_len) {
    const std::string text = read_file(corpus_path);
    const auto docs = ocrpost::tokenize_documents(text);
    const ocrpost::Lexicon lexicon = ocrpost::build_lexicon(docs, min_count, min_len);
    const ocrpost::NGramModel ngrams = ocrpost::build_ngrams(docs);
    lexicon.save(lexicon_path);
    ngrams.save(ngram_path);
    if (lexicon.size() == 0) {
        std::cerr << "warning: empty lexicon (corpus too small or thresholds too strict)\n";
    }
    std::cout << "lexicon entries: " << lexicon.size() << '\n'
              << "unigrams: " << ngrams.unique_unigrams() << '\n'
              << "bigrams: " << ngrams.unique_bigrams() << '\n'
              << "trigrams: " << ngrams.unique_trigrams() << '\n';
    return kExitOk;
}

struct CorrectArgs {
    std::string input, lexicon, ngrams, topics, output, report;
    int method = 1;
    int lda_k = 5;
    double lda_alpha = 0.1;
    double lda_beta = 0.01;
    int lda_iterations = 500;
    std::uint64_t seed = 1;
    std::size_t length_cap = 18;
};

int run_correct(const CorrectArgs& args) {
    const std::string text = read_file(args.input);
    const ocrpost::Lexicon lexicon = ocrpost::Lexicon::load(args.lexicon);
    const ocrpost::NGramModel ngrams = ocrpost::NGramModel::load(args.ngrams);

    ocrpost::TopicModel tm;
    if (args.method == 5) {
        if (!args.topics.empty() && std::filesystem::exists(args.topics)) {
            tm = ocrpost::TopicModel::load(args.topics);
        } else {
            ocrpost::LdaConfig cfg;
            cfg.K = args.lda_k;
            cfg.alpha = args.lda_alpha;
            cfg.beta = args.lda_beta;
            cfg.iterations = args.lda_iterations;
            cfg.seed = args.seed;
            tm = ocrpost::fit_lda(ocrpost::tokenize_documents(text), cfg);
            if (!args.topics.empty()) tm.save(args.topics);
        }
    }

    ocrpost::Method5Options opts;
    opts.split.max_length = args.length_cap;
    ocrpost::CorrectionReport report = ocrpost::correct_text(
        text, lexicon, ngrams, args.method, args.method == 5 ? &tm : nullptr, opts);

    report.config = {
        {"method", std::to_string(args.method)},
        {"lexicon", args.lexicon},
        {"ngrams", args.ngrams},
        {"min_len", "3"},
        {"thresholds", "3-5:1,6-9:2,10+:3"},
        {"length_cap", std::to_string(args.length_cap)},
        {"lda_k", std::to_string(args.lda_k)},
        {"lda_alpha", std::to_string(args.lda_alpha)},
        {"lda_beta", std::to_string(args.lda_beta)},
        {"lda_iterations", std::to_string(args.lda_iterations)},
        {"seed", std::to_string(args.seed)},
    };

    write_file(args.output, report.corrected_text + "\n");
    if (!args.report.empty()) report.save(args.report);
    std::cout << "decisions: " << report.decisions.size() << '\n';
    return kExitOk;
}

int run_synth(const std::string& input, const std::string& output, const std::string& gold,
              double single_rate, double run_on_rate, double split_rate,
              std::uint64_t seed) {
    const std::string text = read_file(input);
    std::vector<std::string> tokens;
    for (const ocrpost::Token& t : ocrpost::tokenize(text)) tokens.push_back(t.surface);
    ocrpost::InjectionRates rates{single_rate, run_on_rate, split_rate};
    const ocrpost::InjectionResult result = ocrpost::inject_errors(tokens, rates, seed);
    write_file(output, result.dirty_text() + "\n");
    ocrpost::save_gold(result.gold, gold);
    std::cout << "dirty tokens: " << result.dirty_tokens.size() << '\n'
              << "injected errors: " << result.gold.size() << '\n';
    return kExitOk;
}

int run_eval(const std::string& report_path, const std::string& gold_path,
             const std::string& output) {
    const ocrpost::CorrectionReport report = ocrpost::CorrectionReport::load(report_path);
    const std::vector<ocrpost::GoldAnnotation> gold = ocrpost::load_gold(gold_path);
    const ocrpost::EvalReport eval = ocrpost::evaluate(report, gold);
    const std::string text = eval.to_text();
    if (!output.empty()) write_file(output, text);
    std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OCR post-correction: non-word error detection and correction"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build-dict", "Build lexicon and n-gram model files");
    std::string corpus, lexicon_path, ngram_path;
    int min_count = 5, min_len = 3;
    build->add_option("--corpus", corpus, "reference corpus (UTF-8 plain text)")->required();
    build->add_option("--lexicon", lexicon_path, "lexicon output path")->required();
    build->add_option("--ngrams", ngram_path, "n-gram model output path")->required();
    build->add_option("--min-count", min_count, "minimum word frequency");
    build->add_option("--min-len", min_len, "minimum word length");

    auto* correct = app.add_subcommand("correct", "Correct non-word errors in OCR text");
    CorrectArgs cargs;
    correct->add_option("--input", cargs.input, "dirty OCR text")->required();
    correct->add_option("--method", cargs.method, "correction method 1-5")
        ->required()
        ->check(CLI::Range(1, 5));
    correct->add_option("--lexicon", cargs.lexicon, "lexicon file")->required();
    correct->add_option("--ngrams", cargs.ngrams, "n-gram model file")->required();
    correct->add_option("--topics", cargs.topics,
                        "topic model file (loaded if present, else fitted and saved)");
    correct->add_option("--output", cargs.output, "corrected text output")->required();
    correct->add_option("--report", cargs.report, "per-decision report output");
    correct->add_option("--lda-k", cargs.lda_k, "LDA topic count");
    correct->add_option("--lda-alpha", cargs.lda_alpha, "LDA alpha");
    correct->add_option("--lda-beta", cargs.lda_beta, "LDA beta");
    correct->add_option("--lda-iterations", cargs.lda_iterations, "LDA Gibbs sweeps");
    correct->add_option("--seed", cargs.seed, "RNG seed");
    correct->add_option("--length-cap", cargs.length_cap,
                        "zero-blank split length cap (code points, '_' excluded)");

    auto* synth = app.add_subcommand("synth", "Inject synthetic errors into clean text");
    std::string synth_in, synth_out, synth_gold;
    double r_single = 0.1, r_runon = 0.05, r_split = 0.05;
    std::uint64_t synth_seed = 1;
    synth->add_option("--input", synth_in, "clean text")->required();
    synth->add_option("--output", synth_out, "dirty text output")->required();
    synth->add_option("--gold", synth_gold, "gold annotations output")->required();
    synth->add_option("--single", r_single, "single-word mutation rate");
    synth->add_option("--run-on", r_runon, "run-on rate");
    synth->add_option("--split", r_split, "incorrect-split rate");
    synth->add_option("--seed", synth_seed, "RNG seed");

    auto* eval = app.add_subcommand("eval", "Score a correction report against gold");
    std::string eval_report, eval_gold, eval_out;
    eval->add_option("--report", eval_report, "correction report file")->required();
    eval->add_option("--gold", eval_gold, "gold annotations file")->required();
    eval->add_option("--output", eval_out, "metrics output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) {
            return run_build_dict(corpus, lexicon_path, ngram_path, min_count, min_len);
        }
        if (correct->parsed()) return run_correct(cargs);
        if (synth->parsed()) {
            return run_synth(synth_in, synth_out, synth_gold, r_single, r_runon, r_split,
                             synth_seed);
        }
        if (eval->parsed()) return run_eval(eval_report, eval_gold, eval_out);
    } catch (const ocrpost::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
