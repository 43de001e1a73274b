#ifndef SNARK_CORPUS_HPP
#define SNARK_CORPUS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "snark/pos.hpp"

namespace snark {

struct Token {
    std::string surface;       // lowercased by the bundled tokenizer
    std::optional<Pos> pos;    // absent before tagging
    int begin = -1;            // character offsets into the utterance raw text,
    int end = -1;              // -1 when unknown (e.g. pre-tagged input)
};

struct Utterance {
    std::string id;
    std::string raw;
    std::vector<Token> tokens;
};

struct QRPair {
    Utterance quote;
    Utterance response;
    double sarcasm_score = 0.0;
    double nasty_score = 0.0;  // in [-5, +5]; strongly negative means nasty
};

enum class Target { Sarcastic, Nasty };
enum class Label { Positive, Counter };

std::string_view target_name(Target t);
std::optional<Target> target_from_name(std::string_view name);

// Binarization rule for one classification target. Classification always
// applies to the response, never the quote.
struct ClassTask {
    Target target = Target::Sarcastic;
    double sarcasm_cutoff = 0.5;   // sarcastic iff sarcasm_score >= cutoff
    double nasty_cutoff = -1.0;    // nasty iff nasty_score <= cutoff
};

Label binarize(const QRPair& pair, const ClassTask& task);

// Lowercasing, punctuation-separating tokenizer. Internal hyphens and
// apostrophes stay inside a token, so "emoticon-rolleyes" and "don't"
// survive as single tokens.
std::vector<Token> tokenize(const std::string& raw);

enum class CorpusFormat { Auto, Jsonl, Csv };

std::vector<QRPair> load_corpus(const std::filesystem::path& path,
                                CorpusFormat format = CorpusFormat::Auto);
std::string corpus_to_jsonl(const std::vector<QRPair>& corpus);

struct SplitSpec {
    std::uint64_t seed = 0;
    // dev1 (cue learning), dev2 (pattern learning), train (tuning), test
    std::array<double, 4> fractions{0.25, 0.25, 0.25, 0.25};
};

struct Splits {
    std::vector<QRPair> dev1, dev2, train, test;
};

Splits split_corpus(const std::vector<QRPair>& corpus, const SplitSpec& spec);

}  // namespace snark

#endif
