#ifndef SNARK_CUE_MODEL_HPP
#define SNARK_CUE_MODEL_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snark/corpus.hpp"
#include "snark/metrics.hpp"

namespace snark {

// A cue n-gram lives in lexicons as its space-joined lowercased token form,
// e.g. "oh right". 1 to 3 tokens.
using NgramKey = std::string;

NgramKey ngram_key(const std::vector<std::string>& tokens);
std::vector<std::string> ngram_tokens(const NgramKey& key);

struct CueEntry {
    NgramKey ngram;
    long freq = 0;                         // dev utterances containing the cue
    std::optional<double> pct_class;       // positive fraction; absent when freq = 0
};

struct CueLexicon {
    Target task = Target::Sarcastic;
    std::map<NgramKey, CueEntry> entries;
    std::string provenance;  // which dev set the statistics came from
};

// Contiguous token-sequence containment against the response tokens
// (case-insensitive; each utterance counts once however often the cue repeats).
bool contains_ngram(const Utterance& utterance, const NgramKey& ngram);

CueLexicon learn_cue_stats(const std::set<NgramKey>& seed_cues,
                           const std::vector<QRPair>& dev, const ClassTask& task,
                           std::string provenance = {});

// Lexicon entries present in the utterance that clear both thresholds, sorted.
std::vector<NgramKey> cue_hits(const Utterance& utterance, const CueLexicon& lexicon,
                               const ThresholdParams& params);

// Positive iff at least two distinct qualifying cues are present.
Label classify_cue(const Utterance& utterance, const CueLexicon& lexicon,
                   const ThresholdParams& params);

struct TuneResult {
    ThresholdParams params;
    EvalReport report;
    GridResult grid;
};

TuneResult tune_cue(const CueLexicon& lexicon, const std::vector<QRPair>& train,
                    const ClassTask& task, const Grid& grid, double beta = 0.5);

// TSV persistence: ngram<TAB>freq<TAB>pct_class, sorted by ngram. A leading
// '#' comment line carries task/provenance. Seed lexicons (annotator-elicited
// cues with no dev statistics yet) are the same file with freq 0 and an empty
// pct_class column.
std::string cue_lexicon_to_tsv(const CueLexicon& lexicon);
CueLexicon cue_lexicon_from_tsv(const std::string& text);
void save_cue_lexicon(const CueLexicon& lexicon, const std::filesystem::path& path);
CueLexicon load_cue_lexicon(const std::filesystem::path& path);

}  // namespace snark

#endif
