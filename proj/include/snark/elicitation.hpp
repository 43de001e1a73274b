#ifndef SNARK_ELICITATION_HPP
#define SNARK_ELICITATION_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "snark/corpus.hpp"
#include "snark/cue_model.hpp"

namespace snark {

// Character-offset span into the response raw text, [start, end).
struct Span {
    int start = 0;
    int end = 0;
};

struct AnnotationRecord {
    std::string utterance_id;
    std::string annotator_id;
    std::vector<Span> spans;  // empty means the annotator marked nothing
};

struct CueCandidate {
    NgramKey ngram;           // 1-3 tokens
    long annotator_count = 0;  // distinct annotators whose spans cover it
    long utterance_support = 0;  // distinct utterances in which it was marked
};

// JSON Lines: {utterance_id, annotator_id, spans: [{start, end}]}.
std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path);

// Spans snap outward to token boundaries; every unigram/bigram/trigram inside
// a snapped span becomes a candidate. Counts are over distinct annotators and
// distinct utterances. Order of records does not matter.
std::vector<CueCandidate> aggregate(const std::vector<AnnotationRecord>& records,
                                    const std::vector<QRPair>& corpus);

// Mean pairwise percent agreement on n-gram inclusion, Monte-Carlo subsampled:
// for each k, `trials` random k-annotator subsets are drawn (per-trial seeds
// derive from (seed, trial index)); for every candidate (utterance, n-gram)
// item the fraction of agreeing annotator pairs is averaged over items and
// trials. k values must be between 2 and the pool size.
std::map<int, double> agreement_curve(const std::vector<AnnotationRecord>& records,
                                      const std::vector<QRPair>& corpus,
                                      const std::vector<int>& k_values, int trials,
                                      std::uint64_t seed);

// Candidates with annotator_count >= min_annotators, as a seed lexicon
// (freq 0, pct absent — statistics are learned later on a dev set).
CueLexicon export_cues(const std::vector<CueCandidate>& candidates, long min_annotators,
                       Target task);

}  // namespace snark

#endif
