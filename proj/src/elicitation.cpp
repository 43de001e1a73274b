#include "snark/elicitation.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "snark/errors.hpp"
#include "snark/rng.hpp"
#include "snark/util.hpp"

namespace snark {

namespace {

// (utterance id, ngram) -> set of annotator ids covering it. An "item" in the
// agreement statistic is one such pair.
using MarkMap = std::map<std::pair<std::string, NgramKey>, std::set<std::string>>;

const Utterance& find_utterance(const std::vector<QRPair>& corpus,
                                const std::map<std::string, const QRPair*>& by_id,
                                const std::string& id) {
    auto it = by_id.find(id);
    if (it == by_id.end())
        throw DataError("annotation references unknown utterance id '" + id + "'");
    (void)corpus;
    return it->second->response;
}

// N-grams (n = 1..3) token-aligned inside the span after snapping outward.
std::vector<NgramKey> span_ngrams(const Utterance& u, const Span& span) {
    const int n = static_cast<int>(u.tokens.size());
    int first = -1, last = -1;  // covered token index range [first, last]
    for (int i = 0; i < n; ++i) {
        const Token& t = u.tokens[i];
        if (t.begin < span.end && t.end > span.start) {
            if (first < 0) first = i;
            last = i;
        }
    }
    std::vector<NgramKey> out;
    if (first < 0) return out;
    for (int len = 1; len <= 3; ++len)
        for (int i = first; i + len - 1 <= last; ++i) {
            std::vector<std::string> toks;
            for (int k = 0; k < len; ++k) toks.push_back(to_lower(u.tokens[i + k].surface));
            out.push_back(ngram_key(toks));
        }
    return out;
}

MarkMap build_marks(const std::vector<AnnotationRecord>& records,
                    const std::vector<QRPair>& corpus) {
    std::map<std::string, const QRPair*> by_id;
    for (const QRPair& p : corpus) by_id[p.response.id] = &p;
    MarkMap marks;
    for (const AnnotationRecord& rec : records) {
        const Utterance& u = find_utterance(corpus, by_id, rec.utterance_id);
        for (const Span& span : rec.spans) {
            if (span.end <= span.start || span.start < 0 ||
                span.end > static_cast<int>(u.raw.size()))
                throw DataError("annotation span [" + std::to_string(span.start) + "," +
                                std::to_string(span.end) + ") out of bounds for utterance '" +
                                rec.utterance_id + "'");
            for (const NgramKey& g : span_ngrams(u, span))
                marks[{rec.utterance_id, g}].insert(rec.annotator_id);
        }
    }
    return marks;
}

}  // namespace

std::vector<AnnotationRecord> load_annotations(const std::filesystem::path& path) {
    std::vector<AnnotationRecord> out;
    const auto lines = split_lines(read_file(path));
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(lines[li]);
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(path.string() + " line " + std::to_string(li + 1) +
                            ": invalid JSON: " + e.what());
        }
        if (!rec.contains("utterance_id") || !rec.contains("annotator_id") ||
            !rec.contains("spans"))
            throw DataError(path.string() + " line " + std::to_string(li + 1) +
                            ": needs utterance_id, annotator_id, spans");
        AnnotationRecord r;
        r.utterance_id = rec["utterance_id"].get<std::string>();
        r.annotator_id = rec["annotator_id"].get<std::string>();
        for (const auto& s : rec["spans"])
            r.spans.push_back(Span{s["start"].get<int>(), s["end"].get<int>()});
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CueCandidate> aggregate(const std::vector<AnnotationRecord>& records,
                                    const std::vector<QRPair>& corpus) {
    const MarkMap marks = build_marks(records, corpus);
    std::map<NgramKey, std::set<std::string>> annotators_by_ngram;
    std::map<NgramKey, std::set<std::string>> utterances_by_ngram;
    for (const auto& [key, annotators] : marks) {
        annotators_by_ngram[key.second].insert(annotators.begin(), annotators.end());
        utterances_by_ngram[key.second].insert(key.first);
    }
    std::vector<CueCandidate> out;
    out.reserve(annotators_by_ngram.size());
    for (const auto& [ngram, annotators] : annotators_by_ngram) {
        CueCandidate c;
        c.ngram = ngram;
        c.annotator_count = static_cast<long>(annotators.size());
        c.utterance_support = static_cast<long>(utterances_by_ngram[ngram].size());
        out.push_back(std::move(c));
    }
    return out;
}

std::map<int, double> agreement_curve(const std::vector<AnnotationRecord>& records,
                                      const std::vector<QRPair>& corpus,
                                      const std::vector<int>& k_values, int trials,
                                      std::uint64_t seed) {
    std::set<std::string> pool_set;
    for (const AnnotationRecord& r : records) pool_set.insert(r.annotator_id);
    const std::vector<std::string> pool(pool_set.begin(), pool_set.end());
    if (pool.size() < 2)
        throw InsufficientDataError("agreement_curve: need at least 2 annotators");
    if (trials < 1) throw UsageError("agreement_curve: trials must be >= 1");

    const MarkMap marks = build_marks(records, corpus);
    if (marks.empty())
        throw InsufficientDataError("agreement_curve: no marked n-grams");

    // Per item, which pool members marked it (by pool index).
    std::map<std::string, int> pool_index;
    for (std::size_t i = 0; i < pool.size(); ++i) pool_index[pool[i]] = static_cast<int>(i);
    std::vector<std::vector<char>> item_marked;
    item_marked.reserve(marks.size());
    for (const auto& [key, annotators] : marks) {
        std::vector<char> row(pool.size(), 0);
        for (const std::string& a : annotators) row[static_cast<std::size_t>(pool_index[a])] = 1;
        item_marked.push_back(std::move(row));
    }

    std::map<int, double> curve;
    Rng base(seed);
    for (int k : k_values) {
        if (k < 2 || static_cast<std::size_t>(k) > pool.size())
            throw UsageError("agreement_curve: k=" + std::to_string(k) +
                             " outside [2, pool size " + std::to_string(pool.size()) + "]");
        const double total_pairs = static_cast<double>(k) * (k - 1) / 2.0;
        double trial_sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            Rng trial_rng = base.fork(static_cast<std::uint64_t>(k) * 0x10001ULL +
                                      static_cast<std::uint64_t>(t));
            const auto subset = sample_indices(pool.size(), static_cast<std::size_t>(k),
                                               trial_rng);
            double item_sum = 0.0;
            for (const auto& row : item_marked) {
                int m = 0;
                for (std::size_t idx : subset) m += row[idx];
                const double agree = (static_cast<double>(m) * (m - 1) / 2.0) +
                                     (static_cast<double>(k - m) * (k - m - 1) / 2.0);
                item_sum += agree / total_pairs;
            }
            trial_sum += item_sum / static_cast<double>(item_marked.size());
        }
        curve[k] = trial_sum / static_cast<double>(trials);
    }
    return curve;
}

CueLexicon export_cues(const std::vector<CueCandidate>& candidates, long min_annotators,
                       Target task) {
    if (min_annotators < 1) throw UsageError("export_cues: min_annotators must be >= 1");
    CueLexicon lex;
    lex.task = task;
    lex.provenance = "elicitation";
    for (const CueCandidate& c : candidates) {
        if (c.annotator_count < min_annotators) continue;
        CueEntry entry;
        entry.ngram = c.ngram;
        entry.freq = 0;  // statistics are learned on a dev set afterwards
        lex.entries[c.ngram] = std::move(entry);
    }
    return lex;
}

}  // namespace snark
