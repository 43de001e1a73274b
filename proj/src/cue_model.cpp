#include "snark/cue_model.hpp"

#include <algorithm>

#include <json.hpp>

#include "snark/errors.hpp"
#include "snark/util.hpp"

namespace snark {

NgramKey ngram_key(const std::vector<std::string>& tokens) { return join(tokens, " "); }

std::vector<std::string> ngram_tokens(const NgramKey& key) { return split_on(key, ' '); }

bool contains_ngram(const Utterance& utterance, const NgramKey& ngram) {
    const auto want = ngram_tokens(ngram);
    if (want.empty() || utterance.tokens.size() < want.size()) return false;
    const std::size_t n = utterance.tokens.size(), m = want.size();
    for (std::size_t i = 0; i + m <= n; ++i) {
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) {
            if (to_lower(utterance.tokens[i + k].surface) != want[k]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

CueLexicon learn_cue_stats(const std::set<NgramKey>& seed_cues,
                           const std::vector<QRPair>& dev, const ClassTask& task,
                           std::string provenance) {
    if (dev.empty()) throw InsufficientDataError("learn_cue_stats: empty development set");
    CueLexicon lex;
    lex.task = task.target;
    lex.provenance = std::move(provenance);
    for (const NgramKey& cue : seed_cues) {
        CueEntry entry;
        entry.ngram = cue;
        long positive = 0;
        for (const QRPair& pair : dev) {
            if (!contains_ngram(pair.response, cue)) continue;
            ++entry.freq;
            if (binarize(pair, task) == Label::Positive) ++positive;
        }
        if (entry.freq > 0)
            entry.pct_class = static_cast<double>(positive) / static_cast<double>(entry.freq);
        lex.entries[cue] = std::move(entry);
    }
    return lex;
}

namespace {

bool qualifies(long freq, const std::optional<double>& pct, const ThresholdParams& p) {
    return freq >= p.theta1 && pct && *pct >= p.theta2;
}

}  // namespace

std::vector<NgramKey> cue_hits(const Utterance& utterance, const CueLexicon& lexicon,
                               const ThresholdParams& params) {
    std::vector<NgramKey> hits;
    for (const auto& [key, entry] : lexicon.entries) {
        if (!qualifies(entry.freq, entry.pct_class, params)) continue;
        if (contains_ngram(utterance, key)) hits.push_back(key);
    }
    return hits;  // std::map iteration keeps them sorted
}

Label classify_cue(const Utterance& utterance, const CueLexicon& lexicon,
                   const ThresholdParams& params) {
    return cue_hits(utterance, lexicon, params).size() >= 2 ? Label::Positive
                                                            : Label::Counter;
}

TuneResult tune_cue(const CueLexicon& lexicon, const std::vector<QRPair>& train,
                    const ClassTask& task, const Grid& grid, double beta) {
    std::vector<Label> gold;
    gold.reserve(train.size());
    for (const QRPair& pair : train) gold.push_back(binarize(pair, task));
    if (std::count(gold.begin(), gold.end(), Label::Positive) == 0)
        throw InsufficientDataError("tune_cue: training set has no positive instances");

    auto classify = [&](const ThresholdParams& p) {
        std::vector<Label> pred;
        pred.reserve(train.size());
        for (const QRPair& pair : train) pred.push_back(classify_cue(pair.response, lexicon, p));
        return pred;
    };
    TuneResult result;
    result.grid = run_grid(classify, gold, grid, beta);
    result.params = result.grid.cells[result.grid.best_index].params;
    result.report = result.grid.cells[result.grid.best_index].report;
    return result;
}

std::string cue_lexicon_to_tsv(const CueLexicon& lexicon) {
    nlohmann::json meta{{"kind", "cue-lexicon"},
                        {"task", std::string(target_name(lexicon.task))},
                        {"source", lexicon.provenance}};
    std::string out = "# " + meta.dump() + "\n";
    for (const auto& [key, entry] : lexicon.entries) {
        out += key;
        out += '\t';
        out += std::to_string(entry.freq);
        out += '\t';
        if (entry.pct_class) out += format_double(*entry.pct_class);
        out += '\n';
    }
    return out;
}

CueLexicon cue_lexicon_from_tsv(const std::string& text) {
    CueLexicon lex;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto brace = line.find('{');
            if (brace != std::string::npos) {
                try {
                    auto meta = nlohmann::json::parse(line.substr(brace));
                    if (meta.contains("task"))
                        if (auto t = target_from_name(meta["task"].get<std::string>()))
                            lex.task = *t;
                    if (meta.contains("source")) lex.provenance = meta["source"].get<std::string>();
                } catch (const nlohmann::json::parse_error&) {
                    // plain comment, ignore
                }
            }
            continue;
        }
        const auto fields = split_on(line, '\t');
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
            throw DataError("cue lexicon line " + std::to_string(li + 1) +
                            ": expected ngram<TAB>freq<TAB>pct_class");
        auto freq = parse_long(fields[1]);
        if (!freq || *freq < 0)
            throw DataError("cue lexicon line " + std::to_string(li + 1) + ": bad freq");
        CueEntry entry;
        entry.ngram = fields[0];
        entry.freq = *freq;
        if (fields.size() == 3 && !fields[2].empty()) {
            auto pct = parse_double(fields[2]);
            if (!pct || *pct < 0.0 || *pct > 1.0)
                throw DataError("cue lexicon line " + std::to_string(li + 1) + ": bad pct_class");
            entry.pct_class = *pct;
        }
        if (!lex.entries.emplace(entry.ngram, entry).second)
            throw DataError("cue lexicon line " + std::to_string(li + 1) + ": duplicate ngram '" +
                            entry.ngram + "'");
    }
    return lex;
}

void save_cue_lexicon(const CueLexicon& lexicon, const std::filesystem::path& path) {
    write_file_atomic(path, cue_lexicon_to_tsv(lexicon));
}

CueLexicon load_cue_lexicon(const std::filesystem::path& path) {
    return cue_lexicon_from_tsv(read_file(path));
}

}  // namespace snark
