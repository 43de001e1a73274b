#include "snark/tagging.hpp"

#include <cctype>

#include "snark/errors.hpp"
#include "snark/util.hpp"

namespace snark {

namespace {

const std::map<std::string, Pos>& builtin_lexicon() {
    static const std::map<std::string, Pos> lex = {
        // interjections
        {"oh", Pos::UH}, {"ah", Pos::UH}, {"wow", Pos::UH}, {"yes", Pos::UH},
        {"yeah", Pos::UH}, {"yep", Pos::UH}, {"nah", Pos::UH}, {"hey", Pos::UH},
        {"hmm", Pos::UH}, {"huh", Pos::UH}, {"uh", Pos::UH}, {"um", Pos::UH},
        {"er", Pos::UH}, {"ha", Pos::UH}, {"haha", Pos::UH}, {"lol", Pos::UH},
        {"oops", Pos::UH}, {"ouch", Pos::UH}, {"okay", Pos::UH}, {"ok", Pos::UH},
        // determiners
        {"the", Pos::DT}, {"a", Pos::DT}, {"an", Pos::DT}, {"this", Pos::DT},
        {"these", Pos::DT}, {"those", Pos::DT}, {"each", Pos::DT}, {"every", Pos::DT},
        {"some", Pos::DT}, {"any", Pos::DT}, {"no", Pos::DT}, {"all", Pos::DT},
        {"another", Pos::DT}, {"both", Pos::DT},
        // pronouns
        {"i", Pos::PRP}, {"you", Pos::PRP}, {"he", Pos::PRP}, {"she", Pos::PRP},
        {"it", Pos::PRP}, {"we", Pos::PRP}, {"they", Pos::PRP}, {"me", Pos::PRP},
        {"him", Pos::PRP}, {"us", Pos::PRP}, {"them", Pos::PRP}, {"myself", Pos::PRP},
        {"yourself", Pos::PRP}, {"himself", Pos::PRP}, {"herself", Pos::PRP},
        {"itself", Pos::PRP}, {"ourselves", Pos::PRP}, {"themselves", Pos::PRP},
        {"my", Pos::PRP_S}, {"your", Pos::PRP_S}, {"his", Pos::PRP_S},
        {"her", Pos::PRP_S}, {"its", Pos::PRP_S}, {"our", Pos::PRP_S},
        {"their", Pos::PRP_S},
        // WH words
        {"who", Pos::WP}, {"whom", Pos::WP}, {"what", Pos::WP},
        {"which", Pos::WDT}, {"that", Pos::WDT}, {"whatever", Pos::WDT},
        {"whose", Pos::WP_S},
        {"when", Pos::WRB}, {"where", Pos::WRB}, {"why", Pos::WRB}, {"how", Pos::WRB},
        // be / have / do
        {"am", Pos::VBP}, {"is", Pos::VBZ}, {"are", Pos::VBP}, {"was", Pos::VBD},
        {"were", Pos::VBD}, {"be", Pos::VB}, {"been", Pos::VBN}, {"being", Pos::VBG},
        {"isn't", Pos::VBZ}, {"aren't", Pos::VBP}, {"wasn't", Pos::VBD},
        {"weren't", Pos::VBD}, {"ain't", Pos::VBP},
        {"have", Pos::VBP}, {"has", Pos::VBZ}, {"had", Pos::VBD}, {"having", Pos::VBG},
        {"haven't", Pos::VBP}, {"hasn't", Pos::VBZ}, {"hadn't", Pos::VBD},
        {"do", Pos::VBP}, {"does", Pos::VBZ}, {"did", Pos::VBD}, {"done", Pos::VBN},
        {"doing", Pos::VBG}, {"don't", Pos::VBP}, {"doesn't", Pos::VBZ},
        {"didn't", Pos::VBD},
        // modals
        {"can", Pos::MD}, {"could", Pos::MD}, {"will", Pos::MD}, {"would", Pos::MD},
        {"shall", Pos::MD}, {"should", Pos::MD}, {"may", Pos::MD}, {"might", Pos::MD},
        {"must", Pos::MD}, {"can't", Pos::MD}, {"cannot", Pos::MD}, {"won't", Pos::MD},
        {"couldn't", Pos::MD}, {"wouldn't", Pos::MD}, {"shouldn't", Pos::MD},
        {"mustn't", Pos::MD},
        // prepositions and subordinators
        {"of", Pos::IN}, {"in", Pos::IN}, {"on", Pos::IN}, {"at", Pos::IN},
        {"by", Pos::IN}, {"for", Pos::IN}, {"with", Pos::IN}, {"about", Pos::IN},
        {"against", Pos::IN}, {"between", Pos::IN}, {"into", Pos::IN},
        {"through", Pos::IN}, {"during", Pos::IN}, {"before", Pos::IN},
        {"after", Pos::IN}, {"above", Pos::IN}, {"below", Pos::IN}, {"from", Pos::IN},
        {"over", Pos::IN}, {"under", Pos::IN}, {"than", Pos::IN}, {"as", Pos::IN},
        {"if", Pos::IN}, {"because", Pos::IN}, {"while", Pos::IN}, {"since", Pos::IN},
        {"until", Pos::IN}, {"unless", Pos::IN}, {"like", Pos::IN},
        {"to", Pos::TO},
        // conjunctions
        {"and", Pos::CC}, {"or", Pos::CC}, {"but", Pos::CC}, {"nor", Pos::CC},
        // existential
        {"there", Pos::EX},
        // adverbs (incl. discourse markers the dialogue templates care about)
        {"not", Pos::RB}, {"never", Pos::RB}, {"very", Pos::RB}, {"quite", Pos::RB},
        {"too", Pos::RB}, {"also", Pos::RB}, {"just", Pos::RB}, {"right", Pos::RB},
        {"sorry", Pos::RB}, {"well", Pos::RB}, {"so", Pos::RB}, {"then", Pos::RB},
        {"now", Pos::RB}, {"here", Pos::RB}, {"still", Pos::RB}, {"always", Pos::RB},
        {"often", Pos::RB}, {"maybe", Pos::RB}, {"perhaps", Pos::RB},
        {"sure", Pos::RB}, {"please", Pos::RB}, {"indeed", Pos::RB},
        {"again", Pos::RB}, {"even", Pos::RB}, {"ever", Pos::RB}, {"once", Pos::RB},
        {"almost", Pos::RB}, {"already", Pos::RB}, {"away", Pos::RB},
        // common adjectives
        {"good", Pos::JJ}, {"bad", Pos::JJ}, {"nice", Pos::JJ}, {"great", Pos::JJ},
        {"quick", Pos::JJ}, {"big", Pos::JJ}, {"small", Pos::JJ}, {"stupid", Pos::JJ},
        {"dumb", Pos::JJ}, {"smart", Pos::JJ}, {"wrong", Pos::JJ}, {"true", Pos::JJ},
        {"false", Pos::JJ}, {"real", Pos::JJ}, {"whole", Pos::JJ}, {"poor", Pos::JJ},
        {"happy", Pos::JJ}, {"sad", Pos::JJ}, {"pathetic", Pos::JJ},
        {"ridiculous", Pos::JJ}, {"brilliant", Pos::JJ}, {"clever", Pos::JJ},
        {"nasty", Pos::JJ}, {"sarcastic", Pos::JJ}, {"other", Pos::JJ},
        {"more", Pos::JJR}, {"less", Pos::JJR}, {"most", Pos::JJS},
        {"better", Pos::JJR}, {"best", Pos::JJS}, {"worse", Pos::JJR},
        {"worst", Pos::JJS},
    };
    return lex;
}

bool all_non_word(const std::string& s) {
    for (unsigned char c : s)
        if (std::isalnum(c) || c >= 0x80) return false;
    return !s.empty();
}

Pos punct_tag(const std::string& s) {
    if (s == "." || s == "!" || s == "?") return Pos::Period;
    if (s == ",") return Pos::Comma;
    if (s == ":" || s == ";") return Pos::Colon;
    if (s == "(" || s == "[" || s == "{") return Pos::Lrb;
    if (s == ")" || s == "]" || s == "}") return Pos::Rrb;
    if (s == "\"" || s == "'" || s == "`") return Pos::CloseQuote;
    if (s == "$") return Pos::Dollar;
    if (s == "#") return Pos::Hash;
    return Pos::SYM;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_indefinite_pronoun(const std::string& surface) {
    return surface == "someone" || surface == "anyone" || surface == "something";
}

}  // namespace

Tagger::Tagger() : lexicon_(builtin_lexicon()) {}

Tagger::Tagger(std::map<std::string, Pos> lexicon) : lexicon_(std::move(lexicon)) {}

Tagger Tagger::with_lexicon_file(const std::filesystem::path& path) {
    std::map<std::string, Pos> lex = builtin_lexicon();
    for (auto& [word, tag] : load_lexicon_file(path)) lex[word] = tag;
    return Tagger(std::move(lex));
}

Pos Tagger::tag_word(const std::string& surface) const {
    const std::string word = to_lower(surface);
    if (all_non_word(word)) return punct_tag(word);
    if (auto it = lexicon_.find(word); it != lexicon_.end()) return it->second;
    if (word.size() > 2 && ends_with(word, "ly")) return Pos::RB;
    if (word.size() > 4 && ends_with(word, "ing")) return Pos::VBG;
    if (word.size() > 3 && ends_with(word, "ed")) return Pos::VBD;
    if (word.size() >= 3 && word.back() == 's' && !ends_with(word, "ss") &&
        !ends_with(word, "'s")) {
        // -s counts as plural only when the stem would itself come out NN.
        const std::string stem = word.substr(0, word.size() - 1);
        if (lexicon_.find(stem) == lexicon_.end() && !(stem.size() > 2 && ends_with(stem, "ly")) &&
            !(stem.size() > 4 && ends_with(stem, "ing")) &&
            !(stem.size() > 3 && ends_with(stem, "ed")))
            return Pos::NNS;
    }
    return Pos::NN;
}

TaggedUtterance Tagger::tag(const Utterance& utterance) const {
    TaggedUtterance out;
    out.utt = utterance;
    for (Token& t : out.utt.tokens) t.pos = tag_word(t.surface);
    out.np_chunks = chunk_np(out.utt.tokens);
    return out;
}

std::vector<Chunk> chunk_np(const std::vector<Token>& tokens) {
    const int n = static_cast<int>(tokens.size());
    std::vector<Chunk> chunks;
    int i = 0;
    while (i < n) {
        int j = i;
        if (tokens[j].pos == Pos::DT) ++j;
        while (j < n && tokens[j].pos && is_adjective_tag(*tokens[j].pos)) ++j;
        int k = j;
        while (k < n && tokens[k].pos &&
               (is_noun_tag(*tokens[k].pos) || *tokens[k].pos == Pos::PRP))
            ++k;
        if (k > j) {
            chunks.push_back(Chunk{i, k});
            i = k;
        } else if (is_indefinite_pronoun(to_lower(tokens[i].surface))) {
            chunks.push_back(Chunk{i, i + 1});
            ++i;
        } else {
            ++i;
        }
    }
    return chunks;
}

std::map<std::string, Pos> load_lexicon_file(const std::filesystem::path& path) {
    std::map<std::string, Pos> lex;
    const auto lines = split_lines(read_file(path));
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_on(line, '\t');
        if (fields.size() != 2)
            throw DataError(path.string() + " line " + std::to_string(li + 1) +
                            ": expected word<TAB>TAG");
        auto tag = pos_from_name(fields[1]);
        if (!tag)
            throw DataError(path.string() + " line " + std::to_string(li + 1) +
                            ": unknown tag symbol '" + fields[1] + "'");
        lex[to_lower(fields[0])] = *tag;
    }
    return lex;
}

std::vector<TaggedUtterance> load_pretagged(const std::filesystem::path& path,
                                            const std::vector<QRPair>* corpus) {
    std::map<std::string, const QRPair*> by_id;
    if (corpus)
        for (const QRPair& p : *corpus) by_id[p.response.id] = &p;

    std::vector<TaggedUtterance> out;
    const auto lines = split_lines(read_file(path));
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const std::string where = path.string() + " line " + std::to_string(li + 1);
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_on(line, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            throw DataError(where + ": expected id<TAB>token_TAG ... [<TAB>chunks]");

        TaggedUtterance tu;
        tu.utt.id = fields[0];
        std::vector<std::string> surfaces;
        for (const std::string& item : split_on(fields[1], ' ')) {
            if (item.empty()) continue;
            const std::size_t us = item.rfind('_');
            if (us == std::string::npos || us == 0 || us + 1 >= item.size())
                throw DataError(where + ": malformed token '" + item + "'");
            const std::string tag_name = item.substr(us + 1);
            auto tag = pos_from_name(tag_name);
            if (!tag)
                throw DataError(where + ": unknown tag symbol '" + tag_name + "'");
            Token t;
            t.surface = item.substr(0, us);
            t.pos = *tag;
            tu.utt.tokens.push_back(std::move(t));
            surfaces.push_back(tu.utt.tokens.back().surface);
        }
        tu.utt.raw = join(surfaces, " ");
        int offset = 0;
        for (Token& t : tu.utt.tokens) {
            t.begin = offset;
            t.end = offset + static_cast<int>(t.surface.size());
            offset = t.end + 1;
        }

        if (corpus) {
            auto it = by_id.find(tu.utt.id);
            if (it == by_id.end())
                throw DataError(where + ": id '" + tu.utt.id + "' not present in corpus");
            const std::size_t expect = it->second->response.tokens.size();
            if (expect != tu.utt.tokens.size())
                throw DataError(where + ": token count mismatch for id '" + tu.utt.id +
                                "': corpus has " + std::to_string(expect) + ", file has " +
                                std::to_string(tu.utt.tokens.size()));
        }

        if (fields.size() == 3 && !fields[2].empty()) {
            for (const std::string& range : split_on(fields[2], ' ')) {
                if (range.empty()) continue;
                const auto dash = range.find('-');
                auto start = parse_long(range.substr(0, dash));
                std::optional<long> end;
                if (dash != std::string::npos) end = parse_long(range.substr(dash + 1));
                const auto n = static_cast<long>(tu.utt.tokens.size());
                if (!start || !end || *start < 0 || *end <= *start || *end > n)
                    throw DataError(where + ": bad chunk range '" + range + "'");
                tu.np_chunks.push_back(
                    Chunk{static_cast<int>(*start), static_cast<int>(*end)});
            }
        } else {
            tu.np_chunks = chunk_np(tu.utt.tokens);
        }
        out.push_back(std::move(tu));
    }
    return out;
}

}  // namespace snark
