#include "snark/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>

#include <json.hpp>

#include "snark/errors.hpp"
#include "snark/rng.hpp"
#include "snark/util.hpp"

namespace snark {

namespace {

bool is_word_byte(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

char lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::string_view target_name(Target t) {
    return t == Target::Sarcastic ? "sarcastic" : "nasty";
}

std::optional<Target> target_from_name(std::string_view name) {
    if (name == "sarcastic" || name == "sarcasm") return Target::Sarcastic;
    if (name == "nasty") return Target::Nasty;
    return std::nullopt;
}

Label binarize(const QRPair& pair, const ClassTask& task) {
    if (task.target == Target::Sarcastic)
        return pair.sarcasm_score >= task.sarcasm_cutoff ? Label::Positive : Label::Counter;
    return pair.nasty_score <= task.nasty_cutoff ? Label::Positive : Label::Counter;
}

std::vector<Token> tokenize(const std::string& raw) {
    std::vector<Token> tokens;
    const std::size_t n = raw.size();
    std::size_t i = 0;
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            std::size_t j = i + 1;
            while (j < n) {
                unsigned char d = static_cast<unsigned char>(raw[j]);
                if (is_word_byte(d)) {
                    ++j;
                } else if ((d == '-' || d == '\'') && j + 1 < n &&
                           is_word_byte(static_cast<unsigned char>(raw[j + 1]))) {
                    j += 2;
                    while (j < n && is_word_byte(static_cast<unsigned char>(raw[j]))) ++j;
                } else {
                    break;
                }
            }
            std::string surface = raw.substr(i, j - i);
            for (char& ch : surface) ch = lower_ascii(ch);
            tokens.push_back(Token{std::move(surface), std::nullopt,
                                   static_cast<int>(i), static_cast<int>(j)});
            i = j;
        } else {
            tokens.push_back(Token{std::string(1, raw[i]), std::nullopt,
                                   static_cast<int>(i), static_cast<int>(i + 1)});
            ++i;
        }
    }
    return tokens;
}

namespace {

Utterance make_utterance(std::string id, std::string raw) {
    Utterance u;
    u.id = std::move(id);
    u.raw = std::move(raw);
    u.tokens = tokenize(u.raw);
    return u;
}

double require_finite(double v, const std::string& field, std::size_t line_no) {
    if (!std::isfinite(v))
        throw DataError("line " + std::to_string(line_no) + ": non-finite " + field);
    return v;
}

QRPair record_from_fields(std::string id, std::string quote, std::string response,
                          double sarcasm, double nasty, std::size_t line_no) {
    QRPair p;
    p.quote = make_utterance(id + "/q", std::move(quote));
    p.response = make_utterance(std::move(id), std::move(response));
    p.sarcasm_score = require_finite(sarcasm, "sarcasm score", line_no);
    p.nasty_score = require_finite(nasty, "nasty score", line_no);
    return p;
}

std::vector<QRPair> load_jsonl(const std::string& text) {
    std::vector<QRPair> corpus;
    std::set<std::string> seen_ids;
    const auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        const std::size_t line_no = li + 1;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!rec.is_object())
            throw DataError("line " + std::to_string(line_no) + ": expected a JSON object");
        for (const char* key : {"id", "quote", "response", "sarcasm", "nasty"})
            if (!rec.contains(key))
                throw DataError("line " + std::to_string(line_no) + ": missing field '" +
                                key + "'");
        if (!rec["id"].is_string() || !rec["quote"].is_string() || !rec["response"].is_string())
            throw DataError("line " + std::to_string(line_no) +
                            ": id/quote/response must be strings");
        if (!rec["sarcasm"].is_number() || !rec["nasty"].is_number())
            throw DataError("line " + std::to_string(line_no) +
                            ": sarcasm/nasty must be numeric");
        std::string id = rec["id"].get<std::string>();
        if (!seen_ids.insert(id).second)
            throw DataError("line " + std::to_string(line_no) + ": duplicate id '" + id + "'");
        corpus.push_back(record_from_fields(id, rec["quote"].get<std::string>(),
                                            rec["response"].get<std::string>(),
                                            rec["sarcasm"].get<double>(),
                                            rec["nasty"].get<double>(), line_no));
    }
    return corpus;
}

std::vector<std::string> parse_csv_row(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                cur += c;
                ++i;
            }
        } else if (c == '"') {
            if (!cur.empty())
                throw DataError("line " + std::to_string(line_no) +
                                ": stray quote inside unquoted CSV field");
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
        } else {
            cur += c;
            ++i;
        }
    }
    if (quoted)
        throw DataError("line " + std::to_string(line_no) + ": unterminated CSV quote");
    fields.push_back(std::move(cur));
    return fields;
}

std::vector<QRPair> load_csv(const std::string& text) {
    const auto lines = split_lines(text);
    std::vector<QRPair> corpus;
    if (lines.empty()) return corpus;
    const auto header = parse_csv_row(lines[0], 1);
    int col_id = -1, col_quote = -1, col_response = -1, col_sarcasm = -1, col_nasty = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string name = to_lower(header[c]);
        if (name == "id") col_id = static_cast<int>(c);
        else if (name == "quote") col_quote = static_cast<int>(c);
        else if (name == "response") col_response = static_cast<int>(c);
        else if (name == "sarcasm") col_sarcasm = static_cast<int>(c);
        else if (name == "nasty") col_nasty = static_cast<int>(c);
    }
    if (col_id < 0 || col_quote < 0 || col_response < 0 || col_sarcasm < 0 || col_nasty < 0)
        throw DataError("line 1: CSV header must name id, quote, response, sarcasm, nasty");
    std::set<std::string> seen_ids;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        if (lines[li].empty()) continue;
        const auto fields = parse_csv_row(lines[li], line_no);
        const std::size_t need = static_cast<std::size_t>(
            std::max({col_id, col_quote, col_response, col_sarcasm, col_nasty})) + 1;
        if (fields.size() < need)
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(need) + " CSV fields, got " +
                            std::to_string(fields.size()));
        auto sarcasm = parse_double(fields[static_cast<std::size_t>(col_sarcasm)]);
        auto nasty = parse_double(fields[static_cast<std::size_t>(col_nasty)]);
        if (!sarcasm || !nasty)
            throw DataError("line " + std::to_string(line_no) +
                            ": sarcasm/nasty must be numeric");
        std::string id = fields[static_cast<std::size_t>(col_id)];
        if (!seen_ids.insert(id).second)
            throw DataError("line " + std::to_string(line_no) + ": duplicate id '" + id + "'");
        corpus.push_back(record_from_fields(id, fields[static_cast<std::size_t>(col_quote)],
                                            fields[static_cast<std::size_t>(col_response)],
                                            *sarcasm, *nasty, line_no));
    }
    return corpus;
}

}  // namespace

std::vector<QRPair> load_corpus(const std::filesystem::path& path, CorpusFormat format) {
    if (!std::filesystem::exists(path))
        throw DataError("corpus file not found: " + path.string());
    if (format == CorpusFormat::Auto)
        format = path.extension() == ".csv" ? CorpusFormat::Csv : CorpusFormat::Jsonl;
    const std::string text = read_file(path);
    return format == CorpusFormat::Csv ? load_csv(text) : load_jsonl(text);
}

std::string corpus_to_jsonl(const std::vector<QRPair>& corpus) {
    std::string out;
    for (const QRPair& p : corpus) {
        nlohmann::json rec{{"id", p.response.id},
                           {"quote", p.quote.raw},
                           {"response", p.response.raw},
                           {"sarcasm", p.sarcasm_score},
                           {"nasty", p.nasty_score}};
        out += rec.dump();
        out += '\n';
    }
    return out;
}

Splits split_corpus(const std::vector<QRPair>& corpus, const SplitSpec& spec) {
    if (corpus.empty()) throw DataError("cannot split an empty corpus");
    double sum = 0;
    for (double f : spec.fractions) {
        if (f < 0) throw DataError("split fractions must be non-negative");
        sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw DataError("split fractions must sum to 1, got " + format_double(sum));

    const std::size_t n = corpus.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(spec.seed);
    shuffle(order, rng);

    // Largest-remainder apportionment keeps every size within +/-1 of n*f.
    std::array<std::size_t, 4> sizes{};
    std::array<std::pair<double, std::size_t>, 4> remainders{};
    std::size_t assigned = 0;
    for (std::size_t s = 0; s < 4; ++s) {
        double exact = spec.fractions[s] * static_cast<double>(n);
        sizes[s] = static_cast<std::size_t>(exact);
        remainders[s] = {exact - static_cast<double>(sizes[s]), s};
        assigned += sizes[s];
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::size_t k = 0; assigned < n; ++k, ++assigned) sizes[remainders[k % 4].second]++;

    Splits out;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < 4; ++s) {
        std::vector<QRPair>& dst =
            s == 0 ? out.dev1 : s == 1 ? out.dev2 : s == 2 ? out.train : out.test;
        dst.reserve(sizes[s]);
        for (std::size_t k = 0; k < sizes[s]; ++k) dst.push_back(corpus[order[pos++]]);
    }
    return out;
}

}  // namespace snark
