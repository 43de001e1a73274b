#ifndef SNARK_TAGGING_HPP
#define SNARK_TAGGING_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "snark/corpus.hpp"

namespace snark {

// Token index range [start, end), non-overlapping and in-bounds.
struct Chunk {
    int start = 0;
    int end = 0;
    bool operator==(const Chunk&) const = default;
};

struct TaggedUtterance {
    Utterance utt;                 // every token has pos set
    std::vector<Chunk> np_chunks;  // sorted by start
};

// Maximal non-overlapping matches of DT? (JJ|JJR|JJS)* (NN|NNS|NNP|NNPS|PRP)+,
// plus singleton chunks for bare PRP and the indefinite pronouns
// someone / anyone / something.
std::vector<Chunk> chunk_np(const std::vector<Token>& tokens);

// Rule tagger: closed-class lexicon lookup first, then suffix heuristics
// (-ly -> RB, -ing -> VBG, -ed -> VBD, -s on known nouns -> NNS), default NN.
// Stateless after construction; deterministic.
class Tagger {
public:
    Tagger();  // built-in lexicon
    explicit Tagger(std::map<std::string, Pos> lexicon);

    // Built-in lexicon with entries from a word<TAB>TAG file layered on top.
    static Tagger with_lexicon_file(const std::filesystem::path& path);

    TaggedUtterance tag(const Utterance& utterance) const;
    Pos tag_word(const std::string& surface) const;

    const std::map<std::string, Pos>& lexicon() const { return lexicon_; }

private:
    std::map<std::string, Pos> lexicon_;
};

std::map<std::string, Pos> load_lexicon_file(const std::filesystem::path& path);

// Pre-tagged input, one line per utterance: id<TAB>token_TAG token_TAG ...
// with an optional third field of chunk ranges "start-end start-end ...";
// when chunks are not supplied the chunker runs on the given tags.
// If a corpus is supplied, token counts are checked against the response
// tokenization of the record with the same id.
std::vector<TaggedUtterance> load_pretagged(const std::filesystem::path& path,
                                            const std::vector<QRPair>* corpus = nullptr);

}  // namespace snark

#endif
