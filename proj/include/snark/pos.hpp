#ifndef SNARK_POS_HPP
#define SNARK_POS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace snark {

// Penn Treebank tagset, plus the standard punctuation tags. This is the fixed
// enumeration pre-tagged input is validated against.
enum class Pos : std::uint8_t {
    CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD,
    NN, NNS, NNP, NNPS, PDT, POSS, PRP, PRP_S, RB, RBR, RBS,
    RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP, VBZ,
    WDT, WP, WP_S, WRB,
    // punctuation
    Period, Comma, Colon, Lrb, Rrb, OpenQuote, CloseQuote, Dollar, Hash,
};

std::string_view pos_name(Pos p);
std::optional<Pos> pos_from_name(std::string_view name);

inline bool is_noun_tag(Pos p) {
    return p == Pos::NN || p == Pos::NNS || p == Pos::NNP || p == Pos::NNPS;
}
inline bool is_adjective_tag(Pos p) {
    return p == Pos::JJ || p == Pos::JJR || p == Pos::JJS;
}
inline bool is_wh_tag(Pos p) { return p == Pos::WP || p == Pos::WDT || p == Pos::WRB; }
inline bool is_verb_tag(Pos p) {
    return p == Pos::VB || p == Pos::VBD || p == Pos::VBG || p == Pos::VBN ||
           p == Pos::VBP || p == Pos::VBZ;
}

}  // namespace snark

#endif
