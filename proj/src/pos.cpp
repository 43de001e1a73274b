#include "snark/pos.hpp"

#include <array>
#include <utility>

namespace snark {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 45> kPosNames{{
    {Pos::CC, "CC"},       {Pos::CD, "CD"},       {Pos::DT, "DT"},
    {Pos::EX, "EX"},       {Pos::FW, "FW"},       {Pos::IN, "IN"},
    {Pos::JJ, "JJ"},       {Pos::JJR, "JJR"},     {Pos::JJS, "JJS"},
    {Pos::LS, "LS"},       {Pos::MD, "MD"},       {Pos::NN, "NN"},
    {Pos::NNS, "NNS"},     {Pos::NNP, "NNP"},     {Pos::NNPS, "NNPS"},
    {Pos::PDT, "PDT"},     {Pos::POSS, "POS"},    {Pos::PRP, "PRP"},
    {Pos::PRP_S, "PRP$"},  {Pos::RB, "RB"},       {Pos::RBR, "RBR"},
    {Pos::RBS, "RBS"},     {Pos::RP, "RP"},       {Pos::SYM, "SYM"},
    {Pos::TO, "TO"},       {Pos::UH, "UH"},       {Pos::VB, "VB"},
    {Pos::VBD, "VBD"},     {Pos::VBG, "VBG"},     {Pos::VBN, "VBN"},
    {Pos::VBP, "VBP"},     {Pos::VBZ, "VBZ"},     {Pos::WDT, "WDT"},
    {Pos::WP, "WP"},       {Pos::WP_S, "WP$"},    {Pos::WRB, "WRB"},
    {Pos::Period, "."},    {Pos::Comma, ","},     {Pos::Colon, ":"},
    {Pos::Lrb, "-LRB-"},   {Pos::Rrb, "-RRB-"},   {Pos::OpenQuote, "``"},
    {Pos::CloseQuote, "''"}, {Pos::Dollar, "$"},  {Pos::Hash, "#"},
}};

}  // namespace

std::string_view pos_name(Pos p) {
    for (const auto& [tag, name] : kPosNames)
        if (tag == p) return name;
    return "NN";
}

std::optional<Pos> pos_from_name(std::string_view name) {
    for (const auto& [tag, n] : kPosNames)
        if (n == name) return tag;
    return std::nullopt;
}

}  // namespace snark
