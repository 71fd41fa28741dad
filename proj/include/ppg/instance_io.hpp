#pragma once

#include "ppg/game.hpp"

#include <cstdint>
#include <string>

namespace ppg {

// "ppg v1" instance format: header line, optional "convention:" line,
// "vertex ID", "cover ID ID" (smaller first), "winset [ID ...]" directives;
// '#' starts a comment.  References may precede declarations.
Game parse_instance(const std::string& text);

// Canonical text: header, convention (only when maker-maker), vertices in
// index order, the cover reduction, winsets in order.  parse(write(g))
// reproduces g structurally.
std::string write_instance(const Game& g);

struct GenSpec {
    int n = 0;           // vertices
    int width = 1;       // chains in the layered skeleton; final width <= this
    int num_winsets = 0;
    int winset_size = 1;
    std::uint64_t seed = 0;
};

// Deterministic in spec.seed: vertex i sits on chain i mod width below vertex
// i + width, plus random forward covers, plus uniform random winsets.
Game random_game(const GenSpec& spec);

}  // namespace ppg
