#pragma once

#include "ppg/poset.hpp"

#include <string>
#include <vector>

namespace ppg {

enum class Player { Maker, Breaker };
enum class Convention { MakerBreaker, MakerMaker };

// Outcome classes for the four first-player/second-player combinations:
//   M: Maker wins regardless of who starts
//   N: the next (first) player wins
//   P: the previous (second) player wins -- zugzwang, impossible without a poset
//   B: Breaker wins regardless of who starts
enum class Outcome { M, N, P, B };

inline Player other(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }

const char* to_string(Player p);
const char* to_string(Outcome o);
const char* to_string(Convention c);

// A poset positional game.  Winning sets are arbitrary vertex subsets; the
// empty set is permitted and makes Maker's task trivial.  Duplicate vertices
// inside one set collapse by construction.
struct Game {
    Poset poset;
    std::vector<Bits> winsets;
    Convention convention = Convention::MakerBreaker;

    static Game make(Poset p, const std::vector<std::vector<std::string>>& sets,
                     Convention c = Convention::MakerBreaker);
    static Game make_indexed(Poset p, const std::vector<std::vector<int>>& sets,
                             Convention c = Convention::MakerBreaker);

    int board_size() const { return poset.size(); }
};

// A snapshot of play.  In Maker-Maker games "maker" holds the first player's
// claims and "breaker" the second player's.  Claimed sets are disjoint and
// their union is downward closed.
struct Position {
    const Game* game = nullptr;
    Bits maker, breaker;
    Player to_move = Player::Maker;

    static Position initial(const Game& g, Player first = Player::Maker);
    // Validates the claim invariants; throws PreconditionViolated.
    static Position at(const Game& g, const Bits& maker, const Bits& breaker, Player to_move);

    Bits claimed() const { return maker | breaker; }
};

// Unclaimed vertices whose strict down-set is fully claimed.  Always an
// antichain of size <= width.
Bits available_moves(const Position& pos);
Bits available_after(const Game& g, const Bits& claimed);

Position apply_move(const Position& pos, int v);  // throws PreconditionViolated on illegal moves

// p(x) by vertex name.
int p_value(const Game& g, const std::string& vertex);

// Remark-1 normalization, Maker-Breaker only: claimed vertices leave the
// board, winning sets containing a Breaker vertex are dropped, the rest shrink
// by Maker's vertices.  The result is a fresh game with the same winner for
// the same player to move.
Game normalize(const Position& pos);

}  // namespace ppg
