#pragma once

#include "ppg/game.hpp"

#include <cstdint>

namespace ppg {

enum class MMResult { FirstWin, SecondWin, Draw };

const char* to_string(MMResult r);

struct OracleOptions {
    int max_board = 24;  // refuse bigger boards; the bitset engine caps at 64 regardless
};

struct SolveStats {
    std::uint64_t nodes = 0;   // state evaluations
    std::uint64_t states = 0;  // distinct memoized states (DP solvers)
};

// Exhaustive minimax with a transposition table, Maker-Breaker rules: Maker
// wins the instant a winning set is filled, Breaker wins once every winning
// set is hit or the board is exhausted.
Player solve_mb(const Game& g, Player first, const OracleOptions& opts = {},
                SolveStats* stats = nullptr);
Player solve_mb(const Position& pos, const OracleOptions& opts = {}, SolveStats* stats = nullptr);

// Both first-mover variants combined into the four-class outcome.
Outcome outcome4(const Game& g, const OracleOptions& opts = {}, SolveStats* stats = nullptr);

// Maker-Maker rules: both players race to fill a set of their own; draws are
// possible.  The result is relative to whichever player moves first.
MMResult solve_mm(const Game& g, Player first, const OracleOptions& opts = {},
                  SolveStats* stats = nullptr);
MMResult solve_mm(const Position& pos, const OracleOptions& opts = {}, SolveStats* stats = nullptr);

// A move for pos.to_move preserving the position's game value; ties break
// toward the lowest vertex index.  Throws GameOver when no move exists or a
// winning set is already complete.
int best_move(const Position& pos, const OracleOptions& opts = {});

}  // namespace ppg
