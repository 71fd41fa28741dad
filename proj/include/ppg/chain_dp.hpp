#pragma once

#include "ppg/game.hpp"
#include "ppg/oracle.hpp"
#include "ppg/poly_solvers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppg {

// Black-singleton reduction on a disjoint-chain board.  Given a winning set
// {x_{i,j}} with x_{i,j} Black, non-minimal and j >= 3, and no winning set
// made only of White vertices above x_{i,j}, removes the top j-1 (|X| even)
// or j-2 (|X| odd) vertices of chain i.  Winning sets inside the remaining
// board survive, sets meeting the removed part only on White vertices shrink,
// sets with a Black vertex there drop.  The Maker-first winner is unchanged;
// every vertex keeps its color.
Game reduce_black_singleton(const Game& g, int chain, int j);

// Chain DP for disjoint chains with winning sets of size <= 2, any height.
// States are (K, W): remaining chain heights plus at most one pending Black
// singleton index per chain (at most one overall when |X| is odd).
Player solve_chains_ws2(const Game& g, SolveStats* stats = nullptr);

// One applicable reduction on an even-board height-<=2 chain game:
//   R1: a bottom-bottom winning set disjoint from every other set; both
//       vertices leave the board.
//   R2: a set I of topped chains such that every winning set containing one
//       of their bottoms also contains one of their tops; the chains leave
//       the board along with every set touching them.
struct ReductionStep {
    enum Kind { R1, R2 } kind = R1;
    std::vector<std::string> removed;
};
std::optional<ReductionStep> find_reduction_h2(const Game& g);
Game apply_reduction_h2(const Game& g, const ReductionStep& step);

// A good pattern ({x_{i1},x_{i2}}, {x_{i2},y_{i3}}, ..., {x_{i(l-1)},y_{il}})
// closed by {x_{il}, z} with z one of the pattern's inner bottoms, a top of
// the first two chains, or a bottom outside the pattern.  Such a pattern
// forces a Maker win on an even board.
struct WinningPattern {
    std::vector<std::vector<std::string>> sets;  // pattern sets, closing set last
};
std::optional<WinningPattern> find_winning_pattern(const Game& g);

// Full solver for height <= 2 disjoint chains with sets of size <= 2:
// odd boards by the five-condition case split, even boards by reducing with
// R1/R2 to a fixpoint and checking whether any winning set survives.
SolverVerdict solve_chains_h2_ws2(const Game& g);

}  // namespace ppg
