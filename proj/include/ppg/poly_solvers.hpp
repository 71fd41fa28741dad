#pragma once

#include "ppg/game.hpp"
#include "ppg/oracle.hpp"

#include <optional>
#include <string>

namespace ppg {

// Result of a structure-aware solver.  All answers are for the game with
// Maker moving first; `certificate` explains which rule fired.
struct SolverVerdict {
    Player winner = Player::Breaker;
    std::string solver;
    std::string certificate;
};

// Height <= 2, a single winning set {x} of size 1.  Maker wins iff x is
// minimal, or the predecessors with even p-value are at most as many as those
// with odd p-value.
SolverVerdict solve_height2_single_ws1(const Game& g);

// Height <= 2, winning sets = exactly the singletons of every non-minimal
// vertex.  Maker wins iff |X| is odd or some top vertex has no more private
// than non-private predecessors.
SolverVerdict solve_height2_all_tops(const Game& g);

// Disjoint chains, all winning sets of size 1.  Maker wins iff some winning
// vertex is minimal or White, or |X| is odd and two Black winning vertices sit
// on different chains.
SolverVerdict solve_chains_ws1(const Game& g);

// Closed-form Connect-k answers on a w x h gravity board: Maker for
// 3 <= k <= w with h > 1 and w, h both odd; Breaker when no alignment fits.
// Everything else is out of the theorem's reach.
std::optional<SolverVerdict> solve_connect_k_known(int k, int w, int h);

// Disjoint chains with at most max_sets winning sets of size <= max_size:
// strips chains that meet no winning set (replacing an odd number of stripped
// vertices by one fresh isolated vertex), then runs the antichain DP on the
// residual board of width <= max_sets * max_size + 1.
SolverVerdict solve_bounded_chains(const Game& g, int max_sets, int max_size,
                                   SolveStats* stats = nullptr);

// Tries the closed-form solvers cheapest first, then the chain DPs, then the
// general DP, then the oracle; Maker-Breaker only.  Throws NoSolverApplicable
// when every route is either structurally wrong or over its resource cap.
SolverVerdict auto_dispatch(const Game& g, SolveStats* stats = nullptr);

}  // namespace ppg
