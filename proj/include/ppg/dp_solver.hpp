#pragma once

#include "ppg/game.hpp"
#include "ppg/oracle.hpp"

namespace ppg {

// Antichain dynamic program over states (Y, B): Y is the antichain of
// available vertices, X(Y, B) its up-closure, and b_i records whether winning
// set S_i is still Breaker-free.  Maker to move in every state; one expansion
// covers a full Maker+Breaker round.  Memoized on (Y, B); the reachable state
// count is bounded by (|X|+1)^w * 2^m.
//
// stats->nodes counts state evaluations, stats->states distinct memoized states.
Player solve_dp(const Game& g, SolveStats* stats = nullptr);

// Maker-Maker variant.  Each set carries a liveness tag relative to the player
// to move: untouched, only the mover has claimed in it, only the opponent has,
// or both (dead).  Perspective flips every ply; draws surface as exhausted
// boards where nobody filled a set.
MMResult solve_dp_mm(const Game& g, SolveStats* stats = nullptr);

}  // namespace ppg
