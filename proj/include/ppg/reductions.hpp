#pragma once

#include "ppg/game.hpp"

#include <string>
#include <vector>

namespace ppg {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // signed 1-based literals, deduped

    void validate(std::size_t max_clause = 3) const;  // throws PreconditionViolated
};

// Prenex 3-CNF with strictly alternating single-variable blocks
// forall x1 exists x2 ... forall x_{2n-1} exists x_{2n}.
struct QbfFormula {
    int num_vars = 0;  // even; odd-indexed variables universal, even existential
    CnfFormula matrix;
};

struct CoverInstance {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> edges;  // element indices
    int k = 0;                            // budget
};

// Positive 2-DNF: each clause is a conjunction of one or two variables.
struct AvoidTrueFormula {
    std::vector<std::string> vars;
    std::vector<std::vector<int>> clauses;  // variable indices
};

// Per variable i: u<i> below v<i>, nv<i>, tv<i>; per clause the winning set of
// its literal vertices.  Height 2, 4n vertices; the formula is satisfiable iff
// Breaker wins Maker-first.
Game from_3sat(const CnfFormula& f);

// The height-3 budget gadget: X_M below X_V, X_E below its incident X_V and
// all of X_B, everything of X_V and X_B below x, X_B below y; unique winning
// set {x}.  2(n+m-k+1) vertices; a size-k cover exists iff Breaker wins.
// Throws InvalidBudget when k > m or k > n.
Game from_setcover(const CoverInstance& c);

// Width-2 ladder v<i>, nv<i> joined by connectors u<i>; clause winning sets as
// in from_3sat.  3N-1 vertices for N variables; the formula is true iff
// Breaker wins Maker-first.
Game from_3qbf(const QbfFormula& q);

// Maker-Maker game: vertex per variable, vertex + singleton winning set per
// clause, variable below the clauses containing it.  First player wins Avoid
// True iff the first player wins the game.
Game from_avoid_true(const AvoidTrueFormula& d);

// w columns of height h with gravity order c<i>r1 < ... < c<i>r<h>; winning
// sets are all horizontal, vertical and two-direction diagonal k-alignments.
Game gen_connect_k(int k, int w, int h);

// DIMACS CNF: 'c' comments, "p cnf VARS CLAUSES", clauses as 0-terminated
// integer lists.
CnfFormula parse_dimacs(const std::string& text);

// QDIMACS restricted to single-variable a/e blocks in strict a-first
// alternation covering variables 1..N in order.
QbfFormula parse_qdimacs(const std::string& text);

// Lines "element ID" and "edge ID [ID ...]"; the budget comes from the caller.
CoverInstance parse_setcover(const std::string& text, int k);

// Lines "var ID" and "clause ID [ID]".
AvoidTrueFormula parse_avoidtrue(const std::string& text);

}  // namespace ppg
