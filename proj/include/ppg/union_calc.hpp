#pragma once

#include "ppg/game.hpp"

#include <string>
#include <vector>

namespace ppg {

enum class Parity { Even, Odd };

inline Parity parity_of(const Game& g) {
    return g.board_size() % 2 == 0 ? Parity::Even : Parity::Odd;
}

// Disjoint union: components keep their internal order and winning sets and
// are incomparable across.  Vertex names gain a "1:" / "2:" prefix so unions
// of a game with itself stay well-formed.  Conventions must match.
Game disjoint_union(const Game& a, const Game& b);

// Components untouched by every winning set only contribute their parity:
// they are stripped, with a single isolated vertex kept when the stripped
// part has odd size.  The outcome is unchanged.
Game simplify_empty_component(const Game& g);

struct OutcomeSet {
    unsigned mask = 0;  // bit i <=> Outcome(i) possible

    void add(Outcome o) { mask |= 1u << static_cast<int>(o); }
    bool contains(Outcome o) const { return mask >> static_cast<int>(o) & 1u; }
    std::vector<Outcome> values() const;
    std::string to_string() const;  // e.g. "{M,N}"
    bool operator==(const OutcomeSet&) const = default;
};

// The outcomes a disjoint union can take given each component's board parity
// and outcome.  Every listed outcome is realized by some witness pair (see
// union_identities) and no unlisted outcome can occur.
OutcomeSet union_table_lookup(Parity p1, Outcome o1, Parity p2, Outcome o2);

// Named small games covering every (parity, outcome) class, e.g. "EB2" =
// even board, outcome B, second variant.
struct Witness {
    std::string name;
    Game game;
    Outcome outcome;
};
const std::vector<Witness>& witness_catalog();

// Witness pairs pinning down each achievable entry of the union tables.
struct UnionIdentity {
    std::string left, right;
    Outcome result;
};
const std::vector<UnionIdentity>& union_identities();

}  // namespace ppg
