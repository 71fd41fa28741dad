#include "ppg/game.hpp"

#include "ppg/errors.hpp"

namespace ppg {

const char* to_string(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::M: return "M";
        case Outcome::N: return "N";
        case Outcome::P: return "P";
        case Outcome::B: return "B";
    }
    return "?";
}

const char* to_string(Convention c) {
    return c == Convention::MakerBreaker ? "maker-breaker" : "maker-maker";
}

Game Game::make(Poset p, const std::vector<std::vector<std::string>>& sets, Convention c) {
    std::vector<std::vector<int>> idx;
    idx.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<int> one;
        one.reserve(s.size());
        for (const auto& name : s) one.push_back(p.index_of(name));
        idx.push_back(std::move(one));
    }
    return make_indexed(std::move(p), idx, c);
}

Game Game::make_indexed(Poset p, const std::vector<std::vector<int>>& sets, Convention c) {
    Game g;
    g.convention = c;
    std::size_t n = static_cast<std::size_t>(p.size());
    for (const auto& s : sets) {
        Bits b(n);
        for (int v : s) {
            if (v < 0 || v >= p.size()) throw UnknownVertex("winning set vertex index out of range");
            b.set(static_cast<std::size_t>(v));
        }
        g.winsets.push_back(std::move(b));
    }
    g.poset = std::move(p);
    return g;
}

Position Position::initial(const Game& g, Player first) {
    Position pos;
    pos.game = &g;
    pos.maker = Bits(static_cast<std::size_t>(g.board_size()));
    pos.breaker = Bits(static_cast<std::size_t>(g.board_size()));
    pos.to_move = first;
    return pos;
}

Position Position::at(const Game& g, const Bits& maker, const Bits& breaker, Player to_move) {
    if ((maker & breaker).any())
        throw PreconditionViolated("claimed sets overlap");
    Bits claimed = maker | breaker;
    // downward closed: every strict down-set of a claimed vertex is claimed
    for (auto v = claimed.find_first(); v != bits_npos; v = claimed.find_next(v)) {
        if (!g.poset.strict_down(static_cast<int>(v)).is_subset_of(claimed))
            throw PreconditionViolated("claimed set is not downward closed at '" +
                                       g.poset.name(static_cast<int>(v)) + "'");
    }
    Position pos;
    pos.game = &g;
    pos.maker = maker;
    pos.breaker = breaker;
    pos.to_move = to_move;
    return pos;
}

Bits available_after(const Game& g, const Bits& claimed) {
    Bits avail(static_cast<std::size_t>(g.board_size()));
    for (int v = 0; v < g.board_size(); ++v) {
        if (claimed.test(static_cast<std::size_t>(v))) continue;
        if (g.poset.strict_down(v).is_subset_of(claimed)) avail.set(static_cast<std::size_t>(v));
    }
    return avail;
}

Bits available_moves(const Position& pos) { return available_after(*pos.game, pos.claimed()); }

Position apply_move(const Position& pos, int v) {
    Bits avail = available_moves(pos);
    if (v < 0 || v >= pos.game->board_size() || !avail.test(static_cast<std::size_t>(v)))
        throw PreconditionViolated("illegal move");
    Position next = pos;
    if (pos.to_move == Player::Maker)
        next.maker.set(static_cast<std::size_t>(v));
    else
        next.breaker.set(static_cast<std::size_t>(v));
    next.to_move = other(pos.to_move);
    return next;
}

int p_value(const Game& g, const std::string& vertex) {
    return g.poset.p_value(g.poset.index_of(vertex));
}

Game normalize(const Position& pos) {
    const Game& g = *pos.game;
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch("normalize is defined for Maker-Breaker games only");
    Bits keep = ~pos.claimed();
    auto ind = g.poset.induced(keep);
    std::vector<std::vector<int>> sets;
    for (const Bits& s : g.winsets) {
        if ((s & pos.breaker).any()) continue;  // Breaker already hit it
        std::vector<int> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            if (!pos.maker.test(v)) t.push_back(ind.new_index[v]);
        sets.push_back(std::move(t));  // may be empty: Maker has filled it
    }
    return Game::make_indexed(std::move(ind.poset), sets, Convention::MakerBreaker);
}

}  // namespace ppg
