#include "ppg/oracle.hpp"

#include "ppg/errors.hpp"

#include <bit>
#include <unordered_map>
#include <vector>

namespace ppg {
namespace {

using u64 = std::uint64_t;

struct MaskPair {
    u64 a, b;
    bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
    std::size_t operator()(const MaskPair& k) const {
        u64 h = k.a * 0x9e3779b97f4a7c15ULL;
        h ^= k.b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Flat mask view of a game, at most 64 vertices.
struct Board {
    int n = 0;
    u64 full = 0;
    std::vector<u64> pred;  // strict down-set per vertex
    std::vector<u64> sets;

    explicit Board(const Game& g, const OracleOptions& opts) {
        n = g.board_size();
        if (n > 64) throw BoardTooLarge("oracle bitboards cap at 64 vertices");
        if (n > opts.max_board)
            throw BoardTooLarge("board has " + std::to_string(n) + " vertices, cap is " +
                                std::to_string(opts.max_board));
        full = n == 64 ? ~0ULL : (1ULL << n) - 1;
        pred.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            u64 m = 0;
            Bits d = g.poset.strict_down(v);
            for (auto w = d.find_first(); w != bits_npos; w = d.find_next(w)) m |= 1ULL << w;
            pred[static_cast<std::size_t>(v)] = m;
        }
        for (const Bits& s : g.winsets) {
            u64 m = 0;
            for (auto w = s.find_first(); w != bits_npos; w = s.find_next(w)) m |= 1ULL << w;
            sets.push_back(m);
        }
    }

    u64 available(u64 claimed) const {
        u64 avail = 0;
        u64 open = full & ~claimed;
        while (open) {
            int v = std::countr_zero(open);
            open &= open - 1;
            if ((pred[static_cast<std::size_t>(v)] & ~claimed) == 0) avail |= 1ULL << v;
        }
        return avail;
    }
};

struct MbSolver {
    const Board& bd;
    SolveStats* stats;
    std::unordered_map<MaskPair, bool, MaskPairHash> memo;

    bool maker_filled(u64 maker) const {
        for (u64 s : bd.sets)
            if ((s & ~maker) == 0) return true;
        return false;
    }
    bool family_dead(u64 breaker) const {
        for (u64 s : bd.sets)
            if ((s & breaker) == 0) return false;
        return true;
    }

    bool maker_wins(u64 maker, u64 breaker, bool maker_to_move) {
        if (stats) ++stats->nodes;
        if (maker_filled(maker)) return true;
        if (family_dead(breaker)) return false;
        u64 avail = bd.available(maker | breaker);
        if (!avail) return false;  // exhausted without a filled set
        auto it = memo.find({maker, breaker});
        if (it != memo.end()) return it->second;
        bool win = !maker_to_move;
        u64 rest = avail;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            u64 bit = 1ULL << v;
            bool child = maker_to_move ? maker_wins(maker | bit, breaker, false)
                                       : maker_wins(maker, breaker | bit, true);
            if (child == maker_to_move) {
                win = maker_to_move;
                break;
            }
        }
        memo.emplace(MaskPair{maker, breaker}, win);
        return win;
    }
};

enum class Val : signed char { Loss = -1, Draw = 0, Win = 1 };

inline Val flip(Val v) { return static_cast<Val>(-static_cast<signed char>(v)); }

// Maker-Maker minimax from the mover's perspective; the key is
// (mover claims, opponent claims), sound because the rules are symmetric.
struct MmSolver {
    const Board& bd;
    SolveStats* stats;
    std::unordered_map<MaskPair, Val, MaskPairHash> memo;

    bool completes(u64 own_after, u64 opp, u64 bit) const {
        for (u64 s : bd.sets)
            if ((s & bit) && (s & opp) == 0 && (s & ~own_after) == 0) return true;
        return false;
    }
    bool all_dead(u64 a, u64 b) const {
        for (u64 s : bd.sets)
            if ((s & a) == 0 || (s & b) == 0) return false;
        return true;
    }

    Val value(u64 mover, u64 opp) {
        if (stats) ++stats->nodes;
        u64 avail = bd.available(mover | opp);
        if (!avail) return Val::Draw;
        if (all_dead(mover, opp)) return Val::Draw;
        auto it = memo.find({mover, opp});
        if (it != memo.end()) return it->second;
        Val best = Val::Loss;
        u64 rest = avail;
        while (rest && best != Val::Win) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            u64 bit = 1ULL << v;
            Val val = completes(mover | bit, opp, bit) ? Val::Win : flip(value(opp, mover | bit));
            if (val > best) best = val;
        }
        memo.emplace(MaskPair{mover, opp}, best);
        return best;
    }
};

u64 to_mask(const Bits& b) {
    u64 m = 0;
    for (auto v = b.find_first(); v != bits_npos; v = b.find_next(v)) m |= 1ULL << v;
    return m;
}

Player mb_winner(const Board& bd, u64 maker, u64 breaker, Player to_move, SolveStats* stats) {
    MbSolver s{bd, stats, {}};
    return s.maker_wins(maker, breaker, to_move == Player::Maker) ? Player::Maker : Player::Breaker;
}

MMResult mm_result(const Board& bd, u64 first_claims, u64 second_claims, bool first_to_move,
                   SolveStats* stats) {
    for (u64 s : bd.sets)
        if (s == 0) return MMResult::FirstWin;  // empty set: trivially filled before any move
    MmSolver s{bd, stats, {}};
    Val v = first_to_move ? s.value(first_claims, second_claims)
                          : flip(s.value(second_claims, first_claims));
    if (v == Val::Win) return MMResult::FirstWin;
    if (v == Val::Loss) return MMResult::SecondWin;
    return MMResult::Draw;
}

}  // namespace

const char* to_string(MMResult r) {
    switch (r) {
        case MMResult::FirstWin: return "first-player win";
        case MMResult::SecondWin: return "second-player win";
        case MMResult::Draw: return "draw";
    }
    return "?";
}

Player solve_mb(const Game& g, Player first, const OracleOptions& opts, SolveStats* stats) {
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch("solve_mb requires a Maker-Breaker game");
    Board bd(g, opts);
    return mb_winner(bd, 0, 0, first, stats);
}

Player solve_mb(const Position& pos, const OracleOptions& opts, SolveStats* stats) {
    const Game& g = *pos.game;
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch("solve_mb requires a Maker-Breaker game");
    Board bd(g, opts);
    return mb_winner(bd, to_mask(pos.maker), to_mask(pos.breaker), pos.to_move, stats);
}

Outcome outcome4(const Game& g, const OracleOptions& opts, SolveStats* stats) {
    Player mf = solve_mb(g, Player::Maker, opts, stats);
    Player bf = solve_mb(g, Player::Breaker, opts, stats);
    if (mf == Player::Maker) return bf == Player::Maker ? Outcome::M : Outcome::N;
    return bf == Player::Maker ? Outcome::P : Outcome::B;
}

MMResult solve_mm(const Game& g, Player first, const OracleOptions& opts, SolveStats* stats) {
    (void)first;  // the board starts empty, so the first mover is just a label
    Board bd(g, opts);
    return mm_result(bd, 0, 0, true, stats);
}

MMResult solve_mm(const Position& pos, const OracleOptions& opts, SolveStats* stats) {
    Board bd(*pos.game, opts);
    // Position stores the first player's claims in `maker`.
    return mm_result(bd, to_mask(pos.maker), to_mask(pos.breaker), pos.to_move == Player::Maker,
                     stats);
}

int best_move(const Position& pos, const OracleOptions& opts) {
    const Game& g = *pos.game;
    Bits avail = available_moves(pos);
    if (avail.none()) throw GameOver("no moves available");
    Board bd(g, opts);
    u64 mk = to_mask(pos.maker), bk = to_mask(pos.breaker);
    if (g.convention == Convention::MakerBreaker) {
        MbSolver s{bd, nullptr, {}};
        if (s.maker_filled(mk)) throw GameOver("a winning set is already filled");
        bool maker_moves = pos.to_move == Player::Maker;
        bool here = s.maker_wins(mk, bk, maker_moves);
        int fallback = static_cast<int>(avail.find_first());
        for (auto v = avail.find_first(); v != bits_npos; v = avail.find_next(v)) {
            u64 bit = 1ULL << v;
            bool child = maker_moves ? s.maker_wins(mk | bit, bk, false)
                                     : s.maker_wins(mk, bk | bit, true);
            if (child == here) return static_cast<int>(v);
        }
        return fallback;  // unreachable: some child realizes the position value
    }
    // Maker-Maker: mover claims are maker's when Maker (= first player) moves.
    MmSolver s{bd, nullptr, {}};
    u64 mover = pos.to_move == Player::Maker ? mk : bk;
    u64 opp = pos.to_move == Player::Maker ? bk : mk;
    for (u64 ws : bd.sets)
        if ((ws & ~mk) == 0 || (ws & ~bk) == 0) throw GameOver("a winning set is already filled");
    Val here = s.value(mover, opp);
    int fallback = static_cast<int>(avail.find_first());
    for (auto v = avail.find_first(); v != bits_npos; v = avail.find_next(v)) {
        u64 bit = 1ULL << v;
        Val val = s.completes(mover | bit, opp, bit) ? Val::Win : flip(s.value(opp, mover | bit));
        if (val == here) return static_cast<int>(v);
    }
    return fallback;
}

}  // namespace ppg
