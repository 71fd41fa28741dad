#include "ppg/dp_solver.hpp"

#include "ppg/errors.hpp"

#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ppg {
namespace {

using u64 = std::uint64_t;

struct StateKey {
    std::vector<int> y;
    u64 b;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        u64 h = 0xcbf29ce484222325ULL ^ k.b;
        for (int v : k.y) {
            h ^= static_cast<u64>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

struct DpBase {
    const Game& g;
    SolveStats* stats;
    int n;
    std::vector<u64> set_has;  // per vertex, mask of sets containing it

    DpBase(const Game& game, SolveStats* st) : g(game), stats(st), n(game.board_size()) {
        if (g.winsets.size() > 32)
            throw Error("antichain DP caps at 32 winning sets");
        set_has.assign(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < g.winsets.size(); ++i)
            for (auto v = g.winsets[i].find_first(); v != bits_npos; v = g.winsets[i].find_next(v))
                set_has[v] |= 1ULL << i;
    }

    // Antichain after claiming u: drop u, add successors whose other strict
    // predecessors are all claimed.  `un` is the unclaimed set before the claim.
    std::vector<int> next_antichain(const std::vector<int>& y, const Bits& un, int u) const {
        std::vector<int> out;
        out.reserve(y.size() + 2);
        for (int v : y)
            if (v != u) out.push_back(v);
        Bits un_after = un;
        un_after.reset(static_cast<std::size_t>(u));
        for (int s : g.poset.cover_succs(u)) {
            Bits need = g.poset.strict_down(s);
            if ((need & un_after).none()) out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct MbDp : DpBase {
    using DpBase::DpBase;
    std::unordered_map<StateKey, bool, StateKeyHash> memo;

    bool solve() {
        std::vector<int> y = bits_to_indices(g.poset.minimal_set());
        Bits un(static_cast<std::size_t>(n));
        un.set();
        u64 b = g.winsets.empty() ? 0 : (g.winsets.size() == 64 ? ~0ULL : (1ULL << g.winsets.size()) - 1);
        return maker_wins(y, un, b);
    }

    bool maker_wins(const std::vector<int>& y, const Bits& un, u64 b) {
        if (stats) ++stats->nodes;
        // Rule 1: some live set has at most one remaining vertex and it is
        // already available.  Size zero means Maker finished it earlier.
        for (u64 rest = b; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            Bits live = g.winsets[static_cast<std::size_t>(i)] & un;
            std::size_t c = live.count();
            if (c == 0) return true;
            if (c == 1) {
                int v = static_cast<int>(live.find_first());
                for (int u : y)
                    if (u == v) return true;
            }
        }
        // Rule 2: no live set left.
        if (b == 0) return false;

        StateKey key{y, b};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        bool win = false;
        for (int u : y) {
            std::vector<int> yu = next_antichain(y, un, u);
            Bits un_u = un;
            un_u.reset(static_cast<std::size_t>(u));
            assert(!yu.empty());  // rule 3 states keep at least two vertices
            bool all = true;
            for (int v : yu) {
                u64 bv = b & ~set_has[static_cast<std::size_t>(v)];
                assert((bv & ~b) == 0);  // zeroing is monotone
                std::vector<int> yuv = next_antichain(yu, un_u, v);
                Bits un_uv = un_u;
                un_uv.reset(static_cast<std::size_t>(v));
                if (!maker_wins(yuv, un_uv, bv)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                win = true;
                break;
            }
        }
        memo.emplace(std::move(key), win);
        if (stats) stats->states = memo.size();
        return win;
    }
};

// Liveness tags relative to the player about to move.
enum Tag : unsigned { Both = 0, Mine = 1, Theirs = 2, Dead = 3 };

inline Tag get_tag(u64 c, int i) { return static_cast<Tag>((c >> (2 * i)) & 3); }
inline u64 set_tag(u64 c, int i, Tag t) {
    return (c & ~(3ULL << (2 * i))) | (static_cast<u64>(t) << (2 * i));
}

struct MmDp : DpBase {
    using DpBase::DpBase;
    enum class Val : signed char { Loss = -1, Draw = 0, Win = 1 };
    struct ValHashEntry { Val v; };
    std::unordered_map<StateKey, Val, StateKeyHash> memo;

    static Val flip(Val v) { return static_cast<Val>(-static_cast<signed char>(v)); }

    MMResult solve() {
        for (const Bits& s : g.winsets)
            if (s.none()) return MMResult::FirstWin;
        std::vector<int> y = bits_to_indices(g.poset.minimal_set());
        Bits un(static_cast<std::size_t>(n));
        un.set();
        Val v = value(y, un, 0);  // all sets untouched
        if (v == Val::Win) return MMResult::FirstWin;
        if (v == Val::Loss) return MMResult::SecondWin;
        return MMResult::Draw;
    }

    Val value(const std::vector<int>& y, const Bits& un, u64 c) {
        if (stats) ++stats->nodes;
        if (y.empty()) return Val::Draw;
        bool any_live = false;
        for (std::size_t i = 0; i < g.winsets.size() && !any_live; ++i)
            if (get_tag(c, static_cast<int>(i)) != Dead) any_live = true;
        if (!g.winsets.empty() && !any_live) return Val::Draw;

        StateKey key{y, c};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        Val best = Val::Loss;
        for (int u : y) {
            u64 cu = c;
            bool wins_now = false;
            for (u64 rest = set_has[static_cast<std::size_t>(u)]; rest;) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                Tag t = get_tag(cu, i);
                if (t == Both || t == Mine) {
                    cu = set_tag(cu, i, Mine);
                    // completed if u was the set's last unclaimed vertex
                    Bits remain = g.winsets[static_cast<std::size_t>(i)] & un;
                    remain.reset(static_cast<std::size_t>(u));
                    if (remain.none()) wins_now = true;
                } else {
                    cu = set_tag(cu, i, Dead);
                }
            }
            if (wins_now) {
                best = Val::Win;
                break;
            }
            // flip perspective for the opponent
            u64 cf = 0;
            for (std::size_t i = 0; i < g.winsets.size(); ++i) {
                Tag t = get_tag(cu, static_cast<int>(i));
                Tag f = t == Mine ? Theirs : t == Theirs ? Mine : t;
                cf = set_tag(cf, static_cast<int>(i), f);
            }
            Bits un_u = un;
            un_u.reset(static_cast<std::size_t>(u));
            Val v = flip(value(next_antichain(y, un, u), un_u, cf));
            if (v > best) best = v;
            if (best == Val::Win) break;
        }
        memo.emplace(std::move(key), best);
        if (stats) stats->states = memo.size();
        return best;
    }
};

}  // namespace

Player solve_dp(const Game& g, SolveStats* stats) {
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch("solve_dp requires a Maker-Breaker game; use solve_dp_mm");
    MbDp dp(g, stats);
    return dp.solve() ? Player::Maker : Player::Breaker;
}

MMResult solve_dp_mm(const Game& g, SolveStats* stats) {
    MmDp dp(g, stats);
    return dp.solve();
}

}  // namespace ppg
