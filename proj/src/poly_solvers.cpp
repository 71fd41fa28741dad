#include "ppg/poly_solvers.hpp"

#include "ppg/chain_dp.hpp"
#include "ppg/dp_solver.hpp"
#include "ppg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ppg {
namespace {

void require_mb(const Game& g, const char* who) {
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch(std::string(who) + " requires a Maker-Breaker game");
}

bool all_sets_at_most(const Game& g, std::size_t cap) {
    for (const Bits& s : g.winsets)
        if (s.count() > cap) return false;
    return true;
}

}  // namespace

SolverVerdict solve_height2_single_ws1(const Game& g) {
    require_mb(g, "solve_height2_single_ws1");
    if (g.poset.height() > 2)
        throw PreconditionViolated("solve_height2_single_ws1: height exceeds 2");
    if (g.winsets.size() != 1 || g.winsets[0].count() != 1)
        throw PreconditionViolated("solve_height2_single_ws1: needs exactly one winning set of size 1");
    int x = static_cast<int>(g.winsets[0].find_first());
    SolverVerdict v;
    v.solver = "height2-single-ws1";
    if (g.poset.minimal_set().test(static_cast<std::size_t>(x))) {
        v.winner = Player::Maker;
        v.certificate = "winning vertex '" + g.poset.name(x) + "' is minimal";
        return v;
    }
    int even = 0, odd = 0;
    for (int y : g.poset.cover_preds(x))
        (g.poset.p_value(y) % 2 == 0 ? even : odd)++;
    if (even <= odd) {
        v.winner = Player::Maker;
        v.certificate = "predecessors of '" + g.poset.name(x) + "': " + std::to_string(even) +
                        " with even p <= " + std::to_string(odd) + " with odd p";
    } else {
        v.winner = Player::Breaker;
        v.certificate = "predecessors of '" + g.poset.name(x) + "': " + std::to_string(even) +
                        " with even p > " + std::to_string(odd) + " with odd p";
    }
    return v;
}

SolverVerdict solve_height2_all_tops(const Game& g) {
    require_mb(g, "solve_height2_all_tops");
    if (g.poset.height() > 2)
        throw PreconditionViolated("solve_height2_all_tops: height exceeds 2");
    Bits tops = ~g.poset.minimal_set();
    // family must equal { {y} : y non-minimal }
    Bits seen(static_cast<std::size_t>(g.board_size()));
    for (const Bits& s : g.winsets) {
        if (s.count() != 1)
            throw PreconditionViolated("solve_height2_all_tops: non-singleton winning set");
        auto y = s.find_first();
        if (!tops.test(y))
            throw PreconditionViolated("solve_height2_all_tops: winning set on a minimal vertex");
        seen.set(y);
    }
    if (seen != tops)
        throw PreconditionViolated("solve_height2_all_tops: some non-minimal vertex has no winning set");

    SolverVerdict v;
    v.solver = "height2-all-tops";
    if (tops.none()) {
        v.winner = Player::Breaker;
        v.certificate = "antichain board, no winning sets";
        return v;
    }
    if (g.board_size() % 2 == 1) {
        v.winner = Player::Maker;
        v.certificate = "odd board";
        return v;
    }
    for (auto y = tops.find_first(); y != bits_npos; y = tops.find_next(y)) {
        int priv = 0, shared = 0;
        for (int z : g.poset.cover_preds(static_cast<int>(y)))
            (g.poset.cover_succs(z).size() == 1 ? priv : shared)++;
        if (priv <= shared) {
            v.winner = Player::Maker;
            v.certificate = "top '" + g.poset.name(static_cast<int>(y)) + "' has " +
                            std::to_string(priv) + " private vs " + std::to_string(shared) +
                            " shared predecessors";
            return v;
        }
    }
    v.winner = Player::Breaker;
    v.certificate = "even board and every top has more private than shared predecessors";
    return v;
}

SolverVerdict solve_chains_ws1(const Game& g) {
    require_mb(g, "solve_chains_ws1");
    if (!g.poset.chain_decomposition())
        throw PreconditionViolated("solve_chains_ws1: board is not a disjoint union of chains");
    if (!all_sets_at_most(g, 1))
        throw PreconditionViolated("solve_chains_ws1: winning sets must have size 1");

    SolverVerdict v;
    v.solver = "chains-ws1";
    for (const Bits& s : g.winsets) {
        if (s.none()) {
            v.winner = Player::Maker;
            v.certificate = "empty winning set";
            return v;
        }
        int x = static_cast<int>(s.find_first());
        if (g.poset.minimal_set().test(static_cast<std::size_t>(x))) {
            v.winner = Player::Maker;
            v.certificate = "winning vertex '" + g.poset.name(x) + "' is minimal";
            return v;
        }
        if (g.poset.color_of(x) == Color::White) {
            v.winner = Player::Maker;
            v.certificate = "winning vertex '" + g.poset.name(x) + "' is White";
            return v;
        }
    }
    if (g.board_size() % 2 == 1) {
        int first_chain = -1, first_v = -1;
        for (const Bits& s : g.winsets) {
            int x = static_cast<int>(s.find_first());
            int c = g.poset.chain_of(x);
            if (first_chain == -1) {
                first_chain = c;
                first_v = x;
            } else if (c != first_chain) {
                v.winner = Player::Maker;
                v.certificate = "odd board with Black winning vertices '" + g.poset.name(first_v) +
                                "' and '" + g.poset.name(x) + "' on different chains";
                return v;
            }
        }
    }
    v.winner = Player::Breaker;
    v.certificate = g.winsets.empty() ? "no winning sets"
                                      : "all winning vertices Black, non-minimal, and not split "
                                        "across chains on an odd board";
    return v;
}

std::optional<SolverVerdict> solve_connect_k_known(int k, int w, int h) {
    if (k < 1 || w < 1 || h < 1)
        throw PreconditionViolated("solve_connect_k_known: k, w, h must be positive");
    SolverVerdict v;
    v.solver = "connect-k";
    if (k > w && k > h) {
        v.winner = Player::Breaker;
        v.certificate = "no alignment of length " + std::to_string(k) + " fits a " +
                        std::to_string(w) + "x" + std::to_string(h) + " board";
        return v;
    }
    if (k >= 3 && k <= w && h > 1 && w % 2 == 1 && h % 2 == 1) {
        v.winner = Player::Maker;
        v.certificate = "odd x odd board with 3 <= k <= w and h > 1";
        return v;
    }
    return std::nullopt;
}

SolverVerdict solve_bounded_chains(const Game& g, int max_sets, int max_size, SolveStats* stats) {
    require_mb(g, "solve_bounded_chains");
    const auto& chains = g.poset.chain_decomposition();
    if (!chains)
        throw PreconditionViolated("solve_bounded_chains: board is not a disjoint union of chains");
    if (static_cast<int>(g.winsets.size()) > max_sets)
        throw PreconditionViolated("solve_bounded_chains: too many winning sets");
    if (!all_sets_at_most(g, static_cast<std::size_t>(max_size)))
        throw PreconditionViolated("solve_bounded_chains: winning set too large");

    // Chains meeting no winning set go to the side; only their total parity
    // matters, kept as one isolated vertex when odd.
    Bits touched(static_cast<std::size_t>(g.board_size()));
    for (const Bits& s : g.winsets) touched |= s;
    Bits keep(static_cast<std::size_t>(g.board_size()));
    int stripped = 0;
    for (const auto& chain : *chains) {
        bool used = false;
        for (int v : chain)
            if (touched.test(static_cast<std::size_t>(v))) used = true;
        if (used)
            for (int v : chain) keep.set(static_cast<std::size_t>(v));
        else
            stripped += static_cast<int>(chain.size());
    }

    auto ind = g.poset.induced(keep);
    std::vector<std::string> names = ind.poset.names();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : ind.poset.covers())
        covers.emplace_back(ind.poset.name(a), ind.poset.name(b));
    if (stripped % 2 == 1) names.push_back("_parity");
    Poset residual = Poset::build(names, covers);
    std::vector<std::vector<int>> sets;
    for (const Bits& s : g.winsets) {
        std::vector<int> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            t.push_back(ind.new_index[v]);
        sets.push_back(std::move(t));
    }
    Game residual_game = Game::make_indexed(std::move(residual), sets, Convention::MakerBreaker);

    SolverVerdict v;
    v.solver = "bounded-chains";
    v.winner = solve_dp(residual_game, stats);
    v.certificate = "stripped " + std::to_string(stripped) +
                    " set-free chain vertices, DP on residual width " +
                    std::to_string(residual_game.poset.width());
    return v;
}

SolverVerdict auto_dispatch(const Game& g, SolveStats* stats) {
    require_mb(g, "auto_dispatch");
    const bool chains = g.poset.chain_decomposition().has_value();
    const int n = g.board_size();
    const std::size_t m = g.winsets.size();

    if (chains && all_sets_at_most(g, 1)) return solve_chains_ws1(g);
    if (g.poset.height() <= 2 && m == 1 && g.winsets[0].count() == 1)
        return solve_height2_single_ws1(g);
    if (g.poset.height() <= 2) {
        Bits tops = ~g.poset.minimal_set();
        Bits seen(static_cast<std::size_t>(n));
        bool shape = true;
        for (const Bits& s : g.winsets) {
            if (s.count() != 1 || !tops.test(s.find_first())) {
                shape = false;
                break;
            }
            seen.set(s.find_first());
        }
        if (shape && seen == tops) return solve_height2_all_tops(g);
    }
    if (chains && g.poset.height() <= 2 && all_sets_at_most(g, 2))
        return solve_chains_h2_ws2(g);
    if (chains && all_sets_at_most(g, 2) && m <= 32) {
        // states are bounded by ((h+1) * (h/2+2))^w
        double bound = 1;
        int w = static_cast<int>(g.poset.chain_decomposition()->size());
        int h = g.poset.height();
        for (int i = 0; i < w && bound < 2e7; ++i) bound *= (h + 1.0) * (h / 2.0 + 2.0);
        if (bound < 2e7) {
            SolverVerdict v;
            v.solver = "chains-ws2";
            v.winner = solve_chains_ws2(g, stats);
            v.certificate = "chain DP over (K, W) states";
            return v;
        }
    }
    if (chains && m <= 10 && all_sets_at_most(g, 3)) {
        // worth it only if stripping helps; estimate residual width
        Bits touched(static_cast<std::size_t>(n));
        for (const Bits& s : g.winsets) touched |= s;
        int residual_w = 0, residual_n = 0;
        for (const auto& chain : *g.poset.chain_decomposition()) {
            bool used = false;
            for (int v : chain)
                if (touched.test(static_cast<std::size_t>(v))) used = true;
            if (used) {
                ++residual_w;
                residual_n += static_cast<int>(chain.size());
            }
        }
        double bound = std::pow(residual_n + 2.0, residual_w + 1) * std::pow(2.0, static_cast<double>(m));
        if (residual_w < static_cast<int>(g.poset.chain_decomposition()->size()) && bound < 2e7)
            return solve_bounded_chains(g, 10, 3, stats);
    }
    if (m <= 20) {
        double bound = std::pow(n + 1.0, g.poset.width()) * std::pow(2.0, static_cast<double>(m));
        if (bound < 2e7) {
            SolverVerdict v;
            v.solver = "dp";
            v.winner = solve_dp(g, stats);
            v.certificate = "antichain DP, width " + std::to_string(g.poset.width());
            return v;
        }
    }
    if (n <= OracleOptions{}.max_board) {
        SolverVerdict v;
        v.solver = "oracle";
        v.winner = solve_mb(g, Player::Maker, {}, stats);
        v.certificate = "exhaustive search";
        return v;
    }
    throw NoSolverApplicable("no solver fits this instance within resource caps");
}

}  // namespace ppg
