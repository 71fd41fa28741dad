#include "ppg/chain_dp.hpp"

#include "ppg/dp_solver.hpp"
#include "ppg/errors.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>

namespace ppg {
namespace {

// Chain coordinates: (chain, pos) with pos 1-based from the top, so the
// bottom of chain c in the full board is (c, len[c]) and play eats positions
// downward from len[c] to 1.
struct ChainView {
    const Game* g = nullptr;
    std::vector<std::vector<int>> chains;
    std::vector<int> len;
    int n = 0;
    bool odd = false;

    bool white(int pos) const { return pos % 2 == n % 2; }
    int vertex(int c, int pos) const { return chains[static_cast<std::size_t>(c)][static_cast<std::size_t>(pos) - 1]; }
};

ChainView make_chain_view(const Game& g, const char* who) {
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch(std::string(who) + " requires a Maker-Breaker game");
    const auto& chains = g.poset.chain_decomposition();
    if (!chains) throw PreconditionViolated(std::string(who) + ": board is not a disjoint union of chains");
    ChainView cv;
    cv.g = &g;
    cv.chains = *chains;
    for (const auto& c : cv.chains) cv.len.push_back(static_cast<int>(c.size()));
    cv.n = g.board_size();
    cv.odd = cv.n % 2 == 1;
    return cv;
}

using CP = std::pair<int, int>;  // (chain, pos)

std::vector<std::vector<CP>> sets_as_coords(const ChainView& cv, std::size_t max_size,
                                            const char* who) {
    std::vector<std::vector<CP>> out;
    for (const Bits& s : cv.g->winsets) {
        if (s.count() > max_size)
            throw PreconditionViolated(std::string(who) + ": winning set larger than " +
                                       std::to_string(max_size));
        std::vector<CP> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            t.emplace_back(cv.g->poset.chain_of(static_cast<int>(v)),
                           cv.g->poset.chain_pos(static_cast<int>(v)));
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    return out;
}

struct KwKey {
    std::vector<int> k, w;
    bool operator==(const KwKey&) const = default;
};
struct KwKeyHash {
    std::size_t operator()(const KwKey& key) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int v : key.k) h = (h ^ static_cast<std::uint64_t>(v + 1)) * 0x100000001b3ULL;
        h = (h ^ 0xffULL) * 0x100000001b3ULL;
        for (int v : key.w) h = (h ^ static_cast<std::uint64_t>(v + 1)) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }
};

// DP over (K, W) per the size-<=2 chain theorem.  W holds pending Black
// singletons created when Maker claims half of a pair; the board of a chain
// with a pending singleton is pre-reduced by the black-singleton lemma.
struct Ws2Dp {
    ChainView cv;
    std::vector<std::vector<CP>> fsets;
    SolveStats* stats = nullptr;
    std::unordered_map<KwKey, bool, KwKeyHash> memo;
    int w_ = 0;

    // first live position of chain c under pending singleton s (0 = none)
    int lo(int s) const {
        if (s == 0) return 1;
        return cv.odd ? std::max(1, s - 1) : s;
    }

    struct Derived {
        std::vector<CP> singles;
        std::vector<std::array<CP, 2>> pairs;
        bool empty_set = false;
        bool any = false;
    };

    Derived derive(const std::vector<int>& K, const std::vector<int>& W) const {
        Derived d;
        for (int c = 0; c < w_; ++c)
            if (W[static_cast<std::size_t>(c)] > 0) {
                d.singles.push_back({c, W[static_cast<std::size_t>(c)]});
                d.any = true;
            }
        for (const auto& s : fsets) {
            bool skip = false;
            std::vector<CP> remain;
            for (const auto& [c, j] : s) {
                if (j > K[static_cast<std::size_t>(c)]) {
                    skip = true;  // already claimed in play
                    break;
                }
                if (j < lo(W[static_cast<std::size_t>(c)])) {
                    // inside the reduced-away region of chain c
                    if (!cv.white(j)) {
                        skip = true;  // Black vertex there kills the set
                        break;
                    }
                    continue;  // White vertex shrinks away
                }
                remain.emplace_back(c, j);
            }
            if (skip) continue;
            d.any = true;
            if (remain.empty())
                d.empty_set = true;
            else if (remain.size() == 1)
                d.singles.push_back(remain[0]);
            else
                d.pairs.push_back({remain[0], remain[1]});
        }
        return d;
    }

    // applies the trivial screens; returns Maker/Breaker or unresolved
    std::optional<bool> screens(const std::vector<int>& K, const Derived& d) const {
        if (d.empty_set) return true;
        if (!d.any) return false;
        for (const auto& [c, j] : d.singles)
            if (cv.white(j) || j == K[static_cast<std::size_t>(c)]) return true;
        for (const auto& pr : d.pairs)
            if (pr[0].first == pr[1].first && cv.white(pr[0].second) && cv.white(pr[1].second))
                return true;
        if (cv.odd) {
            for (std::size_t a = 0; a < d.singles.size(); ++a)
                for (std::size_t b = a + 1; b < d.singles.size(); ++b)
                    if (d.singles[a].first != d.singles[b].first) return true;
        }
        return std::nullopt;
    }

    bool solve() {
        w_ = static_cast<int>(cv.chains.size());
        std::vector<int> W(static_cast<std::size_t>(w_), 0);
        return eval(cv.len, W);
    }

    bool eval(std::vector<int> K, std::vector<int> W) {
        if (stats) ++stats->nodes;
        // Normalize: screens, then fold fresh Black non-minimal singletons
        // into W (which deepens the reduced regions and can cascade).
        Derived d;
        for (;;) {
            d = derive(K, W);
            if (auto r = screens(K, d)) return *r;
            std::vector<int> W2 = W;
            for (const auto& [c, j] : d.singles)
                W2[static_cast<std::size_t>(c)] = std::max(W2[static_cast<std::size_t>(c)], j);
            if (W2 == W) break;
            W = std::move(W2);
        }

        int board = 0;
        for (int c = 0; c < w_; ++c)
            board += std::max(0, K[static_cast<std::size_t>(c)] - lo(W[static_cast<std::size_t>(c)]) + 1);
        assert(board % 2 == cv.n % 2);
        if (board <= 1) return false;  // nothing useful left for Maker

        KwKey key{K, W};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        bool win = false;
        for (int i = 0; i < w_ && !win; ++i) {
            if (K[static_cast<std::size_t>(i)] < lo(W[static_cast<std::size_t>(i)])) continue;
            CP u{i, K[static_cast<std::size_t>(i)]};
            std::vector<CP> partners;
            for (const auto& pr : d.pairs) {
                if (pr[0] == u) partners.push_back(pr[1]);
                else if (pr[1] == u) partners.push_back(pr[0]);
            }
            std::vector<int> K1 = K;
            --K1[static_cast<std::size_t>(i)];

            bool all = true;
            bool any_reply = false;
            for (int i2 = 0; i2 < w_ && all; ++i2) {
                if (K1[static_cast<std::size_t>(i2)] < lo(W[static_cast<std::size_t>(i2)]) ||
                    K1[static_cast<std::size_t>(i2)] < 1)
                    continue;
                any_reply = true;
                CP v{i2, K1[static_cast<std::size_t>(i2)]};
                std::vector<int> K2 = K1;
                --K2[static_cast<std::size_t>(i2)];
                std::vector<int> W2 = W;
                if (W2[static_cast<std::size_t>(i2)] == v.second) W2[static_cast<std::size_t>(i2)] = 0;

                bool forced_win = false;
                for (const CP& p : partners) {
                    if (p == v) continue;
                    // fresh singleton {p}: White or immediately claimable wins
                    if (cv.white(p.second) || p.second == K2[static_cast<std::size_t>(p.first)]) {
                        forced_win = true;
                        break;
                    }
                }
                if (!forced_win) {
                    for (const CP& p : partners) {
                        if (p == v) continue;
                        auto& slot = W2[static_cast<std::size_t>(p.first)];
                        slot = std::max(slot, p.second);
                    }
                    if (cv.odd) {
                        int positive = 0;
                        for (int s : W2)
                            if (s > 0) ++positive;
                        if (positive >= 2) forced_win = true;  // Black singletons on two chains
                    }
                }
                if (!forced_win && !eval(K2, W2)) all = false;
            }
            (void)any_reply;
            assert(any_reply);  // board >= 2 here, so Breaker always has a move
            if (all) win = true;
        }
        memo.emplace(KwKey{std::move(K), std::move(W)}, win);
        if (stats) stats->states = memo.size();
        return win;
    }
};

// View of a height-<=2 chain board: per chain a bottom and possibly a top.
struct H2View {
    ChainView cv;
    std::vector<int> bottom, top;  // vertex ids; top = -1 for isolated bottoms
    std::vector<int> chain_of_vertex, role;  // role: 0 bottom, 1 top
    std::vector<std::vector<int>> sets;      // deduped, each sorted vertex ids
};

H2View make_h2_view(const Game& g, const char* who) {
    H2View h;
    h.cv = make_chain_view(g, who);
    for (const auto& chain : h.cv.chains) {
        if (chain.size() > 2)
            throw PreconditionViolated(std::string(who) + ": a chain exceeds height 2");
        h.bottom.push_back(chain.back());
        h.top.push_back(chain.size() == 2 ? chain.front() : -1);
    }
    h.chain_of_vertex.assign(static_cast<std::size_t>(g.board_size()), -1);
    h.role.assign(static_cast<std::size_t>(g.board_size()), 0);
    for (std::size_t c = 0; c < h.bottom.size(); ++c) {
        h.chain_of_vertex[static_cast<std::size_t>(h.bottom[c])] = static_cast<int>(c);
        if (h.top[c] != -1) {
            h.chain_of_vertex[static_cast<std::size_t>(h.top[c])] = static_cast<int>(c);
            h.role[static_cast<std::size_t>(h.top[c])] = 1;
        }
    }
    std::set<std::vector<int>> dedup;
    for (const Bits& s : g.winsets) {
        if (s.count() > 2)
            throw PreconditionViolated(std::string(who) + ": winning set larger than 2");
        dedup.insert(bits_to_indices(s));
    }
    h.sets.assign(dedup.begin(), dedup.end());
    return h;
}

std::string set_names(const Game& g, const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += g.poset.name(s[i]);
    }
    return out + "}";
}

}  // namespace

Game reduce_black_singleton(const Game& g, int chain, int j) {
    ChainView cv = make_chain_view(g, "reduce_black_singleton");
    if (chain < 0 || chain >= static_cast<int>(cv.chains.size()))
        throw PreconditionViolated("reduce_black_singleton: no such chain");
    int len = cv.len[static_cast<std::size_t>(chain)];
    if (j < 1 || j > len) throw PreconditionViolated("reduce_black_singleton: position out of range");
    int x = cv.vertex(chain, j);
    if (j >= len)
        throw PreconditionViolated("reduce_black_singleton: '" + g.poset.name(x) + "' is minimal");
    if (j < 3) throw PreconditionViolated("reduce_black_singleton: needs position >= 3");
    if (cv.white(j))
        throw PreconditionViolated("reduce_black_singleton: '" + g.poset.name(x) + "' is White");
    bool have_singleton = false;
    for (const Bits& s : g.winsets)
        if (s.count() == 1 && s.test(static_cast<std::size_t>(x))) have_singleton = true;
    if (!have_singleton)
        throw PreconditionViolated("reduce_black_singleton: {" + g.poset.name(x) +
                                   "} is not a winning set");
    // hypothesis: no winning set made only of White vertices above x
    for (const Bits& s : g.winsets) {
        if (s.none()) continue;
        bool all_white_above = true;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v)) {
            int c = g.poset.chain_of(static_cast<int>(v));
            int p = g.poset.chain_pos(static_cast<int>(v));
            if (c != chain || p >= j || !cv.white(p)) {
                all_white_above = false;
                break;
            }
        }
        if (all_white_above)
            throw PreconditionViolated("reduce_black_singleton: winning set of White vertices above '" +
                                       g.poset.name(x) + "'");
    }

    int cut = cv.odd ? j - 2 : j - 1;  // vertices removed from the top of the chain
    Bits keep(static_cast<std::size_t>(g.board_size()));
    keep.set();
    Bits removed(static_cast<std::size_t>(g.board_size()));
    for (int p = 1; p <= cut; ++p) {
        keep.reset(static_cast<std::size_t>(cv.vertex(chain, p)));
        removed.set(static_cast<std::size_t>(cv.vertex(chain, p)));
    }

    auto ind = g.poset.induced(keep);
    std::vector<std::vector<int>> sets;
    for (const Bits& s : g.winsets) {
        Bits hit = s & removed;
        if (hit.none()) {
            std::vector<int> t;
            for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
                t.push_back(ind.new_index[v]);
            sets.push_back(std::move(t));
            continue;
        }
        bool black_hit = false;
        for (auto v = hit.find_first(); v != bits_npos; v = hit.find_next(v))
            if (!cv.white(g.poset.chain_pos(static_cast<int>(v)))) black_hit = true;
        if (black_hit) continue;
        std::vector<int> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            if (keep.test(v)) t.push_back(ind.new_index[v]);
        sets.push_back(std::move(t));
    }
    return Game::make_indexed(std::move(ind.poset), sets, Convention::MakerBreaker);
}

Player solve_chains_ws2(const Game& g, SolveStats* stats) {
    Ws2Dp dp;
    dp.cv = make_chain_view(g, "solve_chains_ws2");
    dp.fsets = sets_as_coords(dp.cv, 2, "solve_chains_ws2");
    dp.stats = stats;
    return dp.solve() ? Player::Maker : Player::Breaker;
}

std::optional<ReductionStep> find_reduction_h2(const Game& g) {
    H2View h = make_h2_view(g, "find_reduction_h2");
    if (g.board_size() % 2 != 0)
        throw PreconditionViolated("find_reduction_h2: board must be even");

    // R1: bottom-bottom set disjoint from every other set
    for (std::size_t a = 0; a < h.sets.size(); ++a) {
        const auto& s = h.sets[a];
        if (s.size() != 2) continue;
        if (h.role[static_cast<std::size_t>(s[0])] != 0 || h.role[static_cast<std::size_t>(s[1])] != 0)
            continue;
        bool disjoint = true;
        for (std::size_t b = 0; b < h.sets.size() && disjoint; ++b) {
            if (a == b) continue;
            for (int v : h.sets[b])
                if (v == s[0] || v == s[1]) {
                    disjoint = false;
                    break;
                }
        }
        if (disjoint) {
            ReductionStep step;
            step.kind = ReductionStep::R1;
            step.removed = {g.poset.name(s[0]), g.poset.name(s[1])};
            return step;
        }
    }

    // R2: close I under "some set pairs bottom of I with this top", validate
    for (int seed = 0; seed < static_cast<int>(h.bottom.size()); ++seed) {
        if (h.top[static_cast<std::size_t>(seed)] == -1) continue;
        std::set<int> I{seed};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& s : h.sets) {
                if (s.size() != 2) continue;
                int bot = -1, top = -1;
                for (int v : s)
                    (h.role[static_cast<std::size_t>(v)] == 0 ? bot : top) = v;
                if (bot == -1 || top == -1) continue;
                int ci = h.chain_of_vertex[static_cast<std::size_t>(bot)];
                int cj = h.chain_of_vertex[static_cast<std::size_t>(top)];
                if (I.count(ci) && !I.count(cj)) {
                    I.insert(cj);
                    grew = true;
                }
            }
        }
        bool valid = true;
        for (const auto& s : h.sets) {
            bool has_bottom = false, has_top = false;
            for (int v : s) {
                int c = h.chain_of_vertex[static_cast<std::size_t>(v)];
                if (!I.count(c)) continue;
                (h.role[static_cast<std::size_t>(v)] == 0 ? has_bottom : has_top) = true;
            }
            if (has_bottom && !has_top) {
                valid = false;
                break;
            }
        }
        if (valid) {
            ReductionStep step;
            step.kind = ReductionStep::R2;
            for (int c : I) {
                step.removed.push_back(g.poset.name(h.bottom[static_cast<std::size_t>(c)]));
                step.removed.push_back(g.poset.name(h.top[static_cast<std::size_t>(c)]));
            }
            return step;
        }
    }
    return std::nullopt;
}

Game apply_reduction_h2(const Game& g, const ReductionStep& step) {
    Bits keep(static_cast<std::size_t>(g.board_size()));
    keep.set();
    Bits removed(static_cast<std::size_t>(g.board_size()));
    for (const auto& name : step.removed) {
        int v = g.poset.index_of(name);
        keep.reset(static_cast<std::size_t>(v));
        removed.set(static_cast<std::size_t>(v));
    }
    auto ind = g.poset.induced(keep);
    std::vector<std::vector<int>> sets;
    for (const Bits& s : g.winsets) {
        if ((s & removed).any()) continue;
        std::vector<int> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            t.push_back(ind.new_index[v]);
        sets.push_back(std::move(t));
    }
    return Game::make_indexed(std::move(ind.poset), sets, Convention::MakerBreaker);
}

std::optional<WinningPattern> find_winning_pattern(const Game& g) {
    H2View h = make_h2_view(g, "find_winning_pattern");
    if (g.board_size() % 2 != 0)
        throw PreconditionViolated("find_winning_pattern: board must be even");

    int nc = static_cast<int>(h.bottom.size());
    std::vector<int> seq;       // chain indices i1..il
    std::vector<char> used(static_cast<std::size_t>(nc), 0);
    std::vector<const std::vector<int>*> pattern_sets;

    std::function<std::optional<WinningPattern>()> close_or_extend =
        [&]() -> std::optional<WinningPattern> {
        int tail = seq.back();
        int xt = h.bottom[static_cast<std::size_t>(tail)];
        if (seq.size() >= 3) {
            // closing set {x_il, z}
            for (const auto& s : h.sets) {
                if (s.size() != 2 || (s[0] != xt && s[1] != xt)) continue;
                int z = s[0] == xt ? s[1] : s[0];
                bool ok = false;
                // inner bottoms i2..i(l-1)
                for (std::size_t k = 1; k + 1 < seq.size() && !ok; ++k)
                    if (z == h.bottom[static_cast<std::size_t>(seq[k])]) ok = true;
                // tops of i1, i2
                if (!ok && (z == h.top[static_cast<std::size_t>(seq[0])] ||
                            z == h.top[static_cast<std::size_t>(seq[1])]))
                    ok = true;
                // any bottom outside the pattern
                if (!ok && h.role[static_cast<std::size_t>(z)] == 0 &&
                    !used[static_cast<std::size_t>(h.chain_of_vertex[static_cast<std::size_t>(z)])])
                    ok = true;
                if (ok) {
                    WinningPattern wp;
                    for (const auto* ps : pattern_sets) {
                        std::vector<std::string> names;
                        for (int v : *ps) names.push_back(g.poset.name(v));
                        wp.sets.push_back(std::move(names));
                    }
                    std::vector<std::string> closing;
                    for (int v : s) closing.push_back(g.poset.name(v));
                    wp.sets.push_back(std::move(closing));
                    return wp;
                }
            }
        }
        // extend with {x_tail, y_j}, j unused topped chain
        for (const auto& s : h.sets) {
            if (s.size() != 2 || (s[0] != xt && s[1] != xt)) continue;
            int z = s[0] == xt ? s[1] : s[0];
            if (h.role[static_cast<std::size_t>(z)] != 1) continue;
            int j = h.chain_of_vertex[static_cast<std::size_t>(z)];
            if (used[static_cast<std::size_t>(j)]) continue;
            seq.push_back(j);
            used[static_cast<std::size_t>(j)] = 1;
            pattern_sets.push_back(&s);
            if (auto r = close_or_extend()) return r;
            pattern_sets.pop_back();
            used[static_cast<std::size_t>(j)] = 0;
            seq.pop_back();
        }
        return std::nullopt;
    };

    for (const auto& s : h.sets) {
        if (s.size() != 2) continue;
        if (h.role[static_cast<std::size_t>(s[0])] != 0 || h.role[static_cast<std::size_t>(s[1])] != 0)
            continue;
        int c0 = h.chain_of_vertex[static_cast<std::size_t>(s[0])];
        int c1 = h.chain_of_vertex[static_cast<std::size_t>(s[1])];
        for (int flip = 0; flip < 2; ++flip) {
            int i1 = flip ? c1 : c0, i2 = flip ? c0 : c1;
            seq = {i1, i2};
            used.assign(static_cast<std::size_t>(nc), 0);
            used[static_cast<std::size_t>(i1)] = used[static_cast<std::size_t>(i2)] = 1;
            pattern_sets = {&s};
            if (auto r = close_or_extend()) return r;
        }
    }
    return std::nullopt;
}

SolverVerdict solve_chains_h2_ws2(const Game& g) {
    H2View h = make_h2_view(g, "solve_chains_h2_ws2");
    SolverVerdict verdict;
    verdict.solver = "chains-h2-ws2";

    if (g.board_size() % 2 == 1) {
        for (const auto& s : h.sets) {
            if (s.empty()) {
                verdict.winner = Player::Maker;
                verdict.certificate = "empty winning set";
                return verdict;
            }
            if (s.size() == 1 && h.role[static_cast<std::size_t>(s[0])] == 0) {
                verdict.winner = Player::Maker;
                verdict.certificate = "singleton bottom winning set " + set_names(g, s);
                return verdict;
            }
            bool all_top = true;
            for (int v : s)
                if (h.role[static_cast<std::size_t>(v)] != 1) all_top = false;
            if (all_top) {
                verdict.winner = Player::Maker;
                verdict.certificate = "all-top winning set " + set_names(g, s);
                return verdict;
            }
            if (s.size() == 2) {
                int bot = -1, top = -1;
                for (int v : s)
                    (h.role[static_cast<std::size_t>(v)] == 0 ? bot : top) = v;
                if (bot != -1 && top != -1 &&
                    h.chain_of_vertex[static_cast<std::size_t>(bot)] !=
                        h.chain_of_vertex[static_cast<std::size_t>(top)]) {
                    verdict.winner = Player::Maker;
                    verdict.certificate = "cross bottom-top winning set " + set_names(g, s);
                    return verdict;
                }
            }
        }
        // bottom-bottom sets sharing a vertex, or sharing a bottom with its own top pair
        for (std::size_t a = 0; a < h.sets.size(); ++a) {
            const auto& s = h.sets[a];
            if (s.size() != 2 || h.role[static_cast<std::size_t>(s[0])] != 0 ||
                h.role[static_cast<std::size_t>(s[1])] != 0)
                continue;
            for (std::size_t b = 0; b < h.sets.size(); ++b) {
                if (a == b) continue;
                const auto& r = h.sets[b];
                if (r.size() != 2) continue;
                bool r_bb = h.role[static_cast<std::size_t>(r[0])] == 0 &&
                            h.role[static_cast<std::size_t>(r[1])] == 0;
                bool share = r[0] == s[0] || r[0] == s[1] || r[1] == s[0] || r[1] == s[1];
                if (r_bb && share) {
                    verdict.winner = Player::Maker;
                    verdict.certificate = "bottom-bottom sets " + set_names(g, s) + " and " +
                                          set_names(g, r) + " share a vertex";
                    return verdict;
                }
                // r = {x_i, y_i} with x_i in s
                if (!r_bb) {
                    int bot = -1, top = -1;
                    for (int v : r)
                        (h.role[static_cast<std::size_t>(v)] == 0 ? bot : top) = v;
                    if (bot != -1 && top != -1 &&
                        h.chain_of_vertex[static_cast<std::size_t>(bot)] ==
                            h.chain_of_vertex[static_cast<std::size_t>(top)] &&
                        (bot == s[0] || bot == s[1])) {
                        verdict.winner = Player::Maker;
                        verdict.certificate = "bottom-bottom set " + set_names(g, s) +
                                              " meets in-chain set " + set_names(g, r);
                        return verdict;
                    }
                }
            }
        }
        verdict.winner = Player::Breaker;
        verdict.certificate = "odd board, sets pairwise disjoint bottom pairs or in-chain pairs";
        return verdict;
    }

    // even board: reduce to a fixpoint
    Game cur = g;
    int steps = 0;
    for (;;) {
        if (cur.winsets.empty()) {
            verdict.winner = Player::Breaker;
            verdict.certificate = "no winning set survives " + std::to_string(steps) + " reductions";
            return verdict;
        }
        auto step = find_reduction_h2(cur);
        if (!step) {
            verdict.winner = Player::Maker;
            verdict.certificate = std::to_string(cur.winsets.size()) + " winning sets survive " +
                                  std::to_string(steps) + " reductions";
            return verdict;
        }
        cur = apply_reduction_h2(cur, *step);
        ++steps;
    }
}

}  // namespace ppg
