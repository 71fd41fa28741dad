#include "ppg/verify.hpp"

#include "ppg/chain_dp.hpp"
#include "ppg/dp_solver.hpp"
#include "ppg/errors.hpp"
#include "ppg/instance_io.hpp"
#include "ppg/poly_solvers.hpp"
#include "ppg/union_calc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace ppg {
namespace {

std::string describe(const Game& g) { return write_instance(g); }

// all k-subsets of 0..p-1 for k = lo..hi, in lexicographic order
void for_combinations(int p, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    for (int k = lo; k <= hi && k <= p; ++k) {
        if (k == 0) {
            fn({});
            continue;
        }
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            fn(idx);
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

// every labeled poset of height <= 2 on n vertices: a set of tops, each with a
// nonempty predecessor set among the rest
void for_height2_posets(int n, const std::function<void(const Poset&, unsigned tops)>& fn) {
    for (unsigned tops = 0; tops < (1u << n); ++tops) {
        unsigned bottoms = ((1u << n) - 1) & ~tops;
        std::vector<int> top_ids;
        for (int v = 0; v < n; ++v)
            if (tops >> v & 1) top_ids.push_back(v);
        if (!top_ids.empty() && bottoms == 0) continue;

        std::vector<unsigned> submasks;  // nonempty submasks of bottoms
        for (unsigned s = bottoms; s; s = (s - 1) & bottoms) submasks.push_back(s);

        std::vector<std::size_t> pick(top_ids.size(), 0);
        for (;;) {
            std::vector<std::pair<int, int>> covers;
            for (std::size_t t = 0; t < top_ids.size(); ++t) {
                unsigned preds = submasks[pick[t]];
                for (int v = 0; v < n; ++v)
                    if (preds >> v & 1) covers.emplace_back(v, top_ids[t]);
            }
            fn(Poset::build_indexed(n, covers), tops);
            if (top_ids.empty()) break;
            std::size_t t = 0;
            while (t < pick.size()) {
                if (++pick[t] < submasks.size()) break;
                pick[t] = 0;
                ++t;
            }
            if (t == pick.size()) break;
        }
    }
}

// all multisets of chain lengths summing to n, each part <= max_part;
// the poset has consecutive indices per chain
void for_chain_partitions(int n, int max_part,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int biggest) {
        if (left == 0) {
            fn(parts);
            return;
        }
        for (int p = std::min(left, biggest); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, max_part);
}

Poset chain_poset(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    std::vector<std::pair<int, int>> covers;
    int base = 0;
    for (int p : parts) {
        for (int i = 1; i < p; ++i) covers.emplace_back(base + i - 1, base + i);
        base += p;
    }
    return Poset::build_indexed(n, covers);
}

Player oracle_maker_first(const Game& g) { return solve_mb(g, Player::Maker); }

}  // namespace

bool cnf_satisfiable(const CnfFormula& f) {
    for (unsigned a = 0; a < (1u << f.num_vars); ++a) {
        bool all = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = std::abs(lit) - 1;
                bool val = a >> v & 1;
                if (lit > 0 ? val : !val) sat = true;
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool qbf_true(const QbfFormula& q) {
    std::vector<char> val(static_cast<std::size_t>(q.num_vars), 0);
    std::function<bool(int)> eval = [&](int i) -> bool {
        if (i > q.num_vars) {
            for (const auto& cl : q.matrix.clauses) {
                bool sat = false;
                for (int lit : cl) {
                    bool v = val[static_cast<std::size_t>(std::abs(lit) - 1)];
                    if (lit > 0 ? v : !v) sat = true;
                }
                if (!sat) return false;
            }
            return true;
        }
        bool universal = i % 2 == 1;
        for (char b : {0, 1}) {
            val[static_cast<std::size_t>(i - 1)] = b;
            bool sub = eval(i + 1);
            if (universal && !sub) return false;
            if (!universal && sub) return true;
        }
        return universal;
    };
    return eval(1);
}

bool cover_exists(const CoverInstance& c) {
    int n = static_cast<int>(c.elements.size());
    int m = static_cast<int>(c.edges.size());
    bool found = false;
    for_combinations(m, c.k, c.k, [&](const std::vector<int>& pick) {
        if (found) return;
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int e : pick)
            for (int v : c.edges[static_cast<std::size_t>(e)]) hit[static_cast<std::size_t>(v)] = 1;
        found = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    });
    return found;
}

MMResult avoid_true_referee(const AvoidTrueFormula& d) {
    int n = static_cast<int>(d.vars.size());
    auto satisfies = [&](unsigned mask) {
        for (const auto& cl : d.clauses) {
            bool all = true;
            for (int v : cl)
                if (!(mask >> v & 1)) all = false;
            if (all) return true;
        }
        return false;
    };
    enum Val { Lose, Draw, Win };
    std::map<unsigned, Val> memo;
    std::function<Val(unsigned)> value = [&](unsigned mask) -> Val {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Val best = Lose;
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) continue;
            any = true;
            unsigned next = mask | 1u << v;
            Val line;
            if (satisfies(next)) {
                line = Lose;  // this move turns the formula true
            } else {
                Val opp = value(next);
                line = opp == Win ? Lose : opp == Lose ? Win : Draw;
            }
            best = std::max(best, line);
        }
        if (!any) best = Draw;  // variables exhausted, formula still false
        memo[mask] = best;
        return best;
    };
    Val v = value(0);
    return v == Win ? MMResult::FirstWin : v == Lose ? MMResult::SecondWin : MMResult::Draw;
}

CheckResult verify_witnesses() {
    CheckResult res;
    for (const Witness& w : witness_catalog()) {
        ++res.cases;
        Parity expect_parity = w.name[0] == 'E' ? Parity::Even : Parity::Odd;
        if (parity_of(w.game) != expect_parity) {
            res.fail(w.name + ": board parity does not match its label");
            continue;
        }
        Outcome got = outcome4(w.game);
        if (got != w.outcome)
            res.fail(w.name + ": oracle outcome " + to_string(got) + ", catalog says " +
                     to_string(w.outcome));
    }
    return res;
}

CheckResult verify_union_identities() {
    CheckResult res;
    const auto& catalog = witness_catalog();
    auto by_name = [&](const std::string& name) -> const Witness& {
        for (const auto& w : catalog)
            if (w.name == name) return w;
        throw Error("no witness named " + name);
    };
    for (const UnionIdentity& id : union_identities()) {
        ++res.cases;
        const Witness& l = by_name(id.left);
        const Witness& r = by_name(id.right);
        Game u = disjoint_union(l.game, r.game);
        Outcome got = outcome4(u);
        if (got != id.result) {
            res.fail(id.left + " u " + id.right + ": oracle " + to_string(got) + ", proof says " +
                     to_string(id.result));
            continue;
        }
        OutcomeSet cell =
            union_table_lookup(parity_of(l.game), l.outcome, parity_of(r.game), r.outcome);
        if (!cell.contains(got))
            res.fail(id.left + " u " + id.right + ": outcome " + to_string(got) +
                     " missing from table cell " + cell.to_string());
    }
    return res;
}

CheckResult verify_union_soundness(int samples, int max_component, std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    auto component = [&]() {
        GenSpec spec;
        spec.n = 1 + pick(max_component);
        spec.width = 1 + pick(spec.n);
        spec.num_winsets = pick(4);
        spec.winset_size = 1 + pick(std::min(spec.n, 3));
        spec.seed = rng();
        return random_game(spec);
    };
    for (int i = 0; i < samples; ++i) {
        ++res.cases;
        Game g1 = component(), g2 = component();
        try {
            Outcome o1 = outcome4(g1), o2 = outcome4(g2);
            Outcome u = outcome4(disjoint_union(g1, g2));
            OutcomeSet cell = union_table_lookup(parity_of(g1), o1, parity_of(g2), o2);
            if (!cell.contains(u))
                res.fail("sample " + std::to_string(i) + ": union outcome " + to_string(u) +
                         " outside cell " + cell.to_string() + " for (" + to_string(o1) + "," +
                         to_string(o2) + ")\n" + describe(g1) + describe(g2));
        } catch (const std::exception& e) {
            res.fail("sample " + std::to_string(i) + ": " + e.what());
        }
    }
    return res;
}

namespace {

void check_verdict(CheckResult& res, const Game& g, const std::function<SolverVerdict()>& run) {
    ++res.cases;
    try {
        SolverVerdict v = run();
        Player truth = oracle_maker_first(g);
        if (v.winner != truth)
            res.fail(v.solver + " says " + to_string(v.winner) + ", oracle says " +
                     to_string(truth) + "\n" + describe(g));
    } catch (const std::exception& e) {
        res.fail(std::string("exception: ") + e.what() + "\n" + describe(g));
    }
}

CheckResult family_height2_single(int max_n) {
    CheckResult res;
    for (int n = 1; n <= max_n; ++n)
        for_height2_posets(n, [&](const Poset& p, unsigned) {
            Game g = Game::make_indexed(Poset(p), {{0}}, Convention::MakerBreaker);
            check_verdict(res, g, [&] { return solve_height2_single_ws1(g); });
        });
    return res;
}

CheckResult family_all_tops(int max_n) {
    CheckResult res;
    for (int n = 1; n <= max_n; ++n)
        for_height2_posets(n, [&](const Poset& p, unsigned tops) {
            std::vector<std::vector<int>> sets;
            for (int v = 0; v < n; ++v)
                if (tops >> v & 1) sets.push_back({v});
            Game g = Game::make_indexed(Poset(p), sets, Convention::MakerBreaker);
            check_verdict(res, g, [&] { return solve_height2_all_tops(g); });
        });
    return res;
}

CheckResult family_chains_ws1(int max_n) {
    CheckResult res;
    for (int n = 1; n <= max_n; ++n)
        for_chain_partitions(n, n, [&](const std::vector<int>& parts) {
            Poset p = chain_poset(parts);
            for (unsigned ws = 0; ws < (1u << n); ++ws) {
                std::vector<std::vector<int>> sets;
                for (int v = 0; v < n; ++v)
                    if (ws >> v & 1) sets.push_back({v});
                Game g = Game::make_indexed(Poset(p), sets, Convention::MakerBreaker);
                check_verdict(res, g, [&] { return solve_chains_ws1(g); });
            }
        });
    return res;
}

CheckResult family_chains_h2_ws2(int max_n) {
    CheckResult res;
    for (int n = 1; n <= max_n; ++n)
        for_chain_partitions(n, 2, [&](const std::vector<int>& parts) {
            Poset p = chain_poset(parts);
            std::vector<std::vector<int>> pool;
            pool.push_back({});
            for (int a = 0; a < n; ++a) {
                pool.push_back({a});
                for (int b = a + 1; b < n; ++b) pool.push_back({a, b});
            }
            for_combinations(static_cast<int>(pool.size()), 0, 3, [&](const std::vector<int>& pick) {
                std::vector<std::vector<int>> sets;
                for (int i : pick) sets.push_back(pool[static_cast<std::size_t>(i)]);
                Game g = Game::make_indexed(Poset(p), sets, Convention::MakerBreaker);
                check_verdict(res, g, [&] { return solve_chains_h2_ws2(g); });
            });
        });
    return res;
}

CheckResult family_dp(int samples) {
    CheckResult res;
    std::mt19937_64 rng(517);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    for (int i = 0; i < samples; ++i) {
        ++res.cases;
        GenSpec spec;
        spec.n = 1 + pick(12);
        spec.width = 1 + pick(std::min(spec.n, 3));
        spec.num_winsets = pick(5);
        spec.winset_size = 1 + pick(std::min(spec.n, 4));
        spec.seed = rng();
        Game g = random_game(spec);
        try {
            Player dp = solve_dp(g);
            Player truth = oracle_maker_first(g);
            if (dp != truth)
                res.fail("dp says " + std::string(to_string(dp)) + ", oracle says " +
                         to_string(truth) + "\n" + describe(g));
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what() + "\n" + describe(g));
        }
    }
    return res;
}

CheckResult family_chains_ws2(int samples) {
    CheckResult res;
    std::mt19937_64 rng(1013);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    for (int i = 0; i < samples; ++i) {
        ++res.cases;
        int chains = 1 + pick(3);
        std::vector<int> parts;
        int total = 0;
        for (int c = 0; c < chains && total < 12; ++c) {
            int h = std::min(1 + pick(5), 12 - total);
            parts.push_back(h);
            total += h;
        }
        Poset p = chain_poset(parts);
        int n = p.size();
        std::vector<std::vector<int>> sets;
        int m = pick(5);
        for (int s = 0; s < m; ++s) {
            if (pick(20) == 0) {
                sets.push_back({});
                continue;
            }
            int size = 1 + pick(std::min(n, 2));
            std::vector<int> set;
            while (static_cast<int>(set.size()) < size) {
                int v = pick(n);
                if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
            }
            std::sort(set.begin(), set.end());
            sets.push_back(std::move(set));
        }
        Game g = Game::make_indexed(std::move(p), sets, Convention::MakerBreaker);
        try {
            Player got = solve_chains_ws2(g);
            Player truth = oracle_maker_first(g);
            if (got != truth)
                res.fail("chain dp says " + std::string(to_string(got)) + ", oracle says " +
                         to_string(truth) + "\n" + describe(g));
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what() + "\n" + describe(g));
        }
    }
    return res;
}

}  // namespace

CheckResult verify_solver_family(const std::string& family, int scale) {
    if (family == "height2-single") return family_height2_single(scale > 0 ? scale : 7);
    if (family == "all-tops") return family_all_tops(scale > 0 ? scale : 7);
    if (family == "chains-ws1") return family_chains_ws1(scale > 0 ? scale : 8);
    if (family == "chains-h2-ws2") return family_chains_h2_ws2(scale > 0 ? scale : 8);
    if (family == "dp") return family_dp(scale > 0 ? scale : 500);
    if (family == "chains-ws2") return family_chains_ws2(scale > 0 ? scale : 500);
    throw Error("unknown solver family '" + family + "'");
}

CheckResult verify_sat_micro() {
    CheckResult res;
    for (int nv = 1; nv <= 3; ++nv) {
        std::vector<std::vector<int>> pool;  // distinct literal sets, size 1..3
        std::vector<int> lits;
        for (int v = 1; v <= nv; ++v) {
            lits.push_back(v);
            lits.push_back(-v);
        }
        for_combinations(static_cast<int>(lits.size()), 1, 3, [&](const std::vector<int>& pick) {
            std::vector<int> cl;
            for (int i : pick) cl.push_back(lits[static_cast<std::size_t>(i)]);
            pool.push_back(std::move(cl));
        });
        for_combinations(static_cast<int>(pool.size()), 0, 2, [&](const std::vector<int>& pick) {
            ++res.cases;
            CnfFormula f;
            f.num_vars = nv;
            for (int i : pick) f.clauses.push_back(pool[static_cast<std::size_t>(i)]);
            try {
                bool sat = cnf_satisfiable(f);
                Player winner = oracle_maker_first(from_3sat(f));
                if (sat != (winner == Player::Breaker)) {
                    std::ostringstream msg;
                    msg << "cnf nv=" << nv << " clauses={";
                    for (const auto& cl : f.clauses) {
                        for (int lit : cl) msg << lit << " ";
                        msg << ";";
                    }
                    msg << "} sat=" << sat << " winner=" << to_string(winner);
                    res.fail(msg.str());
                }
            } catch (const std::exception& e) {
                res.fail(std::string("exception: ") + e.what());
            }
        });
    }
    return res;
}

CheckResult verify_setcover_micro() {
    CheckResult res;
    auto run_instance = [&](const CoverInstance& c) {
        ++res.cases;
        try {
            bool covered = cover_exists(c);
            Player winner = oracle_maker_first(from_setcover(c));
            if (covered != (winner == Player::Breaker)) {
                std::ostringstream msg;
                msg << "setcover n=" << c.elements.size() << " m=" << c.edges.size()
                    << " k=" << c.k << " edges=";
                for (const auto& e : c.edges) {
                    for (int v : e) msg << v;
                    msg << ";";
                }
                msg << " cover=" << covered << " winner=" << to_string(winner);
                res.fail(msg.str());
            }
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
    };

    auto covers_all = [](const CoverInstance& c) {
        std::vector<char> hit(c.elements.size(), 0);
        for (const auto& e : c.edges)
            for (int v : e) hit[static_cast<std::size_t>(v)] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    };

    // exhaustive for n <= 4: every distinct-edge collection within the size cap
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> pool;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> e;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) e.push_back(v);
            pool.push_back(std::move(e));
        }
        for_combinations(static_cast<int>(pool.size()), 1, 5, [&](const std::vector<int>& pick) {
            CoverInstance c;
            for (int i = 0; i < n; ++i) c.elements.push_back("x" + std::to_string(i + 1));
            for (int i : pick) c.edges.push_back(pool[static_cast<std::size_t>(i)]);
            if (!covers_all(c)) return;
            int m = static_cast<int>(c.edges.size());
            for (int k = std::max(0, n + m - 5); k <= std::min(n, m); ++k) {
                c.k = k;
                run_instance(c);
            }
        });
    }

    // n = 5 forces m = k; exhaustive for m <= 2, seeded sample above that
    {
        int n = 5;
        std::vector<std::vector<int>> pool;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> e;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) e.push_back(v);
            pool.push_back(std::move(e));
        }
        auto base = [&] {
            CoverInstance c;
            for (int i = 0; i < n; ++i) c.elements.push_back("x" + std::to_string(i + 1));
            return c;
        };
        for_combinations(static_cast<int>(pool.size()), 1, 2, [&](const std::vector<int>& pick) {
            CoverInstance c = base();
            for (int i : pick) c.edges.push_back(pool[static_cast<std::size_t>(i)]);
            if (!covers_all(c)) return;
            c.k = static_cast<int>(c.edges.size());
            run_instance(c);
        });
        std::mt19937_64 rng(99);
        int sampled = 0;
        while (sampled < 300) {
            CoverInstance c = base();
            int m = 3 + static_cast<int>(rng() % 3);
            std::vector<int> pick;
            while (static_cast<int>(pick.size()) < m) {
                int e = static_cast<int>(rng() % pool.size());
                if (std::find(pick.begin(), pick.end(), e) == pick.end()) pick.push_back(e);
            }
            for (int i : pick) c.edges.push_back(pool[static_cast<std::size_t>(i)]);
            if (!covers_all(c)) continue;
            c.k = m;
            run_instance(c);
            ++sampled;
        }
    }
    return res;
}

CheckResult verify_qbf_micro() {
    CheckResult res;
    for (int half = 1; half <= 2; ++half) {
        int nv = 2 * half;
        std::vector<std::vector<int>> pool;
        std::vector<int> lits;
        for (int v = 1; v <= nv; ++v) {
            lits.push_back(v);
            lits.push_back(-v);
        }
        for_combinations(static_cast<int>(lits.size()), 1, 3, [&](const std::vector<int>& pick) {
            std::vector<int> cl;
            for (int i : pick) cl.push_back(lits[static_cast<std::size_t>(i)]);
            pool.push_back(std::move(cl));
        });
        for_combinations(static_cast<int>(pool.size()), 0, 2, [&](const std::vector<int>& pick) {
            ++res.cases;
            QbfFormula q;
            q.num_vars = nv;
            q.matrix.num_vars = nv;
            for (int i : pick) q.matrix.clauses.push_back(pool[static_cast<std::size_t>(i)]);
            try {
                bool truth = qbf_true(q);
                Player winner = oracle_maker_first(from_3qbf(q));
                if (truth != (winner == Player::Breaker)) {
                    std::ostringstream msg;
                    msg << "qbf nv=" << nv << " clauses={";
                    for (const auto& cl : q.matrix.clauses) {
                        for (int lit : cl) msg << lit << " ";
                        msg << ";";
                    }
                    msg << "} true=" << truth << " winner=" << to_string(winner);
                    res.fail(msg.str());
                }
            } catch (const std::exception& e) {
                res.fail(std::string("exception: ") + e.what());
            }
        });
    }
    return res;
}

CheckResult verify_avoidtrue_micro() {
    CheckResult res;
    for (int nv = 0; nv <= 4; ++nv) {
        std::vector<std::vector<int>> pool;
        for (int a = 0; a < nv; ++a) {
            pool.push_back({a});
            for (int b = a + 1; b < nv; ++b) pool.push_back({a, b});
        }
        for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
            ++res.cases;
            AvoidTrueFormula d;
            for (int v = 1; v <= nv; ++v) d.vars.push_back("x" + std::to_string(v));
            for (std::size_t j = 0; j < pool.size(); ++j)
                if (mask >> j & 1) d.clauses.push_back(pool[j]);
            try {
                MMResult expect = avoid_true_referee(d);
                MMResult got = solve_mm(from_avoid_true(d), Player::Maker);
                if (expect != got) {
                    std::ostringstream msg;
                    msg << "avoidtrue nv=" << nv << " clauses={";
                    for (const auto& cl : d.clauses) {
                        for (int v : cl) msg << v;
                        msg << ";";
                    }
                    msg << "} referee=" << to_string(expect) << " game=" << to_string(got);
                    res.fail(msg.str());
                }
            } catch (const std::exception& e) {
                res.fail(std::string("exception: ") + e.what());
            }
        }
    }
    return res;
}

CheckResult verify_lemma1(int samples, std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    for (int i = 0; i < samples; ++i) {
        ++res.cases;
        GenSpec spec;
        spec.n = 2 + pick(9);
        spec.width = 1 + pick(std::min(spec.n, 4));
        spec.num_winsets = pick(3);
        spec.winset_size = 1 + pick(std::min(spec.n, 3));
        spec.seed = rng();
        Game g = random_game(spec);
        try {
            Game s = simplify_empty_component(g);
            Outcome before = outcome4(g), after = outcome4(s);
            if (before != after)
                res.fail("outcome " + std::string(to_string(before)) + " became " +
                         to_string(after) + " after stripping\n" + describe(g));
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what() + "\n" + describe(g));
        }
    }
    return res;
}

CheckResult verify_lemma2(int samples, std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    for (int i = 0; i < samples; ++i) {
        GenSpec spec;
        spec.n = 3 + pick(8);
        spec.width = 1 + pick(std::min(spec.n, 4));
        spec.num_winsets = 1;
        spec.winset_size = 1;
        spec.seed = rng();
        Game g = random_game(spec);
        int x = static_cast<int>(g.winsets[0].find_first());
        Bits preds = g.poset.strict_down(x);

        Position pos = Position::initial(g);
        for (;;) {
            if (pos.maker.test(static_cast<std::size_t>(x)) ||
                pos.breaker.test(static_cast<std::size_t>(x)))
                break;  // game decided
            Bits open_preds = preds & ~pos.claimed();
            if (open_preds.count() == 1) {
                ++res.cases;
                int y = static_cast<int>(open_preds.find_first());
                bool odd = g.poset.p_value(y) % 2 == 1;
                Player winner = solve_mb(pos);
                if ((winner == Player::Maker) != odd) {
                    res.fail("p(y)=" + std::to_string(g.poset.p_value(y)) + " predicts " +
                             (odd ? "Maker" : "Breaker") + ", oracle says " + to_string(winner) +
                             "\n" + describe(g));
                    break;
                }
            }
            Bits avail = available_moves(pos);
            if (avail.none()) break;
            std::vector<int> moves = bits_to_indices(avail);
            pos = apply_move(pos, moves[static_cast<std::size_t>(pick(static_cast<int>(moves.size())))]);
        }
    }
    return res;
}

CheckResult verify_reduc_ws1(int samples, std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    int made = 0;
    while (made < samples) {
        // chains with one reducible Black singleton {x_{chain,j}}, j >= 3
        int chains = 1 + pick(3);
        std::vector<int> parts;
        int total = 0;
        for (int c = 0; c < chains && total < 14; ++c) {
            int h = std::min(1 + pick(6), 14 - total);
            parts.push_back(h);
            total += h;
        }
        Poset p = chain_poset(parts);
        int n = p.size();
        std::vector<std::pair<int, int>> candidates;  // (chain, j)
        const auto& chains_tb = *p.chain_decomposition();
        for (std::size_t c = 0; c < chains_tb.size(); ++c) {
            int len = static_cast<int>(chains_tb[c].size());
            for (int j = 3; j < len; ++j)
                if (j % 2 != n % 2) candidates.emplace_back(static_cast<int>(c), j);
        }
        if (candidates.empty()) continue;
        auto [ci, j] = candidates[static_cast<std::size_t>(pick(static_cast<int>(candidates.size())))];
        int x = chains_tb[static_cast<std::size_t>(ci)][static_cast<std::size_t>(j) - 1];

        std::vector<std::vector<int>> sets{{x}};
        int extra = pick(4);
        for (int s = 0; s < extra; ++s) {
            int size = 1 + pick(2);
            std::vector<int> set;
            while (static_cast<int>(set.size()) < size) {
                int v = pick(n);
                if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
            }
            std::sort(set.begin(), set.end());
            // drop sets that would violate the all-White-above hypothesis
            bool all_white_above = true;
            for (int v : set) {
                if (p.chain_of(v) != ci || p.chain_pos(v) >= j || p.chain_pos(v) % 2 != n % 2)
                    all_white_above = false;
            }
            if (!all_white_above) sets.push_back(std::move(set));
        }
        Game g = Game::make_indexed(Poset(p), sets, Convention::MakerBreaker);
        ++res.cases;
        ++made;
        try {
            Game r = reduce_black_singleton(g, ci, j);
            Player before = oracle_maker_first(g);
            Player after = oracle_maker_first(r);
            if (before != after)
                res.fail("winner " + std::string(to_string(before)) + " became " +
                         to_string(after) + " after reduction at chain " + std::to_string(ci) +
                         " pos " + std::to_string(j) + "\n" + describe(g));
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what() + "\n" + describe(g));
        }
    }
    return res;
}

}  // namespace ppg
