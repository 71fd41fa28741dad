#include "ppg/chain_dp.hpp"
#include "ppg/dp_solver.hpp"
#include "ppg/errors.hpp"
#include "ppg/instance_io.hpp"
#include "ppg/oracle.hpp"
#include "ppg/poly_solvers.hpp"
#include "ppg/reductions.hpp"
#include "ppg/union_calc.hpp"
#include "ppg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace ppg;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Game load_game(const std::string& path) { return parse_instance(read_input(path)); }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct SolveArgs {
    std::string file;
    std::string first = "maker";
    std::string algo = "auto";
    bool as_json = false;
};

// Maker-first answer for a Maker-Breaker game via the chosen route.
SolverVerdict run_algo(const Game& g, const std::string& algo, SolveStats& stats) {
    if (algo == "oracle") {
        SolverVerdict v;
        v.winner = solve_mb(g, Player::Maker, {}, &stats);
        v.solver = "oracle";
        return v;
    }
    if (algo == "dp") {
        SolverVerdict v;
        v.winner = solve_dp(g, &stats);
        v.solver = "dp";
        return v;
    }
    if (algo == "poly") {
        SolverVerdict v = auto_dispatch(g, &stats);
        if (v.solver == "dp" || v.solver == "oracle")
            throw NoSolverApplicable("no polynomial solver covers this instance (auto routed to " +
                                     v.solver + ")");
        return v;
    }
    return auto_dispatch(g, &stats);  // auto
}

int cmd_solve(const SolveArgs& a) {
    Game g = load_game(a.file);
    auto t0 = std::chrono::steady_clock::now();
    SolveStats stats;
    json out;
    out["command"] = "solve";
    out["first"] = a.first;

    if (g.convention == Convention::MakerMaker) {
        if (a.algo != "auto" && a.algo != "oracle" && a.algo != "dp")
            throw ConventionMismatch("maker-maker games support --algo auto, oracle or dp");
        if (a.first != "maker")
            throw ConventionMismatch("maker-maker games are solved for the first player; use --first maker");
        MMResult r;
        std::string solver;
        if (a.algo == "dp" || (a.algo == "auto" && g.board_size() > 20)) {
            r = solve_dp_mm(g, &stats);
            solver = "dp-mm";
        } else {
            r = solve_mm(g, Player::Maker, {}, &stats);
            solver = "oracle-mm";
        }
        out["winner"] = to_string(r);
        out["solver"] = solver;
        out["nodes"] = stats.nodes;
        out["elapsed_ms"] = ms_since(t0);
        if (a.as_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << to_string(r) << "  [" << solver << "]\n";
        return 0;
    }

    if (a.first == "maker" || a.first == "both") {
        SolverVerdict v = run_algo(g, a.algo, stats);
        out["winner"] = to_string(v.winner);
        out["solver"] = v.solver;
        if (!v.certificate.empty()) out["certificate"] = v.certificate;
        if (a.first == "both") {
            Player bf = solve_mb(g, Player::Breaker, {}, &stats);
            out["winner_breaker_first"] = to_string(bf);
            out["solver_breaker_first"] = "oracle";
        }
        out["nodes"] = stats.nodes;
        out["elapsed_ms"] = ms_since(t0);
        if (a.as_json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "Maker first: " << to_string(v.winner) << "  [" << v.solver;
            if (!v.certificate.empty()) std::cout << ": " << v.certificate;
            std::cout << "]\n";
            if (out.contains("winner_breaker_first"))
                std::cout << "Breaker first: " << out["winner_breaker_first"].get<std::string>()
                          << "  [oracle]\n";
        }
        return 0;
    }
    if (a.first == "breaker") {
        if (a.algo != "auto" && a.algo != "oracle")
            throw PreconditionViolated("--first breaker requires --algo auto or oracle");
        Player w = solve_mb(g, Player::Breaker, {}, &stats);
        out["winner"] = to_string(w);
        out["solver"] = "oracle";
        out["nodes"] = stats.nodes;
        out["elapsed_ms"] = ms_since(t0);
        if (a.as_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << "Breaker first: " << to_string(w) << "  [oracle]\n";
        return 0;
    }
    throw Error("unknown --first value '" + a.first + "'");
}

int cmd_outcome(const std::string& file, bool as_json) {
    Game g = load_game(file);
    if (g.convention != Convention::MakerBreaker)
        throw ConventionMismatch("outcome classes are defined for Maker-Breaker games");
    auto t0 = std::chrono::steady_clock::now();
    SolveStats stats;
    Outcome o = outcome4(g, {}, &stats);
    if (as_json) {
        json out;
        out["command"] = "outcome";
        out["outcome"] = to_string(o);
        out["solver"] = "oracle";
        out["nodes"] = stats.nodes;
        out["elapsed_ms"] = ms_since(t0);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(o) << "\n";
    }
    return 0;
}

int cmd_union(const std::string& file1, const std::string& file2, bool check_table, bool as_json) {
    Game g1 = load_game(file1), g2 = load_game(file2);
    if (g1.convention != Convention::MakerBreaker || g2.convention != Convention::MakerBreaker)
        throw ConventionMismatch("union outcomes are defined for Maker-Breaker games");
    auto t0 = std::chrono::steady_clock::now();
    SolveStats stats;
    Game u = disjoint_union(g1, g2);
    Outcome ou = outcome4(u, {}, &stats);
    json out;
    out["command"] = "union";
    out["outcome"] = to_string(ou);
    out["solver"] = "oracle";
    bool violation = false;
    if (check_table) {
        Outcome o1 = outcome4(g1, {}, &stats);
        Outcome o2 = outcome4(g2, {}, &stats);
        OutcomeSet cell = union_table_lookup(parity_of(g1), o1, parity_of(g2), o2);
        out["component_outcomes"] = {to_string(o1), to_string(o2)};
        out["table_cell"] = cell.to_string();
        violation = !cell.contains(ou);
        out["table_ok"] = !violation;
    }
    out["nodes"] = stats.nodes;
    out["elapsed_ms"] = ms_since(t0);
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(ou) << "\n";
        if (check_table)
            std::cout << "table cell " << out["table_cell"].get<std::string>() << " -> "
                      << (violation ? "VIOLATION" : "ok") << "\n";
    }
    return violation ? 1 : 0;
}

int emit(const Game& g) {
    std::cout << write_instance(g);
    return 0;
}

int cmd_verify(const std::string& what, const std::string& family, int max_n, int samples,
               std::uint64_t seed, bool as_json) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    std::string label;
    if (what == "union-table") {
        res = verify_union_soundness(samples, max_n, seed);
        label = "union-table";
    } else if (what == "witnesses") {
        CheckResult a = verify_witnesses(), b = verify_union_identities();
        res.cases = a.cases + b.cases;
        res.failures = a.failures + b.failures;
        res.notes = a.notes;
        res.notes.insert(res.notes.end(), b.notes.begin(), b.notes.end());
        label = "witnesses";
    } else if (what == "solvers") {
        res = verify_solver_family(family, max_n);
        label = "solvers/" + family;
    } else {
        throw Error("unknown verify target '" + what + "'");
    }
    if (as_json) {
        json out;
        out["command"] = "verify";
        out["target"] = label;
        out["cases"] = res.cases;
        out["failures"] = res.failures;
        out["notes"] = res.notes;
        out["elapsed_ms"] = ms_since(t0);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << label << ": " << res.cases << " cases, " << res.failures << " failures\n";
        for (const auto& note : res.notes) std::cout << "  " << note << "\n";
    }
    return res.ok() ? 0 : 1;
}

int cmd_play(const std::string& file, const std::string& as_side) {
    Game g = load_game(file);
    bool human_is_maker = as_side != "breaker";
    Position pos = Position::initial(g);
    OracleOptions opts;

    auto show = [&]() {
        std::cout << "\nboard:";
        for (int v = 0; v < g.board_size(); ++v) {
            std::cout << " " << g.poset.name(v);
            if (pos.maker.test(static_cast<std::size_t>(v))) std::cout << "(M)";
            else if (pos.breaker.test(static_cast<std::size_t>(v))) std::cout << "(B)";
        }
        std::cout << "\n";
    };
    auto finished = [&]() -> const char* {
        for (const Bits& s : g.winsets)
            if ((s & ~pos.maker).none()) return g.convention == Convention::MakerBreaker
                                                    ? "Maker filled a winning set."
                                                    : "First player filled a winning set.";
        if (g.convention == Convention::MakerMaker)
            for (const Bits& s : g.winsets)
                if ((s & ~pos.breaker).none()) return "Second player filled a winning set.";
        if (g.convention == Convention::MakerBreaker) {
            bool alive = false;
            for (const Bits& s : g.winsets)
                if ((s & pos.breaker).none()) alive = true;
            if (!alive) return "Breaker hit every winning set.";
        }
        if (available_moves(pos).none()) return g.convention == Convention::MakerBreaker
                                                    ? "Board exhausted: Breaker wins."
                                                    : "Board exhausted: draw.";
        return nullptr;
    };

    std::cout << "You play " << (human_is_maker ? "Maker" : "Breaker") << "; engine: oracle.\n";
    for (;;) {
        show();
        if (const char* msg = finished()) {
            std::cout << msg << "\n";
            return 0;
        }
        bool humans_turn = (pos.to_move == Player::Maker) == human_is_maker;
        Bits avail = available_moves(pos);
        if (humans_turn) {
            std::vector<int> legal = bits_to_indices(avail);
            std::cout << "your move (";
            for (std::size_t i = 0; i < legal.size(); ++i)
                std::cout << (i ? " " : "") << g.poset.name(legal[i]);
            std::cout << "): " << std::flush;
            std::string token;
            if (!(std::cin >> token)) {
                std::cout << "\nno more input; stopping.\n";
                return 0;
            }
            int v;
            try {
                v = g.poset.index_of(token);
            } catch (const UnknownVertex&) {
                std::cout << "unknown vertex '" << token << "'; legal moves listed above.\n";
                continue;
            }
            if (!avail.test(static_cast<std::size_t>(v))) {
                std::cout << "'" << token << "' is not available; legal moves listed above.\n";
                continue;
            }
            pos = apply_move(pos, v);
        } else {
            int v = best_move(pos, opts);
            std::cout << "engine plays " << g.poset.name(v) << "\n";
            pos = apply_move(pos, v);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset positional game solver"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("file", sa.file, "instance file, - for stdin")->required();
    solve->add_option("--first", sa.first, "maker|breaker|both")
        ->check(CLI::IsMember({"maker", "breaker", "both"}));
    solve->add_option("--algo", sa.algo, "auto|oracle|dp|poly")
        ->check(CLI::IsMember({"auto", "oracle", "dp", "poly"}));
    solve->add_flag("--json", sa.as_json, "JSON envelope");

    std::string outcome_file;
    bool outcome_json = false;
    auto* outcome = app.add_subcommand("outcome", "four-class outcome M/N/P/B");
    outcome->add_option("file", outcome_file, "instance file, - for stdin")->required();
    outcome->add_flag("--json", outcome_json, "JSON envelope");

    std::string union_a, union_b;
    bool union_check = false, union_json = false;
    auto* union_cmd = app.add_subcommand("union", "outcome of a disjoint union");
    union_cmd->add_option("file1", union_a, "first instance")->required();
    union_cmd->add_option("file2", union_b, "second instance")->required();
    union_cmd->add_flag("--check-table", union_check, "assert the outcome sits in the table cell");
    union_cmd->add_flag("--json", union_json, "JSON envelope");

    auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
    gen->require_subcommand(1);
    int ck_k = 4, ck_w = 7, ck_h = 6;
    auto* gen_ck = gen->add_subcommand("connectk", "Connect-k gravity board");
    gen_ck->set_help_flag("--help", "print help");  // frees -h/--h for the board height
    gen_ck->add_option("--k", ck_k, "alignment length")->required();
    gen_ck->add_option("--w", ck_w, "columns")->required();
    gen_ck->add_option("--h", ck_h, "column height")->required();
    std::string gen_file;
    auto* gen_sat = gen->add_subcommand("sat", "3-SAT reduction from DIMACS CNF");
    gen_sat->add_option("file", gen_file, "CNF file, - for stdin")->required();
    auto* gen_qbf = gen->add_subcommand("qbf", "3-QBF reduction from QDIMACS");
    gen_qbf->add_option("file", gen_file, "QDIMACS file, - for stdin")->required();
    int sc_k = 0;
    auto* gen_sc = gen->add_subcommand("setcover", "Set Cover reduction");
    gen_sc->add_option("file", gen_file, "element/edge file, - for stdin")->required();
    gen_sc->add_option("--k", sc_k, "cover budget")->required();
    auto* gen_at = gen->add_subcommand("avoidtrue", "Avoid True reduction (Maker-Maker)");
    gen_at->add_option("file", gen_file, "var/clause file, - for stdin")->required();
    GenSpec gspec;
    auto* gen_rnd = gen->add_subcommand("random", "seeded random game");
    gen_rnd->add_option("--n", gspec.n, "vertices")->required();
    gen_rnd->add_option("--width", gspec.width, "chain skeleton width");
    gen_rnd->add_option("--winsets", gspec.num_winsets, "winning set count");
    gen_rnd->add_option("--size", gspec.winset_size, "winning set size");
    gen_rnd->add_option("--seed", gspec.seed, "RNG seed");

    std::string verify_family = "dp";
    int verify_max_n = 8, verify_samples = 1000, verify_scale = 0;
    std::uint64_t verify_seed = 2024;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "cross-check solvers against the oracle");
    verify->require_subcommand(1);
    auto* v_union = verify->add_subcommand("union-table", "random union soundness");
    v_union->add_option("--max-n", verify_max_n, "component size cap");
    v_union->add_option("--samples", verify_samples, "sample count");
    v_union->add_option("--seed", verify_seed, "RNG seed");
    v_union->add_flag("--json", verify_json, "JSON envelope");
    auto* v_wit = verify->add_subcommand("witnesses", "witness catalog and union identities");
    v_wit->add_flag("--json", verify_json, "JSON envelope");
    auto* v_sol = verify->add_subcommand("solvers", "per-family solver equivalence");
    v_sol->add_option("--family", verify_family,
                      "height2-single|all-tops|chains-ws1|chains-h2-ws2|dp|chains-ws2")
        ->required();
    v_sol->add_option("--scale", verify_scale, "max n or sample count, 0 = default");
    v_sol->add_flag("--json", verify_json, "JSON envelope");

    std::string play_file, play_as = "maker", play_engine = "oracle";
    auto* play = app.add_subcommand("play", "interactive REPL against the engine");
    play->add_option("file", play_file, "instance file")->required();
    play->add_option("--as", play_as, "maker|breaker")->check(CLI::IsMember({"maker", "breaker"}));
    play->add_option("--engine", play_engine, "oracle")->check(CLI::IsMember({"oracle"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(sa);
        if (outcome->parsed()) return cmd_outcome(outcome_file, outcome_json);
        if (union_cmd->parsed()) return cmd_union(union_a, union_b, union_check, union_json);
        if (gen->parsed()) {
            if (gen_ck->parsed()) return emit(gen_connect_k(ck_k, ck_w, ck_h));
            if (gen_sat->parsed()) return emit(from_3sat(parse_dimacs(read_input(gen_file))));
            if (gen_qbf->parsed()) return emit(from_3qbf(parse_qdimacs(read_input(gen_file))));
            if (gen_sc->parsed())
                return emit(from_setcover(parse_setcover(read_input(gen_file), sc_k)));
            if (gen_at->parsed()) return emit(from_avoid_true(parse_avoidtrue(read_input(gen_file))));
            if (gen_rnd->parsed()) return emit(random_game(gspec));
        }
        if (verify->parsed()) {
            if (v_union->parsed())
                return cmd_verify("union-table", "", verify_max_n, verify_samples, verify_seed,
                                  verify_json);
            if (v_wit->parsed())
                return cmd_verify("witnesses", "", 0, 0, 0, verify_json);
            if (v_sol->parsed())
                return cmd_verify("solvers", verify_family, verify_scale, 0, 0, verify_json);
        }
        if (play->parsed()) return cmd_play(play_file, play_as);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
