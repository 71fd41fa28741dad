#include <doctest.h>

#include <ppg/errors.hpp>
#include <ppg/oracle.hpp>
#include <ppg/poly_solvers.hpp>
#include <ppg/reductions.hpp>

#include <string>
#include <utility>
#include <vector>

using namespace ppg;

TEST_CASE("height2 single winset: predecessor parity rule") {
    // y1 < x, y2 < x, |X| = 3: both p-values odd, M empty -> Maker.
    Game g1 = Game::make(Poset::build({"y1", "y2", "x"}, {{"y1", "x"}, {"y2", "x"}}), {{"x"}});
    SolverVerdict v1 = solve_height2_single_ws1(g1);
    CHECK(v1.winner == Player::Maker);
    CHECK(v1.winner == solve_mb(g1, Player::Maker));

    // y1 < x, |X| = 2: p(y1) = 0 even -> M = {y1} -> Breaker.
    Game g2 = Game::make(Poset::build({"y1", "x"}, {{"y1", "x"}}), {{"x"}});
    SolverVerdict v2 = solve_height2_single_ws1(g2);
    CHECK(v2.winner == Player::Breaker);
    CHECK(v2.winner == solve_mb(g2, Player::Maker));

    // Minimal winset vertex: first move wins.
    Game g3 = Game::make(Poset::build({"x", "y"}, {{"x", "y"}}), {{"x"}});
    CHECK(solve_height2_single_ws1(g3).winner == Player::Maker);
}

TEST_CASE("height2 single winset: shape violations") {
    // Two sets.
    Game g1 = Game::make_indexed(Poset::build_indexed(2, {}), {{0}, {1}});
    CHECK_THROWS_AS(solve_height2_single_ws1(g1), PreconditionViolated);
    // Set of size 2.
    Game g2 = Game::make_indexed(Poset::build_indexed(2, {}), {{0, 1}});
    CHECK_THROWS_AS(solve_height2_single_ws1(g2), PreconditionViolated);
    // Height 3.
    Game g3 = Game::make_indexed(Poset::build_indexed(3, {{0, 1}, {1, 2}}), {{2}});
    CHECK_THROWS_AS(solve_height2_single_ws1(g3), PreconditionViolated);
}

TEST_CASE("height2 all tops") {
    // bottoms {a,b}, top t, |X| = 3 odd -> Maker.
    Game g1 = Game::make(Poset::build({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}}), {{"t"}});
    SolverVerdict v1 = solve_height2_all_tops(g1);
    CHECK(v1.winner == Player::Maker);
    CHECK(v1.winner == solve_mb(g1, Player::Maker));

    // a < t, |X| = 2: the only top has one private, zero non-private preds.
    Game g2 = Game::make(Poset::build({"a", "t"}, {{"a", "t"}}), {{"t"}});
    SolverVerdict v2 = solve_height2_all_tops(g2);
    CHECK(v2.winner == Player::Breaker);
    CHECK(v2.winner == solve_mb(g2, Player::Maker));

    // Complete bipartite 2x2: every top has 0 private, 2 non-private -> Maker.
    Game g3 = Game::make(
        Poset::build({"a", "b", "t1", "t2"},
                     {{"a", "t1"}, {"a", "t2"}, {"b", "t1"}, {"b", "t2"}}),
        {{"t1"}, {"t2"}});
    SolverVerdict v3 = solve_height2_all_tops(g3);
    CHECK(v3.winner == Player::Maker);
    CHECK(v3.winner == solve_mb(g3, Player::Maker));

    // Winsets must be exactly the nonminimal singletons.
    Game g4 = Game::make(Poset::build({"a", "t"}, {{"a", "t"}}), {{"a"}});
    CHECK_THROWS_AS(solve_height2_all_tops(g4), PreconditionViolated);
}

TEST_CASE("chains with singleton winsets") {
    // Chain a<b<c, winset {c}: j=1 matches |X|=3 parity -> White -> Maker.
    Game g1 = Game::make(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {{"c"}});
    SolverVerdict v1 = solve_chains_ws1(g1);
    CHECK(v1.winner == Player::Maker);
    CHECK(v1.certificate.find("hite") != std::string::npos);  // names the white rule
    CHECK(v1.winner == solve_mb(g1, Player::Maker));

    // Chain a<b, winset {b}: Black nonminimal on an even board -> Breaker.
    Game g2 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"b"}});
    CHECK(solve_chains_ws1(g2).winner == Player::Breaker);
    CHECK(solve_mb(g2, Player::Maker) == Player::Breaker);

    // Two chains of 2 plus an isolated vertex, winsets on both tops: Black
    // pair on different chains with |X| odd -> Maker.
    Game g3 = Game::make(
        Poset::build({"a1", "t1", "a2", "t2", "z"}, {{"a1", "t1"}, {"a2", "t2"}}),
        {{"t1"}, {"t2"}});
    SolverVerdict v3 = solve_chains_ws1(g3);
    CHECK(v3.winner == Player::Maker);
    CHECK(v3.winner == solve_mb(g3, Player::Maker));

    // Minimal winning vertex wins on sight.
    Game g4 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"a"}});
    CHECK(solve_chains_ws1(g4).winner == Player::Maker);

    // Not a chain poset.
    Game g5 = Game::make(Poset::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}), {{"c"}});
    CHECK_THROWS_AS(solve_chains_ws1(g5), PreconditionViolated);
    // Winset of size 2.
    Game g6 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"a", "b"}});
    CHECK_THROWS_AS(solve_chains_ws1(g6), PreconditionViolated);
}

TEST_CASE("connect-k closed forms") {
    auto v333 = solve_connect_k_known(3, 3, 3);
    REQUIRE(v333.has_value());
    CHECK(v333->winner == Player::Maker);

    auto v533 = solve_connect_k_known(5, 3, 3);
    REQUIRE(v533.has_value());
    CHECK(v533->winner == Player::Breaker);  // no alignment of 5 fits

    CHECK_FALSE(solve_connect_k_known(3, 4, 4).has_value());  // parity hypothesis fails
    CHECK_FALSE(solve_connect_k_known(4, 7, 6).has_value());
    CHECK_FALSE(solve_connect_k_known(3, 3, 1).has_value());  // h = 1 not covered

    // The closed form must match the oracle on the generated (3,3,3) board.
    Game board = gen_connect_k(3, 3, 3);
    CHECK(v333->winner == solve_mb(board, Player::Maker));
}

TEST_CASE("bounded chains strips winset-free chains") {
    // Chain a<b<c carries {c}; even chain d<e is dead weight.
    Game with_even = Game::make(
        Poset::build({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"d", "e"}}), {{"c"}});
    Game alone = Game::make(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {{"c"}});
    CHECK(solve_bounded_chains(with_even, 4, 2).winner == solve_mb(alone, Player::Maker));
    CHECK(solve_bounded_chains(with_even, 4, 2).winner == solve_mb(with_even, Player::Maker));

    // Odd dead chain folds to one spare vertex; winner unchanged.
    Game with_odd = Game::make(
        Poset::build({"a", "b", "c", "d", "e", "f"},
                     {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}}),
        {{"c"}});
    CHECK(solve_bounded_chains(with_odd, 4, 2).winner == solve_mb(with_odd, Player::Maker));

    // No winning sets at all.
    Game none = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {});
    CHECK(solve_bounded_chains(none, 4, 2).winner == Player::Breaker);

    // Cap violations are shape errors.
    Game many = Game::make(Poset::build({"a", "b"}, {}), {{"a"}, {"b"}});
    CHECK_THROWS_AS(solve_bounded_chains(many, 1, 2), PreconditionViolated);
}

TEST_CASE("auto_dispatch routing") {
    // Disjoint chains with singleton winsets route to chains-ws1 (tried first).
    Game chains = Game::make(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {{"c"}});
    CHECK(auto_dispatch(chains).solver == "chains-ws1");

    // Height-2 single singleton, non-chain poset.
    Game h2 = Game::make(Poset::build({"y1", "y2", "x"}, {{"y1", "x"}, {"y2", "x"}}), {{"x"}});
    CHECK(auto_dispatch(h2).solver == "height2-single-ws1");

    // All-tops shape.
    Game tops = Game::make(
        Poset::build({"a", "b", "t1", "t2"},
                     {{"a", "t1"}, {"a", "t2"}, {"b", "t1"}, {"b", "t2"}}),
        {{"t1"}, {"t2"}});
    CHECK(auto_dispatch(tops).solver == "height2-all-tops");

    // Width-2 general game falls through to the DP.
    Game gen = Game::make(
        Poset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}),
        {{"c", "d"}});
    SolverVerdict v = auto_dispatch(gen);
    CHECK(v.solver == "dp");
    CHECK(v.winner == solve_mb(gen, Player::Maker));

    // Every route agrees with the oracle wherever both run.
    Game chain_pairs = Game::make(
        Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), {{"b", "d"}, {"a"}});
    SolverVerdict v2 = auto_dispatch(chain_pairs);
    CHECK(v2.winner == solve_mb(chain_pairs, Player::Maker));
}

TEST_CASE("auto_dispatch rejects maker-maker games") {
    Game mm = Game::make_indexed(Poset::build_indexed(2, {}), {{0}}, Convention::MakerMaker);
    CHECK_THROWS_AS(auto_dispatch(mm), ConventionMismatch);
}

TEST_CASE("auto_dispatch gives up past every cap") {
    // A diamond (so it is not a union of chains) amid 27 free vertices, with a
    // size-3 winset: no closed form fits, the DP bound (n+1)^w explodes, and
    // the board exceeds the oracle cap.
    Game big = Game::make_indexed(Poset::build_indexed(30, {{0, 2}, {1, 2}}), {{3, 4, 5}});
    CHECK_THROWS_AS(auto_dispatch(big), NoSolverApplicable);
}
