#include <doctest.h>

#include <ppg/errors.hpp>
#include <ppg/oracle.hpp>
#include <ppg/reductions.hpp>
#include <ppg/verify.hpp>

#include <string>
#include <vector>

using namespace ppg;

TEST_CASE("3sat gadget shape") {
    CnfFormula f{3, {{1, 2, 3}}};
    Game g = from_3sat(f);
    CHECK(g.board_size() == 12);  // u,v,nv,tv per variable
    CHECK(g.winsets.size() == 1);
    CHECK(g.poset.height() == 2);
    // u1 sits below the three literal shapes of x1.
    int u1 = g.poset.index_of("u1");
    CHECK(g.poset.less(u1, g.poset.index_of("v1")));
    CHECK(g.poset.less(u1, g.poset.index_of("nv1")));
    CHECK(g.poset.less(u1, g.poset.index_of("tv1")));
    CHECK_FALSE(g.poset.less(u1, g.poset.index_of("v2")));
    // The clause set is {v1, v2, v3}.
    Bits want(12);
    for (const char* nm : {"v1", "v2", "v3"})
        want.set(static_cast<std::size_t>(g.poset.index_of(nm)));
    CHECK(g.winsets[0] == want);

    // Satisfiable, so Breaker wins with Maker first.
    CHECK(cnf_satisfiable(f));
    CHECK(solve_mb(g, Player::Maker) == Player::Breaker);
}

TEST_CASE("3sat unsatisfiable pair of unit clauses") {
    CnfFormula f{1, {{1}, {-1}}};
    Game g = from_3sat(f);
    CHECK(g.board_size() == 4);
    REQUIRE(g.winsets.size() == 2);
    CHECK(g.winsets[0].count() == 1);
    CHECK(g.winsets[1].count() == 1);
    CHECK_FALSE(cnf_satisfiable(f));
    CHECK(solve_mb(g, Player::Maker) == Player::Maker);
}

TEST_CASE("3sat empty formula") {
    CnfFormula f{1, {}};
    Game g = from_3sat(f);
    CHECK(g.winsets.empty());
    CHECK(solve_mb(g, Player::Maker) == Player::Breaker);
}

TEST_CASE("cnf validation") {
    CHECK_THROWS_AS(from_3sat(CnfFormula{1, {{2}}}), PreconditionViolated);   // out of range
    CHECK_THROWS_AS(from_3sat(CnfFormula{1, {{0}}}), PreconditionViolated);   // zero literal
    CHECK_THROWS_AS(from_3sat(CnfFormula{4, {{1, 2, 3, 4}}}), PreconditionViolated);
    CHECK_THROWS_AS(from_3sat(CnfFormula{1, {{}}}), PreconditionViolated);    // empty clause
}

TEST_CASE("setcover gadget: cover exists means breaker wins") {
    CoverInstance one{{"p"}, {{0}}, 1};
    Game g = from_setcover(one);
    CHECK(g.board_size() == 4);  // 2(n+m-k+1), n=m=k=1
    CHECK(g.poset.height() == 3);
    REQUIRE(g.winsets.size() == 1);
    CHECK(g.winsets[0].count() == 1);
    CHECK(g.winsets[0].test(static_cast<std::size_t>(g.poset.index_of("x"))));
    CHECK(cover_exists(one));
    CHECK(solve_mb(g, Player::Maker) == Player::Breaker);
}

TEST_CASE("setcover gadget: no small cover means maker wins") {
    CoverInstance two{{"p", "q"}, {{0}, {1}}, 1};
    Game g = from_setcover(two);
    CHECK(g.board_size() == 8);  // n=m=2, k=1
    CHECK(g.poset.height() == 3);
    CHECK_FALSE(cover_exists(two));
    CHECK(solve_mb(g, Player::Maker) == Player::Maker);
}

TEST_CASE("setcover validation") {
    CHECK_THROWS_AS(from_setcover(CoverInstance{{"p"}, {{0}}, 2}), InvalidBudget);   // k > m
    CHECK_THROWS_AS(from_setcover(CoverInstance{{"p", "q"}, {{0}, {0}, {1}}, 3}),
                    InvalidBudget);                                                  // k > n
    CHECK_THROWS_AS(from_setcover(CoverInstance{{"p"}, {{0}}, -1}), InvalidBudget);
    // q belongs to no edge.
    CHECK_THROWS_AS(from_setcover(CoverInstance{{"p", "q"}, {{0}}, 1}), PreconditionViolated);
}

TEST_CASE("qbf ladder: figure formula") {
    QbfFormula q{4, {4, {{1, 2, 3}, {-2, 3, -4}}}};
    Game g = from_3qbf(q);
    CHECK(g.board_size() == 11);  // 3N-1 at N=4
    CHECK(g.poset.width() == 2);
    CHECK(g.winsets.size() == 2);
    // Ladder: v1, nv1 < u1 < v2, nv2 < u2 < ...
    CHECK(g.poset.less(g.poset.index_of("v1"), g.poset.index_of("u1")));
    CHECK(g.poset.less(g.poset.index_of("nv1"), g.poset.index_of("u1")));
    CHECK(g.poset.less(g.poset.index_of("u1"), g.poset.index_of("v2")));
    CHECK(g.poset.less(g.poset.index_of("u1"), g.poset.index_of("nv2")));
    CHECK(g.poset.less(g.poset.index_of("u1"), g.poset.index_of("v4")));

    // Satisfier holds: pick x2 = true, x4 = false whatever Falsifier does.
    CHECK(qbf_true(q));
    CHECK(solve_mb(g, Player::Maker) == Player::Breaker);
}

TEST_CASE("qbf ladder: false formula gives maker the game") {
    // forall x1 exists x2 (x1): false.
    QbfFormula q{2, {2, {{1}}}};
    Game g = from_3qbf(q);
    CHECK(g.board_size() == 5);  // 3N-1 at N=2
    CHECK(g.poset.width() == 2);
    CHECK_FALSE(qbf_true(q));
    CHECK(solve_mb(g, Player::Maker) == Player::Maker);
}

TEST_CASE("qbf validation") {
    CHECK_THROWS_AS(from_3qbf(QbfFormula{3, {3, {{1}}}}), PreconditionViolated);  // odd count
    CHECK_THROWS_AS(from_3qbf(QbfFormula{0, {0, {}}}), PreconditionViolated);
    CHECK_THROWS_AS(from_3qbf(QbfFormula{2, {4, {{1}}}}), PreconditionViolated);  // var mismatch
}

TEST_CASE("avoid true reduction matches the brute-force referee") {
    AvoidTrueFormula pair{{"x1", "x2"}, {{0, 1}}};
    Game g = from_avoid_true(pair);
    CHECK(g.convention == Convention::MakerMaker);
    CHECK(g.board_size() == 3);  // v1, v2, u1
    CHECK(g.poset.height() == 2);
    REQUIRE(g.winsets.size() == 1);
    CHECK(g.winsets[0].count() == 1);
    CHECK(solve_mm(g, Player::Maker) == avoid_true_referee(pair));

    AvoidTrueFormula unit{{"x1", "x2"}, {{0}}};
    CHECK(solve_mm(from_avoid_true(unit), Player::Maker) == avoid_true_referee(unit));

    AvoidTrueFormula empty{{"x1", "x2"}, {}};
    CHECK(solve_mm(from_avoid_true(empty), Player::Maker) == MMResult::Draw);
    CHECK(avoid_true_referee(empty) == MMResult::Draw);
}

TEST_CASE("avoid true structure links vars to their clauses") {
    AvoidTrueFormula f{{"x1", "x2", "x3"}, {{0, 1}, {2}}};
    Game g = from_avoid_true(f);
    CHECK(g.board_size() == 5);
    int u1 = g.poset.index_of("u1"), u2 = g.poset.index_of("u2");
    CHECK(g.poset.less(g.poset.index_of("v1"), u1));
    CHECK(g.poset.less(g.poset.index_of("v2"), u1));
    CHECK_FALSE(g.poset.less(g.poset.index_of("v3"), u1));
    CHECK(g.poset.less(g.poset.index_of("v3"), u2));
}

TEST_CASE("connect-k boards") {
    Game small = gen_connect_k(3, 3, 3);
    CHECK(small.board_size() == 9);
    CHECK(small.winsets.size() == 8);
    CHECK(small.poset.width() == 3);
    // Gravity: c1r1 below c1r2 below c1r3, nothing across columns.
    CHECK(small.poset.less(small.poset.index_of("c1r1"), small.poset.index_of("c1r3")));
    CHECK_FALSE(small.poset.leq(small.poset.index_of("c1r1"), small.poset.index_of("c2r1")));

    Game big = gen_connect_k(4, 7, 6);
    CHECK(big.board_size() == 42);
    CHECK(big.winsets.size() == 69);  // 24 horizontal + 21 vertical + 24 diagonal
    CHECK(big.poset.width() == 7);

    CHECK(gen_connect_k(5, 3, 3).winsets.empty());
}

TEST_CASE("dimacs parser") {
    CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n2 3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 2);
    // Clauses come back deduplicated and sorted.
    CHECK(f.clauses[0] == std::vector<int>{-2, 1, 3});
    CHECK(f.clauses[1] == std::vector<int>{2, 3});

    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), SyntaxError);           // missing header
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), SyntaxError);  // no terminator
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 5 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), SyntaxError);  // >3 literals
}

TEST_CASE("qdimacs parser") {
    QbfFormula q = parse_qdimacs(
        "p cnf 4 2\na 1 0\ne 2 0\na 3 0\ne 4 0\n1 2 3 0\n-2 3 -4 0\n");
    CHECK(q.num_vars == 4);
    CHECK(q.matrix.clauses.size() == 2);

    // Blocks must alternate a, e, a, e ... one variable each, in order.
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 1 0\na 2 0\n1 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_qdimacs("p cnf 2 1\na 2 0\ne 1 0\n1 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_qdimacs("p cnf 3 1\na 1 0\ne 2 0\na 3 0\n1 0\n"), SyntaxError);
}

TEST_CASE("setcover parser") {
    CoverInstance c = parse_setcover("# cover\nelement p\nelement q\nedge p q\nedge q\n", 1);
    CHECK(c.elements == std::vector<std::string>{"p", "q"});
    REQUIRE(c.edges.size() == 2);
    CHECK(c.edges[0] == std::vector<int>{0, 1});
    CHECK(c.edges[1] == std::vector<int>{1});
    CHECK(c.k == 1);

    CHECK_THROWS_AS(parse_setcover("edge p\n", 1), SyntaxError);        // unknown element
    CHECK_THROWS_AS(parse_setcover("element p\nelement p\n", 1), SyntaxError);
    CHECK_THROWS_AS(parse_setcover("vertex p\n", 1), SyntaxError);      // unknown directive
}

TEST_CASE("avoidtrue parser") {
    AvoidTrueFormula f = parse_avoidtrue("var x\nvar y\nclause x y\nclause y\n");
    CHECK(f.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{0, 1});
    CHECK(f.clauses[1] == std::vector<int>{1});

    CHECK_THROWS_AS(parse_avoidtrue("clause x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_avoidtrue("var x\nvar x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_avoidtrue("frob x\n"), SyntaxError);
}
