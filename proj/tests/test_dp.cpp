#include <doctest.h>

#include <ppg/dp_solver.hpp>
#include <ppg/oracle.hpp>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

using namespace ppg;

namespace {

Game random_game(std::mt19937_64& rng, int max_n, int max_w, int max_m, Convention c) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    int n = 2 + static_cast<int>(pick(static_cast<std::size_t>(max_n - 1)));
    int w = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_w)));
    std::vector<std::pair<int, int>> covers;
    // Chain skeleton caps the width at w, extra edges only narrow it.
    for (int v = w; v < n; ++v) covers.push_back({v - w, v});
    for (int e = 0; e < n / 2; ++e) {
        int a = static_cast<int>(pick(static_cast<std::size_t>(n)));
        int b = static_cast<int>(pick(static_cast<std::size_t>(n)));
        if (a != b) covers.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::vector<int>> sets;
    int m = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_m)));
    for (int s = 0; s < m; ++s) {
        std::vector<int> set;
        int sz = 1 + static_cast<int>(pick(3));
        for (int j = 0; j < sz; ++j) set.push_back(static_cast<int>(pick(static_cast<std::size_t>(n))));
        sets.push_back(set);
    }
    return Game::make_indexed(Poset::build_indexed(n, covers), sets, c);
}

}  // namespace

TEST_CASE("dp agrees with the oracle on random games") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        Game g = random_game(rng, 10, 3, 4, Convention::MakerBreaker);
        CHECK(solve_dp(g) == solve_mb(g, Player::Maker));
    }
}

TEST_CASE("dp fixed examples") {
    // Zugzwang chain: Maker first loses.
    Game z = Game::make(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {{"b"}});
    CHECK(solve_dp(z) == Player::Breaker);
    // Single free vertex.
    Game one = Game::make(Poset::build({"a"}, {}), {{"a"}});
    CHECK(solve_dp(one) == Player::Maker);
    // Empty winset.
    Game triv = Game::make_indexed(Poset::build_indexed(4, {}), {{}});
    CHECK(solve_dp(triv) == Player::Maker);
    // No winsets.
    Game none = Game::make_indexed(Poset::build_indexed(4, {}), {});
    CHECK(solve_dp(none) == Player::Breaker);
}

TEST_CASE("dp state count respects the (n+1)^w * 2^m bound") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        Game g = random_game(rng, 12, 3, 3, Convention::MakerBreaker);
        SolveStats stats;
        solve_dp(g, &stats);
        double n = g.board_size();
        double w = g.poset.width();
        double m = static_cast<double>(g.winsets.size());
        CHECK(static_cast<double>(stats.states) <= std::pow(n + 1, w) * std::pow(2.0, m));
    }
}

TEST_CASE("dp handles wider boards than the oracle cap") {
    // 30 vertices in three chains of 10, one winset per chain bottom: Maker
    // first claims a bottom immediately.
    std::vector<std::pair<int, int>> covers;
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 9; ++j) covers.push_back({10 * c + j, 10 * c + j + 1});
    Game g = Game::make_indexed(Poset::build_indexed(30, covers), {{0}, {10}, {20}});
    CHECK(solve_dp(g) == Player::Maker);

    // Same board, winset {top of chain 0}: a Black non-minimal target on an
    // even board, Breaker snipes it whenever it surfaces.
    Game h = Game::make_indexed(Poset::build_indexed(30, covers), {{9}});
    CHECK(solve_dp(h) == Player::Breaker);
}

TEST_CASE("maker-maker dp agrees with the oracle") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Game g = random_game(rng, 10, 3, 3, Convention::MakerMaker);
        CHECK(solve_dp_mm(g) == solve_mm(g, Player::Maker));
    }
}

TEST_CASE("maker-maker dp fixed examples") {
    Game g2 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"b"}}, Convention::MakerMaker);
    CHECK(solve_dp_mm(g2) == MMResult::SecondWin);
    Game g3 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"a"}, {"b"}},
                         Convention::MakerMaker);
    CHECK(solve_dp_mm(g3) == MMResult::FirstWin);
    Game g4 = Game::make_indexed(Poset::build_indexed(3, {}), {}, Convention::MakerMaker);
    CHECK(solve_dp_mm(g4) == MMResult::Draw);
}
