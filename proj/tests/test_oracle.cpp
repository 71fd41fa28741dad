#include <doctest.h>

#include <ppg/errors.hpp>
#include <ppg/oracle.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace ppg;

namespace {

Game tictactoe(Convention c) {
    std::vector<std::string> cells;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col)
            cells.push_back("c" + std::to_string(col + 1) + "r" + std::to_string(r + 1));
    auto cell = [](int col, int r) {
        return "c" + std::to_string(col + 1) + "r" + std::to_string(r + 1);
    };
    std::vector<std::vector<std::string>> lines;
    for (int r = 0; r < 3; ++r) lines.push_back({cell(0, r), cell(1, r), cell(2, r)});
    for (int col = 0; col < 3; ++col) lines.push_back({cell(col, 0), cell(col, 1), cell(col, 2)});
    lines.push_back({cell(0, 0), cell(1, 1), cell(2, 2)});
    lines.push_back({cell(0, 2), cell(1, 1), cell(2, 0)});
    return Game::make(Poset::build(cells, {}), lines, c);
}

Game random_game(std::mt19937_64& rng, int max_n) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    int n = 2 + static_cast<int>(pick(static_cast<std::size_t>(max_n - 1)));
    std::vector<std::pair<int, int>> covers;
    for (int v = 1; v < n; ++v)
        if (pick(2) == 0) covers.push_back({static_cast<int>(pick(static_cast<std::size_t>(v))), v});
    std::vector<std::vector<int>> sets;
    int m = 1 + static_cast<int>(pick(3));
    for (int s = 0; s < m; ++s) {
        std::vector<int> set;
        int sz = 1 + static_cast<int>(pick(3));
        for (int j = 0; j < sz; ++j) set.push_back(static_cast<int>(pick(static_cast<std::size_t>(n))));
        sets.push_back(set);
    }
    return Game::make_indexed(Poset::build_indexed(n, covers), sets);
}

bool maker_filled(const Game& g, const Bits& maker) {
    for (const auto& s : g.winsets)
        if (s.is_subset_of(maker)) return true;
    return false;
}

}  // namespace

TEST_CASE("single vertex single winset") {
    Game g = Game::make(Poset::build({"a"}, {}), {{"a"}});
    CHECK(solve_mb(g, Player::Maker) == Player::Maker);
    CHECK(solve_mb(g, Player::Breaker) == Player::Breaker);
    CHECK(outcome4(g) == Outcome::N);
}

TEST_CASE("zugzwang chain a<b<c with winset {b}") {
    Game g = Game::make(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {{"b"}});
    // Whoever moves first is forced to free b for the opponent... Maker first:
    // Maker a, Breaker b.  Breaker first: Breaker a, Maker b.  Second player wins.
    CHECK(solve_mb(g, Player::Maker) == Player::Breaker);
    CHECK(solve_mb(g, Player::Breaker) == Player::Maker);
    CHECK(outcome4(g) == Outcome::P);
}

TEST_CASE("empty winset means an instant maker win") {
    Game g = Game::make_indexed(Poset::build_indexed(2, {}), {{}});
    CHECK(outcome4(g) == Outcome::M);
}

TEST_CASE("no winsets means breaker wins") {
    Game g = Game::make_indexed(Poset::build_indexed(2, {}), {});
    CHECK(outcome4(g) == Outcome::B);
}

TEST_CASE("maker-breaker tic-tac-toe is a maker win moving first") {
    Game g = tictactoe(Convention::MakerBreaker);
    SolveStats stats;
    CHECK(solve_mb(g, Player::Maker, {}, &stats) == Player::Maker);
    CHECK(stats.nodes > 0);
}

TEST_CASE("maker-maker examples") {
    // One vertex, one set: first player takes it.
    Game g1 = Game::make(Poset::build({"a"}, {}), {{"a"}}, Convention::MakerMaker);
    CHECK(solve_mm(g1, Player::Maker) == MMResult::FirstWin);

    // Chain a < b, winset {b}: first must free b, second fills it.
    Game g2 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"b"}}, Convention::MakerMaker);
    CHECK(solve_mm(g2, Player::Maker) == MMResult::SecondWin);

    // Chain a < b, winsets {a} and {b}: first takes a immediately.
    Game g3 = Game::make(Poset::build({"a", "b"}, {{"a", "b"}}), {{"a"}, {"b"}},
                         Convention::MakerMaker);
    CHECK(solve_mm(g3, Player::Maker) == MMResult::FirstWin);

    // No winsets: exhaustion, draw.
    Game g4 = Game::make_indexed(Poset::build_indexed(3, {}), {}, Convention::MakerMaker);
    CHECK(solve_mm(g4, Player::Maker) == MMResult::Draw);

    CHECK(solve_mm(tictactoe(Convention::MakerMaker), Player::Maker) == MMResult::Draw);
}

TEST_CASE("relabeling invariance") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Game g = random_game(rng, 8);
        int n = g.board_size();
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<std::pair<int, int>> covers;
        for (auto [lo, hi] : g.poset.covers())
            covers.push_back({perm[static_cast<std::size_t>(lo)], perm[static_cast<std::size_t>(hi)]});
        std::vector<std::vector<int>> sets;
        for (const auto& s : g.winsets) {
            std::vector<int> set;
            for (int v : bits_to_indices(s)) set.push_back(perm[static_cast<std::size_t>(v)]);
            sets.push_back(set);
        }
        Game h = Game::make_indexed(Poset::build_indexed(n, covers), sets);
        CHECK(outcome4(g) == outcome4(h));
    }
}

TEST_CASE("best_move preserves the game value through self-play") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Game g = random_game(rng, 8);
        Position pos = Position::initial(g);
        Player predicted = solve_mb(pos);
        while (available_moves(pos).any()) {
            if (maker_filled(g, pos.maker)) break;
            pos = apply_move(pos, best_move(pos));
            CHECK(solve_mb(pos) == predicted);  // optimal play never loses value
        }
        CHECK((maker_filled(g, pos.maker) ? Player::Maker : Player::Breaker) == predicted);
    }
}

TEST_CASE("best_move end conditions") {
    Game g = Game::make(Poset::build({"a"}, {}), {{"a"}});
    Position pos = Position::initial(g);
    pos = apply_move(pos, 0);
    // The winset is complete; there is nothing sensible to ask for.
    CHECK_THROWS_AS(best_move(pos), GameOver);

    Game g2 = Game::make(Poset::build({"a"}, {}), {});
    Position pos2 = Position::initial(g2);
    pos2 = apply_move(pos2, 0);
    CHECK_THROWS_AS(best_move(pos2), GameOver);  // board exhausted
}

TEST_CASE("board size limits") {
    Game big = Game::make_indexed(Poset::build_indexed(25, {}), {{0}});
    CHECK_THROWS_AS(solve_mb(big, Player::Maker), BoardTooLarge);
    Game small = Game::make_indexed(Poset::build_indexed(5, {}), {{0}});
    OracleOptions tight;
    tight.max_board = 4;
    CHECK_THROWS_AS(solve_mb(small, Player::Maker, tight), BoardTooLarge);
    tight.max_board = 5;
    CHECK_NOTHROW(solve_mb(small, Player::Maker, tight));
}

TEST_CASE("maker-maker pair set splits into a draw") {
    Game g = Game::make_indexed(Poset::build_indexed(2, {}), {{0, 1}},
                                Convention::MakerMaker);
    // First takes 0, second takes 1: nobody fills {0,1} alone.
    CHECK(solve_mm(g, Player::Maker) == MMResult::Draw);
}
