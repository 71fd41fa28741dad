#include <doctest.h>

#include <ppg/errors.hpp>
#include <ppg/poset.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

using namespace ppg;

namespace {

// Nine-vertex running example: a diamond a,b < c < d next to a chain
// e < f < g branching into h, i, with the extra relation e < d.
Poset fig1() {
    return Poset::build({"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                        {{"a", "c"},
                         {"b", "c"},
                         {"c", "d"},
                         {"e", "f"},
                         {"f", "g"},
                         {"g", "h"},
                         {"g", "i"},
                         {"e", "d"}});
}

std::vector<std::string> names_of(const Poset& p, const Bits& b) {
    std::vector<std::string> out;
    for (auto v = b.find_first(); v != bits_npos; v = b.find_next(v))
        out.push_back(p.name(static_cast<int>(v)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("fig1 poset structure") {
    Poset p = fig1();
    CHECK(p.size() == 9);
    CHECK(p.name(0) == "a");
    CHECK(p.index_of("i") == 8);

    // e <= i and e <= d hold; b and i are incomparable.
    CHECK(p.leq(p.index_of("e"), p.index_of("i")));
    CHECK(p.leq(p.index_of("e"), p.index_of("d")));
    CHECK_FALSE(p.leq(p.index_of("b"), p.index_of("i")));
    CHECK_FALSE(p.leq(p.index_of("i"), p.index_of("b")));
    CHECK(p.leq(p.index_of("c"), p.index_of("c")));
    CHECK_FALSE(p.less(p.index_of("c"), p.index_of("c")));

    CHECK(p.height() == 4);  // e < f < g < h
    CHECK(p.width() == 4);   // {a, b, i, h}
    CHECK(names_of(p, p.minimal_set()) == std::vector<std::string>{"a", "b", "e"});
    CHECK(names_of(p, p.maximal_set()) == std::vector<std::string>{"d", "h", "i"});

    CHECK(p.p_value(p.index_of("d")) == 8);  // only d itself is >= d
    CHECK(p.p_value(p.index_of("e")) == 3);  // up(e) = {e,f,g,h,i,d}
    CHECK(p.p_value(p.index_of("a")) == 6);  // up(a) = {a,c,d}

    CHECK(names_of(p, p.up_set(p.index_of("e"))) ==
          std::vector<std::string>{"d", "e", "f", "g", "h", "i"});
    CHECK(names_of(p, p.down_set(p.index_of("d"))) ==
          std::vector<std::string>{"a", "b", "c", "d", "e"});
    CHECK(names_of(p, p.strict_down(p.index_of("d"))) ==
          std::vector<std::string>{"a", "b", "c", "e"});

    CHECK_FALSE(p.chain_decomposition().has_value());
}

TEST_CASE("transitive reduction canonicalizes redundant covers") {
    // a < b < c declared together with the implied a < c.
    Poset p = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}};
    CHECK(p.covers() == want);
    CHECK(p.height() == 3);
    CHECK(p.width() == 1);

    Poset q = fig1();
    CHECK(q.covers().size() == 8);
    CHECK(q.cover_preds(q.index_of("d")).size() == 2);  // c and e
    CHECK(q.cover_succs(q.index_of("g")).size() == 2);  // h and i
}

TEST_CASE("build_indexed default names") {
    Poset p = Poset::build_indexed(3, {{0, 1}, {1, 2}});
    CHECK(p.name(0) == "v0");
    CHECK(p.name(2) == "v2");
    CHECK(p.leq(0, 2));
}

TEST_CASE("chain decomposition of a chain poset") {
    // Two chains: a < b < c and d < e.
    Poset p = Poset::build({"a", "b", "c", "d", "e"},
                           {{"a", "b"}, {"b", "c"}, {"d", "e"}});
    const auto& chains = p.chain_decomposition();
    REQUIRE(chains.has_value());
    REQUIRE(chains->size() == 2);
    // Chains run top-to-bottom and are ordered by smallest vertex index.
    CHECK((*chains)[0] == std::vector<int>{2, 1, 0});
    CHECK((*chains)[1] == std::vector<int>{4, 3});

    CHECK(p.chain_of(p.index_of("b")) == 0);
    CHECK(p.chain_of(p.index_of("e")) == 1);
    CHECK(p.chain_pos(p.index_of("c")) == 1);  // 1-based from the top
    CHECK(p.chain_pos(p.index_of("a")) == 3);
    CHECK(p.chain_pos(p.index_of("d")) == 2);

    // |X| = 5 odd: White exactly at odd positions from the top.
    CHECK(p.color_of(p.index_of("c")) == Color::White);
    CHECK(p.color_of(p.index_of("b")) == Color::Black);
    CHECK(p.color_of(p.index_of("a")) == Color::White);
    CHECK(p.color_of(p.index_of("e")) == Color::White);
    CHECK(p.color_of(p.index_of("d")) == Color::Black);
}

TEST_CASE("antichain counts as a chain poset of singleton chains") {
    Poset p = Poset::build_indexed(3, {});
    const auto& chains = p.chain_decomposition();
    REQUIRE(chains.has_value());
    CHECK(chains->size() == 3);
    CHECK(p.chain_pos(1) == 1);
    CHECK(p.width() == 3);
    CHECK(p.height() == 1);
}

TEST_CASE("induced subposet") {
    Poset p = fig1();
    // Keep the right component {e,f,g,h,i}.
    Bits keep(9);
    for (const char* n : {"e", "f", "g", "h", "i"})
        keep.set(static_cast<std::size_t>(p.index_of(n)));
    PosetInduced ind = p.induced(keep);
    CHECK(ind.poset.size() == 5);
    CHECK(ind.poset.height() == 4);
    CHECK(ind.poset.width() == 2);
    CHECK(ind.new_index[static_cast<std::size_t>(p.index_of("a"))] == -1);
    int e2 = ind.new_index[static_cast<std::size_t>(p.index_of("e"))];
    int i2 = ind.new_index[static_cast<std::size_t>(p.index_of("i"))];
    CHECK(ind.poset.name(e2) == "e");
    CHECK(ind.poset.leq(e2, i2));

    // Dropping a middle vertex keeps the closure: a < c survives removing b.
    Poset chain = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Bits keep2(3);
    keep2.set(0);
    keep2.set(2);
    PosetInduced ind2 = chain.induced(keep2);
    CHECK(ind2.poset.size() == 2);
    CHECK(ind2.poset.leq(0, 1));  // a < c via the removed b
    CHECK(ind2.poset.covers().size() == 1);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Poset::build({"a", "a"}, {}), DuplicateVertex);
    CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "z"}}), UnknownVertex);
    CHECK_THROWS_AS(Poset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleDetected);
    CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "a"}}), CycleDetected);
    Poset p = Poset::build({"a"}, {});
    CHECK_THROWS_AS(p.index_of("nope"), UnknownVertex);
}

TEST_CASE("chain accessors reject non-chain posets") {
    Poset p = fig1();
    CHECK_THROWS_AS(p.chain_of(0), NotChainPoset);
    CHECK_THROWS_AS(p.chain_pos(0), NotChainPoset);
    CHECK_THROWS_AS(p.color_of(0), NotChainPoset);
}

TEST_CASE("poset_stats snapshot") {
    PosetStats st = poset_stats(fig1());
    CHECK(st.height == 4);
    CHECK(st.width == 4);
    CHECK(st.minimal == std::vector<std::string>{"a", "b", "e"});
    CHECK(st.maximal == std::vector<std::string>{"d", "h", "i"});
}
