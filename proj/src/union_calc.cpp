#include "ppg/union_calc.hpp"

#include "ppg/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace ppg {

Game disjoint_union(const Game& a, const Game& b) {
    if (a.convention != b.convention)
        throw ConventionMismatch("disjoint_union: conventions differ");
    std::vector<std::string> names;
    for (const auto& nm : a.poset.names()) names.push_back("1:" + nm);
    for (const auto& nm : b.poset.names()) names.push_back("2:" + nm);
    int off = a.board_size();
    std::vector<std::pair<int, int>> covers = a.poset.covers();
    for (auto [x, y] : b.poset.covers()) covers.emplace_back(x + off, y + off);
    Poset p = Poset::build_indexed(static_cast<int>(names.size()), covers, names);

    std::vector<std::vector<int>> sets;
    for (const Bits& s : a.winsets) sets.push_back(bits_to_indices(s));
    for (const Bits& s : b.winsets) {
        std::vector<int> t = bits_to_indices(s);
        for (int& v : t) v += off;
        sets.push_back(std::move(t));
    }
    return Game::make_indexed(std::move(p), sets, a.convention);
}

Game simplify_empty_component(const Game& g) {
    int n = g.board_size();
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (comp[static_cast<std::size_t>(v)] != v) {
            comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
            v = comp[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (auto [x, y] : g.poset.covers()) comp[static_cast<std::size_t>(find(x))] = find(y);

    Bits touched(static_cast<std::size_t>(n));
    for (const Bits& s : g.winsets)
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            touched.set(static_cast<std::size_t>(find(static_cast<int>(v))));

    Bits keep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (touched.test(static_cast<std::size_t>(find(v)))) keep.set(static_cast<std::size_t>(v));

    int stripped = n - static_cast<int>(keep.count());
    if (stripped == 0) return g;

    auto ind = g.poset.induced(keep);
    std::vector<std::vector<int>> sets;
    for (const Bits& s : g.winsets) {
        std::vector<int> t;
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            t.push_back(ind.new_index[v]);
        sets.push_back(std::move(t));
    }
    if (stripped % 2 == 0)
        return Game::make_indexed(std::move(ind.poset), sets, g.convention);

    // odd remainder: keep one isolated vertex for its parity
    std::vector<std::string> names = ind.poset.names();
    std::string pad = "_pad";
    while (std::find(names.begin(), names.end(), pad) != names.end()) pad += "_";
    names.push_back(pad);
    Poset p = Poset::build_indexed(static_cast<int>(names.size()), ind.poset.covers(), names);
    return Game::make_indexed(std::move(p), sets, g.convention);
}

std::vector<Outcome> OutcomeSet::values() const {
    std::vector<Outcome> out;
    for (Outcome o : {Outcome::M, Outcome::N, Outcome::P, Outcome::B})
        if (contains(o)) out.push_back(o);
    return out;
}

std::string OutcomeSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Outcome o : values()) {
        if (!first) out += ",";
        out += ppg::to_string(o);
        first = false;
    }
    return out + "}";
}

namespace {

OutcomeSet parse_set(const char* s) {
    OutcomeSet out;
    for (; *s; ++s) switch (*s) {
            case 'M': out.add(Outcome::M); break;
            case 'N': out.add(Outcome::N); break;
            case 'P': out.add(Outcome::P); break;
            case 'B': out.add(Outcome::B); break;
        }
    return out;
}

// rows: outcome of the first game; columns: outcome of the second
constexpr const char* kTableEE[4][4] = {
    {"M", "M", "M", "M"},
    {"M", "MN", "M", "MN"},
    {"M", "M", "P", "P"},
    {"M", "MN", "P", "PB"},
};
constexpr const char* kTableEO[4][4] = {
    // row: even game, column: odd game
    {"M", "MN", "M", "MN"},
    {"M", "MN", "M", "MNPB"},
    {"M", "N", "M", "N"},
    {"M", "N", "MP", "NB"},
};
constexpr const char* kTableOO[4][4] = {
    {"M", "M", "M", "MN"},
    {"M", "MP", "MN", "MNPB"},
    {"M", "MN", "M", "MN"},
    {"MN", "MNPB", "MN", "MNPB"},
};

}  // namespace

OutcomeSet union_table_lookup(Parity p1, Outcome o1, Parity p2, Outcome o2) {
    int r = static_cast<int>(o1), c = static_cast<int>(o2);
    if (p1 == Parity::Even && p2 == Parity::Even) return parse_set(kTableEE[r][c]);
    if (p1 == Parity::Odd && p2 == Parity::Odd) return parse_set(kTableOO[r][c]);
    if (p1 == Parity::Even) return parse_set(kTableEO[r][c]);
    return parse_set(kTableEO[c][r]);  // odd-even: swap the components
}

namespace {

Game witness_game(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& covers,
                  const std::vector<std::vector<std::string>>& sets) {
    return Game::make(Poset::build(names, covers), sets, Convention::MakerBreaker);
}

std::vector<Witness> build_catalog() {
    std::vector<Witness> w;
    auto add = [&](const std::string& name, Outcome o, const std::vector<std::string>& names,
                   const std::vector<std::pair<std::string, std::string>>& covers,
                   const std::vector<std::vector<std::string>>& sets) {
        w.push_back({name, witness_game(names, covers, sets), o});
    };

    add("EM", Outcome::M, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}},
        {{"a"}, {"d"}});
    add("EN1", Outcome::N, {"a", "b"}, {{"a", "b"}}, {{"a"}});
    add("EN2", Outcome::N, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}, {{"c"}});
    add("EN3", Outcome::N, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}},
        {{"a", "c"}});
    add("EB1", Outcome::B, {"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
    add("EB2", Outcome::B, {"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}},
        {{"a", "b"}, {"a", "d"}});
    add("OM", Outcome::M, {"a", "b", "c", "d", "e"},
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}, {{"a"}, {"e"}});
    add("ON1", Outcome::N, {"a"}, {}, {{"a"}});
    add("ON2", Outcome::N, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"c"}});
    add("ON3", Outcome::N, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", "c"}});
    add("OP", Outcome::P, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"b"}});
    add("OB1", Outcome::B, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", "b", "c"}});
    add("OB2", Outcome::B, {"a", "b", "c", "d", "e"},
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}, {{"a", "d"}, {"b", "e"}});
    add("OB3", Outcome::B, {"a", "b", "c", "d", "e"},
        {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}, {{"a", "b"}, {"a", "d"}});
    add("OB4", Outcome::B, {"z", "a", "b", "c", "d"},
        {{"z", "a"}, {"z", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}}, {{"a", "b"}, {"a", "d"}});
    return w;
}

std::vector<UnionIdentity> build_identities() {
    auto O = [](char c) {
        switch (c) {
            case 'M': return Outcome::M;
            case 'N': return Outcome::N;
            case 'P': return Outcome::P;
            default: return Outcome::B;
        }
    };
    std::vector<std::tuple<const char*, const char*, char>> raw = {
        {"EN1", "EN1", 'M'}, {"EN1", "EN2", 'N'}, {"EN1", "EB1", 'N'}, {"EN1", "EB2", 'M'},
        {"EB1", "EB1", 'B'}, {"EB2", "EB2", 'P'}, {"EM", "ON1", 'M'},  {"EM", "ON2", 'N'},
        {"EN1", "ON1", 'M'}, {"EN1", "ON2", 'N'}, {"EB2", "OP", 'M'},  {"EB1", "OP", 'P'},
        {"EM", "OB3", 'M'},  {"EM", "OB1", 'N'},  {"EN1", "OB3", 'M'}, {"EN1", "OB1", 'N'},
        {"EN2", "OB1", 'P'}, {"EN3", "OB1", 'B'}, {"EB2", "OB1", 'N'}, {"EB1", "OB1", 'B'},
        {"OM", "OB3", 'M'},  {"OM", "OB1", 'N'},  {"ON1", "ON1", 'M'}, {"ON2", "ON2", 'P'},
        {"ON2", "OP", 'M'},  {"ON1", "OP", 'N'},  {"ON2", "OB2", 'M'}, {"ON1", "OB1", 'N'},
        {"ON2", "OB1", 'P'}, {"ON3", "OB1", 'B'}, {"OP", "OB2", 'M'},  {"OP", "OB1", 'N'},
        {"OB2", "OB2", 'M'}, {"OB1", "OB3", 'N'}, {"OB4", "OB4", 'P'}, {"OB1", "OB1", 'B'},
    };
    std::vector<UnionIdentity> out;
    for (auto [l, r, c] : raw) out.push_back({l, r, O(c)});
    return out;
}

}  // namespace

const std::vector<Witness>& witness_catalog() {
    static const std::vector<Witness> catalog = build_catalog();
    return catalog;
}

const std::vector<UnionIdentity>& union_identities() {
    static const std::vector<UnionIdentity> identities = build_identities();
    return identities;
}

}  // namespace ppg
