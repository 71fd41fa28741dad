#include "ppg/instance_io.hpp"

#include "ppg/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace ppg {

Game parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto next_tokens = [&](std::vector<std::string>& toks) {
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            toks.clear();
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks.size() != 2 || toks[0] != "ppg" || toks[1] != "v1")
        throw SyntaxError(line_no == 0 ? 1 : line_no, "expected header 'ppg v1'");

    std::vector<std::string> names;
    std::map<std::string, int> index;
    struct Ref {
        int line;
        std::vector<std::string> ids;
    };
    std::vector<Ref> cover_refs, winset_refs;
    Convention convention = Convention::MakerBreaker;
    bool convention_seen = false;

    while (next_tokens(toks)) {
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw SyntaxError(line_no, "vertex takes one identifier");
            if (index.count(toks[1]))
                throw DuplicateVertex("line " + std::to_string(line_no) + ": duplicate vertex '" +
                                      toks[1] + "'");
            index[toks[1]] = static_cast<int>(names.size());
            names.push_back(toks[1]);
        } else if (toks[0] == "cover") {
            if (toks.size() != 3) throw SyntaxError(line_no, "cover takes two identifiers");
            cover_refs.push_back({line_no, {toks[1], toks[2]}});
        } else if (toks[0] == "winset") {
            winset_refs.push_back({line_no, {toks.begin() + 1, toks.end()}});
        } else if (toks[0] == "convention:") {
            if (toks.size() != 2 || (toks[1] != "maker-breaker" && toks[1] != "maker-maker"))
                throw SyntaxError(line_no, "convention: takes maker-breaker or maker-maker");
            if (convention_seen) throw SyntaxError(line_no, "duplicate convention line");
            convention_seen = true;
            convention = toks[1] == "maker-maker" ? Convention::MakerMaker
                                                  : Convention::MakerBreaker;
        } else {
            throw SyntaxError(line_no, "unknown directive '" + toks[0] + "'");
        }
    }

    auto resolve = [&](const Ref& ref, const std::string& id) {
        auto it = index.find(id);
        if (it == index.end())
            throw UnknownVertex("line " + std::to_string(ref.line) + ": unknown vertex '" + id +
                                "'");
        return it->second;
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& ref : cover_refs)
        covers.emplace_back(resolve(ref, ref.ids[0]), resolve(ref, ref.ids[1]));
    std::vector<std::vector<int>> sets;
    for (const auto& ref : winset_refs) {
        std::vector<int> s;
        for (const auto& id : ref.ids) s.push_back(resolve(ref, id));
        sets.push_back(std::move(s));
    }
    Poset p = Poset::build_indexed(static_cast<int>(names.size()), covers, names);
    return Game::make_indexed(std::move(p), sets, convention);
}

std::string write_instance(const Game& g) {
    std::ostringstream out;
    out << "ppg v1\n";
    if (g.convention == Convention::MakerMaker) out << "convention: maker-maker\n";
    for (const auto& name : g.poset.names()) out << "vertex " << name << "\n";
    for (auto [a, b] : g.poset.covers())
        out << "cover " << g.poset.name(a) << " " << g.poset.name(b) << "\n";
    for (const Bits& s : g.winsets) {
        out << "winset";
        for (auto v = s.find_first(); v != bits_npos; v = s.find_next(v))
            out << " " << g.poset.name(static_cast<int>(v));
        out << "\n";
    }
    return out.str();
}

Game random_game(const GenSpec& spec) {
    if (spec.n < 0 || spec.width < 0 || spec.num_winsets < 0 || spec.winset_size < 0)
        throw InfeasibleSpec("negative count in generator spec");
    if (spec.n > 0 && spec.width < 1) throw InfeasibleSpec("width must be >= 1");
    if (spec.width > std::max(spec.n, 1)) throw InfeasibleSpec("width exceeds vertex count");
    if (spec.winset_size > spec.n && spec.num_winsets > 0)
        throw InfeasibleSpec("winset size exceeds vertex count");

    std::mt19937_64 rng(spec.seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    int n = spec.n;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + spec.width < n; ++i) covers.emplace_back(i, i + spec.width);
    for (int t = 0; t < n; ++t) {  // extra forward covers keep width <= spec.width
        int a = pick(n), b = pick(n);
        if (a == b) continue;
        covers.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<std::vector<int>> sets;
    for (int s = 0; s < spec.num_winsets; ++s) {
        std::vector<int> set;
        while (static_cast<int>(set.size()) < spec.winset_size) {
            int v = pick(n);
            if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
        }
        std::sort(set.begin(), set.end());
        sets.push_back(std::move(set));
    }
    return Game::make_indexed(Poset::build_indexed(n, covers), sets, Convention::MakerBreaker);
}

}  // namespace ppg
