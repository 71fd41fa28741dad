#include "ppg/poset.hpp"

#include "ppg/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ppg {
namespace {

// Kuhn's augmenting-path matching on the split comparability graph.
// Dilworth: width = n - maximum matching.
int max_comparability_matching(const Poset& p) {
    int n = p.size();
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    std::function<bool(int)> augment = [&](int a) -> bool {
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b) || used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            int prev = match_right[static_cast<std::size_t>(b)];
            if (prev == -1 || augment(prev)) {
                match_right[static_cast<std::size_t>(b)] = a;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int a = 0; a < n; ++a) {
        used.assign(static_cast<std::size_t>(n), 0);
        if (augment(a)) ++matched;
    }
    return matched;
}

}  // namespace

Poset Poset::build(const std::vector<std::string>& names,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!idx.emplace(names[i], static_cast<int>(i)).second)
            throw DuplicateVertex("duplicate vertex '" + names[i] + "'");
    }
    std::vector<std::pair<int, int>> ic;
    ic.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
        auto a = idx.find(lo), b = idx.find(hi);
        if (a == idx.end()) throw UnknownVertex("unknown vertex '" + lo + "' in cover");
        if (b == idx.end()) throw UnknownVertex("unknown vertex '" + hi + "' in cover");
        ic.emplace_back(a->second, b->second);
    }
    return build_indexed(static_cast<int>(names.size()), ic, names);
}

Poset Poset::build_indexed(int n, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> names) {
    Poset p;
    p.n_ = n;
    if (names.empty()) {
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    }
    p.names_ = std::move(names);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : covers) {
        if (a == b) throw CycleDetected("self-relation on '" + p.names_[static_cast<std::size_t>(a)] + "'");
        adj[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }

    // Topological order; a leftover vertex means a directed cycle.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) throw CycleDetected("cover relation contains a cycle");

    p.up_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    p.down_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) p.up_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(v));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int w : adj[static_cast<std::size_t>(v)])
            p.up_[static_cast<std::size_t>(v)] |= p.up_[static_cast<std::size_t>(w)];
    }
    for (int v = 0; v < n; ++v)
        for (auto w = p.up_[static_cast<std::size_t>(v)].find_first(); w != bits_npos;
             w = p.up_[static_cast<std::size_t>(v)].find_next(w))
            p.down_[w].set(static_cast<std::size_t>(v));

    p.finalize();
    return p;
}

void Poset::finalize() {
    int n = n_;
    // Transitive reduction: a < b is a cover iff no c with a < c < b.
    covers_.clear();
    preds_.assign(static_cast<std::size_t>(n), {});
    succs_.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            // strict interval (a, b)
            Bits mid = up_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)];
            if (mid.count() == 2) {  // only a and b themselves
                covers_.emplace_back(a, b);
                succs_[static_cast<std::size_t>(a)].push_back(b);
                preds_[static_cast<std::size_t>(b)].push_back(a);
            }
        }
    }
    std::sort(covers_.begin(), covers_.end());

    minimal_ = Bits(static_cast<std::size_t>(n));
    maximal_ = Bits(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (down_[static_cast<std::size_t>(v)].count() == 1) minimal_.set(static_cast<std::size_t>(v));
        if (up_[static_cast<std::size_t>(v)].count() == 1) maximal_.set(static_cast<std::size_t>(v));
    }

    // Height: longest path over covers.
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    // process in an order compatible with <: sort by down-set size
    std::vector<int> by_depth(static_cast<std::size_t>(n));
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) {
        return down_[static_cast<std::size_t>(a)].count() < down_[static_cast<std::size_t>(b)].count();
    });
    height_ = n > 0 ? 1 : 0;
    for (int v : by_depth) {
        h[static_cast<std::size_t>(v)] = 1;
        for (int u : preds_[static_cast<std::size_t>(v)])
            h[static_cast<std::size_t>(v)] = std::max(h[static_cast<std::size_t>(v)], h[static_cast<std::size_t>(u)] + 1);
        height_ = std::max(height_, h[static_cast<std::size_t>(v)]);
    }
    if (n == 0) height_ = 0;

    width_ = n == 0 ? 0 : n - max_comparability_matching(*this);

    // Chain decomposition: succeeds iff every vertex has at most one cover
    // neighbor on each side; components are then paths.
    chains_.reset();
    chain_of_.assign(static_cast<std::size_t>(n), -1);
    chain_pos_.assign(static_cast<std::size_t>(n), -1);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
        if (preds_[static_cast<std::size_t>(v)].size() > 1 || succs_[static_cast<std::size_t>(v)].size() > 1)
            ok = false;
    if (ok) {
        std::vector<std::vector<int>> chains;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            int top = v;
            while (!succs_[static_cast<std::size_t>(top)].empty()) top = succs_[static_cast<std::size_t>(top)][0];
            std::vector<int> chain;
            for (int u = top;; u = preds_[static_cast<std::size_t>(u)][0]) {
                chain.push_back(u);
                seen[static_cast<std::size_t>(u)] = 1;
                if (preds_[static_cast<std::size_t>(u)].empty()) break;
            }
            chains.push_back(std::move(chain));
        }
        std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        });
        for (std::size_t c = 0; c < chains.size(); ++c)
            for (std::size_t j = 0; j < chains[c].size(); ++j) {
                chain_of_[static_cast<std::size_t>(chains[c][j])] = static_cast<int>(c);
                chain_pos_[static_cast<std::size_t>(chains[c][j])] = static_cast<int>(j) + 1;
            }
        chains_ = std::move(chains);
    }
}

int Poset::index_of(const std::string& name) const {
    for (int v = 0; v < n_; ++v)
        if (names_[static_cast<std::size_t>(v)] == name) return v;
    throw UnknownVertex("unknown vertex '" + name + "'");
}

Bits Poset::strict_down(int v) const {
    Bits b = down_[static_cast<std::size_t>(v)];
    b.reset(static_cast<std::size_t>(v));
    return b;
}

int Poset::chain_of(int v) const {
    if (!chains_) throw NotChainPoset("poset is not a disjoint union of chains");
    return chain_of_[static_cast<std::size_t>(v)];
}

int Poset::chain_pos(int v) const {
    if (!chains_) throw NotChainPoset("poset is not a disjoint union of chains");
    return chain_pos_[static_cast<std::size_t>(v)];
}

Color Poset::color_of(int v) const {
    return chain_pos(v) % 2 == n_ % 2 ? Color::White : Color::Black;
}

PosetInduced Poset::induced(const Bits& keep) const {
    PosetInduced out;
    out.new_index.assign(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> names;
    std::vector<int> old_of;
    for (auto v = keep.find_first(); v != bits_npos; v = keep.find_next(v)) {
        out.new_index[v] = static_cast<int>(old_of.size());
        old_of.push_back(static_cast<int>(v));
        names.push_back(names_[v]);
    }
    // Feed the restricted strict order; build_indexed re-derives the reduction.
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < old_of.size(); ++a)
        for (std::size_t b = 0; b < old_of.size(); ++b)
            if (a != b && less(old_of[a], old_of[b]))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    out.poset = build_indexed(static_cast<int>(old_of.size()), rel, std::move(names));
    return out;
}

PosetStats poset_stats(const Poset& p) {
    PosetStats s;
    s.height = p.height();
    s.width = p.width();
    for (int v : bits_to_indices(p.minimal_set())) s.minimal.push_back(p.name(v));
    for (int v : bits_to_indices(p.maximal_set())) s.maximal.push_back(p.name(v));
    return s;
}

}  // namespace ppg
