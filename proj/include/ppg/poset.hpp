#pragma once

#include "ppg/bits.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppg {

enum class Color { Black, White };

struct PosetStats {
    int height = 0;   // longest chain, counted in vertices
    int width = 0;    // largest antichain (Dilworth: minimum chain cover)
    std::vector<std::string> minimal;
    std::vector<std::string> maximal;
};

struct PosetInduced;

// Finite poset over densely indexed vertices.  Construction computes the
// reachability closure eagerly and canonicalizes the cover relation to the
// transitive reduction, so redundant input edges are harmless.
class Poset {
public:
    Poset() = default;

    // Throws DuplicateVertex / UnknownVertex / CycleDetected.
    static Poset build(const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& covers);
    // covers are (smaller, greater) index pairs; names optional (defaults v0, v1, ...).
    static Poset build_indexed(int n, const std::vector<std::pair<int, int>>& covers,
                               std::vector<std::string> names = {});

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    int index_of(const std::string& name) const;  // throws UnknownVertex

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    // {w : v <= w} and {w : w <= v}, both including v.
    const Bits& up_set(int v) const { return up_[static_cast<std::size_t>(v)]; }
    const Bits& down_set(int v) const { return down_[static_cast<std::size_t>(v)]; }
    Bits strict_down(int v) const;

    // Transitive reduction, each pair (smaller, greater), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& cover_preds(int v) const { return preds_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& cover_succs(int v) const { return succs_[static_cast<std::size_t>(v)]; }

    int height() const { return height_; }
    int width() const { return width_; }
    const Bits& minimal_set() const { return minimal_; }
    const Bits& maximal_set() const { return maximal_; }

    // p(x) = |X| - |{y : y >= x}|, the number of vertices claimable without
    // ever freeing x.
    int p_value(int v) const { return n_ - static_cast<int>(up_[static_cast<std::size_t>(v)].count()); }

    // Chains listed top-to-bottom; chains ordered by their smallest vertex
    // index.  Empty optional when some vertex has two cover-neighbors on a
    // side, i.e. the poset is not a disjoint union of chains.
    const std::optional<std::vector<std::vector<int>>>& chain_decomposition() const { return chains_; }

    // Position of v in its chain, 1-based from the top.  Requires a chain poset.
    int chain_of(int v) const;
    int chain_pos(int v) const;
    Color color_of(int v) const;  // white iff chain_pos(v) == |X| (mod 2)

    PosetInduced induced(const Bits& keep) const;

private:
    void finalize();  // closure given, fills reduction/stats/chains

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<Bits> up_, down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> preds_, succs_;
    int height_ = 0, width_ = 0;
    Bits minimal_, maximal_;
    std::optional<std::vector<std::vector<int>>> chains_;
    std::vector<int> chain_of_, chain_pos_;  // valid when chains_ set
};

struct PosetInduced {
    Poset poset;
    std::vector<int> new_index;  // old index -> new index, -1 if dropped
};

PosetStats poset_stats(const Poset& p);

}  // namespace ppg
