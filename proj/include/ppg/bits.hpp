#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace ppg {

// Vertex sets are bitsets over dense vertex indices.
using Bits = boost::dynamic_bitset<>;

inline constexpr std::size_t bits_npos = Bits::npos;

inline std::vector<int> bits_to_indices(const Bits& b) {
    std::vector<int> out;
    for (auto v = b.find_first(); v != bits_npos; v = b.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

inline Bits bits_of(std::size_t n, std::initializer_list<int> idx) {
    Bits b(n);
    for (int i : idx) b.set(static_cast<std::size_t>(i));
    return b;
}

}  // namespace ppg
