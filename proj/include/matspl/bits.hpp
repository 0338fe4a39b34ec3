#pragma once

#include <bit>
#include <cstdint>

namespace matspl {

// Subsets of a ground set are n-bit masks; bit i stands for the i-th label.
using Mask = std::uint32_t;

inline int popcount(Mask x) { return std::popcount(x); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Compress the bits of x that lie in sel into a contiguous low mask.
inline Mask compress_bits(Mask x, Mask sel) {
    Mask out = 0;
    int k = 0;
    while (sel) {
        Mask bit = sel & (0u - sel);
        if (x & bit) out |= Mask{1} << k;
        ++k;
        sel ^= bit;
    }
    return out;
}

// Scatter the low bits of x into the positions of sel.
inline Mask expand_bits(Mask x, Mask sel) {
    Mask out = 0;
    int k = 0;
    while (sel) {
        Mask bit = sel & (0u - sel);
        if (x & (Mask{1} << k)) out |= bit;
        ++k;
        sel ^= bit;
    }
    return out;
}

// Visits every submask of set, including 0 and set itself.
template <class F>
void for_each_subset(Mask set, F&& f) {
    Mask s = set;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & set;
    }
}

}  // namespace matspl
