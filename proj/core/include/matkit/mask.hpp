#ifndef MATKIT_MASK_HPP
#define MATKIT_MASK_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace matkit {

/// A subset of a ground set of at most 16 elements, one bit per position.
/// Masks are the universal currency of every set computation in the kernel;
/// only the low n bits of a mask may be set for a ground set of size n.
using Mask = std::uint32_t;

constexpr int kMaxGroundSize = 16;

constexpr Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }
constexpr Mask bit(int i) { return Mask{1} << i; }

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// Visits the set bits of m in ascending position order.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
    while (m) {
        int i = std::countr_zero(m);
        f(i);
        m &= m - 1;
    }
}

inline std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return out;
}

/// Next k-subset in colex-free "same popcount" order (Gosper's hack).
/// Returns 0 when the enumeration over [0, 2^n) is exhausted.
inline Mask next_same_popcount(Mask v, int n) {
    Mask c = v & (~v + 1);
    Mask r = v + c;
    Mask next = (((r ^ v) >> 2) / c) | r;
    return (next < full_mask(n) + 1u && next > v) ? next : 0;
}

/// Visits all subsets of `universe` with exactly k bits, lexicographically
/// by ascending element list (smallest member first).
template <typename F>
inline void for_each_subset_of_size(Mask universe, int k, F&& f) {
    std::vector<int> pos = bits_of(universe);
    int n = static_cast<int>(pos.size());
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(Mask{0});
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= bit(pos[i]);
        f(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Visits all subsets of `universe` (including 0 and universe itself),
/// ascending by popcount and numerically within equal popcount.
template <typename F>
inline void for_each_subset_by_size(Mask universe, F&& f) {
    int n = popcount(universe);
    for (int k = 0; k <= n; ++k) for_each_subset_of_size(universe, k, f);
}

}  // namespace matkit

#endif
