#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using matkit::bit;
using matkit::for_each_bit;
using matkit::full_mask;
using matkit::popcount;

bool independent(const RawMatroid& m, Mask x) {
    for (Mask b : m.bases)
        if ((x & b) == x) return true;
    return false;
}

int rank(const RawMatroid& m, Mask x) {
    int best = 0;
    for (Mask sub = x;; sub = (sub - 1) & x) {
        if (independent(m, sub)) best = std::max(best, popcount(sub));
        if (sub == 0) break;
    }
    return best;
}

Mask closure(const RawMatroid& m, Mask x) {
    Mask cl = x;
    const int rx = rank(m, x);
    for (int e = 0; e < m.n; ++e)
        if (!(x & bit(e)) && rank(m, x | bit(e)) == rx) cl |= bit(e);
    return cl;
}

std::vector<Mask> circuits(const RawMatroid& m) {
    std::vector<Mask> out;
    for (Mask c = 1; c < (Mask{1} << m.n); ++c) {
        if (independent(m, c)) continue;
        bool minimal = true;
        for_each_bit(c, [&](int e) {
            if (!independent(m, c & ~bit(e))) minimal = false;
        });
        if (minimal) out.push_back(c);
    }
    return out;
}

std::vector<Mask> cocircuits(const RawMatroid& m) {
    RawMatroid dual{m.n, {}};
    const Mask fm = full_mask(m.n);
    for (Mask b : m.bases) dual.bases.push_back(fm & ~b);
    return circuits(dual);
}

std::vector<Mask> circuit_hyperplanes(const RawMatroid& m) {
    const int r = rank(m, full_mask(m.n));
    std::vector<Mask> out;
    for (Mask c : circuits(m))
        if (rank(m, c) == r - 1 && closure(m, c) == c) out.push_back(c);
    return out;
}

int count_triangles(const RawMatroid& m) {
    int t = 0;
    for (Mask c : circuits(m))
        if (popcount(c) == 3) ++t;
    return t;
}

int count_lines_with_points(const RawMatroid& m, int points) {
    std::vector<Mask> pts;
    for (Mask x = 1; x < (Mask{1} << m.n); ++x)
        if (rank(m, x) == 1 && closure(m, x) == x) pts.push_back(x);
    int count = 0;
    for (Mask x = 1; x < (Mask{1} << m.n); ++x) {
        if (rank(m, x) != 2 || closure(m, x) != x) continue;
        int inside = 0;
        for (Mask p : pts)
            if ((p & x) == p) ++inside;
        if (inside >= points) ++count;
    }
    return count;
}

std::optional<std::vector<int>> brute_force_isomorphism(const RawMatroid& a,
                                                        const RawMatroid& b) {
    if (a.n != b.n || a.bases.size() != b.bases.size()) return std::nullopt;
    std::vector<Mask> bb = b.bases;
    std::sort(bb.begin(), bb.end());
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Mask basis : a.bases) {
            Mask image = 0;
            for_each_bit(basis, [&](int e) { image |= bit(perm[e]); });
            if (!std::binary_search(bb.begin(), bb.end(), image)) {
                ok = false;
                break;
            }
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

RawMatroid from_matroid(const matkit::Matroid& m) {
    return RawMatroid{m.size(), m.bases()};
}

namespace {

int det_mod_p(int p, std::vector<std::vector<int>> m) {
    const int n = static_cast<int>(m.size());
    long long det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] % p != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c] % p;
        long long inv = 1, base = ((m[c][c] % p) + p) % p;
        for (int e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        for (int r = c + 1; r < n; ++r) {
            long long f = ((m[r][c] % p) + p) % p * inv % p;
            for (int cc = c; cc < n; ++cc)
                m[r][cc] = static_cast<int>(
                    (((m[r][cc] - f * m[c][cc]) % p) + static_cast<long long>(p) * p) % p);
        }
    }
    return static_cast<int>(((det % p) + p) % p);
}

}  // namespace

RawMatroid from_prime_matrix(int p, const std::vector<std::vector<int>>& entries) {
    const int rows = static_cast<int>(entries.size());
    const int cols = static_cast<int>(entries[0].size());
    RawMatroid out{cols, {}};
    matkit::for_each_subset_of_size(full_mask(cols), rows, [&](Mask sel) {
        std::vector<std::vector<int>> sq(rows, std::vector<int>(rows));
        int c = 0;
        for_each_bit(sel, [&](int col) {
            for (int r = 0; r < rows; ++r) sq[r][c] = entries[r][col];
            ++c;
        });
        if (det_mod_p(p, sq) != 0) out.bases.push_back(sel);
    });
    std::sort(out.bases.begin(), out.bases.end());
    return out;
}

RawMatroid fano_raw() {
    // columns 001,010,011,100,101,110,111 (the pg_points(3,2) order)
    std::vector<std::vector<int>> m(3, std::vector<int>(7));
    const int cols[7][3] = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0},
                            {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
    for (int c = 0; c < 7; ++c)
        for (int r = 0; r < 3; ++r) m[r][c] = cols[c][r];
    return from_prime_matrix(2, m);
}

RawMatroid s5612_raw() {
    const std::vector<std::vector<int>> a = {
        {0, 1, 1, 1, 1, 1},
        {1, 0, 1, -1, -1, 1},
        {1, 1, 0, 1, -1, -1},
        {1, -1, 1, 0, 1, -1},
        {1, -1, -1, 1, 0, 1},
        {1, 1, -1, -1, 1, 0}};
    std::vector<std::vector<int>> m(6, std::vector<int>(12, 0));
    for (int r = 0; r < 6; ++r) {
        m[r][r] = 1;
        for (int c = 0; c < 6; ++c) m[r][6 + c] = ((a[r][c] % 3) + 3) % 3;
    }
    return from_prime_matrix(3, m);
}

}  // namespace oracle
