#include "matkit/represent.hpp"

#include <algorithm>
#include <numeric>

namespace matkit {

std::vector<std::vector<std::uint8_t>> pg_points(int rank, int q) {
    const FiniteField& f = gf(q);
    (void)f;
    if (rank < 0) throw BadParameters("negative rank");
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> v(rank, 0);
    // Lexicographic sweep over all q^rank vectors, keeping projective
    // representatives (first nonzero coordinate = 1).
    while (true) {
        int first = -1;
        for (int i = 0; i < rank; ++i)
            if (v[i] != 0) { first = i; break; }
        if (first >= 0 && v[first] == 1) out.push_back(v);
        int i = rank - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

struct RepSearch {
    const Matroid& m;
    const FiniteField& f;
    int r;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<int> basis_elems;              // row i <-> basis_elems[i]
    std::vector<int> order;                    // non-basis elements, label order
    std::vector<Mask> support;                 // support[j] as a row mask
    std::vector<Mask> forced_one;              // rows pinned to 1 for column j
    std::vector<std::vector<std::uint8_t>> col; // assigned vectors, by element position
    std::vector<int> assigned;                 // element positions assigned so far

    bool exceeded = false;

    explicit RepSearch(const Matroid& mm, const FiniteField& ff, std::uint64_t b)
        : m(mm), f(ff), r(mm.rank()), budget(b), col(mm.size()) {}

    bool column_check(int elem) {
        // Every r-subset through elem inside the assigned ground must have
        // det != 0 exactly when it is a basis of m.
        Mask ground_assigned = 0;
        for (int e : basis_elems) ground_assigned |= bit(e);
        for (int e : assigned) ground_assigned |= bit(e);
        const Mask eb = bit(elem);
        bool ok = true;
        for_each_subset_of_size(ground_assigned & ~eb, r - 1, [&](Mask rest) {
            if (!ok) return;
            const Mask t = rest | eb;
            std::vector<std::vector<std::uint8_t>> sq(r, std::vector<std::uint8_t>(r));
            int c = 0;
            for_each_bit(t, [&](int e) {
                for (int row = 0; row < r; ++row) sq[row][c] = col[e][row];
                ++c;
            });
            // Inline elimination for the r x r determinant-nonzero test.
            int rk = 0;
            for (int cc = 0; cc < r && rk < r; ++cc) {
                int piv = -1;
                for (int row = rk; row < r; ++row)
                    if (sq[row][cc] != 0) { piv = row; break; }
                if (piv < 0) break;
                std::swap(sq[piv], sq[rk]);
                const std::uint8_t inv = f.inv(sq[rk][cc]);
                for (int row = rk + 1; row < r; ++row) {
                    if (sq[row][cc] == 0) continue;
                    const std::uint8_t factor = f.mul(sq[row][cc], inv);
                    for (int k = cc; k < r; ++k)
                        sq[row][k] = f.sub(sq[row][k], f.mul(factor, sq[rk][k]));
                }
                ++rk;
            }
            const bool nonsingular = (rk == r);
            if (nonsingular != m.is_basis(t)) ok = false;
        });
        return ok;
    }

    bool dfs(std::size_t j) {
        if (j == order.size()) return true;
        const int elem = order[j];
        std::vector<int> free_rows;
        for_each_bit(support[j] & ~forced_one[j], [&](int row) { free_rows.push_back(row); });

        std::vector<std::uint8_t> values(free_rows.size(), 1);
        while (true) {
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            std::vector<std::uint8_t> v(r, 0);
            for_each_bit(forced_one[j], [&](int row) { v[row] = 1; });
            for (std::size_t i = 0; i < free_rows.size(); ++i) v[free_rows[i]] = values[i];
            col[elem] = v;
            assigned.push_back(elem);
            if (column_check(elem) && dfs(j + 1)) return true;
            assigned.pop_back();
            if (exceeded) return false;

            // next value tuple over GF(q)* in lexicographic order
            int i = static_cast<int>(free_rows.size()) - 1;
            while (i >= 0 && values[i] == f.order() - 1) values[i--] = 1;
            if (i < 0) return false;
            ++values[i];
        }
    }
};

}  // namespace

RepresentResult is_representable(const Matroid& m, int q, std::uint64_t budget) {
    const FiniteField& f = gf(q);
    const int r = m.rank();
    const int n = m.size();

    RepresentResult res;

    auto emit = [&](const RepSearch& s) {
        MatrixRep rep;
        rep.q = q;
        rep.rows = r;
        rep.columns = m.ground().labels();
        rep.entries.assign(r, std::vector<std::uint8_t>(n, 0));
        for (int e = 0; e < n; ++e)
            for (int row = 0; row < r; ++row)
                if (!s.col[e].empty()) rep.entries[row][e] = s.col[e][row];
        res.status = SearchStatus::present;
        res.matrix = std::move(rep);
    };

    RepSearch s(m, f, budget);

    // Lexicographically least basis by label becomes the identity block.
    Mask basis_mask = 0;
    for (int p : m.ground().label_sorted_positions()) {
        if (static_cast<int>(s.basis_elems.size()) == r) break;
        if (m.rank(basis_mask | bit(p)) > m.rank(basis_mask)) {
            basis_mask |= bit(p);
            s.basis_elems.push_back(p);
        }
    }
    for (int i = 0; i < r; ++i) {
        s.col[s.basis_elems[i]].assign(r, 0);
        s.col[s.basis_elems[i]][i] = 1;
    }

    for (int p : m.ground().label_sorted_positions())
        if (!(basis_mask & bit(p))) s.order.push_back(p);

    // Forced supports: row i participates exactly when swapping the i-th
    // basis element for the column keeps a basis.
    s.support.resize(s.order.size());
    s.forced_one.resize(s.order.size(), 0);
    for (std::size_t j = 0; j < s.order.size(); ++j) {
        Mask sup = 0;
        for (int i = 0; i < r; ++i) {
            Mask t = (basis_mask & ~bit(s.basis_elems[i])) | bit(s.order[j]);
            if (m.is_basis(t)) sup |= bit(i);
        }
        s.support[j] = sup;
    }

    // Row scalings and column scalings form a torus acting on the entries;
    // a spanning forest of the bipartite support graph is a transversal of
    // that action, so its entries can be pinned to 1 up front.
    UnionFind uf(r + static_cast<int>(s.order.size()));
    for (std::size_t j = 0; j < s.order.size(); ++j) {
        for_each_bit(s.support[j], [&](int row) {
            if (uf.unite(row, r + static_cast<int>(j))) s.forced_one[j] |= bit(row);
        });
    }

    if (s.dfs(0)) {
        emit(s);
    } else {
        res.status = s.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    res.nodes = s.nodes;
    return res;
}

}  // namespace matkit
