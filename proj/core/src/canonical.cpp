#include "matkit/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "matroid_impl.hpp"

namespace matkit {

namespace {

// Per-element fingerprint; isomorphic matroids have equal fingerprint
// multisets, so restricting the search to fingerprint-order-preserving
// permutations keeps the form canonical while cutting the n! blowup.
struct ElementClass {
    std::vector<int> key;
    std::vector<int> members;  // old positions, ascending
};

std::vector<ElementClass> refine_elements(const Matroid& m) {
    const int n = m.size();
    const Mask loops = m.loops();
    const Mask coloops = m.coloops();

    std::vector<int> pclass_size(n, 0);
    for (Mask cls : m.parallel_classes())
        for_each_bit(cls, [&](int e) { pclass_size[e] = popcount(cls); });

    std::vector<std::vector<int>> keys(n);
    const auto& circuits = m.circuits();
    const auto& cocircuits = m.cocircuits();
    for (int e = 0; e < n; ++e) {
        std::vector<int>& k = keys[e];
        k.push_back((loops >> e) & 1);
        k.push_back((coloops >> e) & 1);
        k.push_back(pclass_size[e]);
        int tri = 0, tria = 0;
        std::vector<int> dist(n + 1, 0);
        for (Mask c : circuits)
            if (c & bit(e)) {
                ++dist[popcount(c)];
                if (popcount(c) == 3) ++tri;
            }
        for (Mask c : cocircuits)
            if ((c & bit(e)) && popcount(c) == 3) ++tria;
        k.push_back(tri);
        k.push_back(tria);
        k.insert(k.end(), dist.begin(), dist.end());
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return keys[a] < keys[b]; });

    std::vector<ElementClass> classes;
    for (int e : order) {
        if (classes.empty() || classes.back().key != keys[e]) {
            classes.push_back({keys[e], {}});
        }
        classes.back().members.push_back(e);
    }
    return classes;
}

// Branch-and-bound minimization of the permuted rank table, read as a byte
// string over masks 1..2^n-1 in ascending value. Assigning canonical
// position k determines exactly the masks in [2^k, 2^(k+1)), which is what
// makes prefix pruning possible. `best` doubles as the incumbent: improved
// prefixes are written through immediately with 0xFF fill so that sibling
// branches prune against them.
struct CanonSearch {
    const std::uint8_t* rank_table;
    int n;
    std::vector<int> class_of_position;   // position -> class index
    std::vector<std::vector<int>> class_members;
    std::vector<bool> used;
    std::vector<Mask> oldmask;            // oldmask[new_mask], filled per path
    std::vector<int> perm;                // new position -> old position
    std::vector<std::uint8_t> best;
    std::vector<int> best_perm;

    void run() {
        const std::size_t sz = std::size_t{1} << n;
        oldmask.assign(sz, 0);
        best.assign(sz, 0xFF);
        perm.assign(n, -1);
        used.assign(n, false);
        dfs(0);
    }

    void dfs(int k) {
        if (k == n) {
            best_perm = perm;
            return;
        }
        for (int cand : class_members[class_of_position[k]]) {
            if (used[cand]) continue;
            // Extend the prefix and compare the newly determined chunk.
            const Mask lo = Mask{1} << k;
            const Mask cb = bit(cand);
            bool pruned = false;
            bool improved = false;
            for (Mask low = 0; low < lo; ++low) {
                Mask om = oldmask[low] | cb;
                oldmask[lo | low] = om;
                std::uint8_t v = rank_table[om];
                std::uint8_t& b = best[lo | low];
                if (improved) {
                    b = v;
                } else if (v < b) {
                    improved = true;
                    b = v;
                } else if (v > b) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            if (improved) {
                // Invalidate the remainder of the incumbent.
                const std::size_t sz = std::size_t{1} << n;
                std::fill(best.begin() + (std::size_t{lo} << 1), best.begin() + sz, 0xFF);
            }
            used[cand] = true;
            perm[k] = cand;
            dfs(k + 1);
            used[cand] = false;
        }
    }
};

void compute_canonical(const Matroid& m) {
    const auto& impl = m.impl();
    impl.ensure_tables();
    const int n = m.size();

    auto classes = refine_elements(m);

    CanonSearch s;
    s.rank_table = impl.rank_table.data();
    s.n = n;
    s.class_of_position.resize(n);
    int pos = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        s.class_members.push_back(classes[ci].members);
        for (std::size_t j = 0; j < classes[ci].members.size(); ++j)
            s.class_of_position[pos++] = static_cast<int>(ci);
    }
    s.run();

    // Emit the basis list of the canonically relabeled matroid: compact,
    // and still a complete invariant since bases determine the rank table.
    std::vector<int> old_to_new(n);
    for (int k = 0; k < n; ++k) old_to_new[s.best_perm[k]] = k;
    std::vector<Mask> canon_bases;
    canon_bases.reserve(impl.bases.size());
    for (Mask b : impl.bases) {
        Mask nb = 0;
        for_each_bit(b, [&](int o) { nb |= bit(old_to_new[o]); });
        canon_bases.push_back(nb);
    }
    std::sort(canon_bases.begin(), canon_bases.end());

    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(n));
    bytes.push_back(static_cast<std::uint8_t>(m.rank()));
    for (Mask b : canon_bases) {
        bytes.push_back(static_cast<std::uint8_t>(b & 0xFF));
        bytes.push_back(static_cast<std::uint8_t>((b >> 8) & 0xFF));
    }
    impl.canon_bytes = std::move(bytes);
    impl.canon_new_to_old = std::move(s.best_perm);
}

}  // namespace

CanonicalForm canonical_form(const Matroid& m) {
    const auto& impl = m.impl();
    std::call_once(impl.canon_once, [&] { compute_canonical(m); });
    return CanonicalForm{impl.canon_bytes, impl.canon_new_to_old};
}

std::string canonical_key(const Matroid& m) {
    const auto& impl = m.impl();
    std::call_once(impl.canon_once, [&] { compute_canonical(m); });
    return std::string(impl.canon_bytes.begin(), impl.canon_bytes.end());
}

std::optional<std::map<std::string, std::string>> is_isomorphic(const Matroid& a,
                                                                const Matroid& b) {
    if (a.size() != b.size() || a.rank() != b.rank() ||
        a.bases().size() != b.bases().size())
        return std::nullopt;
    if (canonical_key(a) != canonical_key(b)) return std::nullopt;

    const auto& pa = a.impl().canon_new_to_old;
    const auto& pb = b.impl().canon_new_to_old;
    std::map<std::string, std::string> out;
    for (int k = 0; k < a.size(); ++k)
        out[a.ground().label(pa[k])] = b.ground().label(pb[k]);
    return out;
}

}  // namespace matkit
