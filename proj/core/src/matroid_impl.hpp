#ifndef MATKIT_MATROID_IMPL_HPP
#define MATKIT_MATROID_IMPL_HPP

#include <cstdint>
#include <mutex>
#include <vector>

#include "matkit/matroid.hpp"

namespace matkit {

// Shared immutable representation. All caches are filled at most once under
// a once_flag, so const values are safe to share across threads.
struct Matroid::Impl {
    GroundSet ground;
    int rank = 0;
    std::vector<Mask> bases;  // sorted ascending

    Impl(GroundSet g, std::vector<Mask> b);

    int n() const { return ground.size(); }
    Mask full() const { return ground.full(); }

    // rank_table[m] = rank of subset m; built together with the dual table.
    mutable std::once_flag tables_once;
    mutable std::vector<std::uint8_t> rank_table;
    mutable std::vector<std::uint8_t> corank_table;
    mutable std::vector<bool> basis_set;  // indicator over masks
    void ensure_tables() const;

    mutable std::once_flag circuits_once;
    mutable std::vector<Mask> circuits;
    mutable std::vector<Mask> cocircuits;
    void ensure_circuits() const;

    mutable std::once_flag flats_once;
    mutable std::vector<std::vector<Mask>> flats_by_rank;
    mutable std::vector<Mask> flats_all;
    void ensure_flats() const;

    // Canonical form cache, filled by canonical.cpp.
    mutable std::once_flag canon_once;
    mutable std::vector<std::uint8_t> canon_bytes;
    mutable std::vector<int> canon_new_to_old;

    int rk(Mask m) const { return rank_table[m]; }
    bool indep(Mask m) const { return rank_table[m] == popcount(m); }
};

}  // namespace matkit

#endif
