#ifndef MATKIT_REPRESENT_HPP
#define MATKIT_REPRESENT_HPP

#include <cstdint>
#include <optional>

#include "matkit/matrix.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

/// Searches carry an explicit node budget so that "gave up" is never
/// conflated with "does not exist".
enum class SearchStatus { present, absent, budget_exceeded };

constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct RepresentResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<MatrixRep> matrix;
    std::uint64_t nodes = 0;
};

/// One representative column vector per point of PG(rank-1, q): first
/// nonzero coordinate equal to 1, listed in lexicographic coordinate order.
std::vector<std::vector<std::uint8_t>> pg_points(int rank, int q);

/// Backtracking search for a GF(q)-representation of m. A lexicographically
/// least basis is pinned to an identity block; the support of every other
/// column is forced by the fundamental-cocircuit pattern, and a spanning
/// forest of the row/column scaling action pins one entry per fresh degree
/// of freedom to 1 before any values are enumerated.
RepresentResult is_representable(const Matroid& m, int q,
                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace matkit

#endif
