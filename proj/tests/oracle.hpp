#ifndef MATKIT_TESTS_ORACLE_HPP
#define MATKIT_TESTS_ORACLE_HPP

// Independent brute-force implementations used to derive expected values
// before they are frozen into tests. Everything here works from raw basis
// lists or raw matrices with local modular arithmetic; none of it calls the
// kernel's rank table, closure, canonical form or search code.

#include <optional>
#include <vector>

#include "matkit/mask.hpp"
#include "matkit/matroid.hpp"

namespace oracle {

using matkit::Mask;

struct RawMatroid {
    int n = 0;
    std::vector<Mask> bases;
};

bool independent(const RawMatroid& m, Mask x);

/// Largest independent subset of x, by direct subset enumeration.
int rank(const RawMatroid& m, Mask x);

Mask closure(const RawMatroid& m, Mask x);

std::vector<Mask> circuits(const RawMatroid& m);
std::vector<Mask> cocircuits(const RawMatroid& m);

/// Circuits that are closed and have rank one less than the matroid.
std::vector<Mask> circuit_hyperplanes(const RawMatroid& m);

int count_triangles(const RawMatroid& m);

/// Rank-2 closed sets holding at least `points` rank-1 closed sets.
int count_lines_with_points(const RawMatroid& m, int points);

/// All n! bijections; usable up to ~8 elements.
std::optional<std::vector<int>> brute_force_isomorphism(const RawMatroid& a,
                                                        const RawMatroid& b);

RawMatroid from_matroid(const matkit::Matroid& m);

/// Basis family of the column matroid of a matrix over GF(p), p prime,
/// via local determinants mod p.
RawMatroid from_prime_matrix(int p, const std::vector<std::vector<int>>& entries);

/// The Fano plane from the seven nonzero GF(2) 3-vectors.
RawMatroid fano_raw();

/// The 12-column GF(3) Steiner-system matrix [I6 | A].
RawMatroid s5612_raw();

}  // namespace oracle

#endif
