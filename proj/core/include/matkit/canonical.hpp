#ifndef MATKIT_CANONICAL_HPP
#define MATKIT_CANONICAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matkit/matroid.hpp"

namespace matkit {

struct CanonicalForm {
    /// Equal byte sequences exactly when the matroids are isomorphic.
    std::vector<std::uint8_t> bytes;
    /// One optimal relabeling: canonical position k holds old position
    /// new_to_old[k].
    std::vector<int> new_to_old;
};

/// Canonical form of a matroid, invariant under any relabeling. Elements are
/// first partitioned by isomorphism-invariant fingerprints (loop/coloop
/// status, parallel-class size, triangle/triad membership, circuit-size
/// distribution); a branch-and-bound search then minimizes the relabeled
/// rank table over the permutations compatible with that partition.
/// Cached per matroid value.
CanonicalForm canonical_form(const Matroid& m);

/// Short hashable key for dedup maps.
std::string canonical_key(const Matroid& m);

/// A label bijection carrying bases of a onto bases of b, if one exists.
std::optional<std::map<std::string, std::string>> is_isomorphic(const Matroid& a,
                                                                const Matroid& b);

}  // namespace matkit

#endif
