#ifndef MATKIT_MODULARITY_HPP
#define MATKIT_MODULARITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matkit/matroid.hpp"
#include "matkit/report.hpp"

namespace matkit {

/// First flat violating r(X) + r(F) = r(X u F) + r(X n F), walking flats by
/// (rank, size, value); nullopt when X is a modular set.
std::optional<Mask> modular_violation(const Matroid& m, Mask x);

bool is_modular_set(const Matroid& m, Mask x);

/// Rank-2 flats that are modular sets. With `points` given, only lines that
/// are the union of exactly that many rank-1 flats are returned ("k-point
/// line" counts points, not elements; these agree in simple matroids).
std::vector<Mask> modular_lines(const Matroid& m);
std::vector<Mask> modular_lines(const Matroid& m, int points);

/// Number of rank-1 flats contained in a set.
int point_count(const Matroid& m, Mask x);

/// Checks the standard persistence properties of a modular set W: W stays
/// modular under deletions, under contractions of elements outside cl(W),
/// elements of cl(W) - W are loops or parallel to W, and modular sets of
/// simple matroids are flats. Throws NotModular unless W is modular in m.
VerificationReport modular_set_minor_property_check(const Matroid& m, Mask w);

/// Circuits that are simultaneously hyperplanes.
std::vector<Mask> circuit_hyperplanes(const Matroid& m);

/// Relaxation: promotes the circuit-hyperplane c to a basis.
Matroid relax(const Matroid& m, Mask c);

/// An upward-closed family of flats closed under modular-pair intersection;
/// the data of a single-element extension.
class ModularCut {
  public:
    /// Validates all three axioms; NotAModularCut carries a violating pair.
    ModularCut(Matroid host, std::vector<Mask> members);

    const Matroid& host() const { return host_; }
    const std::vector<Mask>& members() const { return members_; }
    bool contains(Mask flat) const;
    bool empty() const { return members_.empty(); }

  private:
    Matroid host_;
    std::vector<Mask> members_;  // sorted ascending
};

/// The flats containing at least one generator. Throws NotAModularCut when
/// that filter violates modular-pair closure (the generating family cannot
/// drive a well-defined extension this way).
ModularCut principal_filter_cut(const Matroid& m, const std::vector<Mask>& generators);

/// Smallest modular cut containing all generators: the filter closed under
/// forced modular-pair intersections. Always succeeds (possibly with the
/// cut of all flats, which extends by a loop).
ModularCut modular_cut_closure(const Matroid& m, const std::vector<Mask>& generators);

/// Single-element extension: the new element lands in the closure of
/// exactly the flats of the cut. The new element takes the last position.
Matroid extend(const Matroid& m, const ModularCut& cut, const std::string& label);

/// Generalized parallel connection of m and n across a shared triangle;
/// `t_ident` maps three labels of m onto three labels of n. The triangle
/// must be a modular line of at least one side. Shared elements keep m's
/// labels. The result restricts to m and to n exactly.
Matroid generalized_parallel_connection(
    const Matroid& m, const Matroid& n,
    const std::vector<std::pair<std::string, std::string>>& t_ident);

}  // namespace matkit

#endif
