#ifndef MATKIT_CONNECTIVITY_HPP
#define MATKIT_CONNECTIVITY_HPP

#include <utility>

#include "matkit/matroid.hpp"
#include "matkit/report.hpp"

namespace matkit {

enum class SeparationKind { separation, linking_minimizer };

struct SeparationReport {
    Mask side = 0;
    int order = 0;  // lambda of `side`
    SeparationKind kind = SeparationKind::separation;
};

/// lambda_M(X) = r(X) + r(E - X) - r(M).
int lambda(const Matroid& m, Mask x);

/// Local connectivity of S and T: r(S) + r(T) - r(S u T).
int local_connectivity(const Matroid& m, Mask s, Mask t);

/// Two sets are skew when their local connectivity is zero.
bool is_skew(const Matroid& m, Mask a, Mask b);

/// kappa_M(S, T) = min lambda(A) over S <= A <= E - T, with a witnessing
/// minimizer. The scan walks the 2^(n-|S|-|T|) admissible sets in ascending
/// population count, label-lexicographic within equal count, and returns the
/// first minimizer. S and T must be disjoint and nonempty.
std::pair<int, SeparationReport> kappa(const Matroid& m, Mask s, Mask t);

/// k in {2, 3}; "2-connected" means connected. True iff there is no
/// j-separation for any j < k.
bool is_k_connected(const Matroid& m, int k);

/// Checks, for every e outside S u T, that deleting or contracting e
/// preserves kappa(S, T). A fail verdict indicates a kernel bug, never an
/// accepted outcome; vacuous when S u T covers the ground set.
VerificationReport verify_tutte_linking(const Matroid& m, Mask s, Mask t);

}  // namespace matkit

#endif
