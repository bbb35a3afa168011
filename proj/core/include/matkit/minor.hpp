#ifndef MATKIT_MINOR_HPP
#define MATKIT_MINOR_HPP

#include <map>
#include <optional>
#include <string>

#include "matkit/matroid.hpp"
#include "matkit/represent.hpp"

namespace matkit {

/// Certificate of an isomorphic-minor claim: host / contracted \ deleted,
/// relabeled by `map`, equals the pattern. Witnesses are re-validated before
/// they are returned.
struct MinorWitness {
    std::vector<std::string> deleted;
    std::vector<std::string> contracted;
    std::map<std::string, std::string> map;  // surviving host label -> pattern label
};

struct MinorResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<MinorWitness> witness;
    std::uint64_t nodes = 0;

    bool present() const { return status == SearchStatus::present; }
};

struct MinorQuery {
    Matroid host;
    Matroid pattern;
    Mask must_use = 0;  // host positions every witness must keep
    std::uint64_t budget = kDefaultSearchBudget;
};

/// Isomorphic-minor containment. Contract sets are independent and scanned
/// smallest-label-first, then co-independent delete sets; candidate minors
/// are screened by cheap fingerprints before canonical comparison, so the
/// first witness in that order is returned deterministically.
MinorResult has_minor(const Matroid& host, const Matroid& pattern,
                      std::uint64_t budget = kDefaultSearchBudget);

/// has_minor restricted to witnesses whose surviving ground set contains
/// every element of must_use.
MinorResult has_minor_using(const MinorQuery& q);

/// has_minor with the arguments flipped, for call sites that read better
/// this way.
MinorResult is_minor_of(const Matroid& pattern, const Matroid& host,
                        std::uint64_t budget = kDefaultSearchBudget);

/// Re-applies a witness and checks it reproduces the pattern exactly.
bool validate_witness(const Matroid& host, const Matroid& pattern,
                      const MinorWitness& w);

enum class Tri { yes, no, budget };

/// Excluded-minor test: no U(2,4)-minor.
Tri is_binary(const Matroid& m, std::uint64_t budget = kDefaultSearchBudget);
/// Excluded-minor test over {U(2,5), U(3,5), F7, F7*}.
Tri is_ternary(const Matroid& m, std::uint64_t budget = kDefaultSearchBudget);
/// Representability search over GF(4); no excluded-minor shortcut.
Tri is_quaternary(const Matroid& m, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace matkit

#endif
