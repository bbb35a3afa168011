#ifndef MATKIT_VERIFIER_HPP
#define MATKIT_VERIFIER_HPP

#include <map>
#include <string>
#include <vector>

#include "matkit/catalog.hpp"
#include "matkit/matroid.hpp"
#include "matkit/report.hpp"
#include "matkit/represent.hpp"

namespace matkit {

struct VerifierConfig {
    std::uint64_t budget = kDefaultSearchBudget;
    int jobs = 1;
    /// Minimum hypothesis-satisfying instances needed per claim for the
    /// overall run to count as covered; per-claim overrides win.
    int default_min_nonvacuous = 3;
    std::map<std::string, int> min_nonvacuous;
    /// Cap on (M, L, N0) triples assembled for the squished-minor lemma.
    int max_squished_triples = 9;
};

/// Claims replayed by the verifier, in execution order.
const std::vector<std::string>& verifier_claims();

// Each verify_* replays one statement over the pool; one report per
// instance (or per triple for the squished-minor lemma).
std::vector<VerificationReport> verify_thm_seymour(const std::vector<PoolEntry>& pool,
                                                   const VerifierConfig& cfg);
std::vector<VerificationReport> verify_thm_main(const std::vector<PoolEntry>& pool,
                                                const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_u25_u35(const std::vector<PoolEntry>& pool,
                                                   const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_deletable_point(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_f7_f7star(const std::vector<PoolEntry>& pool,
                                                     const VerifierConfig& cfg);

/// Lemma 3.1 on one (M, L, N0) triple. Throws HypothesisViolated unless M is
/// simple and 3-connected, L a modular line with at least 4 points, and N0 a
/// simple 3-connected minor of M.
VerificationReport verify_lem_squished(const Matroid& m, Mask line, const Matroid& n0,
                                       const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_squished_pool(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);

std::vector<VerificationReport> verify_lem_fano_line(const std::vector<PoolEntry>& pool,
                                                     const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_fano_no_extension(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_no_u26(const std::vector<PoolEntry>& pool,
                                                  const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_no_u46(const std::vector<PoolEntry>& pool,
                                                  const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_p6_rank4(const std::vector<PoolEntry>& pool,
                                                    const VerifierConfig& cfg);
std::vector<VerificationReport> verify_lem_p6_gives_nonfano(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);
std::vector<VerificationReport> verify_prop_ternary_or_quaternary(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);

/// Dispatch by claim name ("thm-1", "lem-2.1", ..., "prop-5.9").
std::vector<VerificationReport> run_claim(const std::string& claim,
                                          const std::vector<PoolEntry>& pool,
                                          const VerifierConfig& cfg);

struct ClaimSummary {
    std::string claim;
    int pass = 0, fail = 0, vacuous = 0, budget = 0;
    int required_nonvacuous = 0;
    bool coverage_ok = true;

    int nonvacuous() const { return pass + fail + budget; }
};

struct RunSummary {
    std::vector<VerificationReport> reports;
    std::vector<ClaimSummary> claims;
    /// 0 all pass, 1 any fail, 2 budget exceeded anywhere, 3 insufficient
    /// non-vacuous coverage.
    int exit_code = 0;
};

RunSummary run_all(const std::vector<PoolEntry>& pool, const VerifierConfig& cfg);

}  // namespace matkit

#endif
