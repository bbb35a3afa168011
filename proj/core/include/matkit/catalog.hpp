#ifndef MATKIT_CATALOG_HPP
#define MATKIT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matkit/matroid.hpp"

namespace matkit {

/// A finite multiplicative group given by its table; axioms are checked.
class GroupTable {
  public:
    GroupTable(int order, std::vector<int> table);
    static GroupTable trivial();
    static GroupTable cyclic(int k);
    static GroupTable klein4();

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int identity() const { return identity_; }

  private:
    int order_;
    int identity_ = -1;
    std::vector<int> table_;
};

// Named matroids. Constructors are deterministic and validate both the
// matroid axioms and the structural facts each construction is used for.
Matroid uniform(int m, int n);
Matroid fano();
Matroid non_fano();
Matroid fano_dual();
Matroid non_fano_dual();
Matroid mk4();  // cycle matroid of K4, built from its 16 spanning trees
Matroid p6();   // six elements, rank 3, one triangle whose complement is a triad
Matroid steiner_s5612();
Matroid p8();
Matroid p8_double_prime();
Matroid dowling_q3(const GroupTable& g);
Matroid binary_spike4();    // tip t, legs {t, xi, yi}, i = 1..4
Matroid relaxed_spike4();   // the spike with the circuit-hyperplane C relaxed
Matroid spike_extension10();
/// Which modular cut realized the ten-element extension ("principal-filter"
/// or "modular-closure").
const std::string& spike_extension10_cut_route();

/// Registry for the CLI and the verifier; memoized per name.
std::vector<std::string> catalog_names();
Matroid catalog_matroid(const std::string& name);
bool is_catalog_name(const std::string& name);

// ---------------------------------------------------------------------------

struct PoolFilter {
    bool simple = false;
    bool three_connected = false;
    int min_size = 1;
    int max_size = kMaxGroundSize;
    std::optional<int> modular_line_points;  // keep only hosts of such a line
};

struct PoolSource {
    enum class Kind { catalog, pg, relaxations, gpc, extensions };
    Kind kind = Kind::catalog;
    // pg: one of "PG(2,2)", "PG(2,3)", "PG(3,2)", "PG(2,4)".
    std::string geometry;
    int min_size = 1;
    int max_size = kMaxGroundSize;
    // relaxations: which earlier kinds to relax ("catalog", "pg", "gpc").
    std::vector<std::string> of;
};

struct PoolSpec {
    std::vector<PoolSource> sources;
    PoolFilter filter;
    std::uint64_t max_candidates_per_source = 1'000'000;
    std::uint64_t seed = 1;
    std::size_t max_results = SIZE_MAX;
};

struct PoolEntry {
    Matroid matroid;
    std::string provenance;
};

/// Deterministic, canonical-form-deduplicated instance stream. Sources are
/// processed in listed order; oversubscribed PG sweeps are thinned by a
/// seeded hash so runs are reproducible. Relaxation sources act on the
/// deduplicated, filtered entries produced by the kinds they name.
std::vector<PoolEntry> generate_pool(const PoolSpec& spec);

}  // namespace matkit

#endif
