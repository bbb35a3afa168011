#include "matkit/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "matkit/canonical.hpp"
#include "matkit/connectivity.hpp"
#include "matkit/matrix.hpp"
#include "matkit/modularity.hpp"
#include "matkit/represent.hpp"

namespace matkit {

GroupTable::GroupTable(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
    if (order < 1 || static_cast<int>(table_.size()) != order * order)
        throw BadParameters("group table has the wrong size");
    for (int v : table_)
        if (v < 0 || v >= order) throw BadParameters("group table entry out of range");
    for (int e = 0; e < order; ++e) {
        bool ident = true;
        for (int a = 0; a < order; ++a)
            if (mul(e, a) != a || mul(a, e) != a) ident = false;
        if (ident) identity_ = e;
    }
    if (identity_ < 0) throw ConstructionFailed("group has no identity");
    for (int a = 0; a < order; ++a) {
        bool has_inv = false;
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) has_inv = true;
        if (!has_inv) throw ConstructionFailed("group element has no inverse");
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ConstructionFailed("group table is not associative");
    }
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int k) {
    std::vector<int> t(k * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
    return GroupTable(k, std::move(t));
}

GroupTable GroupTable::klein4() {
    // xor group on {0,1,2,3}
    std::vector<int> t(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
    return GroupTable(4, std::move(t));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

MatrixRep matrix_of(int q, int rows, std::vector<std::string> labels,
                    std::vector<std::vector<std::uint8_t>> entries) {
    MatrixRep a;
    a.q = q;
    a.rows = rows;
    a.columns = std::move(labels);
    a.entries = std::move(entries);
    validate_matrix(a);
    return a;
}

}  // namespace

Matroid uniform(int m, int n) {
    if (m < 0 || m > n || n < 1 || n > kMaxGroundSize)
        throw BadParameters("uniform matroid needs 0 <= m <= n <= 16");
    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(n), m, [&](Mask b) { bases.push_back(b); });
    return Matroid::unchecked(GroundSet(letter_labels(n)), std::move(bases));
}

Matroid fano() {
    auto pts = pg_points(3, 2);
    std::vector<std::vector<std::uint8_t>> entries(3, std::vector<std::uint8_t>(7));
    for (int c = 0; c < 7; ++c)
        for (int r = 0; r < 3; ++r) entries[r][c] = pts[c][r];
    Matroid f = matroid_from_matrix(matrix_of(2, 3, letter_labels(7), entries));
    validate_matroid(f.ground(), f.bases());
    return f;
}

Matroid non_fano() {
    Matroid f = fano();
    auto chs = circuit_hyperplanes(f);
    if (chs.empty()) throw ConstructionFailed("Fano plane lost its circuit-hyperplanes");
    return relax(f, chs.front());
}

Matroid fano_dual() { return fano().dual(); }
Matroid non_fano_dual() { return non_fano().dual(); }

Matroid mk4() {
    // Edges of K4 on vertices 1..4; bases are the spanning trees.
    const std::vector<std::pair<int, int>> edges = {
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::string> labels;
    for (auto [u, v] : edges)
        labels.push_back(std::to_string(u) + std::to_string(v));
    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(6), 3, [&](Mask m) {
        int parent[5];
        std::iota(parent, parent + 5, 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        for_each_bit(m, [&](int e) {
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a == b) acyclic = false;
            else parent[a] = b;
        });
        if (acyclic) bases.push_back(m);
    });
    if (bases.size() != 16) throw ConstructionFailed("K4 must have 16 spanning trees");
    return Matroid(GroundSet(std::move(labels)), std::move(bases));
}

Matroid p6() {
    const Mask triangle = 0b111;  // {a, b, c}
    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(6), 3, [&](Mask m) {
        if (m != triangle) bases.push_back(m);
    });
    Matroid out(GroundSet(letter_labels(6)), std::move(bases));
    if (out.triangles() != std::vector<Mask>{triangle} ||
        out.triads() != std::vector<Mask>{full_mask(6) & ~triangle})
        throw ConstructionFailed("P6 must have one triangle whose complement is a triad");
    return out;
}

Matroid steiner_s5612() {
    // [ I6 | A ] over GF(3), with -1 written as 2.
    const std::vector<std::vector<int>> a = {
        {0, 1, 1, 1, 1, 1},
        {1, 0, 1, 2, 2, 1},
        {1, 1, 0, 1, 2, 2},
        {1, 2, 1, 0, 1, 2},
        {1, 2, 2, 1, 0, 1},
        {1, 1, 2, 2, 1, 0}};
    std::vector<std::vector<std::uint8_t>> entries(6, std::vector<std::uint8_t>(12, 0));
    for (int r = 0; r < 6; ++r) {
        entries[r][r] = 1;
        for (int c = 0; c < 6; ++c) entries[r][6 + c] = static_cast<std::uint8_t>(a[r][c]);
    }
    Matroid s = matroid_from_matrix(matrix_of(3, 6, letter_labels(12), entries));
    if (s.rank() != 6) throw ConstructionFailed("S(5,6,12) must have rank 6");
    return s;
}

Matroid p8() {
    Matroid s = steiner_s5612();
    const auto& g = s.ground();
    // Delete the first two identity-column labels, contract the next two.
    Mask del = bit(g.position("a")) | bit(g.position("b"));
    Mask con = bit(g.position("c")) | bit(g.position("d"));
    Matroid out = s.minor(con, del);
    validate_matroid(out.ground(), out.bases());
    if (out.size() != 8 || out.rank() != 4)
        throw ConstructionFailed("P8 must have 8 elements and rank 4");
    return out;
}

Matroid p8_double_prime() {
    Matroid m = p8();
    auto chs = circuit_hyperplanes(m);
    std::vector<std::pair<Mask, Mask>> disjoint;
    for (std::size_t i = 0; i < chs.size(); ++i)
        for (std::size_t j = i + 1; j < chs.size(); ++j)
            if (!(chs[i] & chs[j])) disjoint.push_back({chs[i], chs[j]});
    if (disjoint.size() != 1)
        throw ConstructionFailed("P8 must have a unique disjoint circuit-hyperplane pair");
    Matroid once = relax(m, disjoint.front().first);
    return relax(once, disjoint.front().second);
}

Matroid dowling_q3(const GroupTable& g) {
    const int k = g.order();
    if (3 + 3 * k > kMaxGroundSize)
        throw GroupTooLarge("Q3(G) needs 3 + 3|G| <= 16 elements");
    const int n = 3 + 3 * k;

    std::vector<std::string> labels = {"a1", "a2", "a3"};
    for (int i = 1; i <= 3; ++i)
        for (int v = 0; v < k; ++v)
            labels.push_back("g" + std::to_string(i) + "_" + std::to_string(v));
    auto gpos = [&](int i, int v) { return 3 + (i - 1) * k + v; };

    // The defining line list.
    std::vector<Mask> line_list;
    for (int i = 1; i <= 3; ++i) {
        Mask l = 0;
        for (int v = 0; v < k; ++v) l |= bit(gpos(i, v));
        for (int j = 0; j < 3; ++j)
            if (j != i - 1) l |= bit(j);
        line_list.push_back(l);  // G_i together with the other two joints
    }
    for (int i = 1; i <= 3; ++i)
        for (int v = 0; v < k; ++v)
            line_list.push_back(bit(i - 1) | bit(gpos(i, v)));
    for (int v1 = 0; v1 < k; ++v1)
        for (int v2 = 0; v2 < k; ++v2) {
            // g1 * g2 * g3 = 1 fixes g3.
            int prod = g.mul(v1, v2);
            int v3 = -1;
            for (int c = 0; c < k; ++c)
                if (g.mul(prod, c) == g.identity()) v3 = c;
            line_list.push_back(bit(gpos(1, v1)) | bit(gpos(2, v2)) | bit(gpos(3, v3)));
        }

    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(n), 3, [&](Mask m) {
        for (Mask l : line_list)
            if ((m & l) == m) return;
        bases.push_back(m);
    });
    Matroid out(GroundSet(std::move(labels)), std::move(bases));

    // The recomputed rank-2 flats must reproduce the defining list exactly.
    std::vector<Mask> expect = line_list;
    std::sort(expect.begin(), expect.end(), [](Mask x, Mask y) {
        int px = popcount(x), py = popcount(y);
        return px != py ? px < py : x < y;
    });
    if (out.lines() != expect)
        throw ConstructionFailed("Q3(G) line structure does not round-trip");
    if (!out.is_simple() || out.rank() != 3)
        throw ConstructionFailed("Q3(G) must be simple of rank 3");
    return out;
}

namespace {

Mask spike_circuit(const Matroid& s) {
    const auto& g = s.ground();
    return g.mask_of({"x1", "x2", "x3", "y4"});
}

}  // namespace

Matroid binary_spike4() {
    // Tip (1,1,1,1); legs pair e_i with its complement.
    std::vector<std::string> labels = {"t",  "x1", "x2", "x3", "x4",
                                       "y1", "y2", "y3", "y4"};
    std::vector<std::vector<std::uint8_t>> entries(4, std::vector<std::uint8_t>(9, 0));
    for (int r = 0; r < 4; ++r) {
        entries[r][0] = 1;
        for (int i = 0; i < 4; ++i) {
            entries[r][1 + i] = (r == i) ? 1 : 0;
            entries[r][5 + i] = (r == i) ? 0 : 1;
        }
    }
    Matroid s = matroid_from_matrix(matrix_of(2, 4, labels, entries));
    validate_matroid(s.ground(), s.bases());

    const auto& g = s.ground();
    for (int i = 1; i <= 4; ++i) {
        Mask leg = g.mask_of({"t", "x" + std::to_string(i), "y" + std::to_string(i)});
        if (s.rank(leg) != 2 || s.is_independent(leg))
            throw ConstructionFailed("spike leg is not a triangle");
    }
    const Mask c = spike_circuit(s);
    auto chs = circuit_hyperplanes(s);
    if (std::find(chs.begin(), chs.end(), c) == chs.end())
        throw ConstructionFailed("designated spike circuit is not a circuit-hyperplane");
    for (int i = 1; i <= 4; ++i) {
        Mask leg = g.mask_of({"x" + std::to_string(i), "y" + std::to_string(i)});
        if (!(c & leg)) throw ConstructionFailed("spike circuit misses a leg");
    }
    return s;
}

Matroid relaxed_spike4() {
    Matroid s = binary_spike4();
    return relax(s, spike_circuit(s));
}

namespace {

struct SpikeExtension {
    Matroid matroid;
    std::string route;
};

SpikeExtension build_spike_extension(int leg) {
    Matroid m = relaxed_spike4();
    const auto& g = m.ground();
    const std::string xs = "x" + std::to_string(leg);
    const std::string ys = "y" + std::to_string(leg);
    const Mask leg_line = m.closure(g.mask_of({"t", xs, ys}));
    const Mask c = spike_circuit(m);
    const Mask in_c = c & g.mask_of({xs, ys});
    const Mask rest = m.closure(c & ~in_c);

    SpikeExtension out{m, ""};
    try {
        ModularCut cut = principal_filter_cut(m, {leg_line, rest});
        out.matroid = extend(m, cut, "e");
        out.route = "principal-filter";
    } catch (const NotAModularCut&) {
        ModularCut cut = modular_cut_closure(m, {leg_line, rest});
        out.matroid = extend(m, cut, "e");
        out.route = "modular-closure";
    }

    const auto& eg = out.matroid.ground();
    const Mask line = eg.mask_of({"t", xs, ys, "e"});
    auto mod4 = modular_lines(out.matroid, 4);
    if (std::find(mod4.begin(), mod4.end(), line) == mod4.end())
        throw ConstructionFailed("spike extension lost its modular 4-point line");
    if (!is_k_connected(out.matroid, 3))
        throw ConstructionFailed("spike extension is not 3-connected");
    return out;
}

const SpikeExtension& spike_extension_cached() {
    static const SpikeExtension ext = build_spike_extension(4);
    return ext;
}

}  // namespace

Matroid spike_extension10() { return spike_extension_cached().matroid; }

const std::string& spike_extension10_cut_route() {
    return spike_extension_cached().route;
}

// ---------------------------------------------------------------------------

namespace {

using Builder = std::function<Matroid()>;

const std::vector<std::pair<std::string, Builder>>& builders() {
    static const std::vector<std::pair<std::string, Builder>> list = {
        {"u24", [] { return uniform(2, 4); }},
        {"u25", [] { return uniform(2, 5); }},
        {"u35", [] { return uniform(3, 5); }},
        {"u26", [] { return uniform(2, 6); }},
        {"u36", [] { return uniform(3, 6); }},
        {"u46", [] { return uniform(4, 6); }},
        {"fano", fano},
        {"nonfano", non_fano},
        {"fano-dual", fano_dual},
        {"nonfano-dual", non_fano_dual},
        {"mk4", mk4},
        {"p6", p6},
        {"p8", p8},
        {"p8pp", p8_double_prime},
        {"s5612", steiner_s5612},
        {"dowling-trivial", [] { return dowling_q3(GroupTable::trivial()); }},
        {"dowling-z2", [] { return dowling_q3(GroupTable::cyclic(2)); }},
        {"dowling-z3", [] { return dowling_q3(GroupTable::cyclic(3)); }},
        {"dowling-z4", [] { return dowling_q3(GroupTable::cyclic(4)); }},
        {"dowling-v4", [] { return dowling_q3(GroupTable::klein4()); }},
        {"spike4", binary_spike4},
        {"spike4-relaxed", relaxed_spike4},
        {"spike10", spike_extension10},
    };
    return list;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : builders()) out.push_back(name);
    return out;
}

bool is_catalog_name(const std::string& name) {
    for (const auto& [n, fn] : builders())
        if (n == name) return true;
    return false;
}

Matroid catalog_matroid(const std::string& name) {
    static std::map<std::string, Matroid> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(name);
    if (it != memo.end()) return it->second;
    for (const auto& [n, fn] : builders())
        if (n == name) {
            Matroid m = fn();
            memo.emplace(name, m);
            return m;
        }
    throw BadParameters("unknown catalog name: " + name);
}

// ---------------------------------------------------------------------------
// Pool generation

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
    return x ^ (x >> 31);
}

struct PgGeometry {
    int q;
    int rank;
    int n_points;
};

bool pg_lookup(const std::string& name, PgGeometry& out) {
    if (name == "PG(2,2)") { out = {2, 3, 7}; return true; }
    if (name == "PG(2,3)") { out = {3, 3, 13}; return true; }
    if (name == "PG(3,2)") { out = {2, 4, 15}; return true; }
    if (name == "PG(2,4)") { out = {4, 3, 21}; return true; }
    return false;
}

std::vector<std::string> pg_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        std::ostringstream s;
        s << "p" << (i < 10 ? "0" : "") << i;
        out.push_back(s.str());
    }
    return out;
}

bool passes_filter(const Matroid& m, const PoolFilter& f) {
    if (m.size() < f.min_size || m.size() > f.max_size) return false;
    if (f.simple && !m.is_simple()) return false;
    if (f.three_connected && !is_k_connected(m, 3)) return false;
    if (f.modular_line_points && modular_lines(m, *f.modular_line_points).empty())
        return false;
    return true;
}

struct PoolBuilder {
    const PoolSpec& spec;
    std::vector<PoolEntry> entries;
    std::set<std::string> seen;
    std::map<std::string, std::vector<std::size_t>> by_kind;  // entry indices

    explicit PoolBuilder(const PoolSpec& s) : spec(s) {}

    bool full() const { return entries.size() >= spec.max_results; }

    void offer(const std::string& kind, Matroid m, std::string provenance) {
        if (full()) return;
        if (!passes_filter(m, spec.filter)) return;
        std::string key = canonical_key(m);
        if (!seen.insert(key).second) return;
        by_kind[kind].push_back(entries.size());
        entries.push_back(PoolEntry{std::move(m), std::move(provenance)});
    }

    void add_catalog() {
        for (const auto& name : catalog_names()) {
            std::string prov = "catalog:" + name;
            if (name == "spike10")
                prov += "(cut=" + spike_extension10_cut_route() + ")";
            offer("catalog", catalog_matroid(name), prov);
        }
    }

    void add_pg(const PoolSource& src) {
        PgGeometry geo;
        if (!pg_lookup(src.geometry, geo))
            throw BadSpec("unknown geometry: " + src.geometry);
        int lo = std::max({src.min_size, spec.filter.min_size, 1});
        int hi = std::min({src.max_size, spec.filter.max_size, geo.n_points});
        if (geo.n_points > kMaxGroundSize) hi = std::min(hi, 10);
        if (lo > hi) return;

        // Candidate volume for deterministic thinning.
        double total = 0;
        for (int k = lo; k <= hi; ++k) {
            double c = 1;
            for (int i = 0; i < k; ++i) c = c * (geo.n_points - i) / (i + 1);
            total += c;
        }
        const bool thin = total > static_cast<double>(spec.max_candidates_per_source);
        const double keep_ratio =
            thin ? static_cast<double>(spec.max_candidates_per_source) / total : 1.0;
        const std::uint64_t geo_hash = splitmix64(std::hash<std::string>{}(src.geometry));

        auto keep_candidate = [&](Mask m) {
            if (!thin) return true;
            std::uint64_t h = splitmix64(spec.seed ^ geo_hash ^ m);
            return (h >> 11) < static_cast<std::uint64_t>(keep_ratio * (1ULL << 53));
        };

        if (geo.n_points <= kMaxGroundSize) {
            // Materialize the geometry once and take restrictions.
            auto pts = pg_points(geo.rank, geo.q);
            std::vector<std::vector<std::uint8_t>> entries_(
                geo.rank, std::vector<std::uint8_t>(geo.n_points));
            for (int c = 0; c < geo.n_points; ++c)
                for (int r = 0; r < geo.rank; ++r) entries_[r][c] = pts[c][r];
            Matroid parent = matroid_from_matrix(
                matrix_of(geo.q, geo.rank, pg_labels(geo.n_points), entries_));
            for (int k = lo; k <= hi && !full(); ++k) {
                for_each_subset_of_size(full_mask(geo.n_points), k, [&](Mask m) {
                    if (full() || !keep_candidate(m)) return;
                    std::ostringstream prov;
                    prov << "pg:" << src.geometry << ":0x" << std::hex << m;
                    offer("pg", parent.restriction(m), prov.str());
                });
            }
        } else {
            auto pts = pg_points(geo.rank, geo.q);
            for (int k = lo; k <= hi && !full(); ++k) {
                for_each_subset_of_size(full_mask(geo.n_points), k, [&](Mask m) {
                    if (full() || !keep_candidate(m)) return;
                    auto cols = bits_of(m);
                    std::vector<std::string> labels;
                    std::vector<std::vector<std::uint8_t>> e(
                        geo.rank, std::vector<std::uint8_t>(cols.size()));
                    auto all = pg_labels(geo.n_points);
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        labels.push_back(all[cols[c]]);
                        for (int r = 0; r < geo.rank; ++r) e[r][c] = pts[cols[c]][r];
                    }
                    std::ostringstream prov;
                    prov << "pg:" << src.geometry << ":0x" << std::hex << m;
                    offer("pg", matroid_from_matrix(matrix_of(geo.q, geo.rank, labels, e)),
                          prov.str());
                });
            }
        }
    }

    void add_relaxations(const PoolSource& src) {
        std::vector<std::size_t> base;
        for (const auto& kind : src.of) {
            auto it = by_kind.find(kind);
            if (it == by_kind.end()) continue;
            base.insert(base.end(), it->second.begin(), it->second.end());
        }
        std::sort(base.begin(), base.end());
        for (std::size_t idx : base) {
            if (full()) return;
            const PoolEntry e = entries[idx];  // copy: entries may reallocate
            for (Mask ch : circuit_hyperplanes(e.matroid)) {
                if (full()) return;
                std::ostringstream prov;
                prov << "relax:" << e.provenance << ":ch=0x" << std::hex << ch;
                offer("relax", relax(e.matroid, ch), prov.str());
            }
        }
    }

    void glue_fano_across(const Matroid& partner, const std::string& pname,
                          int triangle_cap) {
        static const std::vector<std::string> flabels = {"f1", "f2", "f3", "f4",
                                                         "f5", "f6", "f7"};
        Matroid fcopy = fano().with_labels(flabels);
        Mask fline = circuit_hyperplanes(fcopy).front();
        std::vector<std::string> fline_labels = fcopy.ground().labels_of(fline);

        auto mod4 = modular_lines(partner, 4);
        int count = 0;
        for (Mask t : partner.triangles()) {
            if (full() || count >= triangle_cap) break;
            ++count;
            std::vector<std::pair<std::string, std::string>> ident;
            auto tl = partner.ground().labels_of(t);
            for (int i = 0; i < 3; ++i) ident.push_back({tl[i], fline_labels[i]});
            bool t_in_line = false;
            for (Mask l : mod4)
                if ((t & l) == t) t_in_line = true;
            try {
                Matroid glued = generalized_parallel_connection(partner, fcopy, ident);
                std::ostringstream prov;
                prov << "gpc:" << pname << "+fano:T=" << tl[0] << tl[1] << tl[2]
                     << (t_in_line ? ":T-in-modline" : ":T-off-modline");
                offer("gpc", glued, prov.str());
            } catch (const Error&) {
                // partner triangle unusable (e.g. not modular anywhere)
            }
        }
    }

    void add_gpc() {
        const std::vector<std::string> partners = {"u24",    "dowling-z2", "mk4",
                                                   "p6",     "nonfano",    "spike10",
                                                   "spike4-relaxed"};
        for (const auto& pname : partners) {
            if (full()) return;
            glue_fano_across(catalog_matroid(pname), pname, 8);
        }

        // Pool members that already carry a modular 4-point line make the
        // natural partners (ternary PG restrictions in particular); one
        // Fano gluing per triangle, a few triangles each.
        std::vector<std::size_t> base;
        for (const auto& kind : {"catalog", "pg"}) {
            auto it = by_kind.find(kind);
            if (it == by_kind.end()) continue;
            base.insert(base.end(), it->second.begin(), it->second.end());
        }
        std::sort(base.begin(), base.end());
        int emitted = 0;
        for (std::size_t idx : base) {
            if (full() || emitted >= 64) return;
            const PoolEntry e = entries[idx];  // copy: entries may reallocate
            if (e.matroid.size() + 4 > kMaxGroundSize) continue;
            if (modular_lines(e.matroid, 4).empty()) continue;
            glue_fano_across(e.matroid, e.provenance, 4);
            ++emitted;
        }
    }

    void add_extensions() {
        for (int leg = 1; leg <= 4 && !full(); ++leg) {
            try {
                SpikeExtension e = build_spike_extension(leg);
                offer("ext", e.matroid,
                      "ext:spike-leg" + std::to_string(leg) + "(cut=" + e.route + ")");
            } catch (const Error&) {
            }
        }
        // Single-flat principal extensions of the ten-element spike example.
        Matroid base = spike_extension10();
        for (Mask f : base.flats()) {
            if (full()) return;
            int rk = base.rank(f);
            if (rk < 2 || rk > 3) continue;
            try {
                ModularCut cut = principal_filter_cut(base, {f});
                Matroid ext = extend(base, cut, "f");
                std::ostringstream prov;
                prov << "ext:spike10:flat=0x" << std::hex << f;
                offer("ext", ext, prov.str());
            } catch (const Error&) {
            }
        }
    }
};

}  // namespace

std::vector<PoolEntry> generate_pool(const PoolSpec& spec) {
    PoolBuilder b(spec);
    for (const auto& src : spec.sources) {
        switch (src.kind) {
            case PoolSource::Kind::catalog: b.add_catalog(); break;
            case PoolSource::Kind::pg: b.add_pg(src); break;
            case PoolSource::Kind::relaxations: b.add_relaxations(src); break;
            case PoolSource::Kind::gpc: b.add_gpc(); break;
            case PoolSource::Kind::extensions: b.add_extensions(); break;
        }
    }
    return std::move(b.entries);
}

}  // namespace matkit
