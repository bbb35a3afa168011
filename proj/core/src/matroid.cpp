#include "matkit/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "matroid_impl.hpp"

namespace matkit {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    int n = static_cast<int>(labels_.size());
    if (n < 1) throw EmptyGroundSet("ground set must have at least one element");
    if (n > kMaxGroundSize)
        throw BadParameters("ground set exceeds the 16-element cap");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n)
        throw LabelCollision("ground-set labels must be pairwise distinct");
    by_label_.resize(n);
    std::iota(by_label_.begin(), by_label_.end(), 0);
    std::sort(by_label_.begin(), by_label_.end(),
              [&](int a, int b) { return labels_[a] < labels_[b]; });
}

int GroundSet::position(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw BadParameters("unknown ground-set label: " + label);
}

bool GroundSet::has_label(const std::string& label) const {
    for (const auto& l : labels_)
        if (l == label) return true;
    return false;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(position(l));
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
    if (m & ~full()) throw BadParameters("mask has bits outside the ground set");
    std::vector<std::string> out;
    for_each_bit(m, [&](int i) { out.push_back(labels_[i]); });
    return out;
}

// ---------------------------------------------------------------------------

Matroid::Impl::Impl(GroundSet g, std::vector<Mask> b)
    : ground(std::move(g)), bases(std::move(b)) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    rank = bases.empty() ? 0 : popcount(bases.front());
}

void Matroid::Impl::ensure_tables() const {
    std::call_once(tables_once, [&] {
        const std::size_t sz = std::size_t{1} << n();
        basis_set.assign(sz, false);
        for (Mask b : bases) basis_set[b] = true;

        // Independence = downward closure of the basis family.
        std::vector<bool> ind(sz, false);
        for (Mask b : bases) ind[b] = true;
        // High-to-low popcount sweep: masks only shrink, so descending
        // numeric order is not enough; iterate by popcount.
        std::vector<std::vector<Mask>> by_pop(n() + 1);
        for (Mask m = 0; m < sz; ++m)
            if (ind[m]) by_pop[popcount(m)].push_back(m);
        for (int p = n(); p > 0; --p)
            for (std::size_t i = 0; i < by_pop[p].size(); ++i) {
                Mask m = by_pop[p][i];
                Mask rest = m;
                while (rest) {
                    Mask low = rest & (~rest + 1);
                    Mask sub = m ^ low;
                    if (!ind[sub]) {
                        ind[sub] = true;
                        by_pop[p - 1].push_back(sub);
                    }
                    rest ^= low;
                }
            }

        std::vector<std::uint8_t> rt(sz, 0);
        for (Mask m = 1; m < sz; ++m) {
            if (ind[m]) {
                rt[m] = static_cast<std::uint8_t>(popcount(m));
            } else {
                std::uint8_t best = 0;
                Mask rest = m;
                while (rest) {
                    Mask low = rest & (~rest + 1);
                    best = std::max(best, rt[m ^ low]);
                    rest ^= low;
                }
                rt[m] = best;
            }
        }

        corank_table.assign(sz, 0);
        const Mask everything = full();
        const int r = rank;
        for (Mask m = 0; m < sz; ++m)
            corank_table[m] =
                static_cast<std::uint8_t>(popcount(m) + rt[everything & ~m] - r);
        rank_table = std::move(rt);
    });
}

namespace {

// Minimal dependent sets of the independence function ind(m).
template <typename Ind>
std::vector<Mask> minimal_dependent(int n, Ind ind) {
    std::vector<Mask> out;
    const std::size_t sz = std::size_t{1} << n;
    for (Mask m = 1; m < sz; ++m) {
        if (ind(m)) continue;
        bool minimal = true;
        Mask rest = m;
        while (rest && minimal) {
            Mask low = rest & (~rest + 1);
            if (!ind(m ^ low)) minimal = false;
            rest ^= low;
        }
        if (minimal) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

}  // namespace

void Matroid::Impl::ensure_circuits() const {
    ensure_tables();
    std::call_once(circuits_once, [&] {
        circuits = minimal_dependent(
            n(), [&](Mask m) { return rank_table[m] == popcount(m); });
        cocircuits = minimal_dependent(
            n(), [&](Mask m) { return corank_table[m] == popcount(m); });
    });
}

void Matroid::Impl::ensure_flats() const {
    ensure_tables();
    std::call_once(flats_once, [&] {
        flats_by_rank.assign(rank + 1, {});
        const std::size_t sz = std::size_t{1} << n();
        const Mask everything = full();
        for (Mask m = 0; m < sz; ++m) {
            bool flat = true;
            Mask outside = everything & ~m;
            while (outside && flat) {
                Mask low = outside & (~outside + 1);
                if (rank_table[m | low] == rank_table[m]) flat = false;
                outside ^= low;
            }
            if (flat) flats_by_rank[rank_table[m]].push_back(m);
        }
        for (auto& level : flats_by_rank) {
            std::sort(level.begin(), level.end(), [](Mask a, Mask b) {
                int pa = popcount(a), pb = popcount(b);
                return pa != pb ? pa < pb : a < b;
            });
            flats_all.insert(flats_all.end(), level.begin(), level.end());
        }
    });
}

// ---------------------------------------------------------------------------

void validate_matroid(const GroundSet& ground, const std::vector<Mask>& bases) {
    if (bases.empty()) throw InvalidMatroid("basis family is empty");
    const Mask fm = ground.full();
    const int r = popcount(bases.front());
    std::set<Mask> bs;
    for (Mask b : bases) {
        if (b & ~fm) throw InvalidMatroid("basis has bits outside the ground set");
        if (popcount(b) != r)
            throw InvalidMatroid("bases do not all have the same size");
        bs.insert(b);
    }
    for (Mask b1 : bs)
        for (Mask b2 : bs) {
            if (b1 == b2) continue;
            Mask only1 = b1 & ~b2;
            Mask rest1 = only1;
            while (rest1) {
                Mask x = rest1 & (~rest1 + 1);
                rest1 ^= x;
                bool ok = false;
                Mask rest2 = b2 & ~b1;
                while (rest2 && !ok) {
                    Mask y = rest2 & (~rest2 + 1);
                    rest2 ^= y;
                    if (bs.count((b1 ^ x) | y)) ok = true;
                }
                if (!ok)
                    throw InvalidMatroid(
                        "basis exchange fails between " +
                        std::to_string(b1) + " and " + std::to_string(b2));
            }
        }
}

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases) {
    validate_matroid(ground, bases);
    impl_ = std::make_shared<const Impl>(std::move(ground), std::move(bases));
}

Matroid Matroid::unchecked(GroundSet ground, std::vector<Mask> bases) {
    return Matroid(std::make_shared<const Impl>(std::move(ground), std::move(bases)));
}

const GroundSet& Matroid::ground() const { return impl_->ground; }
int Matroid::size() const { return impl_->n(); }
int Matroid::rank() const { return impl_->rank; }
const std::vector<Mask>& Matroid::bases() const { return impl_->bases; }

bool Matroid::is_basis(Mask m) const {
    impl_->ensure_tables();
    return (m & ~impl_->full()) == 0 && impl_->basis_set[m];
}

int Matroid::rank(Mask x) const {
    if (x & ~impl_->full()) throw BadParameters("mask has bits outside the ground set");
    impl_->ensure_tables();
    return impl_->rank_table[x];
}

int Matroid::corank(Mask x) const {
    if (x & ~impl_->full()) throw BadParameters("mask has bits outside the ground set");
    impl_->ensure_tables();
    return impl_->corank_table[x];
}

bool Matroid::is_independent(Mask x) const { return rank(x) == popcount(x); }
bool Matroid::is_coindependent(Mask x) const { return corank(x) == popcount(x); }

Mask Matroid::closure(Mask x) const {
    impl_->ensure_tables();
    if (x & ~impl_->full()) throw BadParameters("mask has bits outside the ground set");
    Mask cl = x;
    Mask outside = impl_->full() & ~x;
    const int rx = impl_->rank_table[x];
    for_each_bit(outside, [&](int e) {
        if (impl_->rank_table[x | bit(e)] == rx) cl |= bit(e);
    });
    return cl;
}

bool Matroid::is_flat(Mask x) const { return closure(x) == x; }

const std::vector<Mask>& Matroid::circuits() const {
    impl_->ensure_circuits();
    return impl_->circuits;
}

const std::vector<Mask>& Matroid::cocircuits() const {
    impl_->ensure_circuits();
    return impl_->cocircuits;
}

const std::vector<Mask>& Matroid::flats() const {
    impl_->ensure_flats();
    return impl_->flats_all;
}

std::vector<Mask> Matroid::flats_of_rank(int k) const {
    impl_->ensure_flats();
    if (k < 0 || k > rank()) return {};
    return impl_->flats_by_rank[k];
}

std::vector<Mask> Matroid::hyperplanes() const { return flats_of_rank(rank() - 1); }
std::vector<Mask> Matroid::points() const { return flats_of_rank(1); }
std::vector<Mask> Matroid::lines() const { return flats_of_rank(2); }

std::vector<Mask> Matroid::triangles() const {
    std::vector<Mask> out;
    for (Mask c : circuits())
        if (popcount(c) == 3) out.push_back(c);
    return out;
}

std::vector<Mask> Matroid::triads() const {
    std::vector<Mask> out;
    for (Mask c : cocircuits())
        if (popcount(c) == 3) out.push_back(c);
    return out;
}

Mask Matroid::loops() const {
    impl_->ensure_tables();
    Mask l = 0;
    for (int e = 0; e < size(); ++e)
        if (impl_->rank_table[bit(e)] == 0) l |= bit(e);
    return l;
}

Mask Matroid::coloops() const {
    impl_->ensure_tables();
    Mask l = 0;
    for (int e = 0; e < size(); ++e)
        if (impl_->corank_table[bit(e)] == 0) l |= bit(e);
    return l;
}

bool Matroid::is_simple() const {
    if (loops()) return false;
    impl_->ensure_tables();
    for (int e = 0; e < size(); ++e)
        for (int f = e + 1; f < size(); ++f)
            if (impl_->rank_table[bit(e) | bit(f)] == 1) return false;
    return true;
}

bool Matroid::is_cosimple() const { return dual().is_simple(); }

std::vector<Mask> Matroid::parallel_classes() const {
    impl_->ensure_tables();
    Mask rest = impl_->full() & ~loops();
    std::vector<Mask> classes;
    while (rest) {
        int e = lowest_bit(rest);
        Mask cls = bit(e);
        for_each_bit(rest & ~bit(e), [&](int f) {
            if (impl_->rank_table[bit(e) | bit(f)] == 1) cls |= bit(f);
        });
        classes.push_back(cls);
        rest &= ~cls;
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

// ---------------------------------------------------------------------------

Matroid Matroid::minor(Mask contract, Mask del) const {
    const Mask fm = impl_->full();
    if ((contract | del) & ~fm)
        throw BadParameters("minor sets have bits outside the ground set");
    if (contract & del)
        throw DisjointnessViolated("contract and delete sets must be disjoint");
    const Mask keep = fm & ~(contract | del);
    if (!keep) throw EmptyGroundSet("minor would have an empty ground set");

    impl_->ensure_tables();
    const int rc = impl_->rank_table[contract];
    const int new_rank = impl_->rank_table[keep | contract] - rc;

    // Dense position remap, original label order preserved.
    std::vector<int> old_pos;
    std::vector<std::string> labels;
    for_each_bit(keep, [&](int i) {
        old_pos.push_back(i);
        labels.push_back(impl_->ground.label(i));
    });

    std::vector<Mask> new_bases;
    for_each_subset_of_size(keep, new_rank, [&](Mask b) {
        if (impl_->rank_table[b | contract] == rc + new_rank) {
            Mask compact = 0;
            for (int k = 0; k < static_cast<int>(old_pos.size()); ++k)
                if (b & bit(old_pos[k])) compact |= bit(k);
            new_bases.push_back(compact);
        }
    });
    return Matroid::unchecked(GroundSet(std::move(labels)), std::move(new_bases));
}

Matroid Matroid::deletion(Mask x) const { return minor(0, x); }
Matroid Matroid::contraction(Mask x) const { return minor(x, 0); }
Matroid Matroid::restriction(Mask keep) const {
    return minor(0, impl_->full() & ~keep);
}

Matroid Matroid::dual() const {
    const Mask fm = impl_->full();
    std::vector<Mask> cobases;
    cobases.reserve(impl_->bases.size());
    for (Mask b : impl_->bases) cobases.push_back(fm & ~b);
    return Matroid::unchecked(impl_->ground, std::move(cobases));
}

Matroid Matroid::permuted(const std::vector<int>& new_to_old) const {
    const int n = size();
    if (static_cast<int>(new_to_old.size()) != n)
        throw BadParameters("permutation size mismatch");
    std::vector<int> old_to_new(n, -1);
    for (int k = 0; k < n; ++k) {
        int o = new_to_old[k];
        if (o < 0 || o >= n || old_to_new[o] != -1)
            throw BadParameters("not a permutation");
        old_to_new[o] = k;
    }
    std::vector<std::string> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = impl_->ground.label(new_to_old[k]);
    std::vector<Mask> new_bases;
    new_bases.reserve(impl_->bases.size());
    for (Mask b : impl_->bases) {
        Mask nb = 0;
        for_each_bit(b, [&](int o) { nb |= bit(old_to_new[o]); });
        new_bases.push_back(nb);
    }
    return Matroid::unchecked(GroundSet(std::move(labels)), std::move(new_bases));
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
    if (static_cast<int>(labels.size()) != size())
        throw BadParameters("label count mismatch");
    return Matroid::unchecked(GroundSet(std::move(labels)), impl_->bases);
}

bool Matroid::operator==(const Matroid& o) const {
    if (impl_ == o.impl_) return true;
    return impl_->ground == o.impl_->ground && impl_->bases == o.impl_->bases;
}

// ---------------------------------------------------------------------------

SimplifyResult simplify(const Matroid& m) {
    const Mask loops = m.loops();
    if (loops == m.ground().full()) throw AllLoops("every element is a loop");

    std::map<std::string, std::string> rep;
    Mask keep = 0;
    for (Mask cls : m.parallel_classes()) {
        // Lexicographically least label represents the class.
        int best = -1;
        for_each_bit(cls, [&](int e) {
            if (best == -1 || m.ground().label(e) < m.ground().label(best)) best = e;
        });
        keep |= bit(best);
        for_each_bit(cls, [&](int e) {
            rep[m.ground().label(e)] = m.ground().label(best);
        });
    }
    std::vector<std::string> removed_loops = m.ground().labels_of(loops);
    return SimplifyResult{m.restriction(keep), std::move(rep), std::move(removed_loops)};
}

}  // namespace matkit
