#include "matkit/minor.hpp"

#include <algorithm>

#include "matkit/canonical.hpp"
#include "matkit/catalog.hpp"

namespace matkit {

bool validate_witness(const Matroid& host, const Matroid& pattern,
                      const MinorWitness& w) {
    Mask del = host.ground().mask_of(w.deleted);
    Mask con = host.ground().mask_of(w.contracted);
    if (del & con) return false;
    Matroid minor = host.minor(con, del);
    if (minor.size() != pattern.size() || minor.rank() != pattern.rank() ||
        minor.bases().size() != pattern.bases().size())
        return false;
    // map must carry bases of the minor exactly onto bases of the pattern.
    std::vector<int> to_pattern(minor.size());
    for (int p = 0; p < minor.size(); ++p) {
        auto it = w.map.find(minor.ground().label(p));
        if (it == w.map.end()) return false;
        to_pattern[p] = pattern.ground().position(it->second);
    }
    for (Mask b : minor.bases()) {
        Mask pb = 0;
        for_each_bit(b, [&](int p) { pb |= bit(to_pattern[p]); });
        if (!pattern.is_basis(pb)) return false;
    }
    return true;
}

namespace {

// Label-lexicographic k-combinations of the set positions of `universe`.
template <typename F>
void for_each_combo_label_order(const Matroid& m, Mask universe, int k, F&& f) {
    std::vector<int> pos;
    for (int p : m.ground().label_sorted_positions())
        if (universe & bit(p)) pos.push_back(p);
    const int n = static_cast<int>(pos.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask mm = 0;
        for (int i : idx) mm |= bit(pos[i]);
        if (f(mm)) return;  // callback returns true to stop
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

MinorResult has_minor_using(const MinorQuery& q) {
    const Matroid& host = q.host;
    const Matroid& pattern = q.pattern;
    if (q.must_use & ~host.ground().full())
        throw MustUseNotInHost("must_use has bits outside the host ground set");

    MinorResult res;
    const int nh = host.size(), np = pattern.size();
    const int rh = host.rank(), rp = pattern.rank();
    const int c = rh - rp;
    const int d = nh - np - c;
    if (np > nh || c < 0 || d < 0) return res;

    const auto pattern_key = canonical_key(pattern);
    const std::size_t pattern_bases = pattern.bases().size();
    const Mask fm = host.ground().full();
    const Mask avoid = q.must_use;

    for_each_combo_label_order(host, fm & ~avoid, c, [&](Mask con) -> bool {
        if (!host.is_independent(con)) return false;
        for_each_combo_label_order(host, fm & ~avoid & ~con, d, [&](Mask del) -> bool {
            if (++res.nodes > q.budget) {
                res.status = SearchStatus::budget_exceeded;
                return true;
            }
            const Mask keep = fm & ~con & ~del;
            // The minor must keep full contracted rank.
            if (host.rank(keep | con) != rh) return false;
            Matroid cand = host.minor(con, del);
            if (cand.rank() != rp || cand.bases().size() != pattern_bases) return false;
            if (canonical_key(cand) != pattern_key) return false;

            MinorWitness w;
            w.deleted = host.ground().labels_of(del);
            w.contracted = host.ground().labels_of(con);
            const auto pc = canonical_form(cand).new_to_old;
            const auto pp = canonical_form(pattern).new_to_old;
            for (int k = 0; k < np; ++k)
                w.map[cand.ground().label(pc[k])] = pattern.ground().label(pp[k]);
            if (!validate_witness(host, pattern, w))
                throw ConstructionFailed("minor witness failed re-validation");
            res.status = SearchStatus::present;
            res.witness = std::move(w);
            return true;
        });
        return res.status != SearchStatus::absent;
    });
    return res;
}

MinorResult has_minor(const Matroid& host, const Matroid& pattern,
                      std::uint64_t budget) {
    return has_minor_using(MinorQuery{host, pattern, 0, budget});
}

MinorResult is_minor_of(const Matroid& pattern, const Matroid& host,
                        std::uint64_t budget) {
    return has_minor(host, pattern, budget);
}

namespace {

Tri none_of_minors(const Matroid& m, const std::vector<std::string>& names,
                   std::uint64_t budget) {
    bool budget_hit = false;
    for (const auto& name : names) {
        MinorResult r = has_minor(m, catalog_matroid(name), budget);
        if (r.status == SearchStatus::present) return Tri::no;
        if (r.status == SearchStatus::budget_exceeded) budget_hit = true;
    }
    return budget_hit ? Tri::budget : Tri::yes;
}

}  // namespace

Tri is_binary(const Matroid& m, std::uint64_t budget) {
    return none_of_minors(m, {"u24"}, budget);
}

Tri is_ternary(const Matroid& m, std::uint64_t budget) {
    return none_of_minors(m, {"u25", "u35", "fano", "fano-dual"}, budget);
}

Tri is_quaternary(const Matroid& m, std::uint64_t budget) {
    RepresentResult r = is_representable(m, 4, budget);
    switch (r.status) {
        case SearchStatus::present: return Tri::yes;
        case SearchStatus::absent: return Tri::no;
        default: return Tri::budget;
    }
}

}  // namespace matkit
