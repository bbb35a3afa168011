#include "matkit/modularity.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace matkit {

std::optional<Mask> modular_violation(const Matroid& m, Mask x) {
    const int rx = m.rank(x);
    for (Mask f : m.flats()) {
        if (rx + m.rank(f) != m.rank(x | f) + m.rank(x & f)) return f;
    }
    return std::nullopt;
}

bool is_modular_set(const Matroid& m, Mask x) {
    return !modular_violation(m, x).has_value();
}

int point_count(const Matroid& m, Mask x) {
    int c = 0;
    for (Mask p : m.points())
        if ((p & x) == p) ++c;
    return c;
}

std::vector<Mask> modular_lines(const Matroid& m) {
    std::vector<Mask> out;
    for (Mask l : m.lines())
        if (is_modular_set(m, l)) out.push_back(l);
    return out;
}

std::vector<Mask> modular_lines(const Matroid& m, int points) {
    std::vector<Mask> out;
    for (Mask l : modular_lines(m))
        if (point_count(m, l) == points) out.push_back(l);
    return out;
}

namespace {

// Re-express a parent mask in a minor whose ground set kept `keep`.
Mask compact_mask(Mask parent, Mask keep) {
    Mask out = 0;
    int idx = 0;
    for_each_bit(keep, [&](int p) {
        if (parent & bit(p)) out |= bit(idx);
        ++idx;
    });
    return out;
}

}  // namespace

VerificationReport modular_set_minor_property_check(const Matroid& m, Mask w) {
    const auto start = std::chrono::steady_clock::now();
    if (!is_modular_set(m, w)) throw NotModular("W is not modular in the host");

    VerificationReport rep;
    rep.claim = "modular-set-minor-properties";
    rep.verdict = Verdict::pass;
    const Mask fm = m.ground().full();
    const Mask clw = m.closure(w);
    std::ostringstream fail;

    for_each_bit(fm & ~w, [&](int e) {
        if (rep.verdict == Verdict::fail) return;
        const Mask keep = fm & ~bit(e);
        Matroid del = m.deletion(bit(e));
        if (!is_modular_set(del, compact_mask(w, keep))) {
            rep.verdict = Verdict::fail;
            fail << "W not modular in M\\" << m.ground().label(e);
            return;
        }
        if (!(clw & bit(e))) {
            Matroid con = m.contraction(bit(e));
            if (!is_modular_set(con, compact_mask(w, keep))) {
                rep.verdict = Verdict::fail;
                fail << "W not modular in M/" << m.ground().label(e);
                return;
            }
        }
    });

    for_each_bit(clw & ~w, [&](int e) {
        if (rep.verdict == Verdict::fail) return;
        if (m.rank(bit(e)) == 0) return;  // loop
        bool parallel = false;
        for_each_bit(w, [&](int x) {
            if (m.rank(bit(e) | bit(x)) == 1) parallel = true;
        });
        if (!parallel) {
            rep.verdict = Verdict::fail;
            fail << m.ground().label(e)
                 << " lies in cl(W)\\W but is neither a loop nor parallel into W";
        }
    });

    if (rep.verdict != Verdict::fail && m.is_simple() && clw != w) {
        rep.verdict = Verdict::fail;
        fail << "modular set is not a flat in a simple matroid";
    }

    rep.witness = rep.verdict == Verdict::fail ? fail.str() : "all properties hold";
    rep.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return rep;
}

std::vector<Mask> circuit_hyperplanes(const Matroid& m) {
    std::vector<Mask> out;
    const int r = m.rank();
    for (Mask c : m.circuits())
        if (m.rank(c) == r - 1 && m.is_flat(c)) out.push_back(c);
    return out;
}

Matroid relax(const Matroid& m, Mask c) {
    const int r = m.rank();
    if (!(m.rank(c) == r - 1 && m.is_flat(c) && popcount(c) == r &&
          !m.is_independent(c)))
        throw NotCircuitHyperplane("set is not a circuit-hyperplane");
    // popcount r and rank r-1 make c dependent with independent proper
    // subsets exactly when it is a circuit.
    bool proper_ok = true;
    for_each_bit(c, [&](int e) {
        if (!m.is_independent(c & ~bit(e))) proper_ok = false;
    });
    if (!proper_ok) throw NotCircuitHyperplane("set is not a circuit");

    std::vector<Mask> bases = m.bases();
    bases.push_back(c);
    return Matroid(m.ground(), std::move(bases));
}

// ---------------------------------------------------------------------------

ModularCut::ModularCut(Matroid host, std::vector<Mask> members)
    : host_(std::move(host)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    for (Mask f : members_)
        if (!host_.is_flat(f))
            throw NotAModularCut("cut member is not a flat", f, f);

    const auto& flats = host_.flats();
    std::set<Mask> in(members_.begin(), members_.end());
    for (Mask f : members_)
        for (Mask g : flats)
            if ((f & g) == f && !in.count(g))
                throw NotAModularCut("cut is not upward closed", f, g);
    for (Mask f1 : members_)
        for (Mask f2 : members_) {
            if (f2 <= f1) continue;
            if (host_.rank(f1) + host_.rank(f2) ==
                    host_.rank(f1 | f2) + host_.rank(f1 & f2) &&
                !in.count(f1 & f2))
                throw NotAModularCut("modular pair with excluded intersection",
                                     f1, f2);
        }
}

bool ModularCut::contains(Mask flat) const {
    return std::binary_search(members_.begin(), members_.end(), flat);
}

ModularCut principal_filter_cut(const Matroid& m, const std::vector<Mask>& generators) {
    for (Mask g : generators)
        if (!m.is_flat(g)) throw BadParameters("generator is not a flat");
    std::vector<Mask> members;
    for (Mask f : m.flats())
        for (Mask g : generators)
            if ((f & g) == g) {
                members.push_back(f);
                break;
            }
    return ModularCut(m, std::move(members));
}

ModularCut modular_cut_closure(const Matroid& m, const std::vector<Mask>& generators) {
    for (Mask g : generators)
        if (!m.is_flat(g)) throw BadParameters("generator is not a flat");
    const auto& flats = m.flats();
    std::set<Mask> in;
    for (Mask f : flats)
        for (Mask g : generators)
            if ((f & g) == g) in.insert(f);

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Mask> cur(in.begin(), in.end());
        for (Mask f1 : cur)
            for (Mask f2 : cur) {
                if (f2 <= f1) continue;
                if (m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(f1 & f2) &&
                    !in.count(f1 & f2)) {
                    // Forced intersection; pull in its whole filter.
                    for (Mask g : flats)
                        if ((g & (f1 & f2)) == (f1 & f2)) in.insert(g);
                    changed = true;
                }
            }
    }
    return ModularCut(m, std::vector<Mask>(in.begin(), in.end()));
}

Matroid extend(const Matroid& m, const ModularCut& cut, const std::string& label) {
    if (!(cut.host() == m)) throw BadParameters("cut belongs to a different host");
    if (m.ground().has_label(label))
        throw LabelCollision("extension label already present: " + label);

    const int n = m.size();
    const int r = m.rank();
    // The ground set is a flat, so a nonempty cut contains it and the
    // extension keeps rank r; the empty cut adds a coloop.
    const int new_rank = cut.empty() ? r + 1 : r;

    std::vector<std::string> labels = m.ground().labels();
    labels.push_back(label);
    const Mask e = bit(n);

    std::vector<Mask> bases;
    if (new_rank == r) bases = m.bases();
    for_each_subset_of_size(full_mask(n), new_rank - 1, [&](Mask a) {
        if (m.is_independent(a) && !cut.contains(m.closure(a)))
            bases.push_back(a | e);
    });

    Matroid out(GroundSet(std::move(labels)), std::move(bases));

    // Definitional round trip: e lands in the closure of exactly the flats
    // of the cut.
    for (Mask f : m.flats()) {
        const bool in_cl = (out.closure(f) & e) != 0;
        if (in_cl != cut.contains(f))
            throw ConstructionFailed("extension closure disagrees with the cut");
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_triangle(const Matroid& m, Mask t) {
    if (popcount(t) != 3 || m.rank(t) != 2) return false;
    bool ok = true;
    for_each_bit(t, [&](int x) {
        if (m.rank(t & ~bit(x)) != 2) ok = false;
    });
    return ok;
}

}  // namespace

Matroid generalized_parallel_connection(
    const Matroid& m, const Matroid& n,
    const std::vector<std::pair<std::string, std::string>>& t_ident) {
    if (t_ident.size() != 3) throw NotATriangle("T must have exactly three elements");

    Mask tm = 0, tn = 0;
    for (const auto& [lm, ln] : t_ident) {
        tm |= bit(m.ground().position(lm));
        tn |= bit(n.ground().position(ln));
    }
    if (popcount(tm) != 3 || popcount(tn) != 3)
        throw NotATriangle("identification labels are not distinct");
    if (!is_triangle(m, tm) || !is_triangle(n, tn))
        throw NotATriangle("T is not a triangle of both operands");

    const bool mod_m = is_modular_set(m, tm) && m.is_flat(tm);
    const bool mod_n = is_modular_set(n, tn) && n.is_flat(tn);
    if (!mod_m && !mod_n)
        throw NotModularInEither("T is a modular line of neither operand");

    // Combined ground: m's labels, then n's labels outside T. The shared
    // triangle keeps m's labels.
    const int nm = m.size();
    std::vector<std::string> labels = m.ground().labels();
    std::vector<int> n_pos;  // combined position -> n position
    for (int p = 0; p < n.size(); ++p) {
        if (tn & bit(p)) continue;
        if (m.ground().has_label(n.ground().label(p)))
            throw LabelCollision("operands share a label outside T: " +
                                 n.ground().label(p));
        labels.push_back(n.ground().label(p));
        n_pos.push_back(p);
    }
    const int total = static_cast<int>(labels.size());
    if (total > kMaxGroundSize)
        throw BadParameters("connection exceeds the 16-element cap");

    // Position t_m_pos[i] of m corresponds to position t_n_pos[i] of n.
    std::vector<int> t_m_pos, t_n_pos;
    for (const auto& [lm, ln] : t_ident) {
        t_m_pos.push_back(m.ground().position(lm));
        t_n_pos.push_back(n.ground().position(ln));
    }

    auto trace_m = [&](Mask x) -> Mask { return x & full_mask(nm); };
    auto trace_n = [&](Mask x) -> Mask {
        Mask out = 0;
        for (int i = 0; i < 3; ++i)
            if (x & bit(t_m_pos[i])) out |= bit(t_n_pos[i]);
        for (int k = nm; k < total; ++k)
            if (x & bit(k)) out |= bit(n_pos[k - nm]);
        return out;
    };
    auto embed_m = [&](Mask x) -> Mask { return x; };
    auto embed_n = [&](Mask x) -> Mask {
        Mask out = 0;
        for (int i = 0; i < 3; ++i)
            if (x & bit(t_n_pos[i])) out |= bit(t_m_pos[i]);
        for (int k = nm; k < total; ++k)
            if (x & bit(n_pos[k - nm])) out |= bit(k);
        return out;
    };

    // The flats of the connection are the sets tracing to flats on both
    // sides; that family is intersection-closed, so closure is a fixpoint.
    auto close = [&](Mask x) -> Mask {
        Mask cur = x;
        while (true) {
            Mask next = embed_m(m.closure(trace_m(cur))) | embed_n(n.closure(trace_n(cur)));
            if (next == cur) return cur;
            cur = next;
        }
    };
    auto grank = [&](Mask x) -> int {
        int cnt = 0;
        Mask cur = close(0);
        for (int e = 0; e < total; ++e) {
            if (!(x & bit(e)) || (cur & bit(e))) continue;
            ++cnt;
            cur = close(cur | bit(e));
        }
        return cnt;
    };

    const int new_rank = m.rank() + n.rank() - 2;
    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(total), new_rank, [&](Mask b) {
        if (grank(b) == new_rank) bases.push_back(b);
    });

    Matroid out(GroundSet(labels), std::move(bases));

    // The connection must restrict to each operand exactly.
    Mask m_side = full_mask(nm);
    if (!(out.restriction(m_side) == m))
        throw ConstructionFailed("connection does not restrict to the first operand");
    Mask n_side = 0;
    for (int i = 0; i < 3; ++i) n_side |= bit(t_m_pos[i]);
    for (int k = nm; k < total; ++k) n_side |= bit(k);
    Matroid n_restr = out.restriction(n_side);
    // Compare against n with the shared labels renamed to m's.
    std::vector<int> order;  // n position -> restriction order
    {
        std::vector<std::string> n_labels = n.ground().labels();
        for (int i = 0; i < 3; ++i) n_labels[t_n_pos[i]] = m.ground().label(t_m_pos[i]);
        Matroid n_renamed = n.with_labels(n_labels);
        // Restriction keeps combined order; realign n to that order.
        std::vector<int> new_to_old;
        for (const auto& lbl : n_restr.ground().labels())
            new_to_old.push_back(n_renamed.ground().position(lbl));
        if (!(n_restr == n_renamed.permuted(new_to_old)))
            throw ConstructionFailed("connection does not restrict to the second operand");
    }
    (void)order;
    return out;
}

}  // namespace matkit
