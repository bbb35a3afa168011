#include "matkit/verifier.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "matkit/canonical.hpp"
#include "matkit/connectivity.hpp"
#include "matkit/minor.hpp"
#include "matkit/modularity.hpp"

namespace matkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Instance-parallel map with slot-ordered, schedule-independent results.
// Exceptions surface as fail reports instead of tearing down a worker.
std::vector<VerificationReport> map_instances(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg,
    const std::function<VerificationReport(const PoolEntry&)>& fn) {
    auto guarded = [&](const PoolEntry& e) {
        try {
            return fn(e);
        } catch (const std::exception& ex) {
            VerificationReport r;
            r.instance = e.provenance;
            r.verdict = Verdict::fail;
            r.witness = std::string("exception: ") + ex.what();
            return r;
        }
    };
    std::vector<VerificationReport> out(pool.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || pool.size() < 2) {
        for (std::size_t i = 0; i < pool.size(); ++i) out[i] = guarded(pool[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pool.size()) return;
            out[i] = guarded(pool[i]);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
}

std::string join_labels(const Matroid& m, Mask x) {
    std::string out;
    for (const auto& l : m.ground().labels_of(x)) {
        if (!out.empty()) out += ",";
        out += l;
    }
    return "{" + out + "}";
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "budget";
    }
}

bool has_modular_line(const Matroid& m, int points, Mask* line_out = nullptr) {
    auto lines = modular_lines(m, points);
    if (lines.empty()) return false;
    if (line_out) *line_out = lines.front();
    return true;
}

VerificationReport vacuous_report(const std::string& claim, const PoolEntry& e,
                                  const char* why) {
    VerificationReport r;
    r.claim = claim;
    r.instance = e.provenance;
    r.verdict = Verdict::vacuous;
    r.witness = why;
    return r;
}

}  // namespace

const std::vector<std::string>& verifier_claims() {
    static const std::vector<std::string> claims = {
        "thm-1",   "thm-main", "lem-2.1", "lem-2.2", "lem-2.3",
        "lem-3.1", "lem-4.1",  "lem-5.3", "lem-5.4", "lem-5.5",
        "lem-5.6", "lem-5.8",  "prop-5.9"};
    return claims;
}

// --------------------------------------------------------------------------
// Theorem replays

std::vector<VerificationReport> verify_thm_seymour(const std::vector<PoolEntry>& pool,
                                                   const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        Mask line = 0;
        if (!is_k_connected(m, 3))
            return vacuous_report("thm-1", e, "not 3-connected");
        if (!has_modular_line(m, 3, &line))
            return vacuous_report("thm-1", e, "no modular 3-point line");

        VerificationReport r;
        r.claim = "thm-1";
        r.instance = e.provenance;
        Tri b = is_binary(m, cfg.budget);
        if (b == Tri::budget) {
            r.verdict = Verdict::budget;
            r.witness = "binary test exceeded budget";
        } else if (b == Tri::yes) {
            r.verdict = Verdict::pass;
            r.witness = "line=" + join_labels(m, line) + " binary=yes";
        } else {
            r.verdict = Verdict::fail;
            auto w = has_minor(m, catalog_matroid("u24"), cfg.budget);
            r.witness = "line=" + join_labels(m, line) +
                        " has U(2,4)-minor contracting {" +
                        (w.witness ? "" : "?") + "}";
            if (w.witness) {
                std::string c, d;
                for (const auto& l : w.witness->contracted) c += l + ",";
                for (const auto& l : w.witness->deleted) d += l + ",";
                r.witness = "line=" + join_labels(m, line) + " U24 via contract{" + c +
                            "} delete{" + d + "}";
            }
        }
        r.ms = ms_since(t0);
        return r;
    });
}

std::vector<VerificationReport> verify_thm_main(const std::vector<PoolEntry>& pool,
                                                const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        Mask line = 0;
        if (!is_k_connected(m, 3))
            return vacuous_report("thm-main", e, "not 3-connected");
        if (!has_modular_line(m, 4, &line))
            return vacuous_report("thm-main", e, "no modular 4-point line");

        VerificationReport r;
        r.claim = "thm-main";
        r.instance = e.provenance;

        Tri ternary = is_ternary(m, cfg.budget);
        Tri quaternary = is_quaternary(m, cfg.budget);
        auto f7 = has_minor(m, catalog_matroid("fano"), cfg.budget);
        auto nf = has_minor(m, catalog_matroid("nonfano"), cfg.budget);
        auto nfd = has_minor(m, catalog_matroid("nonfano-dual"), cfg.budget);

        const bool any_budget = ternary == Tri::budget || quaternary == Tri::budget ||
                                f7.status == SearchStatus::budget_exceeded ||
                                nf.status == SearchStatus::budget_exceeded ||
                                nfd.status == SearchStatus::budget_exceeded;
        const bool out_iii = f7.present() && (nf.present() || nfd.present());
        const bool ok = ternary == Tri::yes || quaternary == Tri::yes || out_iii;

        std::ostringstream w;
        w << "line=" << join_labels(m, line) << " ternary=" << tri_name(ternary)
          << " quaternary=" << tri_name(quaternary) << " F7=" << f7.present()
          << " F7-=" << nf.present() << " (F7-)*=" << nfd.present();
        if (out_iii && ternary == Tri::no && quaternary == Tri::no)
            w << " outcome=iii(F7- present: " << (nf.present() ? "yes" : "no") << ")";

        if (ok) {
            r.verdict = Verdict::pass;
        } else if (any_budget) {
            r.verdict = Verdict::budget;
        } else {
            r.verdict = Verdict::fail;
        }
        r.witness = w.str();
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------
// Section 2 lemmas

std::vector<VerificationReport> verify_lem_u25_u35(const std::vector<PoolEntry>& pool,
                                                   const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!is_k_connected(m, 3))
            return vacuous_report("lem-2.1", e, "not 3-connected");
        if (m.rank() < 3 || m.size() - m.rank() < 3)
            return vacuous_report("lem-2.1", e, "rank or corank below three");

        VerificationReport r;
        r.claim = "lem-2.1";
        r.instance = e.provenance;
        auto a = has_minor(m, catalog_matroid("u25"), cfg.budget);
        auto b = has_minor(m, catalog_matroid("u35"), cfg.budget);
        if (a.status == SearchStatus::budget_exceeded ||
            b.status == SearchStatus::budget_exceeded) {
            r.verdict = Verdict::budget;
        } else if (a.present() == b.present()) {
            r.verdict = Verdict::pass;
            r.witness = std::string("U25=") + (a.present() ? "yes" : "no") +
                        " U35=" + (b.present() ? "yes" : "no");
        } else {
            r.verdict = Verdict::fail;
            r.witness = std::string("U25=") + (a.present() ? "yes" : "no") +
                        " U35=" + (b.present() ? "yes" : "no");
        }
        r.ms = ms_since(t0);
        return r;
    });
}

std::vector<VerificationReport> verify_lem_deletable_point(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    static const std::vector<std::string> pattern_names = {
        "u25", "u35", "u26", "u36", "u46", "fano", "nonfano",
        "fano-dual", "nonfano-dual", "mk4", "p6", "p8"};
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!is_k_connected(m, 3))
            return vacuous_report("lem-2.2", e, "not 3-connected");

        VerificationReport r;
        r.claim = "lem-2.2";
        r.instance = e.provenance;
        int applicable = 0;
        std::ostringstream w;
        for (const auto& name : pattern_names) {
            Matroid n = catalog_matroid(name);
            if (n.size() < 4 || n.size() > m.size() || n.rank() >= m.rank()) continue;
            if (!has_minor(m, n, cfg.budget).present()) continue;
            ++applicable;
            bool found = false;
            for (int el = 0; el < m.size() && !found; ++el) {
                Matroid con = m.contraction(bit(el));
                if (con.loops() == con.ground().full()) continue;
                Matroid si = simplify(con).matroid;
                if (si.size() < n.size()) continue;
                if (is_k_connected(si, 3) && has_minor(si, n, cfg.budget).present()) {
                    found = true;
                    w << name << ":e=" << m.ground().label(el) << " ";
                }
            }
            if (!found) {
                r.verdict = Verdict::fail;
                r.witness = "no contractible element keeps a 3-connected " + name +
                            "-minor in the simplification";
                r.ms = ms_since(t0);
                return r;
            }
        }
        if (applicable == 0) return vacuous_report("lem-2.2", e, "no applicable minor N");
        r.verdict = Verdict::pass;
        r.witness = w.str();
        r.ms = ms_since(t0);
        return r;
    });
}

std::vector<VerificationReport> verify_lem_f7_f7star(const std::vector<PoolEntry>& pool,
                                                     const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!is_k_connected(m, 3))
            return vacuous_report("lem-2.3", e, "not 3-connected");
        auto f7 = has_minor(m, catalog_matroid("fano"), cfg.budget);
        if (!f7.present()) return vacuous_report("lem-2.3", e, "no F7-minor");
        auto u25 = has_minor(m, catalog_matroid("u25"), cfg.budget);
        if (u25.present()) return vacuous_report("lem-2.3", e, "has a U(2,5)-minor");

        VerificationReport r;
        r.claim = "lem-2.3";
        r.instance = e.provenance;
        bool iso = is_isomorphic(m, catalog_matroid("fano")).has_value();
        auto f7d = has_minor(m, catalog_matroid("fano-dual"), cfg.budget);
        if (iso || f7d.present()) {
            r.verdict = Verdict::pass;
            r.witness = iso ? "isomorphic to F7" : "has an F7*-minor";
        } else if (f7.status == SearchStatus::budget_exceeded ||
                   u25.status == SearchStatus::budget_exceeded ||
                   f7d.status == SearchStatus::budget_exceeded) {
            r.verdict = Verdict::budget;
        } else {
            r.verdict = Verdict::fail;
            r.witness = "F7-minor, no U25-minor, not F7, no F7*-minor";
        }
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------
// Lemma 3.1 (squished minor)

VerificationReport verify_lem_squished(const Matroid& m, Mask line, const Matroid& n0,
                                       const VerifierConfig& cfg) {
    const auto t0 = Clock::now();
    if (!m.is_simple() || !is_k_connected(m, 3))
        throw HypothesisViolated("M must be simple and 3-connected");
    if (m.rank(line) != 2 || !m.is_flat(line) || point_count(m, line) < 4 ||
        !is_modular_set(m, line))
        throw HypothesisViolated("L must be a modular line with at least 4 points");
    if (!n0.is_simple() || !is_k_connected(n0, 3))
        throw HypothesisViolated("N0 must be simple and 3-connected");
    if (!has_minor(m, n0, cfg.budget).present())
        throw HypothesisViolated("N0 must be a minor of M");

    VerificationReport r;
    r.claim = "lem-3.1";
    r.verdict = Verdict::fail;

    auto finish = [&](VerificationReport rep) {
        rep.ms = ms_since(t0);
        return rep;
    };

    if (n0.size() <= 2) {
        Matroid ml = m.restriction(line);
        if (has_minor(ml, n0, cfg.budget).present() && is_k_connected(ml, 3)) {
            r.verdict = Verdict::pass;
            r.witness = "N' = M|L";
        } else {
            r.witness = "M|L fails for a small N0";
        }
        return finish(r);
    }

    const Mask fm = m.ground().full();
    const Mask outside = fm & ~line;
    std::uint64_t nodes = 0;

    // Walk candidate minors N' = M / C' \ D' that keep M|L intact, smallest
    // removal first; inside each, ask for an N0-minor that never removes an
    // element outside L.
    const int n_out = popcount(outside);
    for (int removed = 0; removed <= n_out; ++removed) {
        for (int csz = 0; csz <= removed; ++csz) {
            const int dsz = removed - csz;
            bool stop = false;
            for_each_subset_of_size(outside, csz, [&](Mask con) {
                if (stop) return;
                if (!m.is_independent(con)) return;
                if (local_connectivity(m, con, line) != 0) return;  // keeps M|L
                for_each_subset_of_size(outside & ~con, dsz, [&](Mask del) {
                    if (stop) return;
                    if (++nodes > cfg.budget) {
                        r.verdict = Verdict::budget;
                        r.witness = "search budget exceeded";
                        stop = true;
                        return;
                    }
                    Matroid np = m.minor(con, del);
                    if (np.size() < n0.size()) return;
                    if (!is_k_connected(np, 3)) return;
                    Mask line_np = np.ground().mask_of(m.ground().labels_of(line));
                    MinorQuery q{np, n0, np.ground().full() & ~line_np, cfg.budget};
                    auto found = has_minor_using(q);
                    if (found.present()) {
                        r.verdict = Verdict::pass;
                        std::ostringstream w;
                        w << "N' = M / " << join_labels(m, con) << " \\ "
                          << join_labels(m, del) << ", N uses "
                          << (np.size() - popcount(line_np)) << "+ elements";
                        r.witness = w.str();
                        stop = true;
                    }
                });
            });
            if (stop || r.verdict == Verdict::pass) return finish(r);
        }
    }
    r.witness = "no qualifying minor N' found";
    return finish(r);
}

std::vector<VerificationReport> verify_lem_squished_pool(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    struct Triple {
        const PoolEntry* entry;
        Mask line;
        std::string n0_name;
        Matroid n0;
    };
    std::vector<Triple> triples;
    for (const auto& e : pool) {
        if (static_cast<int>(triples.size()) >= cfg.max_squished_triples) break;
        const Matroid& m = e.matroid;
        if (!m.is_simple() || !is_k_connected(m, 3)) continue;
        auto lines = modular_lines(m, 4);
        if (lines.empty()) continue;
        Mask line = lines.front();
        triples.push_back({&e, line, "self", m});
        triples.push_back({&e, line, "u11", uniform(1, 1)});
        if (has_minor(m, catalog_matroid("u25"), cfg.budget).present())
            triples.push_back({&e, line, "u25", catalog_matroid("u25")});
        if (has_minor(m, catalog_matroid("p6"), cfg.budget).present())
            triples.push_back({&e, line, "p6", catalog_matroid("p6")});
    }

    std::vector<VerificationReport> out;
    for (const auto& t : triples) {
        VerificationReport r = verify_lem_squished(t.entry->matroid, t.line, t.n0, cfg);
        r.instance = t.entry->provenance + " L=" +
                     join_labels(t.entry->matroid, t.line) + " N0=" + t.n0_name;
        out.push_back(std::move(r));
    }
    if (out.empty()) {
        VerificationReport r;
        r.claim = "lem-3.1";
        r.instance = "pool";
        r.verdict = Verdict::vacuous;
        r.witness = "no qualifying (M, L, N0) triple in the pool";
        out.push_back(std::move(r));
    }
    return out;
}

// --------------------------------------------------------------------------
// Lemma 4.1

std::vector<VerificationReport> verify_lem_fano_line(const std::vector<PoolEntry>& pool,
                                                     const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        Mask line = 0;
        if (!is_k_connected(m, 3))
            return vacuous_report("lem-4.1", e, "not 3-connected");
        if (!has_modular_line(m, 4, &line))
            return vacuous_report("lem-4.1", e, "no modular 4-point line");
        if (!has_minor(m, catalog_matroid("u25"), cfg.budget).present())
            return vacuous_report("lem-4.1", e, "no U(2,5)-minor");

        VerificationReport r;
        r.claim = "lem-4.1";
        r.instance = e.provenance;
        r.verdict = Verdict::fail;
        bool budget_hit = false;
        for_each_subset_of_size(line, 3, [&](Mask use) {
            if (r.verdict == Verdict::pass) return;
            MinorQuery q{m, catalog_matroid("fano"), use, cfg.budget};
            auto found = has_minor_using(q);
            if (found.status == SearchStatus::budget_exceeded) budget_hit = true;
            if (found.present()) {
                r.verdict = Verdict::pass;
                r.witness = "F7-minor using " + join_labels(m, use);
            }
        });
        if (r.verdict != Verdict::pass) {
            r.verdict = budget_hit ? Verdict::budget : Verdict::fail;
            if (r.verdict == Verdict::fail)
                r.witness = "no F7-minor uses three elements of " + join_labels(m, line);
        }
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------
// Lemma 5.3

namespace {

// F7-restrictions of host that contain `need`; returns the first subset
// found (value order) or 0.
Mask find_fano_restriction(const Matroid& host, Mask need, const std::string& fano_key) {
    if (host.rank() < 3) return 0;
    Mask found = 0;
    for_each_subset_of_size(host.ground().full() & ~need, 7 - popcount(need), [&](Mask rest) {
        if (found) return;
        Mask s = rest | need;
        Matroid sub = host.restriction(s);
        if (sub.rank() != 3 || sub.bases().size() != 28) return;
        if (canonical_key(sub) == fano_key) found = s;
    });
    return found;
}

}  // namespace

std::vector<VerificationReport> verify_lem_fano_no_extension(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    const std::string fano_key = canonical_key(catalog_matroid("fano"));
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!m.is_simple() || m.rank() != 3)
            return vacuous_report("lem-5.3", e, "not simple of rank 3");
        auto lines = modular_lines(m, 4);
        if (lines.empty())
            return vacuous_report("lem-5.3", e, "no modular 4-point line");

        VerificationReport r;
        r.claim = "lem-5.3";
        r.instance = e.provenance;
        r.verdict = Verdict::pass;
        int antecedent_true = 0;
        std::ostringstream w;
        for (Mask line : lines) {
            for_each_bit(line, [&](int x) {
                if (r.verdict == Verdict::fail) return;
                Matroid del = m.deletion(bit(x));
                Mask rest_line = del.ground().mask_of(
                    m.ground().labels_of(line & ~bit(x)));
                Mask p = find_fano_restriction(del, rest_line, fano_key);
                if (!p) return;
                ++antecedent_true;
                if (del.size() != 7) {
                    r.verdict = Verdict::fail;
                    w << "x=" << m.ground().label(x)
                      << ": M\\x has an F7-restriction using three elements of L "
                         "but extra elements remain";
                }
            });
        }
        if (r.verdict == Verdict::pass) {
            w << "bindings with F7-restriction antecedent: " << antecedent_true;
        }
        r.witness = w.str();
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------
// Lemmas 5.4 / 5.5

namespace {

std::vector<VerificationReport> verify_no_minor(const std::vector<PoolEntry>& pool,
                                                const VerifierConfig& cfg,
                                                const std::string& claim,
                                                const std::string& pattern) {
    return map_instances(pool, cfg, [&, claim, pattern](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        Mask line = 0;
        if (!is_k_connected(m, 3)) return vacuous_report(claim, e, "not 3-connected");
        if (!has_modular_line(m, 4, &line))
            return vacuous_report(claim, e, "no modular 4-point line");

        VerificationReport r;
        r.claim = claim;
        r.instance = e.provenance;
        auto found = has_minor(m, catalog_matroid(pattern), cfg.budget);
        if (found.status == SearchStatus::budget_exceeded) {
            r.verdict = Verdict::budget;
        } else if (found.present()) {
            r.verdict = Verdict::fail;
            std::string c, d;
            for (const auto& l : found.witness->contracted) c += l + ",";
            for (const auto& l : found.witness->deleted) d += l + ",";
            r.witness = pattern + "-minor via contract{" + c + "} delete{" + d + "}";
        } else {
            r.verdict = Verdict::pass;
            r.witness = "no " + pattern + "-minor";
        }
        r.ms = ms_since(t0);
        return r;
    });
}

}  // namespace

std::vector<VerificationReport> verify_lem_no_u26(const std::vector<PoolEntry>& pool,
                                                  const VerifierConfig& cfg) {
    return verify_no_minor(pool, cfg, "lem-5.4", "u26");
}

std::vector<VerificationReport> verify_lem_no_u46(const std::vector<PoolEntry>& pool,
                                                  const VerifierConfig& cfg) {
    return verify_no_minor(pool, cfg, "lem-5.5", "u46");
}

// --------------------------------------------------------------------------
// Lemmas 5.6 / 5.8 (P6 hypotheses)

namespace {

bool p6_hypothesis(const Matroid& m, const VerifierConfig& cfg) {
    return is_k_connected(m, 3) && !modular_lines(m, 4).empty() &&
           has_minor(m, catalog_matroid("p6"), cfg.budget).present();
}

}  // namespace

std::vector<VerificationReport> verify_lem_p6_rank4(const std::vector<PoolEntry>& pool,
                                                    const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!p6_hypothesis(m, cfg))
            return vacuous_report("lem-5.6", e,
                                  "not (3-connected + modular 4-point line + P6-minor)");
        // Minor-minimal: every single-element minor loses the hypothesis.
        for (int el = 0; el < m.size(); ++el) {
            if (m.size() <= 1) break;
            Matroid del = m.deletion(bit(el));
            if (p6_hypothesis(del, cfg))
                return vacuous_report("lem-5.6", e, "deletion keeps the hypothesis");
            Matroid con = m.contraction(bit(el));
            if (p6_hypothesis(con, cfg))
                return vacuous_report("lem-5.6", e, "contraction keeps the hypothesis");
        }
        VerificationReport r;
        r.claim = "lem-5.6";
        r.instance = e.provenance;
        if (m.rank() == 4) {
            r.verdict = Verdict::pass;
            r.witness = "minor-minimal with rank 4";
        } else {
            r.verdict = Verdict::fail;
            r.witness = "minor-minimal with rank " + std::to_string(m.rank());
        }
        r.ms = ms_since(t0);
        return r;
    });
}

std::vector<VerificationReport> verify_lem_p6_gives_nonfano(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!is_k_connected(m, 3)) return vacuous_report("lem-5.8", e, "not 3-connected");
        if (modular_lines(m, 4).empty())
            return vacuous_report("lem-5.8", e, "no modular 4-point line");
        auto p6m = has_minor(m, catalog_matroid("p6"), cfg.budget);
        if (!p6m.present()) return vacuous_report("lem-5.8", e, "no P6-minor");

        VerificationReport r;
        r.claim = "lem-5.8";
        r.instance = e.provenance;
        auto nf = has_minor(m, catalog_matroid("nonfano"), cfg.budget);
        if (nf.present()) {
            r.verdict = Verdict::pass;
            std::string c, d;
            for (const auto& l : nf.witness->contracted) c += l + ",";
            for (const auto& l : nf.witness->deleted) d += l + ",";
            r.witness = "F7--minor via contract{" + c + "} delete{" + d + "}";
        } else if (nf.status == SearchStatus::budget_exceeded) {
            r.verdict = Verdict::budget;
        } else {
            r.verdict = Verdict::fail;
            r.witness = "P6-minor and modular 4-point line but no F7--minor";
        }
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------
// Proposition 5.9

std::vector<VerificationReport> verify_prop_ternary_or_quaternary(
    const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    return map_instances(pool, cfg, [&](const PoolEntry& e) {
        const auto t0 = Clock::now();
        const Matroid& m = e.matroid;
        if (!is_k_connected(m, 3)) return vacuous_report("prop-5.9", e, "not 3-connected");
        if (modular_lines(m, 4).empty())
            return vacuous_report("prop-5.9", e, "no modular 4-point line");
        auto nf = has_minor(m, catalog_matroid("nonfano"), cfg.budget);
        auto nfd = has_minor(m, catalog_matroid("nonfano-dual"), cfg.budget);
        if (nf.present() || nfd.present())
            return vacuous_report("prop-5.9", e, "has an F7-- or (F7-)*-minor");

        VerificationReport r;
        r.claim = "prop-5.9";
        r.instance = e.provenance;
        Tri q = is_quaternary(m, cfg.budget);
        if (q == Tri::yes) {
            r.verdict = Verdict::pass;
            r.witness = "quaternary";
        } else {
            auto sub = is_minor_of(m, catalog_matroid("s5612"), cfg.budget);
            if (sub.present()) {
                r.verdict = Verdict::pass;
                r.witness = "isomorphic to a minor of S(5,6,12)";
            } else if (q == Tri::budget ||
                       sub.status == SearchStatus::budget_exceeded ||
                       nf.status == SearchStatus::budget_exceeded ||
                       nfd.status == SearchStatus::budget_exceeded) {
                r.verdict = Verdict::budget;
            } else {
                r.verdict = Verdict::fail;
                r.witness = "neither quaternary nor a minor of S(5,6,12)";
            }
        }
        r.ms = ms_since(t0);
        return r;
    });
}

// --------------------------------------------------------------------------

std::vector<VerificationReport> run_claim(const std::string& claim,
                                          const std::vector<PoolEntry>& pool,
                                          const VerifierConfig& cfg) {
    if (claim == "thm-1") return verify_thm_seymour(pool, cfg);
    if (claim == "thm-main") return verify_thm_main(pool, cfg);
    if (claim == "lem-2.1") return verify_lem_u25_u35(pool, cfg);
    if (claim == "lem-2.2") return verify_lem_deletable_point(pool, cfg);
    if (claim == "lem-2.3") return verify_lem_f7_f7star(pool, cfg);
    if (claim == "lem-3.1") return verify_lem_squished_pool(pool, cfg);
    if (claim == "lem-4.1") return verify_lem_fano_line(pool, cfg);
    if (claim == "lem-5.3") return verify_lem_fano_no_extension(pool, cfg);
    if (claim == "lem-5.4") return verify_lem_no_u26(pool, cfg);
    if (claim == "lem-5.5") return verify_lem_no_u46(pool, cfg);
    if (claim == "lem-5.6") return verify_lem_p6_rank4(pool, cfg);
    if (claim == "lem-5.8") return verify_lem_p6_gives_nonfano(pool, cfg);
    if (claim == "prop-5.9") return verify_prop_ternary_or_quaternary(pool, cfg);
    throw BadParameters("unknown claim: " + claim);
}

RunSummary run_all(const std::vector<PoolEntry>& pool, const VerifierConfig& cfg) {
    RunSummary out;
    for (const auto& claim : verifier_claims()) {
        auto reports = run_claim(claim, pool, cfg);
        ClaimSummary s;
        s.claim = claim;
        auto it = cfg.min_nonvacuous.find(claim);
        s.required_nonvacuous =
            it != cfg.min_nonvacuous.end() ? it->second : cfg.default_min_nonvacuous;
        for (const auto& r : reports) {
            switch (r.verdict) {
                case Verdict::pass: ++s.pass; break;
                case Verdict::fail: ++s.fail; break;
                case Verdict::vacuous: ++s.vacuous; break;
                case Verdict::budget: ++s.budget; break;
            }
        }
        s.coverage_ok = s.nonvacuous() >= s.required_nonvacuous;
        out.claims.push_back(s);
        out.reports.insert(out.reports.end(), reports.begin(), reports.end());
    }
    bool any_fail = false, any_budget = false, any_uncovered = false;
    for (const auto& s : out.claims) {
        if (s.fail) any_fail = true;
        if (s.budget) any_budget = true;
        if (!s.coverage_ok) any_uncovered = true;
    }
    out.exit_code = any_fail ? 1 : any_budget ? 2 : any_uncovered ? 3 : 0;
    return out;
}

}  // namespace matkit
