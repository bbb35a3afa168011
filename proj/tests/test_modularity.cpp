#include <doctest.h>

#include "matkit/canonical.hpp"
#include "matkit/catalog.hpp"
#include "matkit/connectivity.hpp"
#include "matkit/minor.hpp"
#include "matkit/modularity.hpp"

using namespace matkit;

namespace {

Mask lbl(const Matroid& m, std::initializer_list<const char*> labels) {
    std::vector<std::string> v;
    for (const char* l : labels) v.emplace_back(l);
    return m.ground().mask_of(v);
}

}  // namespace

TEST_CASE("modular sets") {
    Matroid f7 = fano();
    for (Mask line : f7.lines()) CHECK(is_modular_set(f7, line));
    CHECK(is_modular_set(f7, f7.ground().full()));

    Matroid u36 = uniform(3, 6);
    auto viol = modular_violation(u36, lbl(u36, {"a", "b"}));
    REQUIRE(viol.has_value());
    CHECK(*viol == lbl(u36, {"c", "d"}));
}

TEST_CASE("modular set persistence properties") {
    Matroid f7 = fano();
    CHECK(modular_set_minor_property_check(f7, f7.lines().front()).verdict ==
          Verdict::pass);
    CHECK(modular_set_minor_property_check(f7, f7.ground().full()).verdict ==
          Verdict::pass);

    Matroid u36 = uniform(3, 6);
    CHECK_THROWS_AS(modular_set_minor_property_check(u36, lbl(u36, {"a", "b"})),
                    NotModular);

    // deletion persistence across every modular line of the spike extension
    Matroid ext = spike_extension10();
    for (Mask l : modular_lines(ext, 4))
        CHECK(modular_set_minor_property_check(ext, l).verdict == Verdict::pass);
}

TEST_CASE("modular lines of named matroids") {
    CHECK(modular_lines(dowling_q3(GroupTable::cyclic(2)), 4).size() == 3);
    CHECK(modular_lines(p8_double_prime(), 4).empty());

    Matroid ext = spike_extension10();
    Mask line = lbl(ext, {"t", "x4", "y4", "e"});
    auto found = modular_lines(ext, 4);
    CHECK(std::find(found.begin(), found.end(), line) != found.end());
}

TEST_CASE("circuit hyperplanes") {
    Matroid f7 = fano();
    auto chs = circuit_hyperplanes(f7);
    CHECK(chs.size() == 7);
    for (Mask c : chs) CHECK(popcount(c) == 3);

    CHECK(circuit_hyperplanes(uniform(2, 5)).empty());

    // P8 has a unique disjoint pair
    auto p8chs = circuit_hyperplanes(p8());
    int disjoint_pairs = 0;
    for (std::size_t i = 0; i < p8chs.size(); ++i)
        for (std::size_t j = i + 1; j < p8chs.size(); ++j)
            if (!(p8chs[i] & p8chs[j])) ++disjoint_pairs;
    CHECK(disjoint_pairs == 1);
}

TEST_CASE("relaxation") {
    Matroid f7 = fano();
    Matroid nf = relax(f7, circuit_hyperplanes(f7).front());
    CHECK(nf.bases().size() == f7.bases().size() + 1);
    CHECK(nf.rank() == f7.rank());
    CHECK(is_isomorphic(nf, non_fano()).has_value());
    CHECK(nf.triangles().size() == 6);

    CHECK_THROWS_AS(relax(f7, lbl(f7, {"a", "b"})), NotCircuitHyperplane);

    // every relaxation adds exactly one basis and keeps the rank
    for (const auto& name : {"p8", "spike4"}) {
        Matroid m = catalog_matroid(name);
        for (Mask ch : circuit_hyperplanes(m)) {
            Matroid r = relax(m, ch);
            CHECK(r.bases().size() == m.bases().size() + 1);
            CHECK(r.rank() == m.rank());
        }
    }
}

TEST_CASE("modular cuts") {
    Matroid f7 = fano();
    // principal cut of a hyperplane is always modular
    Mask h = f7.hyperplanes().front();
    ModularCut cut = principal_filter_cut(f7, {h});
    CHECK(cut.contains(h));
    CHECK(cut.contains(f7.ground().full()));

    // two 2-point flats of U(3,6) form a modular pair whose intersection is
    // excluded from the raw filter
    Matroid u36 = uniform(3, 6);
    Mask f1 = lbl(u36, {"a", "b"}), f2 = lbl(u36, {"a", "c"});
    CHECK_THROWS_AS(principal_filter_cut(u36, {f1, f2}), NotAModularCut);
    // the forced closure always yields a valid cut
    ModularCut closed = modular_cut_closure(u36, {f1, f2});
    CHECK(closed.contains(lbl(u36, {"a"})));

    CHECK_THROWS_AS(principal_filter_cut(u36, {lbl(u36, {"a", "b", "c"})}),
                    BadParameters);  // not a flat
}

TEST_CASE("single-element extension") {
    Matroid u24 = uniform(2, 4);

    // empty cut: new element is a coloop
    Matroid co = extend(u24, ModularCut(u24, {}), "z");
    CHECK(co.rank() == 3);
    CHECK(co.coloops() == bit(4));

    // cut of all flats: new element is a loop
    ModularCut all(u24, u24.flats());
    Matroid lo = extend(u24, all, "z");
    CHECK(lo.rank() == 2);
    CHECK(lo.loops() == bit(4));

    // restriction to the original ground set is the original matroid
    Matroid f7 = fano();
    ModularCut cut = principal_filter_cut(f7, {f7.hyperplanes().front()});
    Matroid ext = extend(f7, cut, "z");
    CHECK(ext.restriction(full_mask(7)) == f7);
    CHECK_THROWS_AS(extend(f7, cut, "a"), LabelCollision);
}

TEST_CASE("generalized parallel connection") {
    Matroid f7 = fano();
    std::vector<std::string> fl2 = {"h1", "h2", "h3", "h4", "h5", "h6", "h7"};
    Matroid f7b = f7.with_labels(fl2);

    auto tri = f7.ground().labels_of(circuit_hyperplanes(f7).front());
    auto trib = f7b.ground().labels_of(circuit_hyperplanes(f7b).front());
    std::vector<std::pair<std::string, std::string>> ident;
    for (int i = 0; i < 3; ++i) ident.push_back({tri[i], trib[i]});

    Matroid glued = generalized_parallel_connection(f7, f7b, ident);
    CHECK(glued.size() == 11);
    CHECK(glued.rank() == 4);
    CHECK(glued.restriction(full_mask(7)) == f7);

    // gluing a bare triangle onto a triangle of M(K4) returns M(K4)
    Matroid k4 = mk4();
    Matroid u23 = uniform(2, 3).with_labels({"z1", "z2", "z3"});
    auto ktri = k4.ground().labels_of(k4.triangles().front());
    Matroid same = generalized_parallel_connection(
        k4, u23, {{ktri[0], "z1"}, {ktri[1], "z2"}, {ktri[2], "z3"}});
    CHECK(same == k4);

    // three independent elements of U(3,6) are not a triangle
    Matroid u36 = uniform(3, 6);
    CHECK_THROWS_AS(generalized_parallel_connection(
                        k4, u36, {{ktri[0], "a"}, {ktri[1], "b"}, {ktri[2], "c"}}),
                    NotATriangle);
}

TEST_CASE("gpc of a ternary-and-quaternary partner with the Fano plane") {
    // U(2,4) is both ternary and quaternary and is its own 4-point line;
    // connecting the Fano plane across one of its triangles gives a
    // 3-connected quaternary matroid with a modular 4-point line that is
    // not ternary.
    Matroid u24 = uniform(2, 4).with_labels({"m1", "m2", "m3", "m4"});
    Matroid f7 = fano();
    auto tri = f7.ground().labels_of(circuit_hyperplanes(f7).front());
    Matroid glued = generalized_parallel_connection(
        u24, f7, {{"m1", tri[0]}, {"m2", tri[1]}, {"m3", tri[2]}});
    CHECK(glued.size() == 8);
    CHECK(is_k_connected(glued, 3));
    CHECK_FALSE(modular_lines(glued, 4).empty());
    CHECK(is_quaternary(glued) == Tri::yes);
    CHECK(is_ternary(glued) == Tri::no);
}
