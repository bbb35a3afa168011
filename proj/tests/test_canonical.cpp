#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

#include "matkit/canonical.hpp"
#include "matkit/catalog.hpp"
#include "oracle.hpp"

using namespace matkit;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(42);
    for (const auto& name :
         {"u25", "fano", "nonfano", "p6", "p8", "mk4", "dowling-z2", "spike4"}) {
        Matroid m = catalog_matroid(name);
        auto base = canonical_key(m);
        for (int i = 0; i < 4; ++i) {
            Matroid shuffled = m.permuted(random_perm(m.size(), rng));
            CHECK(canonical_key(shuffled) == base);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic matroids") {
    CHECK(canonical_key(uniform(2, 5)) != canonical_key(uniform(3, 5)));
    CHECK(canonical_key(fano()) != canonical_key(non_fano()));
    CHECK(canonical_key(p8()) != canonical_key(p8_double_prime()));
}

TEST_CASE("is_isomorphic returns a basis-preserving bijection") {
    Matroid a = uniform(2, 5);
    Matroid b = uniform(3, 5).dual();
    auto iso = is_isomorphic(a, b);
    REQUIRE(iso.has_value());
    for (Mask basis : a.bases()) {
        std::vector<std::string> image;
        for (const auto& l : a.ground().labels_of(basis)) image.push_back(iso->at(l));
        CHECK(b.is_basis(b.ground().mask_of(image)));
    }

    CHECK_FALSE(is_isomorphic(fano(), non_fano()).has_value());
}

TEST_CASE("dowling over the trivial group is the K4 cycle matroid") {
    Matroid q = dowling_q3(GroupTable::trivial());
    Matroid k4 = mk4();
    CHECK(is_isomorphic(q, k4).has_value());
    // independent confirmation over all 6! bijections
    auto brute = oracle::brute_force_isomorphism(oracle::from_matroid(q),
                                                 oracle::from_matroid(k4));
    CHECK(brute.has_value());
}

TEST_CASE("p8 is self-dual up to isomorphism") {
    Matroid m = p8();
    CHECK(canonical_key(m) == canonical_key(m.dual()));
}

TEST_CASE("canonical form of the Steiner system matroid is stable") {
    Matroid s = steiner_s5612();
    std::mt19937 rng(5);
    Matroid shuffled = s.permuted(random_perm(12, rng));
    CHECK(canonical_key(s) == canonical_key(shuffled));
}

TEST_CASE("shared values tolerate concurrent queries") {
    // lazy tables, circuits, flats and canonical forms are memoized behind
    // once-flags; hammer one shared value from several threads
    Matroid m = p8();
    std::vector<std::thread> threads;
    std::vector<std::string> keys(6);
    std::vector<std::size_t> circuit_counts(6);
    for (int t = 0; t < 6; ++t)
        threads.emplace_back([&, t] {
            keys[t] = canonical_key(m);
            circuit_counts[t] = m.circuits().size();
            (void)m.flats().size();
            (void)m.rank(m.ground().full() >> 1);
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 6; ++t) {
        CHECK(keys[t] == keys[0]);
        CHECK(circuit_counts[t] == circuit_counts[0]);
    }
}
