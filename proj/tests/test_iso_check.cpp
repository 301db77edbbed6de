#include "krc/iso_check.hpp"
#include "krc/kr_crystal.hpp"

#include <doctest.h>

using namespace krc;

TEST_CASE("restricted isomorphisms") {
    const AffineType t = AffineType::parse("D4~1");
    const KRCrystal k = KRCrystal::build(t, 2, 1);
    const CrystalGraph& g = k.graph();
    const std::vector<int> classical{1, 2, 3, 4};
    const IsoResult self = restricted_isomorphism(g, g, classical);
    REQUIRE(self.map);
    for (int v = 0; v < g.size(); ++v) CHECK((*self.map)[v] == v);

    const std::vector<int> perm = shuffled_ids(g.size(), 7);
    const CrystalGraph copy = relabel(g, perm);
    const IsoResult iso = restricted_isomorphism(g, copy, classical);
    REQUIRE(iso.map);
    CHECK(*iso.map == perm);
    CHECK(check_preserves(g, copy, *iso.map, {0}).empty());
    std::vector<int> wrong = perm;
    std::swap(wrong[0], wrong[1]);
    CHECK_FALSE(check_preserves(g, copy, wrong, {1}).empty());
    for (int v = 0; v < g.size(); ++v) CHECK(copy.words[perm[v]] == g.words[v]);

    // same size, same highest weight labels, different arrows
    const KRCrystal d4 = KRCrystal::build(t, 1, 1);
    const KRCrystal c4 = KRCrystal::build(AffineType::parse("A7~2"), 1, 1);
    const IsoResult none = restricted_isomorphism(d4.graph(), c4.graph(), classical);
    CHECK_FALSE(none.map);
    CHECK_FALSE(none.witness.empty());
    CHECK_FALSE(restricted_isomorphism(d4.graph(), g, classical).map);
    // B(varpi_1) over {2,3,4} has two trivial components
    CHECK_THROWS_AS(restricted_isomorphism(d4.graph(), d4.graph(), {2, 3, 4}), AmbiguousMatching);
}

TEST_CASE("automorphism counting") {
    // a 2-cycle of 0-arrows can be rotated
    CrystalGraph two;
    two.rank = 1;
    two.words = {{1}, {2}};
    two.f = {{1, 0}, {-1, -1}};
    two.rebuild_index();
    two.rebuild_inverse();
    CHECK(count_automorphisms(two) == 2);
    const KRCrystal k = KRCrystal::build(AffineType::parse("B3~1"), 1, 2);
    CHECK(count_automorphisms(k.graph()) == 1);
    // without the 0-arrows the classical components can be swapped only when equal
    CrystalGraph g = k.graph();
    g.f[0].assign(g.size(), -1);
    g.rebuild_inverse();
    CHECK(count_automorphisms(g) == 1);
}

TEST_CASE("rigidity") {
    for (auto [name, r, s] : {std::tuple{"D4~1", 1, 1}, {"D4~1", 2, 2}, {"B3~1", 2, 1}, {"A5~2", 3, 1}}) {
        const AffineType t = AffineType::parse(name);
        const KRCrystal k = KRCrystal::build(t, r, s);
        const RigidityReport rep = verify_prop61(t, k.graph());
        CAPTURE(name);
        CHECK(rep.pass());
        CHECK(rep.automorphisms == 1);
    }
    const AffineType t = AffineType::parse("D4~1");
    KRCrystal k = KRCrystal::build(t, 1, 1);
    CrystalGraph& g = k.mutable_graph();
    // redirect 1bar -0-> 2 to 1bar -0-> 3
    const int onebar = g.find({-1}), two = g.find({2}), three = g.find({3});
    REQUIRE(g.f[0][onebar] == two);
    g.f[0][onebar] = three;
    g.rebuild_inverse();
    const RigidityReport bad = verify_prop61(t, g);
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.witness.empty());
}
