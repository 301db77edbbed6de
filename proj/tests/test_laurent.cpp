#include "krc/laurent.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using krc::LaurentPoly;

TEST_CASE("q-integers") {
    CHECK(krc::q_integer(2, 2).str() == "q + q^(-1)");
    CHECK(krc::q_integer(0, 2).is_zero());
    CHECK(krc::q_integer(3, 1) == LaurentPoly::parse("q + 1 + q^(-1)"));
    CHECK_THROWS(krc::q_integer(2, 0));
    CHECK_THROWS(krc::q_integer(2, -1));
    CHECK(krc::q_integer_signed(-2, 2) == -krc::q_integer(2, 2));
}

TEST_CASE("q-binomials") {
    CHECK(krc::q_binomial(3, 0, 2) == LaurentPoly(1));
    CHECK(krc::q_binomial(2, 1, 2) == LaurentPoly::parse("q + q^(-1)"));
    CHECK(krc::q_binomial(4, 2, 2) == LaurentPoly::parse("q^4 + q^2 + 2 + q^(-2) + q^(-4)"));
    CHECK_THROWS(krc::q_binomial(2, 3, 2));
    for (int k : {1, 2, 4})
        for (int l = 0; l <= 9; ++l)
            for (int m = 0; m <= l; ++m) {
                const LaurentPoly b = krc::q_binomial(l, m, k);
                CHECK(b == oracle::pascal_binomial(l, m, k));
                CHECK(b == krc::q_binomial(l, l - m, k));
                if (m >= 1) CHECK(krc::in_one_plus_qsA(b.shifted(k * m * (l - m))));
            }
    for (int k : {1, 2, 4})
        for (int m = 1; m <= 8; ++m) CHECK(krc::in_one_plus_qsA(krc::q_integer(m, k).shifted(k * (m - 1))));
}

TEST_CASE("exact division rejects remainders") {
    CHECK_THROWS_AS(LaurentPoly::parse("q^2 + 1").exact_div(LaurentPoly::parse("q + 1")), std::domain_error);
    const LaurentPoly a = LaurentPoly::parse("q^3 - 2*q + q^(-1/2)");
    const LaurentPoly b = LaurentPoly::parse("q^(1/2) + 3");
    CHECK((a * b).exact_div(b) == a);
}

TEST_CASE("lattice membership") {
    CHECK(krc::in_shifted_lattice(LaurentPoly::parse("q^2 + 1"), 0));
    CHECK_FALSE(krc::in_shifted_lattice(LaurentPoly::parse("q^(-1)"), 0));
    CHECK(krc::in_shifted_lattice(LaurentPoly(), 5));
    CHECK(krc::in_one_plus_qsA(LaurentPoly::parse("q^2 + 1")));
    CHECK_FALSE(krc::in_one_plus_qsA(LaurentPoly::parse("q + q^(-1)")));
    CHECK(krc::in_one_plus_qsA(LaurentPoly(1)));
    CHECK_FALSE(krc::in_one_plus_qsA(LaurentPoly::parse("2 + q")));
    CHECK(krc::in_one_plus_qsA(LaurentPoly::parse("q^(1/2) + 1")));
    CHECK_FALSE(krc::in_one_plus_qsA(LaurentPoly::parse("q^(1/2) + 1"), 2));
    CHECK(krc::in_one_plus_qsA(LaurentPoly::parse("q + 1"), 2));
}

TEST_CASE("text form round trip") {
    for (const char* s : {"q^2 + 1", "q^(3/2) - q^(-1/2)", "-3*q^(-2) + 0", "q", "7", "0"}) {
        const LaurentPoly p = LaurentPoly::parse(s);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    CHECK(LaurentPoly::parse("q^(3/2) - q^(-1/2)").str() == "q^(3/2) - q^(-1/2)");
    CHECK_THROWS(LaurentPoly::parse("q^^2"));
    CHECK_THROWS(LaurentPoly::parse(""));
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ex(-6, 6), co(-5, 5), len(0, 4);
    auto rnd = [&] {
        LaurentPoly p;
        for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(ex(rng), co(rng));
        return p;
    };
    for (int it = 0; it < 200; ++it) {
        const LaurentPoly a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * LaurentPoly(1) == a);
        CHECK((a * b).shifted(3) == a.shifted(3) * b);
        const LaurentPoly ab = a * b;
        for (const auto& [e, v] : ab.terms()) CHECK(v != 0);
    }
}
