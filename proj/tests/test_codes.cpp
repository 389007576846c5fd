#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codes.hpp"
#include "oracles.hpp"

#include <random>

using namespace apn;

static TruthTable make(Family fam, int n, int k = 0, int s = 0, int d = 1, uint64_t poly = 0) {
    FamilyParams p;
    p.family = fam;
    p.n = n;
    p.k = k;
    p.s = s;
    p.gold_d = d;
    if (fam == Family::Dillon && poly == 0) poly = default_poly(fam, 6);
    return build(Field(n, poly), p);
}

TEST_CASE("weight_from_walsh") {
    CHECK(weight_from_walsh(1 << 6, 6) == 0);  // the zero codeword corner
    CHECK(weight_from_walsh(16, 6) == 24);
    CHECK(weight_from_walsh(-16, 6) == 40);
    CHECK(weight_from_walsh(0, 6) == 32);  // balanced linear form, b = 0 rows
    CHECK_THROWS_AS(weight_from_walsh(3, 6), ValidationError);
    CHECK_THROWS_AS(weight_from_walsh(130, 6), ValidationError);

    // against a direct count on gold x^3 over GF(2^6)
    auto t = make(Family::Gold, 6);
    for (Elem a = 0; a < 16; ++a)
        for (Elem b = 1; b < 16; ++b)
            CHECK(weight_from_walsh(walsh_point(t, a, b), 6) == oracle::codeword_weight(t, a, b));
}

TEST_CASE("generator rank") {
    CHECK(generator_rank(make(Family::Gold, 5)) == 10);
    CHECK(generator_rank(make(Family::Gold, 8)) == 16);

    FamilyParams zero;
    zero.family = Family::Custom;
    zero.n = 4;
    zero.monomials = {{0, 1}};  // f == 0: the b-rows vanish
    auto t = build(Field(4), zero);
    CHECK(generator_rank(t) == 4);
    CHECK_THROWS_AS(distribution_direct(t), ValidationError);
    CHECK_THROWS_AS(distribution_from_spectrum(t), ValidationError);
}

TEST_CASE("gold n=5 weight distribution") {
    auto t = make(Family::Gold, 5);
    auto d = distribution_from_spectrum(t);
    CHECK(d.length == 31);
    CHECK(d.dim == 10);
    CHECK(d.counts == std::map<uint32_t, uint64_t>{{0, 1}, {12, 310}, {16, 527}, {20, 186}});
    CHECK(same_distribution(d, distribution_direct(t)));
}

TEST_CASE("distribution_direct matches the spectrum route") {
    CHECK(same_distribution(distribution_direct(make(Family::Gold, 3)),
                            distribution_from_spectrum(make(Family::Gold, 3))));
    for (int n : {5, 6, 7}) {
        auto gold = make(Family::Gold, n);
        CHECK(same_distribution(distribution_direct(gold), distribution_from_spectrum(gold)));
        auto f4 = make(Family::Family4, n);
        CHECK(same_distribution(distribution_direct(f4), distribution_from_spectrum(f4)));
    }
    CHECK_THROWS_AS(distribution_direct(make(Family::Gold, 9, 0, 0, 2)), UnsupportedError);
}

TEST_CASE("distribution invariants") {
    for (int n : {5, 6}) {
        auto d = distribution_from_spectrum(make(Family::Family4, n));
        uint64_t total = 0, weighted = 0;
        for (const auto& [w, c] : d.counts) {
            CHECK(w <= d.length);
            total += c;
            weighted += c * w;
        }
        CHECK(total == uint64_t(1) << (2 * n));
        CHECK(weighted == (uint64_t(1) << (2 * n - 1)) * ((uint64_t(1) << n) - 1));
    }
}

TEST_CASE("dillon has more distinct nonzero weights than gold at n = 6") {
    auto dd = distribution_from_spectrum(make(Family::Dillon, 6));
    auto dg = distribution_from_spectrum(make(Family::Gold, 6, 0, 0, 1, 0x5b));
    CHECK(dd.counts.size() > dg.counts.size());
    CHECK_FALSE(same_distribution(dd, dg));
}

TEST_CASE("pless solve reproduces empirical distributions") {
    auto d5 = pless_solve(5, {0, 8, -8});
    CHECK(same_distribution(d5, distribution_from_spectrum(make(Family::Gold, 5))));

    auto d6 = pless_solve(6, {0, 8, -8, 16, -16});
    CHECK(same_distribution(d6, distribution_direct(make(Family::Gold, 6))));

    CHECK_THROWS_AS(pless_solve(6, {0, 4, -4}), ValidationError);
    CHECK_THROWS_AS(pless_solve(6, {0, 8, -8, 16, -16, 32}), ValidationError);
    CHECK_THROWS_AS(pless_solve(6, {3}), ValidationError);
}

TEST_CASE("family distributions at a shared degree equal gold's") {
    for (int n : {6, 7}) {
        auto f4 = distribution_from_spectrum(make(Family::Family4, n));
        auto g = distribution_from_spectrum(make(Family::Gold, n));
        CHECK(same_distribution(f4, g));
    }
    auto f3 = distribution_from_spectrum(make(Family::Family3, 6, 3, 1));
    CHECK(same_distribution(f3, distribution_from_spectrum(make(Family::Gold, 6))));
}

TEST_CASE("same_distribution shape mismatch") {
    auto a = distribution_from_spectrum(make(Family::Gold, 5));
    auto b = distribution_from_spectrum(make(Family::Gold, 6));
    CHECK_THROWS_AS(same_distribution(a, b), ValidationError);
    CHECK(same_distribution(a, a));
}

TEST_CASE("quartet criterion is equivalent to APN") {
    auto gold5 = make(Family::Gold, 5);
    CHECK(is_apn(gold5));
    CHECK_FALSE(oracle::quartet_exists(gold5));

    FamilyParams x5;
    x5.family = Family::Custom;
    x5.n = 4;
    x5.monomials = {{1, 5}};
    auto t = build(Field(4), x5);
    CHECK_FALSE(is_apn(t));
    CHECK(oracle::quartet_exists(t));

    auto dillon = make(Family::Dillon, 6);
    CHECK(is_apn(dillon));
    CHECK_FALSE(oracle::quartet_exists(dillon));
}
