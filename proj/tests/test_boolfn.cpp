#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolfn.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <random>
#include <string>

using namespace apn;

static FamilyParams fam(Family f, int n = 0, int k = 0, int s = 0) {
    FamilyParams p;
    p.family = f;
    p.n = n;
    p.k = k;
    p.s = s;
    return p;
}

// doctest in vendor/ predates Contains(); check the message by hand
template <typename E, typename Fn>
static void check_throws_containing(Fn&& fn, const char* needle) {
    try {
        fn();
        FAIL_CHECK("expected an exception mentioning '" << needle << "'");
    } catch (const E& e) {
        CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                      "message was: " << e.what());
    }
}

TEST_CASE("family1 validation") {
    Field f12(12);
    auto p = validate_params(f12, fam(Family::Family1, 0, 4, 1));
    CHECK(p.n == 12);
    CHECK(p.i == 1);
    CHECK(p.m == 2);
    CHECK(p.alpha == f12.pow(f12.primitive(), (1 << 4) - 1));

    check_throws_containing<ValidationError>([&] { validate_params(Field(9), fam(Family::Family1, 0, 3, 1)); }, "gcd(k, 3)");
    check_throws_containing<ValidationError>([&] { validate_params(f12, fam(Family::Family1, 0, 4, 2)); }, "gcd(s, 3k)");
    CHECK_THROWS_AS(static_cast<void>(validate_params(f12, fam(Family::Family1, 0, 3, 1))),
                    ValidationError);  // degree mismatch (n=9 family vs n=12 field)
}

TEST_CASE("family2 validation") {
    Field f12(12);
    auto p = validate_params(f12, fam(Family::Family2, 0, 3, 1));
    CHECK(p.i == 3);
    CHECK(p.m == 1);
    auto p7 = validate_params(f12, fam(Family::Family2, 0, 3, 7));
    CHECK(p7.i == 1);
    CHECK(p7.m == 3);
    check_throws_containing<ValidationError>([&] { validate_params(Field(16), fam(Family::Family2, 0, 4, 1)); }, "k odd");
    check_throws_containing<ValidationError>([&] { validate_params(f12, fam(Family::Family2, 0, 3, 3)); }, "gcd(s, 2k)");
}

TEST_CASE("family3 validation") {
    Field f6(6);
    auto p = validate_params(f6, fam(Family::Family3, 0, 3, 1));
    CHECK(p.alpha == f6.primitive());
    CHECK(p.gammas == std::vector<Elem>{0, 0});

    check_throws_containing<ValidationError>([&] { validate_params(Field(8), fam(Family::Family3, 0, 4, 1)); }, "k odd");
    check_throws_containing<ValidationError>([&] { validate_params(f6, fam(Family::Family3, 0, 3, 2)); }, "s odd");
    auto relaxed = fam(Family::Family3, 0, 3, 2);
    relaxed.relax_family3 = true;
    CHECK_NOTHROW(static_cast<void>(validate_params(f6, relaxed)));

    auto bad_gamma = fam(Family::Family3, 0, 3, 1);
    bad_gamma.gammas = {0x2, 0x0};  // 0x2 generates GF(64), not in GF(8)
    check_throws_containing<ValidationError>([&] { validate_params(f6, bad_gamma); }, "not in GF(2^3)");

    auto bad_len = fam(Family::Family3, 0, 3, 1);
    bad_len.gammas = {0x0};
    check_throws_containing<ValidationError>([&] { validate_params(f6, bad_len); }, "expected 2 gammas");

    auto bad_alpha = fam(Family::Family3, 0, 3, 1);
    bad_alpha.alpha = 1;
    check_throws_containing<ValidationError>([&] { validate_params(f6, bad_alpha); }, "alpha must be primitive");

    // seeded gammas land in the subfield and are reproducible
    auto seeded = fam(Family::Family3, 0, 3, 1);
    seeded.gamma_seed = 42;
    auto s1 = validate_params(f6, seeded);
    auto s2 = validate_params(f6, seeded);
    CHECK(s1.gammas == s2.gammas);
    for (Elem g : s1.gammas) CHECK(f6.in_subfield(g, 3));
}

TEST_CASE("family5 validation") {
    Field f12(12);
    auto p = validate_params(f12, fam(Family::Family5, 0, 4, 5));
    CHECK(p.u == f12.primitive());
    CHECK(p.v == 1);
    check_throws_containing<ValidationError>([&] { validate_params(f12, fam(Family::Family5, 0, 4, 1)); }, "3 | (k + s)");
    auto bad_v = fam(Family::Family5, 0, 4, 5);
    bad_v.v = f12.primitive();  // primitive element is never in a proper subfield
    bad_v.v_set = true;
    check_throws_containing<ValidationError>([&] { validate_params(f12, bad_v); }, "v must lie");
}

TEST_CASE("gold and custom validation") {
    Field f6(6);
    auto g = fam(Family::Gold, 6);
    g.gold_d = 2;  // gcd(2, 6) = 2
    check_throws_containing<ValidationError>([&] { validate_params(f6, g); }, "gcd(d, n)");
    g.gold_d = 1;
    CHECK_NOTHROW(static_cast<void>(validate_params(f6, g)));

    auto c = fam(Family::Custom, 6);
    CHECK_THROWS_AS(static_cast<void>(validate_params(f6, c)), ValidationError);
    c.monomials = {{1, 0}};
    check_throws_containing<ValidationError>([&] { validate_params(f6, c); }, "positive");
}

TEST_CASE("dillon defaults pin the native representation") {
    CHECK(default_poly(Family::Dillon, 6) == 0x5b);
    Field native(6, 0x5b);
    auto p = validate_params(native, fam(Family::Dillon, 6));
    CHECK(p.u == 0x2);
    CHECK(p.u == native.primitive());

    // in any other representation the default u is the smallest root of 0x5b
    Field other(6, 0x43);
    auto q = validate_params(other, fam(Family::Dillon, 6));
    CHECK(q.u == 0x7);
    Elem e = q.u;
    CHECK((other.pow(e, 6) ^ other.pow(e, 4) ^ other.pow(e, 3) ^ e ^ 1) == 0);
}

TEST_CASE("evaluate basics") {
    Field f6(6);
    auto gold = validate_params(f6, [&] {
        auto p = fam(Family::Gold, 6);
        p.gold_d = 1;
        return p;
    }());
    CHECK(evaluate(f6, gold, 1) == 1);
    CHECK(evaluate(f6, gold, 0) == 0);

    Field f5(5);
    auto g2 = validate_params(f5, [&] {
        auto p = fam(Family::Gold, 5);
        p.gold_d = 2;
        return p;
    }());
    CHECK(evaluate(f5, g2, f5.primitive()) == f5.pow(f5.primitive(), 5));

    Field f7(7);
    auto f4p = validate_params(f7, fam(Family::Family4, 7));
    CHECK(evaluate(f7, f4p, 0) == 0);

    Field f12(12);
    auto f1p = validate_params(f12, fam(Family::Family1, 0, 4, 1));
    CHECK(evaluate(f12, f1p, 0) == 0);
    CHECK(evaluate(f12, f1p, 1) == (1 ^ f1p.alpha));
}

TEST_CASE("build equals evaluate pointwise") {
    struct Case {
        Family f;
        int n, k, s, d;
    };
    for (const Case& c : {Case{Family::Family1, 0, 4, 1, 0}, Case{Family::Family3, 0, 3, 1, 0},
                          Case{Family::Family4, 9, 0, 0, 0}, Case{Family::Gold, 10, 0, 0, 3}}) {
        auto p = fam(c.f, c.n, c.k, c.s);
        p.gold_d = c.d;
        Field field(family_degree(p));
        auto t = build(field, p);
        for (Elem x = 0; x < field.size(); ++x) CHECK(t.values[x] == evaluate(field, t.params, x));
        CHECK(t.values[0] == 0);
    }
}

TEST_CASE("differential uniformity") {
    Field f5(5);
    auto gold = fam(Family::Gold, 5);
    gold.gold_d = 1;
    auto t = build(f5, gold);
    CHECK(differential_uniformity(t) == 2);
    CHECK(is_apn(t));

    // linearized map: every derivative is constant
    auto sq = fam(Family::Custom, 5);
    sq.monomials = {{1, 2}};
    auto t2 = build(f5, sq);
    CHECK(differential_uniformity(t2) == 32);
    CHECK_FALSE(is_apn(t2));

    // x^5 on GF(16)
    Field f4(4);
    auto x5 = fam(Family::Custom, 4);
    x5.monomials = {{1, 5}};
    CHECK(differential_uniformity(build(f4, x5)) == 4);
}

TEST_CASE("dillon is a quadratic APN counterexample") {
    Field native(6, 0x5b);
    auto t = build(native, fam(Family::Dillon, 6));
    CHECK(differential_uniformity(t) == 2);
    CHECK(algebraic_degree(t) == 2);
}

TEST_CASE("algebraic degree") {
    Field f6(6);
    auto gold = fam(Family::Gold, 6);
    gold.gold_d = 1;
    CHECK(build(f6, gold).degree == 2);

    auto id = fam(Family::Custom, 6);
    id.monomials = {{1, 1}};
    CHECK(build(f6, id).degree == 1);

    Field f7(7);
    CHECK(build(f7, fam(Family::Family4, 7)).degree == 2);

    Field f4(4);
    auto cube = fam(Family::Custom, 4);
    cube.monomials = {{1, 7}};  // binary weight 3
    CHECK(build(f4, cube).degree == 3);
}

TEST_CASE("family instances at small n are quadratic APN") {
    struct Case {
        Family f;
        int n, k, s;
    };
    for (const Case& c : {Case{Family::Family3, 0, 3, 1}, Case{Family::Family4, 6, 0, 0},
                          Case{Family::Family4, 7, 0, 0}, Case{Family::Family4, 8, 0, 0}}) {
        Field field(family_degree(fam(c.f, c.n, c.k, c.s)));
        auto t = build(field, fam(c.f, c.n, c.k, c.s));
        CHECK(is_apn(t));
        CHECK(t.degree == 2);
    }
    // family3 with random subfield gammas stays APN
    auto p = fam(Family::Family3, 0, 3, 1);
    p.gamma_seed = 17;
    auto t = build(Field(6), p);
    CHECK(is_apn(t));
    CHECK(t.degree == 2);
}

TEST_CASE("table files round-trip") {
    Field f6(6);
    auto p = fam(Family::Family3, 0, 3, 1);
    p.gamma_seed = 5;
    auto t = build(f6, p);

    for (auto fmt : {TableFormat::Binary, TableFormat::Hex}) {
        char path[64];
        std::snprintf(path, sizeof(path), "tt_roundtrip_%d.tbl", int(fmt));
        write_table(t, path, fmt);
        auto r = read_table(path);
        CHECK(r.values == t.values);
        CHECK(r.field.poly() == t.field.poly());
        CHECK(r.field.primitive() == t.field.primitive());
        CHECK(r.params.family == t.params.family);
        CHECK(r.params.k == t.params.k);
        CHECK(r.params.s == t.params.s);
        CHECK(r.params.gammas == t.params.gammas);
        CHECK(r.degree == t.degree);
        std::remove(path);
    }
    CHECK_THROWS_AS(read_table("does_not_exist.tbl"), IoError);
}
