#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linearized.hpp"
#include "oracles.hpp"
#include "walsh.hpp"

#include <random>
#include <set>

using namespace apn;

TEST_CASE("make_linearized normalizes terms") {
    Field f(6);
    auto p = make_linearized(f, {{3, 1}, {3, 7}, {5, 2}});  // exponents 1 and 7 collide mod 6
    CHECK(p.terms.size() == 1);
    CHECK(p.terms[0] == std::pair<Elem, int>{5, 2});
    auto z = make_linearized(f, {{3, 0}, {3, 0}});
    CHECK(z.terms.empty());
    auto neg = make_linearized(f, {{1, -2}});
    CHECK(neg.terms[0].second == 4);
}

TEST_CASE("as_matrix reproduces the map pointwise") {
    Field f(8);
    auto ident = make_linearized(f, {{1, 0}});
    auto mi = as_matrix(f, ident);
    for (int j = 0; j < 8; ++j) CHECK(mi.cols[size_t(j)] == Elem(1) << j);

    auto frob = make_linearized(f, {{1, 1}});
    auto mf = as_matrix(f, frob);
    for (Elem x = 0; x < f.size(); ++x) {
        Elem y = x;
        for (int rep = 0; rep < 8; ++rep) y = apply_matrix(mf, y);
        CHECK(y == x);  // frobenius applied n times is the identity
    }

    std::mt19937_64 rng(21);
    Field f10(10);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<Elem, int64_t>> raw;
        for (int i = 0; i < 3; ++i) raw.emplace_back(Elem(rng() & 0x3ff), int64_t(rng() % 10));
        auto p = make_linearized(f10, raw);
        auto m = as_matrix(f10, p);
        for (Elem x = 0; x < f10.size(); ++x) CHECK(apply_matrix(m, x) == eval_linearized(f10, p, x));
    }
}

TEST_CASE("kernel basics") {
    Field f(6);
    CHECK(kernel(f, make_linearized(f, {{1, 0}})).nullity == 0);

    // u^2 + u: kernel is GF(2)
    auto k1 = kernel(f, make_linearized(f, {{1, 1}, {1, 0}}));
    CHECK(k1.nullity == 1);
    CHECK(k1.basis == std::vector<Elem>{1});

    // u^4 + u over GF(2^6): kernel = GF(4)
    auto k2 = kernel(f, make_linearized(f, {{1, 2}, {1, 0}}));
    CHECK(k2.nullity == 2);
}

TEST_CASE("kernel nullity equals exhaustive root count") {
    std::mt19937_64 rng(33);
    for (int n : {4, 6, 7, 9, 10}) {
        Field f(n);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::pair<Elem, int64_t>> raw;
            const int terms = 1 + int(rng() % 3);
            for (int i = 0; i < terms; ++i)
                raw.emplace_back(Elem(rng() & (f.size() - 1)), int64_t(rng() % uint64_t(n)));
            auto p = make_linearized(f, raw);
            auto k = kernel(f, p);
            CHECK((uint64_t(1) << k.nullity) == oracle::root_count(f, p));
        }
    }
}

TEST_CASE("kernel basis spans exactly the root set") {
    Field f(6);
    auto p = make_linearized(f, {{1, 2}, {1, 0}});
    auto k = kernel(f, p);
    std::set<Elem> span{0};
    for (Elem b : k.basis) {
        std::set<Elem> next = span;
        for (Elem v : span) next.insert(v ^ b);
        span = next;
    }
    CHECK(span.size() == (size_t(1) << k.nullity));
    for (Elem v : span) CHECK(eval_linearized(f, p, v) == 0);
}

TEST_CASE("lb_family1: kernel bound and properties") {
    Field f12(12);
    std::mt19937_64 rng(4);
    for (int s : {1, 5, 7, 11}) {
        FamilyParams p;
        p.family = Family::Family1;
        p.k = 4;
        p.s = s;
        p = validate_params(f12, p);
        int maxnull = 0;
        for (Elem b = 1; b < f12.size(); ++b) {
            auto lb = lb_family1(f12, p, b);
            maxnull = std::max(maxnull, kernel(f12, lb).nullity);
            if (b < 16) {
                CHECK(eval_linearized(f12, lb, 0) == 0);
                const Elem x = Elem(rng() & 0xfff), y = Elem(rng() & 0xfff);
                CHECK(eval_linearized(f12, lb, x ^ y) ==
                      (eval_linearized(f12, lb, x) ^ eval_linearized(f12, lb, y)));
            }
        }
        CHECK(maxnull <= 2);
    }
    FamilyParams p;
    p.family = Family::Family1;
    p.k = 4;
    p.s = 1;
    p = validate_params(f12, p);
    CHECK_THROWS_AS(lb_family1(f12, p, 0), ValidationError);
}

TEST_CASE("lb_family2: kernel bound") {
    Field f12(12);
    for (int s : {1, 5, 7, 11}) {
        FamilyParams p;
        p.family = Family::Family2;
        p.k = 3;
        p.s = s;
        p = validate_params(f12, p);
        int maxnull = 0;
        for (Elem b = 1; b < f12.size(); ++b)
            maxnull = std::max(maxnull, kernel(f12, lb_family2(f12, p, b)).nullity);
        CHECK(maxnull <= 2);
    }
}

TEST_CASE("dedicated builders agree with the generic bilinear form") {
    Field f12(12);
    std::mt19937_64 rng(11);
    for (auto [famly, k, s] : {std::tuple{Family::Family1, 4, 1}, {Family::Family1, 4, 5},
                               {Family::Family2, 3, 1}, {Family::Family2, 3, 7}}) {
        FamilyParams p;
        p.family = famly;
        p.k = k;
        p.s = s;
        auto t = build(f12, p);
        for (int trial = 0; trial < 64; ++trial) {
            const Elem b = 1 + Elem(rng() % (f12.size() - 1));
            const int dedicated = famly == Family::Family1
                                      ? kernel(f12, lb_family1(f12, t.params, b)).nullity
                                      : kernel(f12, lb_family2(f12, t.params, b)).nullity;
            CHECK(dedicated == kernel(lb_generic_quadratic(t, b)).nullity);
        }
    }
}

TEST_CASE("generic quadratic kernels for gold and dillon") {
    for (int n : {5, 7}) {
        Field f(n);
        FamilyParams p;
        p.family = Family::Gold;
        p.n = n;
        p.gold_d = 1;
        auto t = build(f, p);
        for (Elem b = 1; b < f.size(); ++b) CHECK(kernel(lb_generic_quadratic(t, b)).nullity == 1);
    }

    Field f6(6, 0x5b);
    FamilyParams dillon;
    dillon.family = Family::Dillon;
    auto t = build(f6, dillon);
    int maxnull = 0;
    for (Elem b = 1; b < f6.size(); ++b)
        maxnull = std::max(maxnull, kernel(lb_generic_quadratic(t, b)).nullity);
    CHECK(maxnull >= 3);  // forced by the 7-valued spectrum

    FamilyParams cubic;
    cubic.family = Family::Custom;
    cubic.n = 6;
    cubic.monomials = {{1, 7}};  // degree 3
    auto t3 = build(f6, cubic);
    CHECK_THROWS_AS(lb_generic_quadratic(t3, 1), UnsupportedError);
}

TEST_CASE("squaring identity: W(a,b)^2 = 2^n * signed kernel sum") {
    Field f12(12);
    FamilyParams p;
    p.family = Family::Family1;
    p.k = 4;
    p.s = 1;
    auto t = build(f12, p);
    const int n = 12;
    const int e1 = t.params.s % n;
    const int ik = (t.params.i * t.params.k) % n;
    const int mks = (t.params.m * t.params.k + t.params.s) % n;

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 12; ++trial) {
        const Elem a = Elem(rng() & 0xfff);
        const Elem b = 1 + Elem(rng() % (f12.size() - 1));
        auto k = kernel(f12, lb_family1(f12, t.params, b));
        std::vector<Elem> span{0};
        for (Elem bs : k.basis) {
            const size_t cur = span.size();
            for (size_t i = 0; i < cur; ++i) span.push_back(span[i] ^ bs);
        }
        int64_t sum = 0;
        const Elem ba = f12.mul(b, t.params.alpha);
        for (Elem u : span) {
            if (u == 0) {
                sum += 1;
                continue;
            }
            int e = f12.trace(f12.mul(a, u));
            e ^= f12.trace(f12.mul(b, f12.mul(f12.frobenius(u, e1), u)));
            e ^= f12.trace(f12.mul(ba, f12.mul(f12.frobenius(u, ik), f12.frobenius(u, mks))));
            sum += e ? -1 : 1;
        }
        const int64_t W = walsh_point(t, a, b);
        CHECK(W * W == (int64_t(1) << n) * sum);
    }
}

TEST_CASE("kernel_report") {
    Field f12(12);
    FamilyParams p;
    p.family = Family::Family1;
    p.k = 4;
    p.s = 1;
    auto t = build(f12, p);
    auto rep = kernel_report(t, 2);
    CHECK(rep.max_nullity == 2);
    uint64_t total = 0;
    for (uint64_t c : rep.nullity_counts) total += c;
    CHECK(total == f12.size() - 1);

    // deterministic across thread counts
    auto rep1 = kernel_report(t, 1);
    CHECK(rep1.nullity_counts == rep.nullity_counts);
}

TEST_CASE("root_bound_check") {
    CHECK(root_bound_check(Field(7), 3, 2, 1000, 1234));
    CHECK(root_bound_check(Field(7), 1, 0, 200, 99));  // unit maps have trivial kernel
    CHECK_THROWS_AS(root_bound_check(Field(6), 2, 2, 10, 5), ValidationError);
    CHECK_THROWS_AS(root_bound_check(Field(6), 1, 6, 10, 5), ValidationError);
}
