#pragma once

#include "boolfn.hpp"

namespace apn {

// 2-polynomial sum_i c_i * u^(2^(e_i)); exponents reduced mod n, duplicate
// exponents merged by XOR of coefficients, zero coefficients dropped.
struct LinearizedPoly {
    std::vector<std::pair<Elem, int>> terms;
};

LinearizedPoly make_linearized(const Field& field, const std::vector<std::pair<Elem, int64_t>>& raw);
Elem eval_linearized(const Field& field, const LinearizedPoly& p, Elem x);

// n x n matrix over GF(2); cols[j] = image of the basis element x^j.
struct Gf2Matrix {
    int n = 0;
    std::vector<Elem> cols;
};

Gf2Matrix as_matrix(const Field& field, const LinearizedPoly& p);
Elem apply_matrix(const Gf2Matrix& m, Elem x);

struct KernelInfo {
    int nullity = 0;
    std::vector<Elem> basis;
};

KernelInfo kernel(const Gf2Matrix& m);
KernelInfo kernel(const Field& field, const LinearizedPoly& p);

// The four-term polynomial whose roots square-bound the Walsh values of
// families 1 and 2: b*u^(2^s) + (b*u)^(2^-s) + two alpha terms. The second
// shape of each family reuses the first with k replaced by n-k.
LinearizedPoly lb_family1(const Field& field, const FamilyParams& p, Elem b);
LinearizedPoly lb_family2(const Field& field, const FamilyParams& p, Elem b);

// Gram matrix of (x, u) -> Tr(b*(f(x+u)+f(x)+f(u)+f(0))) on the basis; its
// kernel equals the kernel of the family L_b for any quadratic table.
// Throws UnsupportedError when the table has algebraic degree > 2.
Gf2Matrix lb_generic_quadratic(const TruthTable& t, Elem b);

// Per-b kernel nullity histogram over all b != 0. Families 1 and 2 use their
// dedicated builders; any other quadratic table goes through the Gram matrix.
struct KernelReport {
    std::vector<uint64_t> nullity_counts;  // index = nullity
    int max_nullity = 0;
};

KernelReport kernel_report(const TruthTable& t, int threads = 0);

// Draws `trials` random polynomials sum_{i<=d} r_i x^(2^(s*i)) with r_d != 0
// and checks that each has at most 2^d roots, i.e. kernel dimension at most d.
// Requires gcd(s, n) = 1.
bool root_bound_check(const Field& field, int s, int d, int trials, uint64_t seed);

}  // namespace apn
