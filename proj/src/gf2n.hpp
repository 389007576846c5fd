#pragma once

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apn {

// Element of GF(2^n) in the polynomial basis: bit i = coefficient of x^i.
using Elem = uint32_t;

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 24;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parity(uint64_t v) { return std::popcount(v) & 1; }

// Polynomials over GF(2) as bitmasks, bit i = coefficient of x^i.
int poly_degree(uint64_t p);
uint64_t poly_mod(uint64_t a, uint64_t m);
bool poly_irreducible(uint64_t p);
uint64_t smallest_irreducible(int n);

std::string mask_to_hex(uint64_t p);
uint64_t mask_from_hex(const std::string& s);  // throws ValidationError on garbage

// A concrete representation of GF(2^n): reduction polynomial plus a chosen
// primitive element. Immutable after construction; all operations are pure.
class Field {
  public:
    // poly == 0 selects the lexicographically smallest irreducible of degree n,
    // primitive == 0 the smallest element of multiplicative order 2^n - 1.
    explicit Field(int n, uint64_t poly = 0, Elem primitive = 0);

    int degree() const { return n_; }
    uint32_t size() const { return 1u << n_; }
    uint64_t poly() const { return poly_; }
    uint64_t order() const { return order_; }
    Elem primitive() const { return primitive_; }
    const std::vector<std::pair<uint64_t, int>>& order_factors() const { return factors_; }

    static Elem add(Elem x, Elem y) { return x ^ y; }
    Elem mul(Elem x, Elem y) const;
    Elem sqr(Elem x) const { return mul(x, x); }

    // x^(e mod 2^n-1) for nonzero x; 0^e = 0 for e > 0, error otherwise.
    Elem pow(Elem x, int64_t e) const;
    Elem inv(Elem x) const { return pow(x, -1); }

    // x^(2^(i mod n)); negative i means the inverse automorphism.
    Elem frobenius(Elem x, int i) const;

    int trace(Elem x) const { return parity(x & trace_mask_); }

    bool is_primitive(Elem x) const;
    uint64_t multiplicative_order(Elem x) const;

    // Mask m with Tr(b*y) == parity(y & m) for all y.
    Elem component_mask(Elem b) const;

    // True iff x lies in the subfield GF(2^k) (requires k | n).
    bool in_subfield(Elem x, int k) const { return frobenius(x, k) == x; }

  private:
    int n_;
    uint64_t poly_;
    uint64_t order_;
    Elem primitive_;
    Elem trace_mask_;
    std::vector<std::pair<uint64_t, int>> factors_;
};

}  // namespace apn
