#include "gf2n.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace apn {

int poly_degree(uint64_t p) {
    return p ? 63 - std::countl_zero(p) : -1;
}

uint64_t poly_mod(uint64_t a, uint64_t m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (a && da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

bool poly_irreducible(uint64_t p) {
    const int n = poly_degree(p);
    if (n < 1) return false;
    if ((p & 1) == 0) return n == 1;  // divisible by x
    // trial division by every polynomial of degree 1..n/2
    for (int dd = 1; dd <= n / 2; ++dd) {
        for (uint64_t d = uint64_t(1) << dd; d < (uint64_t(2) << dd); ++d) {
            if (poly_mod(p, d) == 0) return false;
        }
    }
    return true;
}

uint64_t smallest_irreducible(int n) {
    if (n < 1 || n > kMaxDegree)
        throw ValidationError("no default polynomial for degree " + std::to_string(n));
    for (uint64_t c = 1; c < (uint64_t(1) << n); c += 2) {
        const uint64_t p = (uint64_t(1) << n) | c;
        if (poly_irreducible(p)) return p;
    }
    throw ValidationError("no irreducible polynomial of degree " + std::to_string(n));
}

std::string mask_to_hex(uint64_t p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(p));
    return buf;
}

uint64_t mask_from_hex(const std::string& s) {
    std::string t = s;
    if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
    if (t.empty() || t.size() > 16) throw ValidationError("bad hex mask: '" + s + "'");
    uint64_t v = 0;
    for (char c : t) {
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw ValidationError("bad hex mask: '" + s + "'");
        v = (v << 4) | uint64_t(c <= '9' ? c - '0' : (std::tolower(c) - 'a' + 10));
    }
    return v;
}

static std::vector<std::pair<uint64_t, int>> factorize(uint64_t m) {
    std::vector<std::pair<uint64_t, int>> fs;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fs.emplace_back(d, e);
        }
    }
    if (m > 1) fs.emplace_back(m, 1);
    return fs;
}

Field::Field(int n, uint64_t poly, Elem primitive) : n_(n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw ValidationError("field degree must be in [" + std::to_string(kMinDegree) + ", " +
                              std::to_string(kMaxDegree) + "], got " + std::to_string(n));
    if (poly == 0) {
        poly_ = smallest_irreducible(n);
    } else {
        if (poly_degree(poly) != n)
            throw ValidationError("reduction polynomial " + mask_to_hex(poly) +
                                  " does not have degree " + std::to_string(n));
        if (!poly_irreducible(poly))
            throw ValidationError("reduction polynomial " + mask_to_hex(poly) + " is reducible");
        poly_ = poly;
    }
    order_ = (uint64_t(1) << n) - 1;
    factors_ = factorize(order_);

    trace_mask_ = 0;
    for (int j = 0; j < n; ++j) {
        // trace of the basis element x^j, computed by the defining power sum
        Elem acc = 0, y = Elem(1) << j;
        for (int i = 0; i < n; ++i) {
            acc ^= y;
            y = mul(y, y);
        }
        if (acc > 1) throw ValidationError("trace of basis element not in GF(2)");
        trace_mask_ |= acc << j;
    }

    if (primitive == 0) {
        Elem t = 2;
        while (t < size() && !is_primitive(t)) ++t;
        if (t >= size()) throw ValidationError("no primitive element found");  // unreachable
        primitive_ = t;
    } else {
        if (primitive >= size())
            throw ValidationError("primitive element out of range");
        if (!is_primitive(primitive))
            throw ValidationError("element " + mask_to_hex(primitive) +
                                  " does not have multiplicative order 2^n - 1");
        primitive_ = primitive;
    }
}

Elem Field::mul(Elem x, Elem y) const {
    uint64_t acc = 0, a = x;
    while (y) {
        if (y & 1) acc ^= a;
        a <<= 1;
        y >>= 1;
    }
    for (int d = 2 * n_ - 2; d >= n_; --d) {
        if ((acc >> d) & 1) acc ^= poly_ << (d - n_);
    }
    return static_cast<Elem>(acc);
}

Elem Field::pow(Elem x, int64_t e) const {
    if (x == 0) {
        if (e <= 0) throw ValidationError("0 raised to a non-positive exponent");
        return 0;
    }
    const int64_t ord = static_cast<int64_t>(order_);
    e %= ord;
    if (e < 0) e += ord;
    Elem r = 1, base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem x, int i) const {
    int r = i % n_;
    if (r < 0) r += n_;
    while (r--) x = mul(x, x);
    return x;
}

bool Field::is_primitive(Elem x) const {
    if (x == 0) return false;
    for (const auto& [p, e] : factors_) {
        (void)e;
        if (pow(x, static_cast<int64_t>(order_ / p)) == 1) return false;
    }
    return true;
}

uint64_t Field::multiplicative_order(Elem x) const {
    if (x == 0) throw ValidationError("0 has no multiplicative order");
    uint64_t ord = order_;
    for (const auto& [p, e] : factors_) {
        for (int i = 0; i < e; ++i) {
            if (pow(x, static_cast<int64_t>(ord / p)) == 1)
                ord /= p;
            else
                break;
        }
    }
    return ord;
}

Elem Field::component_mask(Elem b) const {
    Elem m = 0;
    for (int j = 0; j < n_; ++j) m |= Elem(trace(mul(b, Elem(1) << j))) << j;
    return m;
}

}  // namespace apn
