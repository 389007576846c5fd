#include "linearized.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

namespace apn {

LinearizedPoly make_linearized(const Field& field, const std::vector<std::pair<Elem, int64_t>>& raw) {
    const int n = field.degree();
    std::vector<Elem> coeff(n, 0);
    for (const auto& [c, e] : raw) {
        int r = static_cast<int>(e % n);
        if (r < 0) r += n;
        coeff[r] ^= c;
    }
    LinearizedPoly p;
    for (int e = 0; e < n; ++e)
        if (coeff[e]) p.terms.emplace_back(coeff[e], e);
    return p;
}

Elem eval_linearized(const Field& field, const LinearizedPoly& p, Elem x) {
    Elem acc = 0;
    for (const auto& [c, e] : p.terms) acc ^= field.mul(c, field.frobenius(x, e));
    return acc;
}

Gf2Matrix as_matrix(const Field& field, const LinearizedPoly& p) {
    Gf2Matrix m;
    m.n = field.degree();
    m.cols.resize(m.n);
    for (int j = 0; j < m.n; ++j) m.cols[j] = eval_linearized(field, p, Elem(1) << j);
    return m;
}

Elem apply_matrix(const Gf2Matrix& m, Elem x) {
    Elem acc = 0;
    for (int j = 0; j < m.n; ++j)
        if ((x >> j) & 1) acc ^= m.cols[j];
    return acc;
}

KernelInfo kernel(const Gf2Matrix& m) {
    // column reduction with identity trackers: a column that reduces to zero
    // hands its tracker over as a kernel basis vector
    std::vector<std::pair<Elem, Elem>> pivots;  // (reduced column, tracker)
    KernelInfo info;
    for (int j = 0; j < m.n; ++j) {
        Elem cur = m.cols[j], tag = Elem(1) << j;
        for (const auto& [pc, pt] : pivots) {
            const int lead = 31 - std::countl_zero(pc);
            if ((cur >> lead) & 1) {
                cur ^= pc;
                tag ^= pt;
            }
        }
        if (cur == 0)
            info.basis.push_back(tag);
        else
            pivots.emplace_back(cur, tag);
    }
    info.nullity = static_cast<int>(info.basis.size());
    return info;
}

KernelInfo kernel(const Field& field, const LinearizedPoly& p) {
    return kernel(as_matrix(field, p));
}

LinearizedPoly lb_family1(const Field& field, const FamilyParams& p, Elem b) {
    if (p.family != Family::Family1 || !p.validated)
        throw ValidationError("lb_family1: validated family1 parameters required");
    if (b == 0) throw ValidationError("lb_family1: b must be nonzero");
    const int n = field.degree();
    const int k = (p.i == 2) ? p.k : n - p.k;  // second shape: interchange k and -k
    const int s = p.s;
    const Elem ba = field.mul(b, p.alpha);
    return make_linearized(field, {
                                      {b, s},
                                      {field.frobenius(b, -s), -s},
                                      {field.frobenius(ba, k), -k + s},
                                      {field.frobenius(ba, -k - s), k - s},
                                  });
}

LinearizedPoly lb_family2(const Field& field, const FamilyParams& p, Elem b) {
    if (p.family != Family::Family2 || !p.validated)
        throw ValidationError("lb_family2: validated family2 parameters required");
    if (b == 0) throw ValidationError("lb_family2: b must be nonzero");
    const int k = p.k, s = p.s;
    const Elem ba = field.mul(b, p.alpha);
    return make_linearized(field, {
                                      {b, s},
                                      {field.frobenius(b, -s), -s},
                                      {field.frobenius(ba, p.m * k), 2 * k + s},
                                      {field.frobenius(ba, p.i * k - s), 2 * k - s},
                                  });
}

Gf2Matrix lb_generic_quadratic(const TruthTable& t, Elem b) {
    if (t.degree > 2)
        throw UnsupportedError("lb_generic_quadratic: table has algebraic degree " +
                               std::to_string(t.degree));
    const int n = t.field.degree();
    const Elem mb = t.field.component_mask(b);
    const Elem f0 = t.values[0];
    Gf2Matrix m;
    m.n = n;
    m.cols.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        const Elem ej = Elem(1) << j;
        Elem col = 0;
        for (int i = 0; i < n; ++i) {
            const Elem ei = Elem(1) << i;
            const Elem d = t.values[ei ^ ej] ^ t.values[ei] ^ t.values[ej] ^ f0;
            col |= Elem(parity(d & mb)) << i;
        }
        m.cols[j] = col;
    }
    return m;
}

static int nullity_for_b(const TruthTable& t, Elem b) {
    switch (t.params.family) {
        case Family::Family1: return kernel(t.field, lb_family1(t.field, t.params, b)).nullity;
        case Family::Family2: return kernel(t.field, lb_family2(t.field, t.params, b)).nullity;
        default: return kernel(lb_generic_quadratic(t, b)).nullity;
    }
}

KernelReport kernel_report(const TruthTable& t, int threads) {
    const bool dedicated = t.params.family == Family::Family1 || t.params.family == Family::Family2;
    if (!dedicated && t.degree > 2)
        throw UnsupportedError("kernel_report: table has algebraic degree " + std::to_string(t.degree));
    const uint32_t sz = t.field.size();
    const int n = t.field.degree();
    unsigned nw = threads > 0 ? unsigned(threads) : std::thread::hardware_concurrency();
    nw = std::clamp(nw, 1u, 16u);

    std::vector<std::vector<uint64_t>> partial(nw, std::vector<uint64_t>(size_t(n) + 1, 0));
    auto run = [&](unsigned w) {
        for (Elem b = 1 + w; b < sz; b += nw) partial[w][size_t(nullity_for_b(t, b))]++;
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nw; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& th : pool) th.join();

    KernelReport rep;
    rep.nullity_counts.assign(size_t(n) + 1, 0);
    for (const auto& part : partial)
        for (size_t i = 0; i <= size_t(n); ++i) rep.nullity_counts[i] += part[i];
    for (int i = n; i >= 0; --i) {
        if (rep.nullity_counts[size_t(i)]) {
            rep.max_nullity = i;
            break;
        }
    }
    return rep;
}

bool root_bound_check(const Field& field, int s, int d, int trials, uint64_t seed) {
    const int n = field.degree();
    if (std::gcd(s, n) != 1)
        throw ValidationError("root_bound_check: gcd(s, n) = 1 required");
    if (d < 0 || d >= n) throw ValidationError("root_bound_check: 0 <= d < n required");
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::pair<Elem, int64_t>> raw;
        for (int i = 0; i <= d; ++i) {
            Elem c = Elem(rng() & (field.size() - 1));
            if (i == d)
                while (c == 0) c = Elem(rng() & (field.size() - 1));
            raw.emplace_back(c, int64_t(s) * i);
        }
        if (kernel(field, make_linearized(field, raw)).nullity > d) return false;
    }
    return true;
}

}  // namespace apn
