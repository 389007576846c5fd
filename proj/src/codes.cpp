#include "codes.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace apn {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

uint32_t weight_from_walsh(int64_t W, int n) {
    const int64_t sz = int64_t(1) << n;
    if (W < -sz || W > sz) throw ValidationError("Walsh value out of range");
    if (((sz - W) & 1) != 0) throw ValidationError("Walsh value parity violation");
    return static_cast<uint32_t>((sz - W) / 2);
}

// Packed generator rows of A_f: rows 0..n-1 carry the bits of x, rows n..2n-1
// the bits of f(x), columns x = 1..2^n-1.
static std::vector<std::vector<uint64_t>> generator_rows(const TruthTable& t) {
    const uint32_t sz = t.field.size();
    const int n = t.field.degree();
    const size_t words = (size_t(sz) - 1 + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(size_t(2) * n, std::vector<uint64_t>(words, 0));
    for (uint32_t x = 1; x < sz; ++x) {
        const size_t col = x - 1;
        for (int i = 0; i < n; ++i) {
            if ((x >> i) & 1) rows[size_t(i)][col >> 6] |= uint64_t(1) << (col & 63);
            if ((t.values[x] >> i) & 1) rows[size_t(n) + i][col >> 6] |= uint64_t(1) << (col & 63);
        }
    }
    return rows;
}

static uint32_t rank_of(std::vector<std::vector<uint64_t>> rows) {
    const size_t words = rows.empty() ? 0 : rows[0].size();
    uint32_t rank = 0;
    for (size_t w = 0; w < words; ++w) {
        for (int bit = 0; bit < 64; ++bit) {
            size_t piv = rank;
            while (piv < rows.size() && !((rows[piv][w] >> bit) & 1)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && ((rows[r][w] >> bit) & 1))
                    for (size_t ww = 0; ww < words; ++ww) rows[r][ww] ^= rows[rank][ww];
            }
            if (++rank == rows.size()) return rank;
        }
    }
    return rank;
}

uint32_t generator_rank(const TruthTable& t) { return rank_of(generator_rows(t)); }

WeightDistribution distribution_from_histogram(const TruthTable& t, const SpectrumHistogram& h) {
    const int n = t.field.degree();
    if (generator_rank(t) != uint32_t(2 * n))
        throw ValidationError("A_f has rank below 2n; codewords do not identify (a, b) pairs");
    WeightDistribution d;
    d.length = t.field.size() - 1;
    d.dim = uint32_t(2 * n);
    d.counts[0] = 1;                                   // (a, b) = (0, 0)
    d.counts[uint32_t(1) << (n - 1)] += d.length;      // b = 0, a != 0 rows are balanced
    for (const auto& [V, c] : h.counts) d.counts[weight_from_walsh(V, n)] += c;
    return d;
}

WeightDistribution distribution_from_spectrum(const TruthTable& t, int threads) {
    return distribution_from_histogram(t, full_spectrum(t, threads));
}

WeightDistribution distribution_direct(const TruthTable& t) {
    const int n = t.field.degree();
    if (n > 8) throw UnsupportedError("distribution_direct is guarded to n <= 8");
    auto rows = generator_rows(t);
    if (rank_of(rows) != uint32_t(2 * n))
        throw ValidationError("A_f has rank below 2n; codewords do not identify (a, b) pairs");
    const size_t words = rows[0].size();
    WeightDistribution d;
    d.length = t.field.size() - 1;
    d.dim = uint32_t(2 * n);
    // Gray-code walk over all 2^(2n) row combinations
    std::vector<uint64_t> cw(words, 0);
    d.counts[0] = 1;
    const uint64_t total = uint64_t(1) << (2 * n);
    uint64_t prev = 0;
    for (uint64_t i = 1; i < total; ++i) {
        const uint64_t g = i ^ (i >> 1);
        const int flip = std::countr_zero(g ^ prev);
        prev = g;
        uint32_t w = 0;
        for (size_t ww = 0; ww < words; ++ww) {
            cw[ww] ^= rows[size_t(flip)][ww];
            w += uint32_t(std::popcount(cw[ww]));
        }
        d.counts[w]++;
    }
    return d;
}

// Krawtchouk polynomial K_j(w) over length N, exact.
static cpp_int binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    cpp_int r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

static cpp_int krawtchouk(int j, int64_t w, int64_t N) {
    cpp_int acc = 0;
    for (int i = 0; i <= j; ++i) {
        const cpp_int term = binom(w, i) * binom(N - w, j - i);
        acc += (i % 2) ? -term : term;
    }
    return acc;
}

WeightDistribution pless_solve(int n, std::vector<int64_t> values) {
    if (n < kMinDegree || n > kMaxDegree) throw ValidationError("pless_solve: n out of range");
    if (values.size() > 5)
        throw ValidationError("pless_solve: more than five Walsh values are not determined");
    const int64_t N = (int64_t(1) << n) - 1;
    std::set<uint32_t> wset;
    for (int64_t V : values) {
        const uint32_t w = weight_from_walsh(V, n);
        if (w == 0 || int64_t(w) > N) throw ValidationError("pless_solve: weight out of code range");
        wset.insert(w);
    }
    wset.insert(uint32_t(1) << (n - 1));  // the b = 0 rows always contribute this weight
    const std::vector<uint32_t> weights(wset.begin(), wset.end());
    const size_t u = weights.size();
    if (u > 5) throw ValidationError("pless_solve: value set induces more than five weights");

    // Equations: sum a_w = 2^(2n) - 1 and sum a_w K_j(w) = -K_j(0), j = 1..4,
    // with the zero codeword counted separately.
    const size_t rows_n = 5;
    std::vector<std::vector<cpp_rational>> mat(rows_n, std::vector<cpp_rational>(u + 1));
    for (size_t c = 0; c < u; ++c) mat[0][c] = 1;
    mat[0][u] = cpp_rational((cpp_int(1) << (2 * n)) - 1);
    for (int j = 1; j <= 4; ++j) {
        for (size_t c = 0; c < u; ++c) mat[size_t(j)][c] = cpp_rational(krawtchouk(j, weights[c], N));
        mat[size_t(j)][u] = cpp_rational(-krawtchouk(j, 0, N));
    }

    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < u && rank < rows_n; ++col) {
        size_t piv = rank;
        while (piv < rows_n && mat[piv][col] == 0) ++piv;
        if (piv == rows_n) continue;
        std::swap(mat[rank], mat[piv]);
        const cpp_rational pv = mat[rank][col];
        for (auto& x : mat[rank]) x /= pv;
        for (size_t r = 0; r < rows_n; ++r) {
            if (r != rank && mat[r][col] != 0) {
                const cpp_rational f = mat[r][col];
                for (size_t c2 = 0; c2 <= u; ++c2) mat[r][c2] -= f * mat[rank][c2];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < u) throw ValidationError("pless_solve: singular system");
    for (size_t r = rank; r < rows_n; ++r)
        if (mat[r][u] != 0) throw ValidationError("pless_solve: inconsistent value set");

    WeightDistribution d;
    d.length = uint32_t(N);
    d.dim = uint32_t(2 * n);
    d.counts[0] = 1;
    for (size_t r = 0; r < rank; ++r) {
        const cpp_rational v = mat[r][u];
        if (denominator(v) != 1 || v < 0)
            throw ValidationError("pless_solve: solution is not a non-negative integer");
        const cpp_int count = numerator(v);
        if (count > 0) d.counts[weights[pivot_col[r]]] = count.convert_to<uint64_t>();
    }
    return d;
}

bool same_distribution(const WeightDistribution& a, const WeightDistribution& b) {
    if (a.length != b.length || a.dim != b.dim)
        throw ValidationError("same_distribution: incompatible code shapes");
    return a.counts == b.counts;
}

}  // namespace apn
