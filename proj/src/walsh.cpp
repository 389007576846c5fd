#include "walsh.hpp"

#include <algorithm>
#include <thread>

namespace apn {

uint64_t SpectrumHistogram::total() const {
    uint64_t s = 0;
    for (const auto& [v, c] : counts) {
        (void)v;
        s += c;
    }
    return s;
}

int64_t walsh_point(const TruthTable& t, Elem a, Elem b) {
    const Elem ma = t.field.component_mask(a);
    const Elem mb = t.field.component_mask(b);
    const uint32_t sz = t.field.size();
    int64_t acc = 0;
    for (uint32_t x = 0; x < sz; ++x)
        acc += 1 - 2 * parity((x & ma) ^ (t.values[x] & mb));
    return acc;
}

void fwht_inplace(std::vector<int32_t>& v) {
    const size_t sz = v.size();
    for (size_t h = 1; h < sz; h <<= 1) {
        for (size_t i = 0; i < sz; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                const int32_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

std::vector<int32_t> walsh_row(const TruthTable& t, Elem b) {
    const uint32_t sz = t.field.size();
    const Elem mb = t.field.component_mask(b);
    std::vector<int32_t> row(sz);
    for (uint32_t x = 0; x < sz; ++x) row[x] = 1 - 2 * parity(t.values[x] & mb);
    fwht_inplace(row);
    return row;
}

SpectrumHistogram full_spectrum(const TruthTable& t, int threads) {
    const uint32_t sz = t.field.size();
    const int n = t.field.degree();
    unsigned nw = threads > 0 ? unsigned(threads) : std::thread::hardware_concurrency();
    nw = std::clamp(nw, 1u, 64u);
    if (nw > sz - 1) nw = sz - 1;

    // dense per-worker histograms indexed by (W + 2^n) / 2; merged keywise, so
    // the result is independent of the schedule
    std::vector<std::vector<uint64_t>> partial(nw, std::vector<uint64_t>(size_t(sz) + 1, 0));
    auto run = [&](unsigned w) {
        std::vector<int32_t> row(sz);
        auto& hist = partial[w];
        for (Elem b = 1 + w; b < sz; b += nw) {
            const Elem mb = t.field.component_mask(b);
            for (uint32_t x = 0; x < sz; ++x) row[x] = 1 - 2 * parity(t.values[x] & mb);
            fwht_inplace(row);
            for (uint32_t x = 0; x < sz; ++x) hist[size_t(uint32_t(row[x] + int32_t(sz)) >> 1)]++;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nw; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& th : pool) th.join();

    SpectrumHistogram h;
    h.n = n;
    for (const auto& part : partial) {
        for (size_t idx = 0; idx <= sz; ++idx) {
            if (part[idx])
                h.counts[int64_t(idx) * 2 - int64_t(sz)] += part[idx];
        }
    }
    return h;
}

std::vector<int64_t> spectrum_values(const SpectrumHistogram& h) {
    std::vector<int64_t> vals;
    for (const auto& [v, c] : h.counts)
        if (c) vals.push_back(v);
    return vals;
}

int64_t nonlinearity(const SpectrumHistogram& h) {
    if (h.counts.empty()) throw ValidationError("nonlinearity of an empty spectrum");
    int64_t maxabs = 0;
    for (const auto& [v, c] : h.counts) {
        (void)c;
        maxabs = std::max(maxabs, v < 0 ? -v : v);
    }
    return (int64_t(1) << (h.n - 1)) - maxabs / 2;
}

bool is_almost_bent(const SpectrumHistogram& h, int n) {
    if (n % 2 == 0) return false;
    const int64_t peak = int64_t(1) << ((n + 1) / 2);
    for (const auto& [v, c] : h.counts) {
        (void)c;
        if (v != 0 && v != peak && v != -peak) return false;
    }
    return true;
}

std::optional<std::vector<int64_t>> predicted_spectrum(Family f, int n) {
    switch (f) {
        case Family::Family1:
        case Family::Family2:
        case Family::Family3:
        case Family::Family4:
        case Family::Gold:
            break;
        default:
            return std::nullopt;  // family 5 is the open problem; Dillon has no value-set formula
    }
    if (n % 2) {
        const int64_t p = int64_t(1) << ((n + 1) / 2);
        return std::vector<int64_t>{-p, 0, p};
    }
    const int64_t lo = int64_t(1) << (n / 2);
    const int64_t hi = int64_t(1) << ((n + 2) / 2);
    return std::vector<int64_t>{-hi, -lo, 0, lo, hi};
}

}  // namespace apn
