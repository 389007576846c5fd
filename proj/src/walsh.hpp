#pragma once

#include "boolfn.hpp"

#include <map>
#include <optional>

namespace apn {

// Exact multiset of Walsh values over all (a, b) with b != 0.
struct SpectrumHistogram {
    int n = 0;
    std::map<int64_t, uint64_t> counts;
    uint64_t total() const;
};

// Naive O(2^n) character sum; the oracle walsh_row is checked against.
// b = 0 is permitted (needed on the coding side).
int64_t walsh_point(const TruthTable& t, Elem a, Elem b);

// All 2^n transform values for one b via the fast Walsh-Hadamard transform of
// the sign table x -> (-1)^Tr(b f(x)). Indices are character labels; as a
// multiset the row equals { walsh_point(a, b) : a }. Intermediate sums stay
// within +-2^n, so 32-bit accumulators are exact for every supported degree.
std::vector<int32_t> walsh_row(const TruthTable& t, Elem b);

void fwht_inplace(std::vector<int32_t>& v);

SpectrumHistogram full_spectrum(const TruthTable& t, int threads = 0);

std::vector<int64_t> spectrum_values(const SpectrumHistogram& h);
int64_t nonlinearity(const SpectrumHistogram& h);  // 2^(n-1) - max|V|/2
bool is_almost_bent(const SpectrumHistogram& h, int n);

// The value set the family's proved spectrum statement asserts at this
// degree; empty for families without one.
std::optional<std::vector<int64_t>> predicted_spectrum(Family f, int n);

}  // namespace apn
