#pragma once

#include "walsh.hpp"

namespace apn {

// Weight distribution of the code generated by the rows of A_f: length
// 2^n - 1, dimension 2n, one codeword x -> Tr(ax + b f(x)) per pair (a, b).
struct WeightDistribution {
    uint32_t length = 0;
    uint32_t dim = 0;
    std::map<uint32_t, uint64_t> counts;  // weight -> number of codewords
};

// w = (2^n - W) / 2: the weight of the codeword whose full character sum is W
// (the x = 0 coordinate contributes +1 and is absent from the code).
uint32_t weight_from_walsh(int64_t W, int n);

// Rank of the 2n x (2^n - 1) generator matrix A_f over GF(2).
uint32_t generator_rank(const TruthTable& t);

WeightDistribution distribution_from_spectrum(const TruthTable& t, int threads = 0);
WeightDistribution distribution_from_histogram(const TruthTable& t, const SpectrumHistogram& h);

// Materializes all 2^(2n) codewords; the oracle for the spectrum route.
// Guarded to n <= 8.
WeightDistribution distribution_direct(const TruthTable& t);

// Solves the first five Pless power moments (b_0 = 1, b_1 = ... = b_4 = 0)
// for the multiplicities of the candidate weights induced by the given Walsh
// value set plus the forced weight 2^(n-1). Exact rational arithmetic; throws
// when the system is singular or the solution is not a non-negative integer
// vector.
WeightDistribution pless_solve(int n, std::vector<int64_t> values);

bool same_distribution(const WeightDistribution& a, const WeightDistribution& b);

}  // namespace apn
