#pragma once

#include "gf2n.hpp"

#include <optional>
#include <string_view>

namespace apn {

enum class Family {
    Family1,  // x^(2^s+1) + a*x^(2^(ik)+2^(mk+s)) on GF(2^(3k))
    Family2,  // same shape on GF(2^(4k))
    Family3,  // multinomial on GF(2^(2k))
    Family4,  // x^3 + Tr(x^9)
    Family5,  // trinomial on GF(2^(3k))
    Gold,     // x^(2^d+1)
    Dillon,   // the GF(2^6) hexanomial
    Custom,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct Monomial {
    Elem coeff;
    int64_t exponent;
};

struct FamilyParams {
    Family family = Family::Custom;
    int n = 0;  // derived from k for families 1/2/3/5
    int k = 0;
    int s = 0;
    int i = 0;  // derived, families 1/2
    int m = 0;  // derived, families 1/2
    int gold_d = 0;
    Elem alpha = 0;  // 0 = default (families 1/2: t^(2^k-1); family 3: t)
    Elem beta = 0;   // 0 = default (family 3: t)
    Elem u = 0;      // 0 = default (family 5: t; Dillon: canonical root)
    Elem v = 0;      // family 5 subfield coefficient
    bool v_set = false;
    std::vector<Elem> gammas;  // family 3, length k-1; empty = all zero
    std::optional<uint64_t> gamma_seed;
    std::vector<Monomial> monomials;       // custom
    std::vector<int64_t> trace_exponents;  // custom: + Tr(x^e) terms
    bool relax_family3 = false;            // drop the k-odd / s-odd conditions
    bool validated = false;
};

// Field degree the parameter set implies (3k, 4k, 2k, 3k, or explicit n).
// Throws ValidationError when the shape fields are missing or inconsistent.
int family_degree(const FamilyParams& p);

// Reduction polynomial a family prefers when the caller gives none.
// Dillon's example is tied to one representation of GF(2^6); everything else
// uses the lexicographically smallest irreducible.
uint64_t default_poly(Family f, int n);

// Checks every family constraint and fills the derived fields (n, i, m,
// alpha/beta/u/v defaults, gammas). Throws ValidationError naming the
// violated constraint.
FamilyParams validate_params(const Field& field, FamilyParams p);

struct TruthTable {
    Field field;
    FamilyParams params;
    std::vector<Elem> values;  // values[x] = f(x), indexed by bit pattern
    int degree = -1;           // algebraic degree, filled by build/read
};

Elem evaluate(const Field& field, const FamilyParams& p, Elem x);
TruthTable build(const Field& field, const FamilyParams& p);

uint32_t differential_uniformity(const TruthTable& t);
bool is_apn(const TruthTable& t);
int algebraic_degree(const TruthTable& t);

// Table files: binary = "APNT" magic, u32 header length, JSON header,
// 2^n little-endian u32 words; hex = '#'-prefixed JSON header line followed
// by one hex value per line.
enum class TableFormat { Binary, Hex };
void write_table(const TruthTable& t, const std::string& path, TableFormat fmt);
TruthTable read_table(const std::string& path);

std::string params_to_json(const FamilyParams& p);

}  // namespace apn
