#include "apnspectra.h"

#include "codes.hpp"
#include "linearized.hpp"

#include <cstring>
#include <new>

using namespace apn;

struct apn_field {
    Field field;
};
struct apn_table {
    TruthTable table;
};
struct apn_spectrum {
    SpectrumHistogram hist;
    std::vector<std::pair<int64_t, uint64_t>> entries;
};
struct apn_kernels {
    KernelReport report;
};
struct apn_weights {
    WeightDistribution dist;
    std::vector<std::pair<uint32_t, uint64_t>> entries;
};

namespace {

thread_local std::string g_last_error;

apn_status fail(apn_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

template <typename Fn>
apn_status guarded(Fn&& fn) {
    try {
        fn();
        return APN_OK;
    } catch (const ValidationError& e) {
        return fail(APN_ERR_VALIDATION, e.what());
    } catch (const UnsupportedError& e) {
        return fail(APN_ERR_UNSUPPORTED, e.what());
    } catch (const IoError& e) {
        return fail(APN_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(APN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(APN_ERR_INTERNAL, e.what());
    }
}

Family to_family(int f) {
    switch (f) {
        case APN_FAMILY_1: return Family::Family1;
        case APN_FAMILY_2: return Family::Family2;
        case APN_FAMILY_3: return Family::Family3;
        case APN_FAMILY_4: return Family::Family4;
        case APN_FAMILY_5: return Family::Family5;
        case APN_FAMILY_GOLD: return Family::Gold;
        case APN_FAMILY_DILLON: return Family::Dillon;
        case APN_FAMILY_CUSTOM: return Family::Custom;
        default: throw ValidationError("unknown family code " + std::to_string(f));
    }
}

int from_family(Family f) {
    switch (f) {
        case Family::Family1: return APN_FAMILY_1;
        case Family::Family2: return APN_FAMILY_2;
        case Family::Family3: return APN_FAMILY_3;
        case Family::Family4: return APN_FAMILY_4;
        case Family::Family5: return APN_FAMILY_5;
        case Family::Gold: return APN_FAMILY_GOLD;
        case Family::Dillon: return APN_FAMILY_DILLON;
        case Family::Custom: return APN_FAMILY_CUSTOM;
    }
    return APN_FAMILY_CUSTOM;
}

FamilyParams to_params(const apn_params& p) {
    FamilyParams out;
    out.family = to_family(p.family);
    out.n = p.n;
    out.k = p.k;
    out.s = p.s;
    out.gold_d = p.gold_d;
    out.alpha = p.alpha;
    out.beta = p.beta;
    out.u = p.u;
    out.v = p.v;
    out.v_set = p.v_set != 0;
    if (p.gammas && p.n_gammas) out.gammas.assign(p.gammas, p.gammas + p.n_gammas);
    if (p.gamma_seed_set) out.gamma_seed = p.gamma_seed;
    if (p.custom_coeffs && p.custom_exps)
        for (size_t i = 0; i < p.n_custom; ++i)
            out.monomials.push_back({p.custom_coeffs[i], p.custom_exps[i]});
    if (p.custom_trace_exps)
        out.trace_exponents.assign(p.custom_trace_exps, p.custom_trace_exps + p.n_custom_trace);
    out.relax_family3 = p.relax_family3 != 0;
    return out;
}

}  // namespace

extern "C" {

const char* apn_status_name(apn_status s) {
    switch (s) {
        case APN_OK: return "ok";
        case APN_ERR_ARGUMENT: return "argument";
        case APN_ERR_VALIDATION: return "validation";
        case APN_ERR_UNSUPPORTED: return "unsupported";
        case APN_ERR_IO: return "io";
        case APN_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* apn_last_error(void) { return g_last_error.c_str(); }

apn_status apn_field_create(int n, uint64_t poly, uint32_t primitive, apn_field** out) {
    if (!out) return fail(APN_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new apn_field{Field(n, poly, primitive)}; });
}

void apn_field_destroy(apn_field* f) { delete f; }

int apn_field_degree(const apn_field* f) { return f ? f->field.degree() : 0; }
uint64_t apn_field_poly(const apn_field* f) { return f ? f->field.poly() : 0; }
uint32_t apn_field_primitive(const apn_field* f) { return f ? f->field.primitive() : 0; }
uint64_t apn_field_order(const apn_field* f) { return f ? f->field.order() : 0; }

size_t apn_field_order_factors(const apn_field* f, uint64_t* primes, int* exponents, size_t cap) {
    if (!f) return 0;
    const auto& fs = f->field.order_factors();
    for (size_t i = 0; i < fs.size() && i < cap; ++i) {
        if (primes) primes[i] = fs[i].first;
        if (exponents) exponents[i] = fs[i].second;
    }
    return fs.size();
}

uint32_t apn_field_add(uint32_t x, uint32_t y) { return x ^ y; }

uint32_t apn_field_mul(const apn_field* f, uint32_t x, uint32_t y) {
    return f ? f->field.mul(x, y) : 0;
}

apn_status apn_field_pow(const apn_field* f, uint32_t x, int64_t e, uint32_t* out) {
    if (!f || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    return guarded([&] { *out = f->field.pow(x, e); });
}

uint32_t apn_field_frobenius(const apn_field* f, uint32_t x, int i) {
    return f ? f->field.frobenius(x, i) : 0;
}

int apn_field_trace(const apn_field* f, uint32_t x) { return f ? f->field.trace(x) : 0; }

int apn_field_is_primitive(const apn_field* f, uint32_t x) {
    return f && f->field.is_primitive(x) ? 1 : 0;
}

uint64_t apn_family_default_poly(apn_family family, int n) {
    try {
        return default_poly(to_family(family), n);
    } catch (...) {
        return 0;
    }
}

apn_status apn_params_degree(const apn_params* p, int* out) {
    if (!p || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    return guarded([&] { *out = family_degree(to_params(*p)); });
}

apn_status apn_table_build(const apn_field* f, const apn_params* p, apn_table** out) {
    if (!f || !p || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new apn_table{build(f->field, to_params(*p))}; });
}

void apn_table_destroy(apn_table* t) { delete t; }

int apn_table_degree_n(const apn_table* t) { return t ? t->table.field.degree() : 0; }

const uint32_t* apn_table_values(const apn_table* t, size_t* len) {
    if (!t) {
        if (len) *len = 0;
        return nullptr;
    }
    if (len) *len = t->table.values.size();
    return t->table.values.data();
}

int apn_table_algebraic_degree(const apn_table* t) { return t ? t->table.degree : -1; }

uint32_t apn_table_differential_uniformity(const apn_table* t) {
    return t ? differential_uniformity(t->table) : 0;
}

int apn_table_is_apn(const apn_table* t) { return t && is_apn(t->table) ? 1 : 0; }

int64_t apn_table_walsh_point(const apn_table* t, uint32_t a, uint32_t b) {
    return t ? walsh_point(t->table, a, b) : 0;
}

uint64_t apn_table_field_poly(const apn_table* t) { return t ? t->table.field.poly() : 0; }
uint32_t apn_table_field_primitive(const apn_table* t) {
    return t ? t->table.field.primitive() : 0;
}

apn_status apn_table_params(const apn_table* t, apn_params* out) {
    if (!t || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    std::memset(out, 0, sizeof(*out));
    const FamilyParams& p = t->table.params;
    out->family = from_family(p.family);
    out->n = p.n;
    out->k = p.k;
    out->s = p.s;
    out->gold_d = p.gold_d;
    out->alpha = p.alpha;
    out->beta = p.beta;
    out->u = p.u;
    out->v = p.v;
    out->v_set = p.v_set ? 1 : 0;
    out->relax_family3 = p.relax_family3 ? 1 : 0;
    return APN_OK;
}

apn_status apn_table_write(const apn_table* t, const char* path, apn_table_format fmt) {
    if (!t || !path) return fail(APN_ERR_ARGUMENT, "null pointer");
    return guarded([&] {
        write_table(t->table, path, fmt == APN_TABLE_HEX ? TableFormat::Hex : TableFormat::Binary);
    });
}

apn_status apn_table_read(const char* path, apn_table** out) {
    if (!path || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new apn_table{read_table(path)}; });
}

apn_status apn_spectrum_compute(const apn_table* t, int threads, apn_spectrum** out) {
    if (!t || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] {
        auto* s = new apn_spectrum{full_spectrum(t->table, threads), {}};
        s->entries.assign(s->hist.counts.begin(), s->hist.counts.end());
        *out = s;
    });
}

void apn_spectrum_destroy(apn_spectrum* s) { delete s; }

size_t apn_spectrum_size(const apn_spectrum* s) { return s ? s->entries.size() : 0; }

apn_status apn_spectrum_entry(const apn_spectrum* s, size_t i, int64_t* value, uint64_t* count) {
    if (!s || i >= s->entries.size()) return fail(APN_ERR_ARGUMENT, "entry index out of range");
    if (value) *value = s->entries[i].first;
    if (count) *count = s->entries[i].second;
    return APN_OK;
}

int64_t apn_spectrum_nonlinearity(const apn_spectrum* s) {
    return s && !s->hist.counts.empty() ? nonlinearity(s->hist) : -1;
}

int apn_spectrum_is_almost_bent(const apn_spectrum* s) {
    return s && is_almost_bent(s->hist, s->hist.n) ? 1 : 0;
}

size_t apn_theorem_spectrum(apn_family family, int n, int64_t* buf, size_t cap) {
    try {
        auto pred = predicted_spectrum(to_family(family), n);
        if (!pred) return 0;
        for (size_t i = 0; i < pred->size() && i < cap; ++i)
            if (buf) buf[i] = (*pred)[i];
        return pred->size();
    } catch (...) {
        return 0;
    }
}

apn_status apn_kernels_compute(const apn_table* t, int threads, apn_kernels** out) {
    if (!t || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new apn_kernels{kernel_report(t->table, threads)}; });
}

void apn_kernels_destroy(apn_kernels* k) { delete k; }

int apn_kernels_max_nullity(const apn_kernels* k) { return k ? k->report.max_nullity : -1; }

uint64_t apn_kernels_count(const apn_kernels* k, int nullity) {
    if (!k || nullity < 0 || size_t(nullity) >= k->report.nullity_counts.size()) return 0;
    return k->report.nullity_counts[size_t(nullity)];
}

static apn_weights* wrap_weights(WeightDistribution d) {
    auto* w = new apn_weights{std::move(d), {}};
    w->entries.assign(w->dist.counts.begin(), w->dist.counts.end());
    return w;
}

apn_status apn_weights_from_spectrum(const apn_table* t, int threads, apn_weights** out) {
    if (!t || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = wrap_weights(distribution_from_spectrum(t->table, threads)); });
}

apn_status apn_weights_direct(const apn_table* t, apn_weights** out) {
    if (!t || !out) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = wrap_weights(distribution_direct(t->table)); });
}

apn_status apn_weights_pless(int n, const int64_t* walsh_values, size_t count, apn_weights** out) {
    if (!out || (count && !walsh_values)) return fail(APN_ERR_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] {
        *out = wrap_weights(pless_solve(n, std::vector<int64_t>(walsh_values, walsh_values + count)));
    });
}

void apn_weights_destroy(apn_weights* w) { delete w; }

uint32_t apn_weights_length(const apn_weights* w) { return w ? w->dist.length : 0; }
uint32_t apn_weights_dim(const apn_weights* w) { return w ? w->dist.dim : 0; }
size_t apn_weights_size(const apn_weights* w) { return w ? w->entries.size() : 0; }

apn_status apn_weights_entry(const apn_weights* w, size_t i, uint32_t* weight, uint64_t* count) {
    if (!w || i >= w->entries.size()) return fail(APN_ERR_ARGUMENT, "entry index out of range");
    if (weight) *weight = w->entries[i].first;
    if (count) *count = w->entries[i].second;
    return APN_OK;
}

int apn_weights_equal(const apn_weights* a, const apn_weights* b) {
    if (!a || !b) return 0;
    try {
        return same_distribution(a->dist, b->dist) ? 1 : 0;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return 0;
    }
}

}  // extern "C"
