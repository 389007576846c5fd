#include "boolfn.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

namespace apn {

using nlohmann::json;

const char* family_name(Family f) {
    switch (f) {
        case Family::Family1: return "family1";
        case Family::Family2: return "family2";
        case Family::Family3: return "family3";
        case Family::Family4: return "family4";
        case Family::Family5: return "family5";
        case Family::Gold: return "gold";
        case Family::Dillon: return "dillon";
        case Family::Custom: return "custom";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Family1, Family::Family2, Family::Family3, Family::Family4,
                     Family::Family5, Family::Gold, Family::Dillon, Family::Custom}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

static int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int family_degree(const FamilyParams& p) {
    switch (p.family) {
        case Family::Family1:
        case Family::Family5:
            if (p.k <= 0) throw ValidationError(std::string(family_name(p.family)) + ": k required");
            return 3 * p.k;
        case Family::Family2:
            if (p.k <= 0) throw ValidationError("family2: k required");
            return 4 * p.k;
        case Family::Family3:
            if (p.k <= 0) throw ValidationError("family3: k required");
            return 2 * p.k;
        case Family::Dillon:
            if (p.n != 0 && p.n != 6) throw ValidationError("dillon: defined on GF(2^6) only");
            return 6;
        case Family::Family4:
        case Family::Gold:
        case Family::Custom:
            if (p.n <= 0) throw ValidationError(std::string(family_name(p.family)) + ": n required");
            return p.n;
    }
    throw ValidationError("unknown family");
}

// Dillon's hexanomial is APN only for u in one conjugacy class; its minimal
// polynomial is x^6+x^4+x^3+x+1 (0x5b), so under that modulus u = x works and
// the default primitive element coincides with Dillon's u.
static constexpr uint64_t kDillonPoly = 0x5b;

uint64_t default_poly(Family f, int n) {
    if (f == Family::Dillon) return kDillonPoly;
    return smallest_irreducible(n);
}

// Smallest root of x^6+x^4+x^3+x+1 in the given representation of GF(2^6).
static Elem dillon_default_u(const Field& field) {
    for (Elem e = 2; e < field.size(); ++e) {
        Elem acc = field.pow(e, 6) ^ field.pow(e, 4) ^ field.pow(e, 3) ^ e ^ 1;
        if (acc == 0) return e;
    }
    throw ValidationError("dillon: no root of 0x5b in this field");  // unreachable
}

static std::vector<Elem> subfield_elements(const Field& field, int k) {
    std::vector<Elem> out;
    Elem gen = field.pow(field.primitive(), static_cast<int64_t>(field.order() / ((uint64_t(1) << k) - 1)));
    out.push_back(0);
    Elem e = 1;
    for (uint64_t j = 0; j < (uint64_t(1) << k) - 1; ++j) {
        out.push_back(e);
        e = field.mul(e, gen);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FamilyParams validate_params(const Field& field, FamilyParams p) {
    const int n = field.degree();
    if (family_degree(p) != n)
        throw ValidationError(std::string(family_name(p.family)) + ": field degree " +
                              std::to_string(n) + " does not match parameter degree " +
                              std::to_string(family_degree(p)));
    p.n = n;
    const Elem t = field.primitive();

    switch (p.family) {
        case Family::Family1: {
            if (p.k < 3) throw ValidationError("family1: k >= 3 required");
            if (gcd64(p.k, 3) != 1) throw ValidationError("family1: gcd(k, 3) = 1 required");
            if (p.s <= 0) throw ValidationError("family1: s >= 1 required");
            if (gcd64(p.s, 3 * p.k) != 1) throw ValidationError("family1: gcd(s, 3k) = 1 required");
            p.i = static_cast<int>((int64_t(p.s) * p.k) % 3);
            p.m = (3 - p.i) % 3;
            p.alpha = field.pow(t, (int64_t(1) << p.k) - 1);
            break;
        }
        case Family::Family2: {
            if (p.k < 3) throw ValidationError("family2: k >= 3 required");
            if (p.k % 2 == 0) throw ValidationError("family2: k odd required");
            if (p.s <= 0) throw ValidationError("family2: s >= 1 required");
            if (gcd64(p.s, 2 * p.k) != 1) throw ValidationError("family2: gcd(s, 2k) = 1 required");
            p.i = static_cast<int>((int64_t(p.s) * p.k) % 4);
            p.m = 4 - p.i;
            p.alpha = field.pow(t, (int64_t(1) << p.k) - 1);
            break;
        }
        case Family::Family3: {
            if (p.k < 2) throw ValidationError("family3: k >= 2 required");
            if (p.s <= 0) throw ValidationError("family3: s >= 1 required");
            if (!p.relax_family3 && p.k % 2 == 0) throw ValidationError("family3: k odd required");
            if (!p.relax_family3 && p.s % 2 == 0) throw ValidationError("family3: s odd required");
            if (gcd64(p.k, p.s) != 1) throw ValidationError("family3: gcd(k, s) = 1 required");
            if (p.alpha == 0) p.alpha = t;
            if (p.beta == 0) p.beta = t;
            if (!field.is_primitive(p.alpha)) throw ValidationError("family3: alpha must be primitive");
            if (!field.is_primitive(p.beta)) throw ValidationError("family3: beta must be primitive");
            if (p.gammas.empty()) {
                if (p.gamma_seed) {
                    auto sub = subfield_elements(field, p.k);
                    std::mt19937_64 rng(*p.gamma_seed);
                    for (int j = 0; j + 1 < p.k; ++j)
                        p.gammas.push_back(sub[rng() % sub.size()]);
                } else {
                    p.gammas.assign(size_t(p.k) - 1, 0);
                }
            }
            if (p.gammas.size() != size_t(p.k) - 1)
                throw ValidationError("family3: expected " + std::to_string(p.k - 1) + " gammas, got " +
                                      std::to_string(p.gammas.size()));
            for (Elem g : p.gammas) {
                if (g >= field.size() || !field.in_subfield(g, p.k))
                    throw ValidationError("family3: gamma " + mask_to_hex(g) + " not in GF(2^" +
                                          std::to_string(p.k) + ")");
            }
            break;
        }
        case Family::Family4:
            break;
        case Family::Family5: {
            if (p.k < 2) throw ValidationError("family5: k >= 2 required");
            if (p.s <= 0) throw ValidationError("family5: s >= 1 required");
            if (gcd64(p.s, 3 * p.k) != 1) throw ValidationError("family5: gcd(s, 3k) = 1 required");
            if (gcd64(3, p.k) != 1) throw ValidationError("family5: gcd(3, k) = 1 required");
            if ((p.k + p.s) % 3 != 0) throw ValidationError("family5: 3 | (k + s) required");
            if (p.u == 0) p.u = t;
            if (!field.is_primitive(p.u)) throw ValidationError("family5: u must be primitive");
            if (!p.v_set) {
                p.v = 1;
                p.v_set = true;
            }
            if (p.v >= field.size() || (p.v != 0 && !field.in_subfield(p.v, p.k)))
                throw ValidationError("family5: v must lie in GF(2^" + std::to_string(p.k) + ")");
            break;
        }
        case Family::Gold: {
            if (p.gold_d < 1) throw ValidationError("gold: d >= 1 required");
            if (gcd64(p.gold_d, n) != 1) throw ValidationError("gold: gcd(d, n) = 1 required");
            break;
        }
        case Family::Dillon: {
            if (p.u == 0) p.u = dillon_default_u(field);
            if (!field.is_primitive(p.u)) throw ValidationError("dillon: u must be primitive");
            const Elem u11 = field.pow(p.u, 11), u13 = field.pow(p.u, 13);
            p.monomials = {{1, 3}, {u11, 5}, {u13, 9}, {1, 17}, {u11, 33}, {1, 48}};
            break;
        }
        case Family::Custom: {
            if (p.monomials.empty() && p.trace_exponents.empty())
                throw ValidationError("custom: at least one monomial or trace term required");
            for (const auto& mono : p.monomials) {
                if (mono.exponent < 1) throw ValidationError("custom: exponents must be positive");
                if (mono.coeff >= field.size()) throw ValidationError("custom: coefficient out of range");
            }
            for (int64_t e : p.trace_exponents)
                if (e < 1) throw ValidationError("custom: trace exponents must be positive");
            break;
        }
    }
    p.validated = true;
    return p;
}

Elem evaluate(const Field& field, const FamilyParams& p, Elem x) {
    if (!p.validated) return evaluate(field, validate_params(field, p), x);
    const int n = field.degree();
    if (x == 0) return 0;  // every supported shape has no constant and positive exponents
    switch (p.family) {
        case Family::Family1:
        case Family::Family2: {
            const int e1 = p.s % n;
            const int ik = (p.i * p.k) % n;
            const int mks = (p.m * p.k + p.s) % n;
            Elem r = field.mul(field.frobenius(x, e1), x);
            r ^= field.mul(p.alpha, field.mul(field.frobenius(x, ik), field.frobenius(x, mks)));
            return r;
        }
        case Family::Family3: {
            const int k = p.k, s = p.s % n;
            Elem r = field.mul(p.alpha, field.mul(field.frobenius(x, s), x));
            r ^= field.mul(field.frobenius(p.alpha, k),
                           field.mul(field.frobenius(x, (k + s) % n), field.frobenius(x, k)));
            r ^= field.mul(p.beta, field.mul(field.frobenius(x, k), x));
            for (size_t j = 0; j < p.gammas.size(); ++j) {
                if (p.gammas[j] == 0) continue;
                const int i = static_cast<int>(j) + 1;
                r ^= field.mul(p.gammas[j],
                               field.mul(field.frobenius(x, (k + i) % n), field.frobenius(x, i)));
            }
            return r;
        }
        case Family::Family4:
            return field.pow(x, 3) ^ Elem(field.trace(field.pow(x, 9)));
        case Family::Family5: {
            const int k = p.k, s = p.s % n;
            Elem r = field.mul(p.u, field.mul(field.frobenius(x, n - k), field.frobenius(x, (k + s) % n)));
            r ^= field.mul(field.frobenius(p.u, k), field.mul(field.frobenius(x, s), x));
            if (p.v) r ^= field.mul(p.v, field.mul(field.frobenius(x, (k + s) % n), field.frobenius(x, s)));
            return r;
        }
        case Family::Gold:
            return field.mul(field.frobenius(x, p.gold_d % n), x);
        case Family::Dillon:  // validation expanded g into its monomial list
        case Family::Custom: {
            Elem r = 0;
            for (const auto& mono : p.monomials) r ^= field.mul(mono.coeff, field.pow(x, mono.exponent));
            for (int64_t e : p.trace_exponents) r ^= Elem(field.trace(field.pow(x, e)));
            return r;
        }
    }
    throw ValidationError("unknown family");
}

TruthTable build(const Field& field, const FamilyParams& p) {
    FamilyParams vp = p.validated ? p : validate_params(field, p);
    TruthTable t{field, std::move(vp), {}, -1};
    const uint32_t sz = field.size();
    t.values.resize(sz);
    // rows are independent; split the range over workers for larger fields
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned nw = (sz >= (1u << 12) && hw > 1) ? std::min(hw, 8u) : 1;
    auto fill = [&](uint32_t lo, uint32_t hi) {
        for (uint32_t x = lo; x < hi; ++x) t.values[x] = evaluate(field, t.params, Elem(x));
    };
    if (nw == 1) {
        fill(0, sz);
    } else {
        std::vector<std::thread> pool;
        const uint32_t chunk = sz / nw;
        for (unsigned w = 1; w < nw; ++w)
            pool.emplace_back(fill, w * chunk, w + 1 == nw ? sz : (w + 1) * chunk);
        fill(0, chunk);
        for (auto& th : pool) th.join();
    }
    t.degree = algebraic_degree(t);
    return t;
}

uint32_t differential_uniformity(const TruthTable& t) {
    const uint32_t sz = t.field.size();
    std::vector<uint32_t> cnt(sz, 0), stamp(sz, 0);
    uint32_t best = 0;
    for (uint32_t a = 1; a < sz; ++a) {
        for (uint32_t x = 0; x < sz; ++x) {
            const uint32_t d = t.values[x] ^ t.values[x ^ a];
            if (stamp[d] != a) {
                stamp[d] = a;
                cnt[d] = 1;
            } else if (++cnt[d] > best) {
                best = cnt[d];
            }
        }
    }
    return std::max(best, 2u);  // derivative counts come in pairs {x, x+a}
}

bool is_apn(const TruthTable& t) { return differential_uniformity(t) == 2; }

int algebraic_degree(const TruthTable& t) {
    const uint32_t sz = t.field.size();
    const int n = t.field.degree();
    int best = 0;
    std::vector<uint8_t> anf(sz);
    for (int c = 0; c < n; ++c) {
        for (uint32_t x = 0; x < sz; ++x) anf[x] = (t.values[x] >> c) & 1;
        for (uint32_t step = 1; step < sz; step <<= 1)
            for (uint32_t j = 0; j < sz; ++j)
                if (j & step) anf[j] ^= anf[j ^ step];
        for (uint32_t idx = 0; idx < sz; ++idx)
            if (anf[idx]) best = std::max(best, std::popcount(idx));
    }
    return best;
}

std::string params_to_json(const FamilyParams& p) {
    json j;
    j["family"] = family_name(p.family);
    j["n"] = p.n;
    switch (p.family) {
        case Family::Family1:
        case Family::Family2:
            j["k"] = p.k;
            j["s"] = p.s;
            j["i"] = p.i;
            j["m"] = p.m;
            j["alpha"] = mask_to_hex(p.alpha);
            break;
        case Family::Family3: {
            j["k"] = p.k;
            j["s"] = p.s;
            j["alpha"] = mask_to_hex(p.alpha);
            j["beta"] = mask_to_hex(p.beta);
            json gs = json::array();
            for (Elem g : p.gammas) gs.push_back(mask_to_hex(g));
            j["gammas"] = gs;
            if (p.relax_family3) j["relaxed"] = true;
            break;
        }
        case Family::Family4:
            break;
        case Family::Family5:
            j["k"] = p.k;
            j["s"] = p.s;
            j["u"] = mask_to_hex(p.u);
            j["v"] = mask_to_hex(p.v);
            break;
        case Family::Gold:
            j["d"] = p.gold_d;
            break;
        case Family::Dillon:
            j["u"] = mask_to_hex(p.u);
            break;
        case Family::Custom: {
            json ms = json::array();
            for (const auto& mono : p.monomials)
                ms.push_back({{"coeff", mask_to_hex(mono.coeff)}, {"e", mono.exponent}});
            j["monomials"] = ms;
            j["trace_exponents"] = p.trace_exponents;
            break;
        }
    }
    return j.dump();
}

static FamilyParams params_from_json(const json& j) {
    FamilyParams p;
    if (!j.contains("family")) return p;
    auto f = family_from_name(j["family"].get<std::string>());
    if (!f) throw IoError("unknown family in table header: " + j["family"].dump());
    p.family = *f;
    if (j.contains("n")) p.n = j["n"].get<int>();
    if (j.contains("k")) p.k = j["k"].get<int>();
    if (j.contains("s")) p.s = j["s"].get<int>();
    if (j.contains("d")) p.gold_d = j["d"].get<int>();
    if (j.contains("alpha")) p.alpha = Elem(mask_from_hex(j["alpha"].get<std::string>()));
    if (j.contains("beta")) p.beta = Elem(mask_from_hex(j["beta"].get<std::string>()));
    if (j.contains("u")) p.u = Elem(mask_from_hex(j["u"].get<std::string>()));
    if (j.contains("v")) {
        p.v = Elem(mask_from_hex(j["v"].get<std::string>()));
        p.v_set = true;
    }
    if (j.contains("gammas"))
        for (const auto& g : j["gammas"]) p.gammas.push_back(Elem(mask_from_hex(g.get<std::string>())));
    if (j.contains("relaxed")) p.relax_family3 = j["relaxed"].get<bool>();
    if (j.contains("monomials"))
        for (const auto& mono : j["monomials"])
            p.monomials.push_back({Elem(mask_from_hex(mono["coeff"].get<std::string>())),
                                   mono["e"].get<int64_t>()});
    if (j.contains("trace_exponents"))
        for (const auto& e : j["trace_exponents"]) p.trace_exponents.push_back(e.get<int64_t>());
    return p;
}

static json table_header(const TruthTable& t) {
    json h;
    h["format"] = "apn-table";
    h["version"] = 1;
    h["n"] = t.field.degree();
    h["poly"] = mask_to_hex(t.field.poly());
    h["primitive"] = mask_to_hex(t.field.primitive());
    h["params"] = json::parse(params_to_json(t.params));
    return h;
}

void write_table(const TruthTable& t, const std::string& path, TableFormat fmt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const std::string header = table_header(t).dump();
    if (fmt == TableFormat::Binary) {
        out.write("APNT", 4);
        const uint32_t len = static_cast<uint32_t>(header.size());
        char lenbuf[4] = {char(len & 0xff), char((len >> 8) & 0xff), char((len >> 16) & 0xff),
                          char((len >> 24) & 0xff)};
        out.write(lenbuf, 4);
        out.write(header.data(), header.size());
        for (Elem v : t.values) {
            char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
                         char((v >> 24) & 0xff)};
            out.write(b, 4);
        }
    } else {
        out << "# " << header << "\n";
        for (Elem v : t.values) out << mask_to_hex(v) << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

static TruthTable table_from_header(const json& h, std::vector<Elem> values) {
    const int n = h.at("n").get<int>();
    const uint64_t poly = mask_from_hex(h.at("poly").get<std::string>());
    const Elem prim = h.contains("primitive") ? Elem(mask_from_hex(h["primitive"].get<std::string>())) : 0;
    Field field(n, poly, prim);
    if (values.size() != field.size())
        throw IoError("table has " + std::to_string(values.size()) + " entries, expected " +
                      std::to_string(field.size()));
    for (Elem v : values)
        if (v >= field.size()) throw IoError("table value out of range");
    FamilyParams p = h.contains("params") ? params_from_json(h["params"]) : FamilyParams{};
    if (p.family != Family::Custom || !p.monomials.empty() || !p.trace_exponents.empty()) {
        p = validate_params(field, p);
    } else {
        p.n = n;  // interoperability import with no provenance
    }
    TruthTable t{std::move(field), std::move(p), std::move(values), -1};
    t.degree = algebraic_degree(t);
    return t;
}

TruthTable read_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    if (!in.read(magic, 4)) throw IoError("truncated table file: " + path);
    if (std::memcmp(magic, "APNT", 4) == 0) {
        char lenbuf[4];
        if (!in.read(lenbuf, 4)) throw IoError("truncated table file: " + path);
        const uint32_t len = uint32_t(uint8_t(lenbuf[0])) | uint32_t(uint8_t(lenbuf[1])) << 8 |
                             uint32_t(uint8_t(lenbuf[2])) << 16 | uint32_t(uint8_t(lenbuf[3])) << 24;
        if (len > (1u << 20)) throw IoError("header too large: " + path);
        std::string header(len, '\0');
        if (!in.read(header.data(), len)) throw IoError("truncated table file: " + path);
        json h = json::parse(header);
        std::vector<Elem> values;
        char b[4];
        while (in.read(b, 4)) {
            values.push_back(uint32_t(uint8_t(b[0])) | uint32_t(uint8_t(b[1])) << 8 |
                             uint32_t(uint8_t(b[2])) << 16 | uint32_t(uint8_t(b[3])) << 24);
        }
        if (in.gcount() != 0) throw IoError("trailing bytes in " + path);
        return table_from_header(h, std::move(values));
    }
    // hex text format
    in.seekg(0);
    std::string line;
    json h;
    std::vector<Elem> values;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find('{');
            if (pos != std::string::npos && !have_header) {
                h = json::parse(line.substr(pos));
                have_header = true;
            }
            continue;
        }
        values.push_back(Elem(mask_from_hex(line)));
    }
    if (!have_header) {
        // bare hex list: infer n from the line count
        const size_t sz = values.size();
        int n = 0;
        while ((size_t(1) << n) < sz) ++n;
        if ((size_t(1) << n) != sz) throw IoError("hex table length is not a power of two");
        h["n"] = n;
        h["poly"] = mask_to_hex(smallest_irreducible(n));
    }
    return table_from_header(h, std::move(values));
}

}  // namespace apn
