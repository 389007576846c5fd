// apnspectra command line tool. Talks to the library exclusively through the
// C API in apnspectra.h.
//
// Exit codes: 0 success, 2 validation/usage error, 3 spectrum computed but
// different from the set the family's theorem asserts.

#include "apnspectra.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr double kLongRunThreshold = 1e10;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

[[noreturn]] void die_status(apn_status s) {
    die(2, std::string(apn_status_name(s)) + " error: " + apn_last_error());
}

uint64_t parse_hex(const std::string& s, const char* what) {
    if (s.empty()) die(2, std::string("empty ") + what);
    errno = 0;
    char* end = nullptr;
    const uint64_t v = std::strtoull(s.c_str(), &end, 16);
    if (errno || end == nullptr || *end != '\0') die(2, std::string("bad hex value for ") + what + ": " + s);
    return v;
}

std::string to_hex(uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Options {
    std::string family;
    int n = 0, k = 0, s = 0, d = 0;
    std::string alpha, beta, u, v;
    std::string gammas;
    std::string monomials;
    std::string trace_exps;
    uint64_t gamma_seed = 0;
    bool gamma_seed_set = false;
    bool relax_family3 = false;
    std::string poly, primitive;
    std::string format = "json";
    std::string out;
    std::string in;  // table file input
    std::string source = "spectrum";
    int threads = 0;
    bool long_run = false;
    bool hex_table = false;
    std::string config;       // load option defaults from a config JSON
    std::string dump_config;  // write the normalized config back out
};

// RunConfig serialization: every option a subcommand accepts, in one JSON
// object, so a run can be archived and replayed exactly.
json config_to_json(const Options& o) {
    json j;
    j["family"] = o.family;
    j["n"] = o.n;
    j["k"] = o.k;
    j["s"] = o.s;
    j["d"] = o.d;
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
    j["u"] = o.u;
    j["v"] = o.v;
    j["gammas"] = o.gammas;
    j["monomials"] = o.monomials;
    j["trace_exps"] = o.trace_exps;
    if (o.gamma_seed_set) j["gamma_seed"] = o.gamma_seed;
    j["relax_family3"] = o.relax_family3;
    j["poly"] = o.poly;
    j["primitive"] = o.primitive;
    j["format"] = o.format;
    j["out"] = o.out;
    j["in"] = o.in;
    j["source"] = o.source;
    j["threads"] = o.threads;
    j["long"] = o.long_run;
    j["text_table"] = o.hex_table;
    return j;
}

void config_from_json(const json& j, Options& o) {
    auto str = [&j](const char* key, std::string& dst) {
        if (j.contains(key)) dst = j[key].get<std::string>();
    };
    auto num = [&j](const char* key, int& dst) {
        if (j.contains(key)) dst = j[key].get<int>();
    };
    str("family", o.family);
    num("n", o.n);
    num("k", o.k);
    num("s", o.s);
    num("d", o.d);
    str("alpha", o.alpha);
    str("beta", o.beta);
    str("u", o.u);
    str("v", o.v);
    str("gammas", o.gammas);
    str("monomials", o.monomials);
    str("trace_exps", o.trace_exps);
    if (j.contains("gamma_seed")) {
        o.gamma_seed = j["gamma_seed"].get<uint64_t>();
        o.gamma_seed_set = true;
    }
    if (j.contains("relax_family3")) o.relax_family3 = j["relax_family3"].get<bool>();
    str("poly", o.poly);
    str("primitive", o.primitive);
    str("format", o.format);
    str("out", o.out);
    str("in", o.in);
    str("source", o.source);
    num("threads", o.threads);
    if (j.contains("long")) o.long_run = j["long"].get<bool>();
    if (j.contains("text_table")) o.hex_table = j["text_table"].get<bool>();
}

void add_common_flags(CLI::App* cmd, Options& o, bool with_family = true) {
    if (with_family)
        cmd->add_option("--family", o.family,
                        "family1|family2|family3|family4|family5|gold|dillon|custom");
    cmd->add_option("--n", o.n, "field degree (family4/gold)");
    cmd->add_option("--k", o.k, "family parameter k");
    cmd->add_option("--s", o.s, "family parameter s");
    cmd->add_option("--d", o.d, "Gold exponent d");
    cmd->add_option("--alpha", o.alpha, "family3 alpha (hex)");
    cmd->add_option("--beta", o.beta, "family3 beta (hex)");
    cmd->add_option("--u", o.u, "family5/dillon u (hex)");
    cmd->add_option("--v", o.v, "family5 v (hex)");
    cmd->add_option("--gammas", o.gammas, "family3 gammas, comma-separated hex");
    cmd->add_option("--monomials", o.monomials, "custom monomials as coeff:exp pairs, e.g. 0x1:3,0x5:17");
    cmd->add_option("--trace-exps", o.trace_exps, "custom Tr(x^e) terms, comma-separated exponents");
    cmd->add_option("--gamma-seed", o.gamma_seed, "seeded random family3 gammas")
        ->each([&o](const std::string&) { o.gamma_seed_set = true; });
    cmd->add_flag("--relax-family3", o.relax_family3, "drop the k-odd/s-odd conditions");
    cmd->add_option("--poly", o.poly, "reduction polynomial mask (hex)");
    cmd->add_option("--primitive", o.primitive, "primitive element override (hex)");
    cmd->add_option("--format", o.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--threads", o.threads, "worker thread cap");
    cmd->add_flag("--long", o.long_run, "allow runs above the work threshold");
    cmd->add_option("--config", o.config, "load option defaults from a config JSON");
    cmd->add_option("--dump-config", o.dump_config, "write the normalized run config to a file");
}

struct ParamStore {
    apn_params p{};
    std::vector<uint32_t> gammas;
    std::vector<uint32_t> coeffs;
    std::vector<int64_t> exps;
    std::vector<int64_t> trace_exps;
};

int family_code(const std::string& name) {
    if (name == "family1") return APN_FAMILY_1;
    if (name == "family2") return APN_FAMILY_2;
    if (name == "family3") return APN_FAMILY_3;
    if (name == "family4") return APN_FAMILY_4;
    if (name == "family5") return APN_FAMILY_5;
    if (name == "gold") return APN_FAMILY_GOLD;
    if (name == "dillon") return APN_FAMILY_DILLON;
    if (name == "custom") return APN_FAMILY_CUSTOM;
    die(2, "unknown or missing --family: '" + name + "'");
}

const char* family_str(int code) {
    switch (code) {
        case APN_FAMILY_1: return "family1";
        case APN_FAMILY_2: return "family2";
        case APN_FAMILY_3: return "family3";
        case APN_FAMILY_4: return "family4";
        case APN_FAMILY_5: return "family5";
        case APN_FAMILY_GOLD: return "gold";
        case APN_FAMILY_DILLON: return "dillon";
        default: return "custom";
    }
}

ParamStore make_params(const Options& o) {
    ParamStore ps;
    ps.p.family = family_code(o.family);
    ps.p.n = o.n;
    ps.p.k = o.k;
    ps.p.s = o.s;
    ps.p.gold_d = o.d;
    if (!o.alpha.empty()) ps.p.alpha = uint32_t(parse_hex(o.alpha, "--alpha"));
    if (!o.beta.empty()) ps.p.beta = uint32_t(parse_hex(o.beta, "--beta"));
    if (!o.u.empty()) ps.p.u = uint32_t(parse_hex(o.u, "--u"));
    if (!o.v.empty()) {
        ps.p.v = uint32_t(parse_hex(o.v, "--v"));
        ps.p.v_set = 1;
    }
    if (!o.gammas.empty()) {
        std::stringstream ss(o.gammas);
        std::string item;
        while (std::getline(ss, item, ','))
            ps.gammas.push_back(uint32_t(parse_hex(item, "--gammas")));
        ps.p.gammas = ps.gammas.data();
        ps.p.n_gammas = ps.gammas.size();
    }
    if (o.gamma_seed_set) {
        ps.p.gamma_seed = o.gamma_seed;
        ps.p.gamma_seed_set = 1;
    }
    if (!o.monomials.empty()) {
        std::stringstream ss(o.monomials);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) die(2, "--monomials entries must look like coeff:exp");
            ps.coeffs.push_back(uint32_t(parse_hex(item.substr(0, colon), "--monomials coeff")));
            ps.exps.push_back(int64_t(std::strtoll(item.c_str() + colon + 1, nullptr, 10)));
        }
        ps.p.custom_coeffs = ps.coeffs.data();
        ps.p.custom_exps = ps.exps.data();
        ps.p.n_custom = ps.coeffs.size();
    }
    if (!o.trace_exps.empty()) {
        std::stringstream ss(o.trace_exps);
        std::string item;
        while (std::getline(ss, item, ','))
            ps.trace_exps.push_back(int64_t(std::strtoll(item.c_str(), nullptr, 10)));
        ps.p.custom_trace_exps = ps.trace_exps.data();
        ps.p.n_custom_trace = ps.trace_exps.size();
    }
    ps.p.relax_family3 = o.relax_family3 ? 1 : 0;
    return ps;
}

using FieldPtr = std::unique_ptr<apn_field, decltype(&apn_field_destroy)>;
using TablePtr = std::unique_ptr<apn_table, decltype(&apn_table_destroy)>;
using SpectrumPtr = std::unique_ptr<apn_spectrum, decltype(&apn_spectrum_destroy)>;
using KernelsPtr = std::unique_ptr<apn_kernels, decltype(&apn_kernels_destroy)>;
using WeightsPtr = std::unique_ptr<apn_weights, decltype(&apn_weights_destroy)>;

FieldPtr open_field(int n, const Options& o, int family) {
    uint64_t poly = 0;
    if (!o.poly.empty())
        poly = parse_hex(o.poly, "--poly");
    else
        poly = apn_family_default_poly(apn_family(family), n);
    uint32_t prim = o.primitive.empty() ? 0 : uint32_t(parse_hex(o.primitive, "--primitive"));
    apn_field* f = nullptr;
    apn_status st = apn_field_create(n, poly, prim, &f);
    if (st != APN_OK) die_status(st);
    return FieldPtr(f, apn_field_destroy);
}

// op-count estimate used by the --long gate
double estimate_ops(const std::string& cmd, int n, const std::string& source) {
    const double sz = double(uint64_t(1) << n);
    if (cmd == "spectrum") return sz * sz * (n + 1);
    if (cmd == "apn") return 2.0 * sz * sz;
    if (cmd == "kernels") return sz * n * n * n;
    if (cmd == "compare") return 2.0 * sz * sz * (n + 1);
    if (cmd == "weights") {
        if (source == "direct") return sz * sz * sz / 64.0;
        return sz * sz * (n + 1);
    }
    return sz * n * n;
}

void gate_long_run(const std::string& cmd, int n, const Options& o) {
    const double est = estimate_ops(cmd, n, o.source);
    if (est > kLongRunThreshold && !o.long_run) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "%s at n=%d needs an estimated %.2g basic operations "
                      "(threshold %.0e); pass --long to run anyway",
                      cmd.c_str(), n, est, kLongRunThreshold);
        die(2, buf);
    }
}

TablePtr acquire_table(const Options& o, const std::string& cmd) {
    apn_table* t = nullptr;
    if (!o.in.empty()) {
        apn_status st = apn_table_read(o.in.c_str(), &t);
        if (st != APN_OK) die_status(st);
        gate_long_run(cmd, apn_table_degree_n(t), o);
        return TablePtr(t, apn_table_destroy);
    }
    ParamStore ps = make_params(o);
    int n = 0;
    apn_status st = apn_params_degree(&ps.p, &n);
    if (st != APN_OK) die_status(st);
    gate_long_run(cmd, n, o);
    FieldPtr field = open_field(n, o, ps.p.family);
    st = apn_table_build(field.get(), &ps.p, &t);
    if (st != APN_OK) die_status(st);
    return TablePtr(t, apn_table_destroy);
}

void emit(const Options& o, const json& j, const std::string& csv, const std::string& text) {
    std::string payload;
    if (o.format == "json")
        payload = j.dump(2) + "\n";
    else if (o.format == "csv")
        payload = csv;
    else
        payload = text;
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out);
        if (!f) die(2, "cannot open " + o.out);
        f << payload;
    }
}

json table_info_json(const apn_table* t) {
    apn_params p{};
    apn_table_params(t, &p);
    json j;
    j["n"] = apn_table_degree_n(t);
    j["family"] = family_str(p.family);
    j["poly"] = to_hex(apn_table_field_poly(t));
    j["primitive"] = to_hex(apn_table_field_primitive(t));
    return j;
}

int run_field(const Options& o) {
    if (o.n <= 0) die(2, "field: --n required");
    uint64_t poly = o.poly.empty() ? 0 : parse_hex(o.poly, "--poly");
    uint32_t prim = o.primitive.empty() ? 0 : uint32_t(parse_hex(o.primitive, "--primitive"));
    apn_field* f = nullptr;
    apn_status st = apn_field_create(o.n, poly, prim, &f);
    if (st != APN_OK) die_status(st);
    FieldPtr field(f, apn_field_destroy);

    uint64_t primes[16];
    int exps[16];
    const size_t nf = apn_field_order_factors(f, primes, exps, 16);

    json j;
    j["n"] = o.n;
    j["poly"] = to_hex(apn_field_poly(f));
    j["primitive"] = to_hex(apn_field_primitive(f));
    j["order"] = apn_field_order(f);
    json fact = json::array();
    for (size_t i = 0; i < nf; ++i) fact.push_back({{"p", primes[i]}, {"e", exps[i]}});
    j["factorization"] = fact;

    std::ostringstream csv, text;
    csv << "key,value\n"
        << "n," << o.n << "\npoly," << j["poly"].get<std::string>() << "\nprimitive,"
        << j["primitive"].get<std::string>() << "\norder," << apn_field_order(f) << "\n";
    text << "GF(2^" << o.n << ")  poly " << j["poly"].get<std::string>() << "  primitive "
         << j["primitive"].get<std::string>() << "  order " << apn_field_order(f) << " =";
    for (size_t i = 0; i < nf; ++i)
        text << (i ? " *" : "") << " " << primes[i] << (exps[i] > 1 ? "^" + std::to_string(exps[i]) : "");
    text << "\n";
    emit(o, j, csv.str(), text.str());
    return 0;
}

int run_build(const Options& o) {
    if (o.out.empty()) die(2, "build: --out required");
    TablePtr t = acquire_table(o, "build");
    apn_status st = apn_table_write(t.get(), o.out.c_str(),
                                    o.hex_table ? APN_TABLE_HEX : APN_TABLE_BINARY);
    if (st != APN_OK) die_status(st);
    size_t len = 0;
    apn_table_values(t.get(), &len);
    json j = table_info_json(t.get());
    j["file"] = o.out;
    j["entries"] = len;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_spectrum(const Options& o) {
    TablePtr t = acquire_table(o, "spectrum");
    apn_spectrum* s = nullptr;
    apn_status st = apn_spectrum_compute(t.get(), o.threads, &s);
    if (st != APN_OK) die_status(st);
    SpectrumPtr spec(s, apn_spectrum_destroy);

    json j = table_info_json(t.get());
    json values = json::array();
    std::vector<int64_t> lambda;
    for (size_t i = 0; i < apn_spectrum_size(s); ++i) {
        int64_t v;
        uint64_t c;
        apn_spectrum_entry(s, i, &v, &c);
        values.push_back({{"v", v}, {"count", c}});
        lambda.push_back(v);
    }
    j["values"] = values;
    j["lambda"] = lambda;
    j["nl"] = apn_spectrum_nonlinearity(s);
    j["ab"] = apn_spectrum_is_almost_bent(s) != 0;

    apn_params p{};
    apn_table_params(t.get(), &p);
    int64_t pred[8];
    const size_t npred = apn_theorem_spectrum(apn_family(p.family), apn_table_degree_n(t.get()), pred, 8);
    bool mismatch = false;
    if (npred) {
        std::vector<int64_t> expected(pred, pred + npred);
        j["matches_theorem"] = (lambda == expected);
        mismatch = (lambda != expected);
    }

    std::ostringstream csv, text;
    csv << "v,count\n";
    for (const auto& e : values) csv << e["v"].get<int64_t>() << "," << e["count"].get<uint64_t>() << "\n";
    text << "spectrum of " << j["family"].get<std::string>() << " on GF(2^" << j["n"].get<int>() << ")\n";
    for (const auto& e : values)
        text << "  " << e["v"].get<int64_t>() << " x" << e["count"].get<uint64_t>() << "\n";
    text << "nl " << j["nl"].get<int64_t>() << "  ab " << (j["ab"].get<bool>() ? "yes" : "no") << "\n";
    emit(o, j, csv.str(), text.str());
    return mismatch ? 3 : 0;
}

int run_apn(const Options& o) {
    TablePtr t = acquire_table(o, "apn");
    const uint32_t du = apn_table_differential_uniformity(t.get());
    json j = table_info_json(t.get());
    j["uniformity"] = du;
    j["is_apn"] = (du == 2);
    std::ostringstream csv, text;
    csv << "key,value\nuniformity," << du << "\nis_apn," << (du == 2 ? 1 : 0) << "\n";
    text << "uniformity " << du << "  apn " << (du == 2 ? "yes" : "no") << "\n";
    emit(o, j, csv.str(), text.str());
    return 0;
}

int run_kernels(const Options& o) {
    TablePtr t = acquire_table(o, "kernels");
    apn_kernels* k = nullptr;
    apn_status st = apn_kernels_compute(t.get(), o.threads, &k);
    if (st != APN_OK) die_status(st);
    KernelsPtr kern(k, apn_kernels_destroy);

    json counts = json::object();
    std::ostringstream csv, text;
    csv << "nullity,count\n";
    for (int i = 0; i <= apn_kernels_max_nullity(k); ++i) {
        const uint64_t c = apn_kernels_count(k, i);
        if (c) {
            counts[std::to_string(i)] = c;
            csv << i << "," << c << "\n";
            text << "nullity " << i << ": " << c << " values of b\n";
        }
    }
    json j = table_info_json(t.get());
    j["nullity_counts"] = counts;
    j["max"] = apn_kernels_max_nullity(k);
    emit(o, j, csv.str(), text.str());
    return 0;
}

WeightsPtr weights_for(const apn_table* t, const Options& o) {
    apn_weights* w = nullptr;
    apn_status st = APN_OK;
    if (o.source == "spectrum") {
        st = apn_weights_from_spectrum(t, o.threads, &w);
    } else if (o.source == "direct") {
        st = apn_weights_direct(t, &w);
    } else if (o.source == "pless") {
        apn_spectrum* s = nullptr;
        st = apn_spectrum_compute(t, o.threads, &s);
        if (st != APN_OK) die_status(st);
        SpectrumPtr spec(s, apn_spectrum_destroy);
        std::vector<int64_t> vals(apn_spectrum_size(s));
        for (size_t i = 0; i < vals.size(); ++i) apn_spectrum_entry(s, i, &vals[i], nullptr);
        st = apn_weights_pless(apn_table_degree_n(t), vals.data(), vals.size(), &w);
    } else {
        die(2, "weights: --source must be spectrum|direct|pless");
    }
    if (st != APN_OK) die_status(st);
    return WeightsPtr(w, apn_weights_destroy);
}

int run_weights(const Options& o) {
    TablePtr t = acquire_table(o, "weights");
    WeightsPtr w = weights_for(t.get(), o);

    json j = table_info_json(t.get());
    j["length"] = apn_weights_length(w.get());
    j["dim"] = apn_weights_dim(w.get());
    j["source"] = o.source;
    json arr = json::array();
    std::ostringstream csv, text;
    csv << "w,count\n";
    for (size_t i = 0; i < apn_weights_size(w.get()); ++i) {
        uint32_t wt;
        uint64_t c;
        apn_weights_entry(w.get(), i, &wt, &c);
        arr.push_back({{"w", wt}, {"count", std::to_string(c)}});
        csv << wt << "," << c << "\n";
        text << "  w=" << wt << "  " << c << "\n";
    }
    j["weights"] = arr;
    emit(o, j, csv.str(), text.str());
    return 0;
}

int run_compare(const Options& o) {
    TablePtr t = acquire_table(o, "compare");
    const int n = apn_table_degree_n(t.get());

    // Gold x^3 over the same field
    apn_params gold{};
    gold.family = APN_FAMILY_GOLD;
    gold.n = n;
    gold.gold_d = 1;
    apn_field* f = nullptr;
    apn_status st = apn_field_create(n, apn_table_field_poly(t.get()),
                                     apn_table_field_primitive(t.get()), &f);
    if (st != APN_OK) die_status(st);
    FieldPtr field(f, apn_field_destroy);
    apn_table* gt = nullptr;
    st = apn_table_build(field.get(), &gold, &gt);
    if (st != APN_OK) die_status(st);
    TablePtr gold_table(gt, apn_table_destroy);

    apn_weights *w1 = nullptr, *w2 = nullptr;
    st = apn_weights_from_spectrum(t.get(), o.threads, &w1);
    if (st != APN_OK) die_status(st);
    WeightsPtr lhs(w1, apn_weights_destroy);
    st = apn_weights_from_spectrum(gold_table.get(), o.threads, &w2);
    if (st != APN_OK) die_status(st);
    WeightsPtr rhs(w2, apn_weights_destroy);

    const bool same = apn_weights_equal(lhs.get(), rhs.get()) != 0;
    json j = table_info_json(t.get());
    j["same_as_gold"] = same;
    std::ostringstream csv, text;
    csv << "key,value\nsame_as_gold," << (same ? 1 : 0) << "\n";
    text << "same weight distribution as gold x^3: " << (same ? "yes" : "no") << "\n";
    emit(o, j, csv.str(), text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Walsh spectra, kernel bounds, and code weight distributions "
                 "of quadratic APN families over GF(2^n)"};
    app.require_subcommand(1);

    Options o;
    auto* c_field = app.add_subcommand("field", "report a field: polynomial, primitive, factorization");
    add_common_flags(c_field, o, false);
    auto* c_build = app.add_subcommand("build", "build a truth table and write it to a file");
    add_common_flags(c_build, o);
    c_build->add_flag("--text", o.hex_table, "write the hex text format instead of binary");
    auto* c_spec = app.add_subcommand("spectrum", "full Walsh spectrum, nonlinearity, AB flag");
    add_common_flags(c_spec, o);
    auto* c_apn = app.add_subcommand("apn", "differential uniformity and APN flag");
    add_common_flags(c_apn, o);
    auto* c_kern = app.add_subcommand("kernels", "per-b kernel nullity histogram");
    add_common_flags(c_kern, o);
    auto* c_weights = app.add_subcommand("weights", "code weight distribution");
    add_common_flags(c_weights, o);
    c_weights->add_option("--source", o.source, "spectrum|direct|pless")
        ->check(CLI::IsMember({"spectrum", "direct", "pless"}));
    auto* c_cmp = app.add_subcommand("compare", "compare weight distribution against gold x^3");
    add_common_flags(c_cmp, o);
    for (auto* cmd : {c_spec, c_apn, c_kern, c_weights, c_cmp})
        cmd->add_option("--in", o.in, "read a truth table file instead of building");

    // config files act as defaults: load before parsing so explicit flags win
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            std::string path;
            if (arg == "--config" && i + 1 < argc)
                path = argv[i + 1];
            else if (arg.rfind("--config=", 0) == 0)
                path = arg.substr(9);
            if (path.empty()) continue;
            std::ifstream f(path);
            if (!f) die(2, "cannot open config " + path);
            try {
                config_from_json(json::parse(f), o);
            } catch (const json::exception& e) {
                die(2, "bad config " + path + ": " + e.what());
            }
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (!o.dump_config.empty()) {
            std::ofstream f(o.dump_config);
            if (!f) die(2, "cannot open " + o.dump_config);
            f << config_to_json(o).dump(2) << "\n";
        }
        if (c_field->parsed()) return run_field(o);
        if (c_build->parsed()) return run_build(o);
        if (c_spec->parsed()) return run_spectrum(o);
        if (c_apn->parsed()) return run_apn(o);
        if (c_kern->parsed()) return run_kernels(o);
        if (c_weights->parsed()) return run_weights(o);
        if (c_cmp->parsed()) return run_compare(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
