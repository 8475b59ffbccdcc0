// Command-line surface for the unit-sum classification library: field
// classification, N_K computation, table verification, bounded searches, and
// the constructive families.

#include "unitsum/classifier.hpp"
#include "unitsum/families.hpp"
#include "unitsum/quadratic.hpp"
#include "unitsum/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace unitsum;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidField = 3;

struct CliConfig {
    long uvw_bound = 100;
    long y_bound = 10000;
    long a_cap = 1000;
    unsigned precision_cap_bits = 4096;
    std::string format = "pretty"; // json | tsv | pretty
    int verbosity = 0;
};

// Key=value config file; '#' starts a comment.  Unknown keys are errors so
// typos don't silently fall back to defaults.
bool load_config_file(const std::string& path, CliConfig& cfg, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string s;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) {
            err = path + ":" + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        std::string key = s.substr(0, eq), val = s.substr(eq + 1);
        try {
            if (key == "uvw_bound") cfg.uvw_bound = std::stol(val);
            else if (key == "y_bound") cfg.y_bound = std::stol(val);
            else if (key == "a_cap") cfg.a_cap = std::stol(val);
            else if (key == "precision_cap_bits") cfg.precision_cap_bits = std::stoul(val);
            else if (key == "format") cfg.format = val;
            else if (key == "verbosity") cfg.verbosity = std::stoi(val);
            else {
                err = path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
                return false;
            }
        } catch (const std::exception&) {
            err = path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'";
            return false;
        }
    }
    if (cfg.uvw_bound < 1 || cfg.y_bound < 1 || cfg.a_cap < 1 || cfg.precision_cap_bits < 64) {
        err = path + ": bounds must be positive (precision cap >= 64)";
        return false;
    }
    return true;
}

ClassifyParams classify_params(const CliConfig& cfg) {
    ClassifyParams p;
    p.la_cap = cfg.a_cap;
    p.uvw_bound = cfg.uvw_bound;
    p.prec.cap_bits = cfg.precision_cap_bits;
    return p;
}

void emit(const CliConfig& cfg, const Json& j, const std::string& tsv,
          const std::string& pretty) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (cfg.format == "tsv")
        std::cout << tsv;
    else
        std::cout << pretty;
}

int cmd_classify(const CliConfig& cfg, const std::string& spec, const std::string& n_str) {
    IntPoly p = parse_field_spec(spec);
    FieldPtr K;
    try {
        K = make_field(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return kExitInvalidField;
    }
    ClassifyParams params = classify_params(cfg);

    Json j = to_json(K);
    std::ostringstream pretty;
    std::string tsv;
    pretty << K->defining_poly().str() << ": " << to_string(K->classification())
           << ", disc " << to_decimal(K->disc_poly()) << "\n";
    tsv += tsv_row({"classification", to_string(K->classification())});
    tsv += tsv_row({"disc", to_decimal(K->disc_poly())});

    Json aliases = Json::array();
    if (K->classification() == FieldClass::cyclic) {
        auto as = detect_simplest_cubic(K, params.simplest_cap, params.prec);
        for (const auto& a : as) aliases.push_back(to_decimal(a));
        if (!as.empty()) {
            pretty << "simplest cubic family member, a =";
            for (const auto& a : as) pretty << " " << to_decimal(a);
            pretty << "\n";
        }
    } else if (K->classification() == FieldClass::complex_cubic) {
        auto as = detect_La(K, params.la_cap, params.prec);
        for (const auto& a : as) aliases.push_back(to_decimal(a));
        if (!as.empty()) {
            pretty << "L_a family member, a =";
            for (const auto& a : as) pretty << " " << to_decimal(a);
            pretty << "\n";
        }
    }
    j["family_aliases"] = std::move(aliases);

    if (!n_str.empty()) {
        BigInt n(n_str);
        auto sols = enumerate_solutions(K, n, params);
        Json js = Json::array();
        tsv += tsv_row({"n", "eps", "delta", "provenance"});
        pretty << "solution classes for n = " << to_decimal(n) << ":\n";
        for (const auto& s : sols) {
            js.push_back(to_json(s));
            tsv += solution_tsv(s);
            pretty << "  " << s.eps.str() << " + " << s.delta.str() << " [" << to_string(s.prov)
                   << "]\n";
        }
        if (sols.empty()) pretty << "  (none)\n";
        j["solutions"] = std::move(js);
        j["n"] = to_decimal(n);
    }
    emit(cfg, j, tsv, pretty.str());
    return kExitOk;
}

int cmd_nk(const CliConfig& cfg, const std::string& spec, const std::string& quadratic_d,
           const std::string& max_x) {
    if (!quadratic_d.empty()) {
        BigInt D(quadratic_d), X = max_x.empty() ? BigInt(100) : BigInt(max_x);
        std::vector<BigInt> values;
        if (D > 1)
            values = nk_real_quadratic(D, X);
        else if (D < 0)
            values = nk_rank_zero(RankZeroKind::imaginary_quadratic, D);
        else if (D == 1)
            values = nk_rank_zero(RankZeroKind::rationals);
        else
            throw std::invalid_argument("nk: --quadratic D must be nonzero and not 0");
        Json jv = Json::array();
        std::string tsv, pretty;
        for (const auto& v : values) {
            jv.push_back(to_decimal(v));
            tsv += to_decimal(v) + "\n";
            pretty += (pretty.empty() ? "" : " ") + to_decimal(v);
        }
        Json j{{"quadratic_d", to_decimal(D)}, {"values", std::move(jv)}};
        if (D > 1) j["max"] = to_decimal(X);
        emit(cfg, j, tsv, pretty + "\n");
        return kExitOk;
    }
    IntPoly p = parse_field_spec(spec);
    FieldPtr K;
    try {
        K = make_field(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return kExitInvalidField;
    }
    NkReport rep = compute_nk(K, classify_params(cfg));
    emit(cfg, to_json(rep), nk_tsv(rep), nk_pretty(rep));
    return kExitOk;
}

int cmd_verify_tables(const CliConfig& cfg) {
    VerifyOptions opt;
    opt.uvw_bound = cfg.uvw_bound;
    opt.prec.cap_bits = cfg.precision_cap_bits;
    TableVerification ver = verify_tables(opt);
    emit(cfg, to_json(ver), verification_pretty(ver), verification_pretty(ver));
    return ver.all_ok ? kExitOk : kExitMismatch;
}

int cmd_search_uvw(const CliConfig& cfg, long bound) {
    auto tuples = uvw_search(bound);
    Json ja = Json::array();
    std::string tsv = tsv_row({"U", "V", "W"});
    std::ostringstream pretty;
    for (const auto& [U, V, W] : tuples) {
        ja.push_back(Json{{"U", to_decimal(U)}, {"V", to_decimal(V)}, {"W", to_decimal(W)}});
        tsv += tsv_row({to_decimal(U), to_decimal(V), to_decimal(W)});
        pretty << "(" << U << ", " << V << ", " << W << ")\n";
    }
    std::set<std::pair<BigInt, BigInt>> positive;
    for (const auto& [U, V, W] : tuples)
        if (U > 0) positive.insert({U, V});
    pretty << positive.size() << " distinct (U, V) pairs with U > 0\n";
    emit(cfg, Json{{"bound", bound}, {"tuples", std::move(ja)},
                   {"positive_u_pairs", positive.size()}},
         tsv, pretty.str());
    return kExitOk;
}

int cmd_search_complex_uv(const CliConfig& cfg, long umax) {
    auto pairs = complex_uv_candidates(umax);
    Json ja = Json::array();
    std::string tsv = tsv_row({"U", "V"});
    std::ostringstream pretty;
    for (const auto& [U, V] : pairs) {
        ja.push_back(Json{{"U", to_decimal(U)}, {"V", to_decimal(V)}});
        tsv += tsv_row({to_decimal(U), to_decimal(V)});
        pretty << "(" << U << ", " << V << ")" << (V == -U ? "  [diagonal]" : "") << "\n";
    }
    emit(cfg, Json{{"umax", umax}, {"pairs", std::move(ja)}}, tsv, pretty.str());
    return kExitOk;
}

int cmd_search_iso(const CliConfig& cfg, const std::string& a_str) {
    BigInt a(a_str);
    auto found = iso_La_hoshi_miyake(a, cfg.a_cap, cfg.y_bound,
                                     PrecisionConfig{128, cfg.precision_cap_bits});
    Json ja = Json::array();
    std::string tsv, pretty;
    for (const auto& b : found) {
        ja.push_back(to_decimal(b));
        tsv += to_decimal(b) + "\n";
        pretty += (pretty.empty() ? "" : " ") + to_decimal(b);
    }
    emit(cfg, Json{{"a", to_decimal(a)}, {"isomorphic_params", std::move(ja)}}, tsv,
         pretty + "\n");
    return kExitOk;
}

int cmd_families_md(const CliConfig& cfg, int d) {
    MdReport rep = md_construction(d);
    std::string tsv = tsv_row({"i", "j", "n"});
    std::ostringstream pretty;
    pretty << "M_" << d << " = " << rep.modulus.str() << "\n"
           << "units verified: " << (rep.units_verified ? "yes" : "NO") << ", evaluations: "
           << (rep.evaluations_verified ? "yes" : "NO") << "\n";
    for (const auto& [i, j, n] : rep.values) {
        tsv += tsv_row({std::to_string(i), std::to_string(j), to_decimal(n)});
        pretty << "  2^" << j << " - 2^" << i << " = " << n << "\n";
    }
    emit(cfg, to_json(rep), tsv, pretty.str());
    return rep.units_verified && rep.evaluations_verified ? kExitOk : kExitMismatch;
}

int cmd_families_ennola(const CliConfig& cfg, const std::string& l_str) {
    EnnolaReport rep = ennola_solutions(BigInt(l_str));
    std::string tsv = tsv_row({"eps", "delta", "n", "sum_ok", "units_ok"});
    std::ostringstream pretty;
    pretty << "field: " << rep.field->defining_poly().str() << "\n";
    auto line = [&](const FamilyIdentity& id, const char* label) {
        tsv += tsv_row({id.eps.str(), id.delta.str(), to_decimal(id.n),
                        id.sum_ok ? "1" : "0", id.units_ok ? "1" : "0"});
        pretty << "  " << id.eps.str() << " + " << id.delta.str() << " = " << id.n << "  "
               << (id.verifies() ? "ok" : "FAILS") << label << "\n";
    };
    for (size_t i = 0; i < rep.identities.size(); i++)
        line(rep.identities[i], i == 3 ? " (as printed)" : "");
    if (rep.fourth_variant) line(*rep.fourth_variant, " (sign-corrected variant)");
    emit(cfg, to_json(rep), tsv, pretty.str());
    return rep.verified_count() >= 3 ? kExitOk : kExitMismatch;
}

int cmd_bound(const CliConfig& cfg, int d) {
    BigInt b = theoretical_bound(d);
    emit(cfg, Json{{"d", d}, {"bound", to_decimal(b)}}, to_decimal(b) + "\n",
         to_decimal(b) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    using namespace unitsum;
    CliConfig cfg;

    // config file: --config flag or the UNITSUM_CONFIG environment variable
    std::string config_path;
    if (const char* env = std::getenv("UNITSUM_CONFIG")) config_path = env;

    CLI::App app{"exact classification of sums of two units over cubic fields"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags after the subcommand name
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--uvw-bound", cfg.uvw_bound, "bound for the (U,V,W) search")
        ->check(CLI::PositiveNumber);
    app.add_option("--y-bound", cfg.y_bound, "y bound for Thue searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--acap", cfg.a_cap, "cap for family parameter scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision-cap", cfg.precision_cap_bits, "embedding precision cap in bits");
    app.add_flag_callback("--json", [&] { cfg.format = "json"; }, "JSON output");
    app.add_flag_callback("--tsv", [&] { cfg.format = "tsv"; }, "TSV output");
    app.add_flag("-v,--verbose", cfg.verbosity, "diagnostic verbosity");

    std::string spec, n_str, quadratic_d, max_x, iso_a, ennola_l;
    long search_bound = 0, search_umax = 0;
    int md_d = 0, bound_d = 0;
    bool want_uvw = false, want_complex_uv = false;

    auto* classify = app.add_subcommand("classify", "classify a cubic field");
    classify->add_option("field", spec, "field spec: \"a2,a1,a0\" or a monic cubic in x")
        ->required();
    classify->add_option("--n", n_str, "also enumerate solution classes for this n");

    auto* nk = app.add_subcommand("nk", "compute the set of unit-sum values");
    nk->add_option("field", spec, "cubic field spec");
    nk->add_option("--quadratic", quadratic_d,
                   "quadratic field instead: D for Q(sqrt(D)), 1 for the rationals");
    nk->add_option("--max", max_x, "upper limit for real quadratic enumeration");

    auto* verify = app.add_subcommand("verify-tables", "re-derive and check the embedded tables");
    (void)verify;

    auto* search = app.add_subcommand("search", "bounded searches");
    search->add_flag("--uvw", want_uvw, "norm-form (U,V,W) search");
    search->add_flag("--complex-uv", want_complex_uv, "negative-discriminant (U,V) scan");
    search->add_option("--iso", iso_a, "Thue-route isomorphism scan for the L_a family");
    search->add_option("--bound", search_bound, "bound for --uvw");
    search->add_option("--umax", search_umax, "U cap for --complex-uv");

    auto* families = app.add_subcommand("families", "constructive families");
    families->add_option("--md", md_d, "degree-d power-of-two construction");
    families->add_option("--ennola", ennola_l, "four identities at parameter l");

    auto* bound = app.add_subcommand("bound", "degree bound for covering all values up to d");
    bound->add_option("d", bound_d, "parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!config_path.empty()) {
        std::string err;
        if (!load_config_file(config_path, cfg, err)) {
            std::cerr << err << "\n";
            return kExitUsage;
        }
        // reapply command-line overrides on top of the file
        try {
            app.clear();
            app.parse(argc, argv);
        } catch (const CLI::ParseError&) {
            return kExitUsage;
        }
    }

    try {
        if (classify->parsed()) return cmd_classify(cfg, spec, n_str);
        if (nk->parsed()) {
            if (spec.empty() && quadratic_d.empty()) {
                std::cerr << "nk: need a field spec or --quadratic D\n";
                return kExitUsage;
            }
            return cmd_nk(cfg, spec, quadratic_d, max_x);
        }
        if (verify->parsed()) return cmd_verify_tables(cfg);
        if (search->parsed()) {
            if (want_uvw) return cmd_search_uvw(cfg, search_bound > 0 ? search_bound : cfg.uvw_bound);
            if (want_complex_uv)
                return cmd_search_complex_uv(cfg, search_umax > 0 ? search_umax : 50);
            if (!iso_a.empty()) return cmd_search_iso(cfg, iso_a);
            std::cerr << "search: need --uvw, --complex-uv, or --iso\n";
            return kExitUsage;
        }
        if (families->parsed()) {
            if (md_d > 0) return cmd_families_md(cfg, md_d);
            if (!ennola_l.empty()) return cmd_families_ennola(cfg, ennola_l);
            std::cerr << "families: need --md or --ennola\n";
            return kExitUsage;
        }
        if (bound->parsed()) return cmd_bound(cfg, bound_d);
    } catch (const FieldSpecError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
