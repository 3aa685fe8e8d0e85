#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphcav/sphcav.h"

namespace {

using ojson = nlohmann::ordered_json;
using Cell = std::variant<std::string, double, long long>;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Thrown for malformed user input; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when the library reports a status; carries the exit code.
struct StatusError : std::runtime_error {
    int exit_code;
    StatusError(const std::string& what, int code) : std::runtime_error(what), exit_code(code) {}
};

enum class Format { Csv, Json, Pretty };

int exit_for_status(int s) {
    switch (s) {
        case SC_ERR_DOMAIN:
        case SC_ERR_INVALID_ARGUMENT:
        case SC_ERR_UNRESOLVABLE:
        case SC_ERR_LENGTH:
        case SC_ERR_NULL:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

void check(int s) {
    if (s != SC_OK) throw StatusError(std::string(sc_status_name(s)) + ": " + sc_last_error(), exit_for_status(s));
}

std::string fmt_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0.0 ? 0.0 : v);
    return buf;
}

/// Rounds to 9 significant digits so JSON output is byte-stable.
double round9(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(fmt_sig(v, 9).c_str(), nullptr);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void emit(Format f, std::ostream& os) const;
};

std::string cell_text(const Cell& c, int digits) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return fmt_sig(std::get<double>(c), digits);
}

ojson cell_json(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    const double d = std::get<double>(c);
    if (!std::isfinite(d)) return fmt_sig(d, 9);
    return round9(d);
}

void Table::emit(Format f, std::ostream& os) const {
    if (f == Format::Csv) {
        for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << columns[k];
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << cell_text(r[k], 9);
            os << '\n';
        }
        return;
    }
    if (f == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& r : rows) {
            ojson o = ojson::object();
            for (std::size_t k = 0; k < r.size(); ++k) o[columns[k]] = cell_json(r[k]);
            arr.push_back(std::move(o));
        }
        os << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::size_t> width(columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t k = 0; k < columns.size(); ++k) width[k] = columns[k].size();
    for (const auto& r : rows) {
        auto& t = text.emplace_back();
        for (std::size_t k = 0; k < r.size(); ++k) {
            t.push_back(cell_text(r[k], 6));
            width[k] = std::max(width[k], t.back().size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            os << (k ? "  " : "");
            os << std::string(width[k] - cells[k].size(), ' ') << cells[k];
        }
        os << '\n';
    };
    line(columns);
    for (const auto& t : text) line(t);
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "pretty") return Format::Pretty;
    throw UsageError("unknown format '" + s + "' (expected csv, json or pretty)");
}

std::string default_format() {
    const char* env = std::getenv("SPHCAV_FORMAT");
    return env != nullptr && *env != '\0' ? env : "pretty";
}

sc_tau parse_tau(const std::string& s) {
    if (s == "E" || s == "e") return SC_ELECTRIC;
    if (s == "M" || s == "m") return SC_MAGNETIC;
    throw UsageError("tau must be E or M, got '" + s + "'");
}

const char* tau_name(sc_tau t) { return t == SC_MAGNETIC ? "M" : "E"; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

/// Parses "re" or "re:im".
sc_complex parse_complex(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
    throw UsageError("malformed complex value '" + s + "'");
}

std::vector<sc_complex> parse_complex_list(const std::string& s) {
    std::vector<sc_complex> out;
    for (const auto& p : split(s, ',')) out.push_back(parse_complex(p));
    return out;
}

struct PhysicsFlags {
    double radius_m = 0.0;
    bool si = false;

    void add(CLI::App* app) {
        app->add_option("--radius-m", radius_m, "Cavity radius in metres");
        app->add_flag("--si", si, "Use SI values for c, hbar and epsilon0");
    }

    sc_cavity_config config() const {
        sc_cavity_config c = sc_cavity_config_default();
        if (si) {
            c.c = 299792458.0;
            c.hbar = 1.054571817e-34;
            c.epsilon0 = 8.8541878128e-12;
        }
        if (radius_m != 0.0) {
            if (!(radius_m > 0.0)) throw UsageError("--radius-m must be positive");
            c.radius = radius_m;
        }
        return c;
    }
};

struct ReportList {
    sc_report_list* h = nullptr;
    ~ReportList() { sc_report_list_destroy(h); }
};

Table report_table(const sc_report_list* list, bool& all_pass) {
    Table t{{"name", "max_residual", "tolerance", "pass", "details"}, {}};
    all_pass = true;
    for (std::size_t i = 0; i < sc_report_list_size(list); ++i) {
        sc_check_report r{};
        check(sc_report_list_get(list, i, &r));
        all_pass = all_pass && r.pass != 0;
        t.rows.push_back({r.name, r.max_residual, r.tolerance, std::string(r.pass ? "true" : "false"), r.details});
    }
    return t;
}

// modes

struct ModesCmd {
    std::string tau;
    int jmax = 4;
    int nmax = 4;
    PhysicsFlags phys;

    int run(Format f) const {
        const sc_cavity_config cfg = phys.config();
        sc_spectrum* s = nullptr;
        check(sc_spectrum_create(jmax, nmax, &cfg, &s));
        Table t{{"tau", "j", "n", "x_root", "omega", "degeneracy", "norm_const"}, {}};
        for (std::size_t i = 0; i < sc_spectrum_size(s); ++i) {
            sc_mode_spec m{};
            check(sc_spectrum_get(s, i, &m));
            if (!tau.empty() && m.index.tau != parse_tau(tau)) continue;
            t.rows.push_back({tau_name(m.index.tau), (long long)m.index.j, (long long)m.index.n, m.x_root, m.omega,
                              (long long)m.degeneracy, m.norm_const});
        }
        sc_spectrum_destroy(s);
        t.emit(f, std::cout);
        return kExitOk;
    }
};

// field

struct FieldCmd {
    std::string tau = "E";
    int j = 1;
    int m = 0;
    int n = 1;
    int nr = 5;
    int nang = 8;
    PhysicsFlags phys;

    int run(Format f) const {
        if (nr < 1 || nang < 1) throw UsageError("--nr and --nang must be at least 1");
        const sc_cavity_config cfg = phys.config();
        sc_mode_spec spec{};
        check(sc_mode_resolve({parse_tau(tau), j, m, n}, &cfg, &spec));
        Table t{{"r", "theta", "phi"}, {}};
        for (const char* v : {"A", "E", "B"})
            for (const char* c : {"x", "y", "z"})
                for (const char* p : {"re", "im"}) t.columns.push_back(std::string(v) + c + "_" + p);
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int ir = 0; ir < nr; ++ir) {
            const double r = nr == 1 ? cfg.radius : cfg.radius * ir / (nr - 1);
            for (int ia = 0; ia < nang; ++ia) {
                const double z = 1.0 - (2.0 * ia + 1.0) / nang;
                const sc_direction dir{std::acos(z), std::fmod(golden * ia, 2.0 * M_PI)};
                sc_field_sample s{};
                check(sc_mode_field(&spec, r, dir, &cfg, &s));
                std::vector<Cell> row{r, dir.theta, dir.phi};
                for (const sc_vec3* v : {&s.A, &s.E, &s.B})
                    for (const sc_complex* c : {&v->x, &v->y, &v->z}) {
                        row.emplace_back(c->re);
                        row.emplace_back(c->im);
                    }
                t.rows.push_back(std::move(row));
            }
        }
        t.emit(f, std::cout);
        return kExitOk;
    }
};

// verify

struct VerifyCmd {
    std::vector<std::string> only;
    std::vector<std::string> tol;
    unsigned long long seed = 20240607ULL;

    int run(Format f) const {
        std::vector<const char*> only_c;
        for (const auto& o : only) only_c.push_back(o.c_str());
        std::vector<std::string> names;
        std::vector<double> values;
        for (const auto& t : tol) {
            const auto eq = t.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects NAME=VALUE, got '" + t + "'");
            names.push_back(t.substr(0, eq));
            values.push_back(parse_double(t.substr(eq + 1)));
        }
        std::vector<const char*> names_c;
        for (const auto& n : names) names_c.push_back(n.c_str());
        ReportList list;
        check(sc_verify_run(only_c.data(), only_c.size(), names_c.data(), values.data(), values.size(), seed, &list.h));
        if (sc_report_list_size(list.h) == 0) throw UsageError("--only matched no checks");
        bool all_pass = true;
        report_table(list.h, all_pass).emit(f, std::cout);
        std::cerr << (all_pass ? "all checks passed" : "one or more checks failed") << '\n';
        return all_pass ? kExitOk : kExitFailure;
    }
};

// entangle

sc_quantum_label parse_label(const std::string& s) {
    sc_quantum_label l{SC_ELECTRIC, 1, 1, 0};
    if (s.empty()) return l;
    for (const auto& kv : split(s, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("label entries must be key=value, got '" + kv + "'");
        const auto key = kv.substr(0, eq);
        const auto val = kv.substr(eq + 1);
        if (key == "tau")
            l.tau = parse_tau(val);
        else if (key == "omega")
            l.omega_idx = parse_int(val);
        else if (key == "j")
            l.j = parse_int(val);
        else if (key == "m")
            l.m = parse_int(val);
        else
            throw UsageError("unknown label field '" + key + "'");
    }
    return l;
}

ojson label_json(const sc_quantum_label& l) {
    ojson o = ojson::object();
    o["tau"] = tau_name(l.tau);
    o["omega"] = l.omega_idx;
    o["j"] = l.j;
    o["m"] = l.m;
    return o;
}

struct EntangleCmd {
    std::string partition;
    std::string bell;
    std::string a1, a2, g1, g2;

    static int catalog(Format f) {
        Table t{{"id", "partition", "bell", "sign", "form"}, {}};
        for (std::size_t i = 0; i < sc_catalog_size(); ++i) {
            sc_catalog_entry e{};
            check(sc_catalog_get(i, &e));
            t.rows.push_back({e.id, e.partition, sc_bell_name(e.bell), (long long)e.sign, (long long)e.form});
        }
        if (f != Format::Json) {
            t.emit(f, std::cout);
            return kExitOk;
        }
        for (const auto& r : t.rows) {
            ojson o = ojson::object();
            for (std::size_t k = 0; k < r.size(); ++k) o[t.columns[k]] = cell_json(r[k]);
            std::cout << o.dump() << '\n';
        }
        return kExitOk;
    }

    int build(Format f) const {
        if (partition.empty() || bell.empty()) throw UsageError("build needs --partition and --bell");
        sc_bell b{};
        check(sc_bell_from_name(bell.c_str(), &b));
        const auto la1 = parse_label(a1), la2 = parse_label(a2), lg1 = parse_label(g1), lg2 = parse_label(g2);
        sc_state* st = nullptr;
        const int s = sc_state_build(partition.c_str(), b, &la1, &la2, &lg1, &lg2, &st);
        if (s == SC_ERR_DEGENERATE) throw StatusError(sc_last_error(), kExitFailure);
        check(s);
        Table t{{"first", "second", "re", "im"}, {}};
        ojson terms = ojson::array();
        for (std::size_t i = 0; i < sc_state_size(st); ++i) {
            sc_quantum_label p{}, q{};
            sc_complex a{};
            check(sc_state_term(st, i, &p, &q, &a));
            ojson term = ojson::object();
            term["first"] = label_json(p);
            term["second"] = label_json(q);
            term["re"] = round9(a.re);
            term["im"] = round9(a.im);
            terms.push_back(std::move(term));
            t.rows.push_back({label_json(p).dump(), label_json(q).dump(), a.re, a.im});
        }
        ReportList fact;
        check(sc_state_factorization(st, &fact.h));
        sc_check_report r{};
        check(sc_report_list_get(fact.h, 0, &r));
        const double norm2 = sc_state_norm2(st);
        sc_state_destroy(st);
        if (f == Format::Json) {
            ojson o = ojson::object();
            o["partition"] = partition;
            o["bell"] = bell;
            o["norm2"] = round9(norm2);
            o["factorization_residual"] = round9(r.max_residual);
            o["terms"] = std::move(terms);
            std::cout << o.dump(2) << '\n';
        } else {
            t.emit(f, std::cout);
            std::cerr << "norm2 " << fmt_sig(norm2, 9) << ", factorization residual " << fmt_sig(r.max_residual, 3)
                      << '\n';
        }
        return r.pass ? kExitOk : kExitFailure;
    }
};

// rotate

struct RotateCmd {
    std::string vec;
    int j = -1;
    std::string coeffs;
    std::string euler = "0,0,0";

    int run(Format f) const {
        const auto ang = split(euler, ',');
        if (ang.size() != 3) throw UsageError("--euler expects alpha,beta,gamma");
        const sc_euler e{parse_double(ang[0]), parse_double(ang[1]), parse_double(ang[2])};
        if (vec.empty() == (j < 0)) throw UsageError("give exactly one of --vec or --j/--coeffs");
        if (!vec.empty()) {
            const auto c = parse_complex_list(vec);
            if (c.size() != 3) throw UsageError("--vec expects three components x,y,z");
            const sc_vec3 v{c[0], c[1], c[2]};
            sc_spherical sph{}, rot{};
            sc_vec3 out{};
            check(sc_to_spherical(&v, &sph));
            check(sc_rotate_spherical(&sph, e, &rot));
            check(sc_to_cartesian(&rot, &out));
            Table t{{"basis", "component", "re", "im"}, {}};
            t.rows.push_back({"cartesian", "x", out.x.re, out.x.im});
            t.rows.push_back({"cartesian", "y", out.y.re, out.y.im});
            t.rows.push_back({"cartesian", "z", out.z.re, out.z.im});
            t.rows.push_back({"spherical", "+1", rot.plus.re, rot.plus.im});
            t.rows.push_back({"spherical", "0", rot.zero.re, rot.zero.im});
            t.rows.push_back({"spherical", "-1", rot.minus.re, rot.minus.im});
            t.emit(f, std::cout);
            return kExitOk;
        }
        const auto c = parse_complex_list(coeffs);
        std::vector<sc_complex> out(c.size());
        check(sc_rotate_jm_coefficients(j, c.data(), c.size(), e, out.data()));
        Table t{{"m", "re", "im"}, {}};
        for (std::size_t k = 0; k < out.size(); ++k)
            t.rows.push_back({(long long)k - j, out[k].re, out[k].im});
        t.emit(f, std::cout);
        return kExitOk;
    }
};

// ratios

struct RatiosCmd {
    int jmin = 1;
    int jmax = 4;
    double ka = 1e-3;

    int run(Format f) const {
        if (!(ka > 0.0)) throw UsageError("--ka must be positive");
        if (jmin < 1 || jmax < jmin) throw UsageError("need 1 <= jmin <= jmax");
        if (ka > sc_small_ka_limit())
            std::cerr << "warning: ka = " << ka << " exceeds " << sc_small_ka_limit()
                      << "; leading-order ratios are outside their validity range\n";
        Table t{{"j", "M_over_E", "E_step", "M_step"}, {}};
        for (int j = jmin; j <= jmax; ++j) {
            double r[3];
            check(sc_scaling_ratio(SC_M_OVER_E, j, ka, &r[0]));
            check(sc_scaling_ratio(SC_E_STEP, j, ka, &r[1]));
            check(sc_scaling_ratio(SC_M_STEP, j, ka, &r[2]));
            t.rows.push_back({(long long)j, r[0], r[1], r[2]});
        }
        t.emit(f, std::cout);
        return kExitOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon modes of a perfectly conducting spherical cavity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sc_version()));
    std::string format_name = default_format();
    app.add_option("--format", format_name, "Output format: csv, json or pretty")->check(
        CLI::IsMember({"csv", "json", "pretty"}));

    ModesCmd modes;
    auto* c_modes = app.add_subcommand("modes", "Eigenfrequency table");
    c_modes->add_option("--tau", modes.tau, "Restrict to E or M");
    c_modes->add_option("--jmax", modes.jmax, "Largest multipole order");
    c_modes->add_option("--nmax", modes.nmax, "Roots per multipole order");
    modes.phys.add(c_modes);

    FieldCmd field;
    auto* c_field = app.add_subcommand("field", "Sample A, E and B of one mode");
    c_field->add_option("--tau", field.tau, "E or M");
    c_field->add_option("--j", field.j, "Multipole order");
    c_field->add_option("--m", field.m, "Azimuthal index");
    c_field->add_option("--n", field.n, "Root index");
    c_field->add_option("--nr", field.nr, "Radial samples from 0 to R");
    c_field->add_option("--nang", field.nang, "Directions per radius");
    field.phys.add(c_field);

    VerifyCmd verify;
    auto* c_verify = app.add_subcommand("verify", "Run the verification suite");
    c_verify->add_option("--only", verify.only, "Check name or dotted prefix (repeatable)");
    c_verify->add_option("--tol", verify.tol, "Tolerance override NAME=VALUE (repeatable)");
    c_verify->add_option("--seed", verify.seed, "Seed for randomized checks");

    EntangleCmd ent;
    auto* c_ent = app.add_subcommand("entangle", "Entangled two-photon states");
    c_ent->require_subcommand(1);
    auto* c_catalog = c_ent->add_subcommand("catalog", "List the state catalog");
    auto* c_build = c_ent->add_subcommand("build", "Expand one entangled state");
    c_build->add_option("--partition", ent.partition, "Entangled fields, e.g. omega or tau+j");
    c_build->add_option("--bell", ent.bell, "psi-minus, psi-plus, phi-plus or phi-minus");
    c_build->add_option("--a1", ent.a1, "First entangled label, e.g. tau=E,omega=1,j=1,m=0");
    c_build->add_option("--a2", ent.a2, "Second entangled label");
    c_build->add_option("--g1", ent.g1, "First spectator label");
    c_build->add_option("--g2", ent.g2, "Second spectator label");

    RotateCmd rot;
    auto* c_rot = app.add_subcommand("rotate", "Passive rotation of a vector or jm coefficients");
    c_rot->add_option("--vec", rot.vec, "Cartesian components x,y,z (complex as re:im)");
    c_rot->add_option("--j", rot.j, "Angular momentum of --coeffs");
    c_rot->add_option("--coeffs", rot.coeffs, "Coefficients for m = -j..j (complex as re:im)");
    c_rot->add_option("--euler", rot.euler, "alpha,beta,gamma in radians");

    RatiosCmd ratios;
    auto* c_ratios = app.add_subcommand("ratios", "Leading-order multipole ratios");
    c_ratios->add_option("--jmin", ratios.jmin, "Smallest order");
    c_ratios->add_option("--jmax", ratios.jmax, "Largest order");
    c_ratios->add_option("--ka", ratios.ka, "Atom size times wavenumber");

    for (auto* sub : {c_modes, c_field, c_verify, c_catalog, c_build, c_rot, c_ratios})
        sub->add_option("--format", format_name, "Output format: csv, json or pretty")
            ->check(CLI::IsMember({"csv", "json", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        bool entangle_default_json = std::getenv("SPHCAV_FORMAT") == nullptr;
        const bool explicit_format = app.count("--format") > 0 || c_catalog->count("--format") > 0 ||
                                     c_build->count("--format") > 0;
        if (explicit_format) entangle_default_json = false;
        if (c_modes->parsed()) return modes.run(parse_format(format_name));
        if (c_field->parsed()) return field.run(parse_format(format_name));
        if (c_verify->parsed()) return verify.run(parse_format(format_name));
        if (c_ent->parsed()) {
            const Format f = entangle_default_json ? Format::Json : parse_format(format_name);
            return c_catalog->parsed() ? EntangleCmd::catalog(f) : ent.build(f);
        }
        if (c_rot->parsed()) return rot.run(parse_format(format_name));
        if (c_ratios->parsed()) return ratios.run(parse_format(format_name));
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StatusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
