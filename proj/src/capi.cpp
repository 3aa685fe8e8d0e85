#include "sphcav/sphcav.h"

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sphcav/angular.hpp"
#include "sphcav/entangle.hpp"
#include "sphcav/modes.hpp"
#include "sphcav/rotations.hpp"
#include "sphcav/selection_rules.hpp"
#include "sphcav/specfun.hpp"
#include "sphcav/verify.hpp"

using namespace sphcav;

struct sc_wigner_matrix {
    WignerMatrix d;
};

struct sc_spectrum {
    std::vector<ModeSpec> modes;
};

struct sc_report_list {
    std::vector<CheckReport> reports;
};

struct sc_state {
    TwoPhotonState state;
    PartitionSpec partition;
    BellType bell;
    QuantumLabel a1, a2, g1, g2;
    std::vector<std::pair<QuantumLabel, QuantumLabel>> keys;
    std::vector<cplx> values;
};

namespace {

thread_local std::string last_error;

int status_of(ErrorCode c) {
    switch (c) {
        case ErrorCode::Domain: return SC_ERR_DOMAIN;
        case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
        case ErrorCode::Convergence: return SC_ERR_CONVERGENCE;
        case ErrorCode::Degenerate: return SC_ERR_DEGENERATE;
        case ErrorCode::Unresolvable: return SC_ERR_UNRESOLVABLE;
        case ErrorCode::LengthMismatch: return SC_ERR_LENGTH;
    }
    return SC_ERR_INTERNAL;
}

template <class F>
int guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return SC_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return SC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return SC_ERR_INTERNAL;
    }
}

int null_status() {
    last_error = "null pointer argument";
    return SC_ERR_NULL;
}

template <class... P>
bool any_null(const P*... ptrs) {
    return ((ptrs == nullptr) || ...);
}

sc_complex to_c(cplx z) { return {z.real(), z.imag()}; }
cplx from_c(sc_complex z) { return {z.re, z.im}; }
Direction from_c(sc_direction d) { return {d.theta, d.phi}; }
sc_direction to_c(const Direction& d) { return {d.theta, d.phi}; }
EulerAngles from_c(sc_euler e) { return {e.alpha, e.beta, e.gamma}; }
sc_vec3 to_c(const CartesianVector& v) { return {to_c(v.x), to_c(v.y), to_c(v.z)}; }
CartesianVector from_c(const sc_vec3& v) { return {from_c(v.x), from_c(v.y), from_c(v.z)}; }
sc_spherical to_c(const SphericalComponents& s) { return {to_c(s.c_plus), to_c(s.c_zero), to_c(s.c_minus)}; }
SphericalComponents from_c(const sc_spherical& s) { return {from_c(s.plus), from_c(s.zero), from_c(s.minus)}; }
Tau from_c(sc_tau t) { return t == SC_MAGNETIC ? Tau::Magnetic : Tau::Electric; }
sc_tau to_c(Tau t) { return t == Tau::Magnetic ? SC_MAGNETIC : SC_ELECTRIC; }

CavityConfig from_c(const sc_cavity_config* c) {
    if (c == nullptr) return {};
    return {c->radius, c->c, c->hbar, c->epsilon0};
}

ModeIndex from_c(const sc_mode_index& i) { return {from_c(i.tau), i.j, i.m, i.n}; }
sc_mode_index to_c(const ModeIndex& i) { return {to_c(i.tau), i.j, i.m, i.n}; }

ModeSpec from_c(const sc_mode_spec& s) {
    return {from_c(s.index), s.x_root, s.omega, s.norm_const, s.degeneracy};
}

sc_mode_spec to_c(const ModeSpec& s) { return {to_c(s.index), s.x_root, s.omega, s.norm_const, s.degeneracy}; }

QuantumLabel from_c(const sc_quantum_label& l) { return {from_c(l.tau), l.omega_idx, l.j, l.m}; }
sc_quantum_label to_c(const QuantumLabel& l) { return {to_c(l.tau), l.omega_idx, l.j, l.m}; }

VshKind from_c(sc_vsh_kind k) {
    switch (k) {
        case SC_VSH_ELECTRIC: return VshKind::Electric;
        case SC_VSH_MAGNETIC: return VshKind::Magnetic;
        case SC_VSH_LONGITUDINAL: return VshKind::Longitudinal;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown harmonic kind");
}

BellType from_c(sc_bell b) {
    switch (b) {
        case SC_PSI_MINUS: return BellType::PsiMinus;
        case SC_PSI_PLUS: return BellType::PsiPlus;
        case SC_PHI_PLUS: return BellType::PhiPlus;
        case SC_PHI_MINUS: return BellType::PhiMinus;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Bell type");
}

sc_bell to_c(BellType b) { return static_cast<sc_bell>(static_cast<int>(b)); }

OrthoFamily from_c(sc_ortho_family f) {
    switch (f) {
        case SC_FAMILY_SCALAR: return OrthoFamily::Scalar;
        case SC_FAMILY_COUPLED_VSH: return OrthoFamily::CoupledVsh;
        case SC_FAMILY_EML_VSH: return OrthoFamily::EmlVsh;
        case SC_FAMILY_HELICITY_VSH: return OrthoFamily::HelicityVsh;
        case SC_FAMILY_SPHERICAL_WAVE_HELICITY: return OrthoFamily::SphericalWaveHelicity;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown orthonormality family");
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = enumerate_catalog();
    return c;
}

const std::vector<std::string>& partition_names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> v;
        for (const auto& p : enumerate_partitions()) v.push_back(p.name());
        return v;
    }();
    return n;
}

const std::vector<std::string>& catalog_partition_names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> v;
        for (const auto& e : catalog()) v.push_back(e.partition.name());
        return v;
    }();
    return n;
}

const std::vector<std::string>& bell_names() {
    static const std::vector<std::string> n = {bell_name(BellType::PsiMinus), bell_name(BellType::PsiPlus),
                                               bell_name(BellType::PhiPlus), bell_name(BellType::PhiMinus)};
    return n;
}

int single_report(const CheckReport& r, sc_report_list** out) {
    *out = new sc_report_list{{r}};
    return SC_OK;
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return last_error.c_str(); }

const char* sc_status_name(int status) {
    switch (status) {
        case SC_OK: return "ok";
        case SC_ERR_DOMAIN: return "domain error";
        case SC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SC_ERR_CONVERGENCE: return "convergence failure";
        case SC_ERR_DEGENERATE: return "degenerate input";
        case SC_ERR_UNRESOLVABLE: return "unresolvable index";
        case SC_ERR_LENGTH: return "length mismatch";
        case SC_ERR_NULL: return "null pointer";
        default: return "internal error";
    }
}

int sc_spherical_bessel_j(int l, double x, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = spherical_bessel_j(l, x); });
}

int sc_bessel_j_halfint(int two_nu, double x, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = bessel_j_halfint(two_nu, x); });
}

int sc_scalar_harmonic(int l, int m, sc_direction dir, sc_convention conv, sc_complex* out) {
    if (any_null(out)) return null_status();
    return guarded([&] {
        const auto c = conv == SC_CONDON_SHORTLEY ? HarmonicConvention::CondonShortley : HarmonicConvention::LandauLifshitz;
        *out = to_c(scalar_harmonic(l, m, from_c(dir), c));
    });
}

int sc_small_argument_j(int j, double x, int order, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = small_argument_j(j, x, order); });
}

int sc_spherical_basis_vector(int mu, sc_vec3* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(spherical_basis_vector(mu)); });
}

int sc_cg_s1(int l, int j, int mu, int m, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = cg_s1(l, j, mu, m); });
}

int sc_vsh_coupled(int j, int l, int m, sc_direction dir, sc_vec3* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(vsh_coupled(j, l, m, from_c(dir))); });
}

int sc_vsh(sc_vsh_kind kind, int j, int m, sc_direction dir, sc_vec3* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(vsh(from_c(kind), j, m, from_c(dir))); });
}

int sc_helicity_vsh(int lambda, int j, int m, sc_direction dir, sc_vec3* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(helicity_vsh(lambda, j, m, from_c(dir))); });
}

int sc_helicity_apply(sc_direction axis, const sc_vec3* v, sc_vec3* out) {
    if (any_null(v, out)) return null_status();
    return guarded([&] { *out = to_c(helicity_apply(from_c(axis), from_c(*v))); });
}

int sc_to_spherical(const sc_vec3* v, sc_spherical* out) {
    if (any_null(v, out)) return null_status();
    return guarded([&] { *out = to_c(to_spherical(from_c(*v))); });
}

int sc_to_cartesian(const sc_spherical* v, sc_vec3* out) {
    if (any_null(v, out)) return null_status();
    return guarded([&] { *out = to_c(to_cartesian(from_c(*v))); });
}

int sc_wigner_d_create(int j, sc_euler angles, sc_wigner_matrix** out) {
    if (any_null(out)) return null_status();
    *out = nullptr;
    return guarded([&] { *out = new sc_wigner_matrix{wigner_d(j, from_c(angles))}; });
}

int sc_wigner_matrix_j(const sc_wigner_matrix* d) { return d == nullptr ? -1 : d->d.j(); }

int sc_wigner_matrix_get(const sc_wigner_matrix* d, int mp, int m, sc_complex* out) {
    if (any_null(d, out)) return null_status();
    return guarded([&] { *out = to_c(d->d(mp, m)); });
}

int sc_wigner_matrix_unitarity(const sc_wigner_matrix* d, double* out) {
    if (any_null(d, out)) return null_status();
    return guarded([&] { *out = d->d.unitarity_residual(); });
}

void sc_wigner_matrix_destroy(sc_wigner_matrix* d) { delete d; }

int sc_rotate_spherical(const sc_spherical* v, sc_euler angles, sc_spherical* out) {
    if (any_null(v, out)) return null_status();
    return guarded([&] { *out = to_c(rotate_spherical(from_c(*v), from_c(angles))); });
}

int sc_cartesian_rotation_matrix(sc_euler angles, double out[9]) {
    if (any_null(out)) return null_status();
    return guarded([&] {
        const auto r = cartesian_rotation_matrix(from_c(angles));
        for (std::size_t k = 0; k < 9; ++k) out[k] = r[k];
    });
}

int sc_rotate_jm_coefficients(int j, const sc_complex* coeffs, size_t n, sc_euler angles, sc_complex* out) {
    if (any_null(coeffs, out)) return null_status();
    return guarded([&] {
        std::vector<cplx> c(n);
        for (size_t k = 0; k < n; ++k) c[k] = from_c(coeffs[k]);
        const auto r = rotate_jm_coefficients(j, c, from_c(angles));
        for (size_t k = 0; k < n; ++k) out[k] = to_c(r[k]);
    });
}

int sc_spherical_wave_helicity(int j, int m, int lambda, sc_direction dir, sc_vec3* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(spherical_wave_helicity(j, m, lambda, from_c(dir))); });
}

int sc_plane_to_spherical_coefficient(int j, int m, int lambda, sc_direction p_dir, sc_complex* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(plane_to_spherical_coefficient(j, m, lambda, from_c(p_dir))); });
}

sc_cavity_config sc_cavity_config_default(void) { return {1.0, 1.0, 1.0, 1.0}; }

int sc_root_equation(sc_tau tau, int j, double x, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = root_equation(from_c(tau), j, x); });
}

int sc_find_roots(sc_tau tau, int j, int count, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] {
        const auto r = find_roots(from_c(tau), j, count);
        for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k];
    });
}

int sc_normalization_constant(sc_tau tau, int j, double x_root, const sc_cavity_config* cfg, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = normalization_constant(from_c(tau), j, x_root, from_c(cfg)); });
}

int sc_mode_resolve(sc_mode_index index, const sc_cavity_config* cfg, sc_mode_spec* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = to_c(resolve_mode(from_c(index), from_c(cfg))); });
}

int sc_mode_field(const sc_mode_spec* spec, double r, sc_direction dir, const sc_cavity_config* cfg,
                  sc_field_sample* out) {
    if (any_null(spec, out)) return null_status();
    return guarded([&] {
        const auto s = mode_field(from_c(*spec), r, from_c(dir), from_c(cfg));
        *out = {s.r, to_c(s.dir), to_c(s.A), to_c(s.E), to_c(s.B)};
    });
}

int sc_boundary_residual(const sc_mode_spec* spec, const sc_cavity_config* cfg, int n_dirs, double tolerance,
                         sc_report_list** out) {
    if (any_null(spec, out)) return null_status();
    *out = nullptr;
    return guarded([&] { single_report(boundary_residual(from_c(*spec), from_c(cfg), n_dirs, tolerance), out); });
}

int sc_mode_energy(const sc_mode_spec* spec, const sc_cavity_config* cfg, int with_b, double* from_potential,
                   double* electric, double* magnetic) {
    if (any_null(spec, from_potential, electric, magnetic)) return null_status();
    return guarded([&] {
        const auto e = mode_energy_quadrature(from_c(*spec), from_c(cfg), with_b != 0);
        *from_potential = e.from_potential;
        *electric = e.electric;
        *magnetic = e.magnetic;
    });
}

int sc_spectrum_create(int j_max, int n_max, const sc_cavity_config* cfg, sc_spectrum** out) {
    if (any_null(out)) return null_status();
    *out = nullptr;
    return guarded([&] { *out = new sc_spectrum{spectrum(j_max, n_max, from_c(cfg))}; });
}

size_t sc_spectrum_size(const sc_spectrum* s) { return s == nullptr ? 0 : s->modes.size(); }

int sc_spectrum_get(const sc_spectrum* s, size_t i, sc_mode_spec* out) {
    if (any_null(s, out)) return null_status();
    return guarded([&] {
        if (i >= s->modes.size()) throw Error(ErrorCode::Domain, "spectrum index out of range");
        *out = to_c(s->modes[i]);
    });
}

void sc_spectrum_destroy(sc_spectrum* s) { delete s; }

int sc_hamiltonian_energy(const sc_occupation* occ, size_t n, int include_zero_point, const sc_cavity_config* cfg,
                          double* energy, long long* photon_number) {
    if (any_null(energy, photon_number) || (n > 0 && occ == nullptr)) return null_status();
    return guarded([&] {
        std::map<ModeIndex, int> m;
        for (size_t k = 0; k < n; ++k) m[from_c(occ[k].index)] += occ[k].count;
        const auto e = hamiltonian_energy(m, include_zero_point != 0, from_c(cfg));
        *energy = e.energy;
        *photon_number = e.photon_number;
    });
}

int sc_photon_parity(sc_tau tau, int j, int* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = photon_parity(from_c(tau), j); });
}

int sc_transition_allowed(int parity_initial, int parity_final, sc_tau tau, int j, double ka, int* out) {
    if (any_null(out)) return null_status();
    return guarded([&] { *out = transition_allowed({parity_initial, parity_final, from_c(tau), j, ka}) ? 1 : 0; });
}

int sc_scaling_ratio(sc_ratio_kind kind, int j, double ka, double* out) {
    if (any_null(out)) return null_status();
    return guarded([&] {
        RatioKind k;
        switch (kind) {
            case SC_M_OVER_E: k = RatioKind::MOverE; break;
            case SC_E_STEP: k = RatioKind::EStep; break;
            case SC_M_STEP: k = RatioKind::MStep; break;
            default: throw Error(ErrorCode::InvalidArgument, "unknown ratio kind");
        }
        *out = scaling_ratio(k, j, ka);
    });
}

double sc_small_ka_limit(void) { return kSmallKaLimit; }

size_t sc_partition_count(void) { return partition_names().size(); }

const char* sc_partition_name(size_t i) { return i < partition_names().size() ? partition_names()[i].c_str() : nullptr; }

size_t sc_catalog_size(void) { return catalog().size(); }

int sc_catalog_get(size_t i, sc_catalog_entry* out) {
    if (any_null(out)) return null_status();
    return guarded([&] {
        if (i >= catalog().size()) throw Error(ErrorCode::Domain, "catalog index out of range");
        const auto& e = catalog()[i];
        *out = {e.id.c_str(), catalog_partition_names()[i].c_str(), to_c(e.bell), e.sign, e.form};
    });
}

int sc_bell_from_name(const char* name, sc_bell* out) {
    if (any_null(name, out)) return null_status();
    return guarded([&] { *out = to_c(bell_from_name(name)); });
}

const char* sc_bell_name(sc_bell b) {
    const auto i = static_cast<std::size_t>(b);
    return i < bell_names().size() ? bell_names()[i].c_str() : nullptr;
}

int sc_state_build(const char* partition, sc_bell bell, const sc_quantum_label* a1, const sc_quantum_label* a2,
                   const sc_quantum_label* g1, const sc_quantum_label* g2, sc_state** out) {
    if (any_null(partition, a1, a2, g1, g2, out)) return null_status();
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<sc_state>();
        h->partition = partition_from_name(partition);
        h->bell = from_c(bell);
        h->a1 = from_c(*a1);
        h->a2 = from_c(*a2);
        h->g1 = from_c(*g1);
        h->g2 = from_c(*g2);
        h->state = build_state(h->partition, h->bell, h->a1, h->a2, h->g1, h->g2);
        for (const auto& [k, v] : h->state.terms()) {
            h->keys.push_back(k);
            h->values.push_back(v);
        }
        *out = h.release();
    });
}

size_t sc_state_size(const sc_state* s) { return s == nullptr ? 0 : s->values.size(); }

int sc_state_term(const sc_state* s, size_t i, sc_quantum_label* first, sc_quantum_label* second, sc_complex* amplitude) {
    if (any_null(s, first, second, amplitude)) return null_status();
    return guarded([&] {
        if (i >= s->values.size()) throw Error(ErrorCode::Domain, "state term index out of range");
        *first = to_c(s->keys[i].first);
        *second = to_c(s->keys[i].second);
        *amplitude = to_c(s->values[i]);
    });
}

double sc_state_norm2(const sc_state* s) { return s == nullptr ? 0.0 : s->state.norm2(); }

int sc_state_factorization(const sc_state* s, sc_report_list** out) {
    if (any_null(s, out)) return null_status();
    *out = nullptr;
    return guarded([&] {
        single_report(factorization_check(s->state, s->partition, s->bell, s->a1, s->a2, s->g1, s->g2), out);
    });
}

void sc_state_destroy(sc_state* s) { delete s; }

int sc_check_orthonormality(sc_ortho_family family, int l_max, double tolerance, sc_report_list** out) {
    if (any_null(out)) return null_status();
    *out = nullptr;
    return guarded([&] { single_report(check_orthonormality(from_c(family), l_max, tolerance), out); });
}

int sc_check_plane_wave_expansion(double k, double r, sc_direction dir_k, sc_direction dir_r, int l_max,
                                  double tolerance, sc_report_list** out) {
    if (any_null(out)) return null_status();
    *out = nullptr;
    return guarded([&] {
        single_report(check_plane_wave_expansion(k, r, from_c(dir_k), from_c(dir_r), l_max, tolerance), out);
    });
}

int sc_check_bessel_integral(int two_nu, int alpha_idx, int beta_idx, double tolerance, sc_report_list** out) {
    if (any_null(out)) return null_status();
    *out = nullptr;
    return guarded([&] { single_report(check_bessel_integral(two_nu, alpha_idx, beta_idx, tolerance), out); });
}

int sc_verify_run(const char* const* only, size_t n_only, const char* const* tol_names, const double* tol_values,
                  size_t n_tol, unsigned long long seed, sc_report_list** out) {
    if (any_null(out) || (n_only > 0 && only == nullptr) || (n_tol > 0 && (tol_names == nullptr || tol_values == nullptr)))
        return null_status();
    *out = nullptr;
    return guarded([&] {
        SuiteOptions o;
        for (size_t k = 0; k < n_only; ++k) o.only.emplace_back(only[k]);
        for (size_t k = 0; k < n_tol; ++k) o.tolerances[tol_names[k]] = tol_values[k];
        o.seed = seed;
        *out = new sc_report_list{run_suite(o)};
    });
}

size_t sc_report_list_size(const sc_report_list* r) { return r == nullptr ? 0 : r->reports.size(); }

int sc_report_list_get(const sc_report_list* r, size_t i, sc_check_report* out) {
    if (any_null(r, out)) return null_status();
    return guarded([&] {
        if (i >= r->reports.size()) throw Error(ErrorCode::Domain, "report index out of range");
        const auto& c = r->reports[i];
        *out = {c.name.c_str(), c.max_residual, c.tolerance, c.pass ? 1 : 0, c.details.c_str()};
    });
}

void sc_report_list_destroy(sc_report_list* r) { delete r; }

}  // extern "C"
