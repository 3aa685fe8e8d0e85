/* C interface to the spherical cavity photon library. */
#ifndef SPHCAV_H
#define SPHCAV_H

#include <stddef.h>

#if defined(_WIN32)
#  define SC_API __declspec(dllexport)
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_DOMAIN = 1,
    SC_ERR_INVALID_ARGUMENT = 2,
    SC_ERR_CONVERGENCE = 3,
    SC_ERR_DEGENERATE = 4,
    SC_ERR_UNRESOLVABLE = 5,
    SC_ERR_LENGTH = 6,
    SC_ERR_NULL = 7,
    SC_ERR_INTERNAL = 8
} sc_status;

typedef enum sc_convention { SC_LANDAU_LIFSHITZ = 0, SC_CONDON_SHORTLEY = 1 } sc_convention;
typedef enum sc_tau { SC_ELECTRIC = 0, SC_MAGNETIC = 1 } sc_tau;
typedef enum sc_vsh_kind { SC_VSH_ELECTRIC = 0, SC_VSH_MAGNETIC = 1, SC_VSH_LONGITUDINAL = 2 } sc_vsh_kind;
typedef enum sc_ratio_kind { SC_M_OVER_E = 0, SC_E_STEP = 1, SC_M_STEP = 2 } sc_ratio_kind;
typedef enum sc_bell { SC_PSI_MINUS = 0, SC_PSI_PLUS = 1, SC_PHI_PLUS = 2, SC_PHI_MINUS = 3 } sc_bell;
typedef enum sc_ortho_family {
    SC_FAMILY_SCALAR = 0,
    SC_FAMILY_COUPLED_VSH = 1,
    SC_FAMILY_EML_VSH = 2,
    SC_FAMILY_HELICITY_VSH = 3,
    SC_FAMILY_SPHERICAL_WAVE_HELICITY = 4
} sc_ortho_family;

typedef struct sc_complex { double re, im; } sc_complex;
typedef struct sc_direction { double theta, phi; } sc_direction;
typedef struct sc_vec3 { sc_complex x, y, z; } sc_vec3;
/** Covariant components V_{+1}, V_0, V_{-1}. */
typedef struct sc_spherical { sc_complex plus, zero, minus; } sc_spherical;
typedef struct sc_euler { double alpha, beta, gamma; } sc_euler;

typedef struct sc_cavity_config {
    double radius;
    double c;
    double hbar;
    double epsilon0;
} sc_cavity_config;

typedef struct sc_mode_index {
    sc_tau tau;
    int j, m, n;
} sc_mode_index;

typedef struct sc_mode_spec {
    sc_mode_index index;
    double x_root;
    double omega;
    double norm_const;
    int degeneracy;
} sc_mode_spec;

typedef struct sc_field_sample {
    double r;
    sc_direction dir;
    sc_vec3 A, E, B;
} sc_field_sample;

typedef struct sc_occupation {
    sc_mode_index index;
    int count;
} sc_occupation;

typedef struct sc_quantum_label {
    sc_tau tau;
    int omega_idx, j, m;
} sc_quantum_label;

/** Borrowed view; strings live as long as the owning handle. */
typedef struct sc_check_report {
    const char* name;
    double max_residual;
    double tolerance;
    int pass;
    const char* details;
} sc_check_report;

typedef struct sc_catalog_entry {
    const char* id;
    const char* partition;
    sc_bell bell;
    int sign;
    int form;
} sc_catalog_entry;

typedef struct sc_wigner_matrix sc_wigner_matrix;
typedef struct sc_spectrum sc_spectrum;
typedef struct sc_report_list sc_report_list;
typedef struct sc_state sc_state;

/* errors and version */
SC_API const char* sc_version(void);
/** Message for the last failing call on this thread. */
SC_API const char* sc_last_error(void);
SC_API const char* sc_status_name(int status);

/* special functions */
SC_API int sc_spherical_bessel_j(int l, double x, double* out);
SC_API int sc_bessel_j_halfint(int two_nu, double x, double* out);
SC_API int sc_scalar_harmonic(int l, int m, sc_direction dir, sc_convention conv, sc_complex* out);
SC_API int sc_small_argument_j(int j, double x, int order, double* out);

/* angular */
SC_API int sc_spherical_basis_vector(int mu, sc_vec3* out);
SC_API int sc_cg_s1(int l, int j, int mu, int m, double* out);
SC_API int sc_vsh_coupled(int j, int l, int m, sc_direction dir, sc_vec3* out);
SC_API int sc_vsh(sc_vsh_kind kind, int j, int m, sc_direction dir, sc_vec3* out);
SC_API int sc_helicity_vsh(int lambda, int j, int m, sc_direction dir, sc_vec3* out);
SC_API int sc_helicity_apply(sc_direction axis, const sc_vec3* v, sc_vec3* out);
SC_API int sc_to_spherical(const sc_vec3* v, sc_spherical* out);
SC_API int sc_to_cartesian(const sc_spherical* v, sc_vec3* out);

/* rotations */
SC_API int sc_wigner_d_create(int j, sc_euler angles, sc_wigner_matrix** out);
SC_API int sc_wigner_matrix_j(const sc_wigner_matrix* d);
SC_API int sc_wigner_matrix_get(const sc_wigner_matrix* d, int mp, int m, sc_complex* out);
SC_API int sc_wigner_matrix_unitarity(const sc_wigner_matrix* d, double* out);
SC_API void sc_wigner_matrix_destroy(sc_wigner_matrix* d);
SC_API int sc_rotate_spherical(const sc_spherical* v, sc_euler angles, sc_spherical* out);
/** Row-major 3x3 passive rotation, v' = R v. */
SC_API int sc_cartesian_rotation_matrix(sc_euler angles, double out[9]);
/** Coefficients ordered m = -j .. j; n must equal 2j+1. */
SC_API int sc_rotate_jm_coefficients(int j, const sc_complex* coeffs, size_t n, sc_euler angles, sc_complex* out);
SC_API int sc_spherical_wave_helicity(int j, int m, int lambda, sc_direction dir, sc_vec3* out);
SC_API int sc_plane_to_spherical_coefficient(int j, int m, int lambda, sc_direction p_dir, sc_complex* out);

/* modes */
SC_API sc_cavity_config sc_cavity_config_default(void);
SC_API int sc_root_equation(sc_tau tau, int j, double x, double* out);
/** Writes `count` ascending roots into out. */
SC_API int sc_find_roots(sc_tau tau, int j, int count, double* out);
SC_API int sc_normalization_constant(sc_tau tau, int j, double x_root, const sc_cavity_config* cfg, double* out);
SC_API int sc_mode_resolve(sc_mode_index index, const sc_cavity_config* cfg, sc_mode_spec* out);
SC_API int sc_mode_field(const sc_mode_spec* spec, double r, sc_direction dir, const sc_cavity_config* cfg,
                         sc_field_sample* out);
SC_API int sc_boundary_residual(const sc_mode_spec* spec, const sc_cavity_config* cfg, int n_dirs, double tolerance,
                                sc_report_list** out);
SC_API int sc_mode_energy(const sc_mode_spec* spec, const sc_cavity_config* cfg, int with_b, double* from_potential,
                          double* electric, double* magnetic);
SC_API int sc_spectrum_create(int j_max, int n_max, const sc_cavity_config* cfg, sc_spectrum** out);
SC_API size_t sc_spectrum_size(const sc_spectrum* s);
SC_API int sc_spectrum_get(const sc_spectrum* s, size_t i, sc_mode_spec* out);
SC_API void sc_spectrum_destroy(sc_spectrum* s);
SC_API int sc_hamiltonian_energy(const sc_occupation* occ, size_t n, int include_zero_point,
                                 const sc_cavity_config* cfg, double* energy, long long* photon_number);

/* selection rules */
SC_API int sc_photon_parity(sc_tau tau, int j, int* out);
SC_API int sc_transition_allowed(int parity_initial, int parity_final, sc_tau tau, int j, double ka, int* out);
SC_API int sc_scaling_ratio(sc_ratio_kind kind, int j, double ka, double* out);
SC_API double sc_small_ka_limit(void);

/* entanglement */
SC_API size_t sc_partition_count(void);
SC_API const char* sc_partition_name(size_t i);
SC_API size_t sc_catalog_size(void);
SC_API int sc_catalog_get(size_t i, sc_catalog_entry* out);
SC_API int sc_bell_from_name(const char* name, sc_bell* out);
SC_API const char* sc_bell_name(sc_bell b);
/** Reads alpha fields from a1/a2 and spectator fields from g1/g2. */
SC_API int sc_state_build(const char* partition, sc_bell bell, const sc_quantum_label* a1, const sc_quantum_label* a2,
                          const sc_quantum_label* g1, const sc_quantum_label* g2, sc_state** out);
SC_API size_t sc_state_size(const sc_state* s);
SC_API int sc_state_term(const sc_state* s, size_t i, sc_quantum_label* first, sc_quantum_label* second,
                         sc_complex* amplitude);
SC_API double sc_state_norm2(const sc_state* s);
/** Factorization report for the labels the state was built from. */
SC_API int sc_state_factorization(const sc_state* s, sc_report_list** out);
SC_API void sc_state_destroy(sc_state* s);

/* verification */
SC_API int sc_check_orthonormality(sc_ortho_family family, int l_max, double tolerance, sc_report_list** out);
SC_API int sc_check_plane_wave_expansion(double k, double r, sc_direction dir_k, sc_direction dir_r, int l_max,
                                         double tolerance, sc_report_list** out);
SC_API int sc_check_bessel_integral(int two_nu, int alpha_idx, int beta_idx, double tolerance, sc_report_list** out);
/** only: prefixes (may be NULL when n_only is 0); tol_names/tol_values: overrides. */
SC_API int sc_verify_run(const char* const* only, size_t n_only, const char* const* tol_names, const double* tol_values,
                         size_t n_tol, unsigned long long seed, sc_report_list** out);
SC_API size_t sc_report_list_size(const sc_report_list* r);
SC_API int sc_report_list_get(const sc_report_list* r, size_t i, sc_check_report* out);
SC_API void sc_report_list_destroy(sc_report_list* r);

#ifdef __cplusplus
}
#endif

#endif
