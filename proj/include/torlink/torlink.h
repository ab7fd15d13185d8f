/* C interface to the torlink library.
 *
 * All functions return 0 on success and a nonzero error code on failure:
 *   1 = parse error, 2 = validation error, 3 = other error.
 * On failure a human-readable message is available from torlink_last_error()
 * (thread-local, valid until the next failing call on the same thread).
 *
 * Strings returned through char** out parameters are heap-allocated and must
 * be released with torlink_string_free().
 */
#ifndef TORLINK_TORLINK_H
#define TORLINK_TORLINK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct torlink_link torlink_link;

const char* torlink_last_error(void);
void torlink_string_free(char* s);

/* Link construction.  `shaded_class` selects the checkerboard class used as
 * shaded: -1 for the built-in/default convention, otherwise 0 or 1. */
int torlink_link_builtin(const char* name, int shaded_class,
                         torlink_link** out);
int torlink_link_load(const char* path, int shaded_class, torlink_link** out);
void torlink_link_free(torlink_link* link);

int torlink_link_info(const torlink_link* link, int* vertices, int* edges,
                      int* faces, int* shaded_class);
int torlink_link_export_map(const torlink_link* link, char** out_text);

/* which: "D-shaded", "D-white" (Laplacian determinant polynomials of the
 * Tait graph and its dual) or "p" (dimer characteristic polynomial). */
int torlink_link_charpoly(const torlink_link* link, const char* which,
                          char** out_text);

/* Mahler measures.  method "jensen" uses `tol`, method "grid" uses `grid_n`.
 * out_method receives the method tag; may be NULL. */
int torlink_link_mahler(const torlink_link* link, const char* which,
                        const char* method, double tol, int grid_n,
                        double* value, double* error_estimate, long* samples,
                        char** out_method);
int torlink_mahler_text(const char* poly_text, const char* method, double tol,
                        int grid_n, double* value, double* error_estimate,
                        long* samples, char** out_method);

int torlink_lobachevsky(double theta, double* out);
int torlink_volume_constants(double* v_tet, double* v_oct);
int torlink_link_volume(const torlink_link* link, double* out);
int torlink_ratio_limit(const torlink_link* link, double tol, double* out);

/* Exact counts on quotients of the shaded Tait graph.
 * cut: "torus" | "planar"; route: "auto" | "bareiss" | "modular" | "brute" |
 * "fourier" ("fourier" requires cut == "torus").  Result is a decimal
 * string. */
int torlink_tree_count(const torlink_link* link, int n, const char* cut,
                       const char* route, char** out_decimal);

/* Torsion order of the n-quotient plus the elementary divisor list in
 * divisibility order ("d1 d2 ... | zeros: k").  Either output may be NULL. */
int torlink_torsion(const torlink_link* link, int n, char** out_order,
                    char** out_divisors);

/* lattice: "triangular" | "square" | "hexagonal";
 * route: "mahler" | "torus-fourier" | "planar-cut"; n <= 0 = route default. */
int torlink_entropy(const char* lattice, const char* route, int n, double* out);

/* normalizer: "n2" | "volume"; format: "csv" | "json". */
int torlink_growth_series(const torlink_link* link, const int* ns, int count,
                          const char* normalizer, const char* format,
                          char** out_text);

/* scope: "theorem2" | "corollary" | "semiregular" | "conjecture-sanity" |
 * "all".  config_json may be NULL.  n_failed may be NULL. */
int torlink_verify(const char* scope, const char* format,
                   const char* config_json, char** out_report, int* n_failed);

#ifdef __cplusplus
}
#endif

#endif
