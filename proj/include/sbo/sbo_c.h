/*
 * C interface to the symmetry breaking operator library.
 *
 * All computation routines take an opaque session handle, return a status
 * code, and produce their result as a JSON string allocated by the library.
 * Free result strings with sbo_string_free. On failure, sbo_last_error /
 * sbo_last_hint describe what went wrong. Numeric parameters are passed as
 * exact rational literals ("3", "-1/2"); the kernel routine additionally
 * accepts decimal floats inside its JSON config.
 */

#ifndef SBO_C_H
#define SBO_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sbo_session sbo_session;

typedef enum sbo_status {
  SBO_OK = 0,
  SBO_ERR_INTERNAL = 1,    /* unexpected failure */
  SBO_ERR_PRECONDITION = 2 /* invalid argument or violated precondition */
} sbo_status;

/* Creates a session with the built-in classification tables (or the file
 * named by SBO_TABLE_PATH). Returns NULL only on allocation failure. */
sbo_session* sbo_session_new(void);
void sbo_session_free(sbo_session* s);

/* Replaces the session's classification tables from a JSON file. */
sbo_status sbo_session_load_tables(sbo_session* s, const char* path);

/* Message and optional hint for the last failing call on this session. */
const char* sbo_last_error(const sbo_session* s);
const char* sbo_last_hint(const sbo_session* s);

void sbo_string_free(char* s);

/* --- SL(2): Rankin-Cohen operators ------------------------------------- */

/* {"dim": 0|1|2, "class": "not_in_omega"|"omega_generic"|"omega_singular"} */
sbo_status sbo_sl2_dim(sbo_session* s, const char* l1, const char* l2, const char* l3,
                       char** json_out);

/* basis: "generic" -> one operator {"a":..., "coeffs":[...]};
 *        "singular" | "derivative" -> {"ops": [op, op]} at singular points. */
sbo_status sbo_sl2_rc(sbo_session* s, const char* l1, const char* l2, unsigned a,
                      const char* basis, char** json_out);

/* Exact intertwining check up to max_degree. */
sbo_status sbo_sl2_verify(sbo_session* s, const char* l1, const char* l2, unsigned a,
                          unsigned max_degree, char** json_out);

/* Clebsch-Gordan projectors for Pol_m (x) Pol_n. */
sbo_status sbo_sl2_cg(sbo_session* s, unsigned m, unsigned n, char** json_out);

/* Applies an operator JSON to two one-variable polynomial JSONs. */
sbo_status sbo_sl2_rc_apply(sbo_session* s, const char* op_json, const char* f1_json,
                            const char* f2_json, char** json_out);

/* --- O(n+1,1) down to O(n,1) ------------------------------------------- */

/* {"dim": 1|2, "l_even": bool} */
sbo_status sbo_conf_dim(sbo_session* s, const char* lambda, const char* nu,
                        char** json_out);

/* Juhl operator as JSON; requires nu - lambda in {0,2,4,...}. */
sbo_status sbo_conf_juhl(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                         char** json_out);

/* Exact equivariance check of the Juhl operator up to max_degree. */
sbo_status sbo_conf_verify(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                           unsigned max_degree, char** json_out);

/* Numeric evaluation of the integral operator; config is a JSON object, see
 * the CLI documentation for its schema. */
sbo_status sbo_conf_kernel(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                           const char* config_json, char** json_out);

/* --- classification tables ---------------------------------------------- */

sbo_status sbo_pairs_query(sbo_session* s, const char* pair_descriptor, char** json_out);

/* filter: "pp", "bb", or "all". */
sbo_status sbo_pairs_list(sbo_session* s, const char* filter, char** json_out);

/* Lookup in the complex-form table by g, e.g. "sl(4,C)". */
sbo_status sbo_pairs_complex_form(sbo_session* s, const char* g, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SBO_C_H */
