/*
 * sbp - selfish bin packing engine
 *
 * C interface to the exact-arithmetic engine: instances, packings and
 * cost-sharing rules are opaque handles; every function returns a status
 * code, with a thread-local message available via sbp_last_error(). All
 * structured data crosses this boundary as JSON text; rationals are
 * canonical "p/q" strings. Strings returned through char** out-parameters
 * are owned by the caller and released with sbp_string_free().
 */

#ifndef SBP_H
#define SBP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbp_status {
    SBP_OK = 0,
    SBP_ERR_PARSE = 1,             /* malformed text or JSON            */
    SBP_ERR_VALIDATION = 2,        /* invariant violated (bad packing)  */
    SBP_ERR_INVALID_ARGUMENT = 3,  /* bad parameter                     */
    SBP_ERR_LIMIT = 4,             /* exhaustive limit exceeded         */
    SBP_ERR_THEOREM_VIOLATION = 5, /* a guaranteed property failed      */
    SBP_ERR_INTERNAL = 6
} sbp_status;

typedef struct sbp_instance sbp_instance;
typedef struct sbp_packing sbp_packing;
typedef struct sbp_rule sbp_rule;

const char* sbp_version(void);

/* Message for the most recent failing call on this thread. */
const char* sbp_last_error(void);

/* Same error as machine-readable JSON:
 * {"error":{"kind":"validation","message":"...","bin":0,"item":3}}    */
const char* sbp_last_error_json(void);

void sbp_string_free(char* s);

/* ------------------------------------------------------------------ */
/* instances:  {"name": "...", "sizes": ["2/3", "1/3", ...]}          */

sbp_status sbp_instance_parse_json(const char* json, sbp_instance** out);
sbp_status sbp_instance_to_json(const sbp_instance* inst, char** out_json);
size_t sbp_instance_item_count(const sbp_instance* inst);
void sbp_instance_free(sbp_instance* inst);

/* ------------------------------------------------------------------ */
/* packings:  {"bins": [[0,2],[1]]}, zero-based input-order indices    */

sbp_status sbp_packing_parse_json(const sbp_instance* inst, const char* json,
                                  sbp_packing** out);
sbp_status sbp_packing_to_json(const sbp_instance* inst, const sbp_packing* p,
                               char** out_json);
size_t sbp_packing_bin_count(const sbp_packing* p);
sbp_status sbp_packing_validate(const sbp_instance* inst, const sbp_packing* p);
void sbp_packing_free(sbp_packing* p);

/* ------------------------------------------------------------------ */
/* rules: "local:3/4:triangular", "local:2/3:quadratic",
 *        "proportional", "egalitarian"                                */

sbp_status sbp_rule_parse(const char* spec, sbp_rule** out);
sbp_status sbp_rule_spec(const sbp_rule* rule, char** out_spec);
void sbp_rule_free(sbp_rule* rule);

/* ------------------------------------------------------------------ */
/* costs                                                               */

/* {"costs": ["8/9", "1/9", ...], "total": "2"} in item input order    */
sbp_status sbp_cost_vector_json(const sbp_rule* rule, const sbp_instance* inst,
                                const sbp_packing* p, char** out_json);

/* ------------------------------------------------------------------ */
/* packers: algo is "bfd", "ffd" or "opt"                              */

sbp_status sbp_pack(const sbp_instance* inst, const char* algo, int with_trace,
                    sbp_packing** out_packing, char** out_json);

/* ------------------------------------------------------------------ */
/* equilibrium                                                         */

/* *out_is_ne in {0,1}; when 0 and out_witness_json is non-NULL, an
 * improving move: {"item":i,"from":b,"to":b'|"new","cost_before":...} */
sbp_status sbp_is_nash(const sbp_rule* rule, const sbp_instance* inst,
                       const sbp_packing* p, int* out_is_ne, char** out_witness_json);

/* Exhaustive coalition check; max_coalition 0 means unbounded. The
 * witness is {"moves":[{...,"to":b|"new:0"},...]}.                    */
sbp_status sbp_is_strong_nash(const sbp_rule* rule, const sbp_instance* inst,
                              const sbp_packing* p, int max_coalition,
                              int* out_is_strong_ne, char** out_witness_json);

/* Deterministic best-response dynamics from `start`. Trajectory JSON:
 * {"start":...,"steps":[{"move":...,"packing":...}],"terminal":
 *  "ne_reached"|"step_cap"|"cycle_detected"}                          */
sbp_status sbp_best_response(const sbp_rule* rule, const sbp_instance* inst,
                             const sbp_packing* start, int step_cap,
                             char** out_trajectory_json, sbp_packing** out_final);

/* Surplus diagnostic on an NE at lambda=3/4; *out_holds in {0,1}.     */
sbp_status sbp_check_surplus(const sbp_instance* inst, const sbp_packing* p,
                             int* out_holds);

/* ------------------------------------------------------------------ */
/* enumeration                                                         */

/* Exhaustive equilibrium report; include_ne_list adds every NE packing. */
sbp_status sbp_enumerate_report(const sbp_rule* rule, const sbp_instance* inst,
                                int include_ne_list, char** out_json);

/* ------------------------------------------------------------------ */
/* generators                                                          */

/* 2k items of 2/3, 2k of 1/3, 3k of 1/(3k); reference packings optional. */
sbp_status sbp_gen_poa_lb(int k, sbp_instance** out, sbp_packing** out_ref_ne,
                          sbp_packing** out_ref_opt);
sbp_status sbp_gen_random(int n, int grid, unsigned long long seed,
                          sbp_instance** out);

/* ------------------------------------------------------------------ */
/* experiments                                                         */

/* suite: {"trials":T,"n":N,"grid":G,"seed":S,
 *         "rules":["local:3/4:triangular",...],"checks":["pos",...]}
 * Returns CSV text; *out_violations > 0 means a bound failed.         */
sbp_status sbp_experiment_run(const char* suite_json, char** out_csv,
                              int* out_violations);

/* ------------------------------------------------------------------ */
/* exhaustive limits (also settable via env SBP_EXACT_LIMIT); 0 resets */

void sbp_set_exact_limit(int n);
void sbp_set_opt_limit(int n);

#ifdef __cplusplus
}
#endif

#endif /* SBP_H */
