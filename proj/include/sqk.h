/* sqk: verification workbench for squares categories, assemblers and
 * piecewise-linear Euler calculus.
 *
 * The library runs named check commands against JSON fixtures and returns
 * a result handle holding a machine-readable report plus a human summary.
 * Status codes line up with the CLI exit codes.
 */
#ifndef SQK_H
#define SQK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqk_status {
  SQK_OK = 0,           /* every check passed */
  SQK_VIOLATION = 1,    /* a law or axiom check failed; report has a witness */
  SQK_INPUT_ERROR = 2,  /* malformed fixture, unknown command, bad options */
  SQK_INCONCLUSIVE = 3  /* bounded search exhausted without a verdict */
} sqk_status;

/* Opaque result handle. Owns its strings; free with sqk_result_free. */
typedef struct sqk_result sqk_result;

const char *sqk_version(void);

/* Known commands (same names as the CLI subcommands):
 *   validate-cat, check-squares, check-assembler, build-cmin, k0,
 *   k0-compare, simplicial-roundtrip, chi, homology, exactness, polygon-k0
 *
 * fixture_json: the fixture document, or NULL for commands that need none
 * (polygon-k0 generates its own fixtures from the seed).
 * options_json: optional JSON object, e.g. {"seed":7,"bound":3,"n":2,
 * "trials":100}; NULL means defaults. Unknown keys are rejected.
 */
sqk_result *sqk_run(const char *command, const char *fixture_json,
                    const char *options_json);

sqk_status sqk_result_status(const sqk_result *r);

/* Deterministic report document: {"command","verdicts":[...],"seed","elapsed_ms"}.
 * Identical command+fixture+options bytes give identical report bytes. */
const char *sqk_result_json(const sqk_result *r);

/* Human-readable multi-line summary (includes wall-clock timing). */
const char *sqk_result_text(const sqk_result *r);

void sqk_result_free(sqk_result *r);

#ifdef __cplusplus
}
#endif

#endif /* SQK_H */
