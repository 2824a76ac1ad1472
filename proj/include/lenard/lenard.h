/* Public C interface of the lenard library.
 *
 * The library builds conservation-law ladders for a family of bi-Hamiltonian
 * evolution equations, proves the defining identities with exact rational
 * arithmetic, and measures conservation drift under pseudo-spectral time
 * integration. All heavy objects live behind opaque handles; every call
 * returns a status code and the last error message is kept per thread.
 */
#ifndef LENARD_H
#define LENARD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lenard_status {
    LENARD_OK = 0,
    LENARD_ERR_INVALID_ARG = 1,
    LENARD_ERR_SINGULAR_G = 2,
    LENARD_ERR_ASYMMETRIC_G = 3,
    LENARD_ERR_NONSKEW_F = 4,
    LENARD_ERR_CYCLIC_CONSTRAINT = 5,
    LENARD_ERR_CALIBRATION = 6,
    LENARD_ERR_INVALID_CONSTANT = 7,
    LENARD_ERR_NONFINITE = 8,
    LENARD_ERR_CFL = 9,
    LENARD_ERR_EDGE_DECAY = 10,
    LENARD_ERR_UNSUPPORTED_ORDER = 11,
    LENARD_ERR_CONFIG = 12,
    LENARD_ERR_CHECK_FAILED = 13,
    LENARD_ERR_PARSE = 14,
    LENARD_ERR_IO = 15,
    LENARD_ERR_RUNTIME = 16
} lenard_status;

typedef struct lenard_model lenard_model;
typedef struct lenard_ladder lenard_ladder;

const char* lenard_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* lenard_last_error(void);

const char* lenard_status_name(lenard_status status);

/* Frees strings returned through char** out-parameters. */
void lenard_string_free(char* text);

/* Models ------------------------------------------------------------------ */

/* name is "boussinesq" or "broer-kaup". */
lenard_status lenard_model_preset(const char* name, lenard_model** out);

/* JSON object with keys preset|D,G,F,C,K; rationals as integers or "p/q". */
lenard_status lenard_model_from_json(const char* json_text, lenard_model** out);

void lenard_model_free(lenard_model* model);

lenard_status lenard_model_dim(const lenard_model* model, int* out);
lenard_status lenard_model_name(const lenard_model* model, char** out);

/* Canonical text of one component of the evolution right-hand side. */
lenard_status lenard_model_rhs_text(const lenard_model* model, int component, char** out);

/* Ladders ------------------------------------------------------------------ */

lenard_status lenard_ladder_generate(const lenard_model* model, int depth, lenard_ladder** out);
void lenard_ladder_free(lenard_ladder* ladder);
lenard_status lenard_ladder_depth(const lenard_ladder* ladder, int* out);
/* Canonical density of entry index (0..depth). */
lenard_status lenard_ladder_entry_text(const lenard_ladder* ladder, int index, char** out);

/* Orchestration ------------------------------------------------------------ */

/* Runs one subcommand from a version-1 JSON config, writing report files.
 * command may be NULL to use the config's own; out_dir NULL keeps the config
 * value; seed < 0 and depth < 0 keep the config values. On success *summary
 * holds a JSON summary (lines, files, pass). Returns LENARD_ERR_CHECK_FAILED
 * when the run executed but a check failed. */
lenard_status lenard_run_config(const char* config_json, const char* command, const char* out_dir,
                                long long seed, int depth, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* LENARD_H */
