/*
 * latsieve C API: finite-group lattice analysis behind opaque handles.
 *
 * All analysis entry points return machine-readable JSON in a heap buffer
 * owned by the caller (release with ls_buffer_free). Options are passed as a
 * JSON object string; recognized keys:
 *
 *   stable (bool)        zero all timing fields (for byte-stable output)
 *   jobs (int)           worker threads for ls_validate
 *   cache_dir (string)   persistent lattice cache directory
 *   use_cache (bool)     enable the on-disk cache (default off)
 *   max_order (int)      group order cap (default 5000)
 *   max_subgroups (int)  lattice node cap (default 50000)
 *   budget_secs (double) per-pattern search budget (default 60)
 *   surplus_cap (int)        candidate-triple cap for the class decision
 *   patterns (string)    comma-separated pattern filter for ls_analyze
 */
#ifndef LATSIEVE_H
#define LATSIEVE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ls_group ls_group;

typedef enum ls_status {
    LS_OK = 0,
    LS_ERR_PARSE = 1,
    LS_ERR_CAP = 2,
    LS_ERR_UNKNOWN_ID = 3,
    LS_ERR_INVALID = 4,
    LS_ERR_TIMEOUT = 5,
    LS_ERR_IO = 6,
    LS_ERR_INTERNAL = 7
} ls_status;

const char* ls_version(void);

/* Thread-local message for the most recent failing call. */
const char* ls_last_error(void);

/* Group construction. `text` uses the group-definition file grammar. */
ls_status ls_group_from_text(const char* text, const char* options_json, ls_group** out);
ls_status ls_group_builtin(const char* id, const char* options_json, ls_group** out);
void ls_group_free(ls_group* g);
long ls_group_order(const ls_group* g);
const char* ls_group_name(const ls_group* g);

/* Sublattice-pattern profile of one group. */
ls_status ls_analyze(const ls_group* g, const char* options_json, char** json_out);

/* Structural class decision of one group. */
ls_status ls_classify(const ls_group* g, const char* options_json, char** json_out);

/* Cross-validation of both deciders over the builtin corpus.
 * selector: "all", "p2", "p3", "order<=N" or comma-separated ids. */
ls_status ls_validate(const char* selector, const char* options_json, char** json_out);

/* Congruence relations of a named pattern (L5..L10, M8, M9). */
ls_status ls_congruences(const char* pattern, char** json_out);

/* Coprime-action system check from a model file text. */
ls_status ls_model_check(const char* file_text, char** json_out);

/* Builtin corpus manifest. */
ls_status ls_corpus_manifest(char** json_out);

void ls_buffer_free(char* buf);

#ifdef __cplusplus
}
#endif

#endif /* LATSIEVE_H */
