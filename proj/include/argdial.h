/* C interface to the argumentative-dialogue engine.
 *
 * Every function returns a status code (ARGDIAL_OK on success) and reports
 * results through out-parameters. Returned strings are heap-allocated and
 * must be released with argdial_string_free; handles with their _free
 * function. On failure argdial_last_error() describes the problem for the
 * calling thread.
 */

#ifndef ARGDIAL_H
#define ARGDIAL_H

#include <stddef.h>
#include <stdint.h>

#ifndef ARGDIAL_API
#if defined(_WIN32) && defined(ARGDIAL_SHARED)
#ifdef ARGDIAL_BUILD
#define ARGDIAL_API __declspec(dllexport)
#else
#define ARGDIAL_API __declspec(dllimport)
#endif
#else
#define ARGDIAL_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    ARGDIAL_OK = 0,
    ARGDIAL_ERR_PARSE = 1,        /* malformed input text */
    ARGDIAL_ERR_DOMAIN = 2,       /* violated precondition or cross-reference */
    ARGDIAL_ERR_CAPACITY = 3,     /* enumeration limit exceeded */
    ARGDIAL_ERR_BUDGET = 4,       /* cascade ran past its step budget */
    ARGDIAL_ERR_CONFLICT = 5,     /* simultaneous events with contradictory effects */
    ARGDIAL_ERR_INTEGRITY = 6,    /* internal consistency violation */
    ARGDIAL_ERR_CHECK_FAILED = 7, /* a check-suite property was violated */
    ARGDIAL_ERR_INVALID = 8,      /* null handle or bad enum value */
    ARGDIAL_ERR_INTERNAL = 9
};

#define ARGDIAL_TRANSFORM_BASE 0
#define ARGDIAL_TRANSFORM_LELU 1

#define ARGDIAL_SEMANTICS_COMPLETE 0
#define ARGDIAL_SEMANTICS_GROUNDED 1
#define ARGDIAL_SEMANTICS_PREFERRED 2
#define ARGDIAL_SEMANTICS_STABLE 3

typedef struct argdial_aaf argdial_aaf;
typedef struct argdial_dialogue argdial_dialogue;
typedef struct argdial_trace argdial_trace;
typedef struct argdial_session argdial_session;

ARGDIAL_API const char* argdial_version(void);
/* Message of the last failure on this thread; empty string if none. */
ARGDIAL_API const char* argdial_last_error(void);
ARGDIAL_API void argdial_string_free(char* s);

/* ---- Attack graphs ---- */

ARGDIAL_API int argdial_aaf_from_apx(const char* text, argdial_aaf** out);
ARGDIAL_API int argdial_aaf_from_tgf(const char* text, argdial_aaf** out);
ARGDIAL_API int argdial_aaf_from_json(const char* text, argdial_aaf** out);
ARGDIAL_API int argdial_aaf_to_apx(const argdial_aaf* af, char** out);
ARGDIAL_API int argdial_aaf_digest_hex(const argdial_aaf* af, char** out);
ARGDIAL_API int argdial_aaf_argument_count(const argdial_aaf* af, size_t* out);
ARGDIAL_API void argdial_aaf_free(argdial_aaf* af);

/* ---- Dialogues ---- */

ARGDIAL_API int argdial_dialogue_from_text(const char* text, argdial_dialogue** out);
ARGDIAL_API int argdial_dialogue_from_json(const char* text, argdial_dialogue** out);
ARGDIAL_API int argdial_dialogue_to_text(const argdial_dialogue* dialogue, char** out);
ARGDIAL_API void argdial_dialogue_free(argdial_dialogue* dialogue);

/* ---- Acceptability oracle ---- */

/* JSON array of {"in", "out", "undec"} labellings, canonically sorted.
 * oracle_limit <= 0 selects the default cutoff. */
ARGDIAL_API int argdial_oracle(const argdial_aaf* af, int semantics, int oracle_limit,
                               char** labellings_json);

/* ---- Runs ---- */

/* horizon <= 0 selects the default per-cascade budget. */
ARGDIAL_API int argdial_run(const argdial_aaf* af, const argdial_dialogue* dialogue,
                            int transform, int horizon, argdial_trace** out);
ARGDIAL_API int argdial_trace_to_json(const argdial_trace* trace, char** out);
ARGDIAL_API int argdial_trace_final_labelling(const argdial_trace* trace, char** out);
ARGDIAL_API int argdial_trace_state_count(const argdial_trace* trace, size_t* out);
ARGDIAL_API int argdial_trace_mark_count(const argdial_trace* trace, size_t* out);
ARGDIAL_API int argdial_trace_mark_at(const argdial_trace* trace, size_t index, size_t* out);
ARGDIAL_API int argdial_trace_state_dot(const argdial_trace* trace, size_t state_index,
                                        char** out);
ARGDIAL_API void argdial_trace_free(argdial_trace* trace);

/* ---- Sequence synthesis ---- */

/* target_labelling_json: {"in": [...], "out": [...], "undec": [...]} over all
 * arguments of the AAF. The synthesized dialogue reproduces the target under
 * the LELU transform; it is verified by running before it is returned. */
ARGDIAL_API int argdial_synthesize(const argdial_aaf* af, const char* target_labelling_json,
                                   argdial_dialogue** out);

/* ---- Atlas ---- */

ARGDIAL_API int argdial_atlas_all_orders(const argdial_aaf* af, int transform,
                                         char** json_out);
ARGDIAL_API int argdial_atlas_sampled(const argdial_aaf* af, int transform, int samples,
                                      uint64_t seed, char** json_out);

/* ---- Check suite ---- */

/* Both return ARGDIAL_OK when all checks pass and ARGDIAL_ERR_CHECK_FAILED
 * when a violation was found; report_json is written either way.
 * drop_r3 deliberately weakens the priority table (fault injection). */
ARGDIAL_API int argdial_check_random(int transform, int instances, uint64_t seed,
                                     int drop_r3, char** report_json);
ARGDIAL_API int argdial_check_aaf(const argdial_aaf* af, int transform, int sequences,
                                  uint64_t seed, int drop_r3, char** report_json);

/* ---- Interactive sessions ---- */

/* A session accumulates enunciations, one rank per say, and always exposes
 * the state the equivalent batch run would reach. */
ARGDIAL_API int argdial_session_new(const argdial_aaf* af, int transform, int horizon,
                                    argdial_session** out);
ARGDIAL_API int argdial_session_say(argdial_session* session, const char* argument);
/* {"present", "in", "out", "undec", "last"} of the current state. */
ARGDIAL_API int argdial_session_state_json(const argdial_session* session, char** out);
ARGDIAL_API int argdial_session_trace_json(const argdial_session* session, char** out);
ARGDIAL_API int argdial_session_dot(const argdial_session* session, char** out);
ARGDIAL_API void argdial_session_free(argdial_session* session);

#ifdef __cplusplus
}
#endif

#endif /* ARGDIAL_H */
