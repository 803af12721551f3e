#ifndef STELLAR_STELLAR_H
#define STELLAR_STELLAR_H

#include <stdint.h>

#if defined(__GNUC__)
#define STELLAR_API __attribute__((visibility("default")))
#else
#define STELLAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stellar_complex stellar_complex;

/* Status codes double as CLI exit codes. */
typedef enum stellar_status {
    STELLAR_OK = 0,
    STELLAR_REFUTED = 1,
    STELLAR_BUDGET = 2,
    STELLAR_INPUT = 3,
    STELLAR_INTERNAL = 4
} stellar_status;

typedef enum stellar_tight_mode { STELLAR_TIGHT_DIRECT = 0, STELLAR_TIGHT_MU_BETA = 1 } stellar_tight_mode;

typedef struct stellar_options {
    uint32_t field;  /* 0 for the rationals, otherwise a prime */
    int k;
    uint64_t budget;
    uint64_t seed;
    int jobs;
    int cap;         /* vertex cap for subset enumeration; 0 keeps the defaults */
    int mode;        /* stellar_tight_mode */
    int certified;   /* caller vouches for W_k certificates in criterion reports */
} stellar_options;

STELLAR_API void stellar_default_options(stellar_options* options);

/* Message of the last failing call on this thread; empty when none. */
STELLAR_API const char* stellar_last_error(void);
/* Frees strings returned through char** out-parameters. */
STELLAR_API void stellar_string_free(char* text);

/* Loads a facet file, or an embedded complex when the path reads "corpus:NAME". */
STELLAR_API stellar_status stellar_load(const char* path, stellar_complex** out);
STELLAR_API stellar_status stellar_parse(const char* text, stellar_complex** out);
STELLAR_API stellar_status stellar_save(const stellar_complex* complex, const char* path);
STELLAR_API stellar_status stellar_facet_text(const stellar_complex* complex, char** out);
STELLAR_API void stellar_free(stellar_complex* complex);

/* Reports are JSON objects with stable key order. */
STELLAR_API stellar_status stellar_summary(const stellar_complex* complex, char** json);
STELLAR_API stellar_status stellar_vectors(const stellar_complex* complex, char** json);
STELLAR_API stellar_status stellar_betti(const stellar_complex* complex, const stellar_options* options, char** json);
STELLAR_API stellar_status stellar_identities(const stellar_complex* complex, const stellar_options* options, char** json);

STELLAR_API stellar_status stellar_sigma(const stellar_complex* complex, const stellar_options* options, char** json);
STELLAR_API stellar_status stellar_mu(const stellar_complex* complex, const stellar_options* options, char** json);
/* STELLAR_REFUTED when not tight. */
STELLAR_API stellar_status stellar_tight(const stellar_complex* complex, const stellar_options* options, char** json);
/* STELLAR_REFUTED when some criterion with its hypothesis met fails. */
STELLAR_API stellar_status stellar_criteria(const stellar_complex* complex, const stellar_options* options, char** json);

STELLAR_API stellar_status stellar_moves(const stellar_complex* complex, char** json);
/* STELLAR_REFUTED after an exhaustive search, STELLAR_BUDGET when the search was cut short. */
STELLAR_API stellar_status stellar_stellate(const stellar_complex* complex, const stellar_options* options, char** json);
STELLAR_API stellar_status stellar_wk(const stellar_complex* complex, const stellar_options* options, char** json);

/* The order is facet text, one facet per line. */
STELLAR_API stellar_status stellar_shellcheck(const stellar_complex* ball, const char* order, char** json);
STELLAR_API stellar_status stellar_shellfind(const stellar_complex* ball, const stellar_options* options, char** json);
STELLAR_API stellar_status stellar_ears(const stellar_complex* ball, char** json);
STELLAR_API stellar_status stellar_stacked(const stellar_complex* ball, const stellar_options* options, char** json);
/* The constructed complex is returned through out even when validation fails. */
STELLAR_API stellar_status stellar_canonical_ball(const stellar_complex* sphere, const stellar_options* options, char** json,
                                      stellar_complex** out);
STELLAR_API stellar_status stellar_canonical_manifold(const stellar_complex* manifold, const stellar_options* options, char** json,
                                          stellar_complex** out);

/* M(k,d) and its filling. */
STELLAR_API stellar_status stellar_klee_novik(int k, int d, stellar_complex** boundary, stellar_complex** filling);
STELLAR_API stellar_status stellar_corpus(char** json);

typedef void (*stellar_check_callback)(int id, const char* title, int passed, const char* failures_json, void* user);
/* Runs every numbered check; stops at the first failure when stop_on_failure is set. */
STELLAR_API stellar_status stellar_verify(const stellar_options* options, int stop_on_failure, stellar_check_callback callback,
                              void* user, char** json);

#ifdef __cplusplus
}
#endif

#endif
