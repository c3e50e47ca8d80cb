/* nfgd: decomposition of finite normal-form games into nonstrategic,
 * potential and harmonic components. */
#ifndef NFGD_NFGD_H
#define NFGD_NFGD_H

#include <stddef.h>
#include <stdint.h>

#if defined(NFGD_BUILDING)
#define NFGD_API __attribute__((visibility("default")))
#else
#define NFGD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nfgd_status {
  NFGD_OK = 0,
  NFGD_ERR_VALIDATION = 1,
  NFGD_ERR_SHAPE = 2,
  NFGD_ERR_PARSE = 3,
  NFGD_ERR_PRECONDITION = 4,
  NFGD_ERR_IO = 5,
  NFGD_ERR_ARGUMENT = 6,
  NFGD_ERR_INTERNAL = 7
} nfgd_status;

typedef enum nfgd_mode { NFGD_EXACT = 0, NFGD_FLOAT = 1 } nfgd_mode;

typedef enum nfgd_component {
  NFGD_NONSTRATEGIC = 0,
  NFGD_POTENTIAL = 1,
  NFGD_HARMONIC = 2,
  NFGD_PHI = 3
} nfgd_component;

/* A game with its mu, gamma, named profiles and fields. */
typedef struct nfgd_doc nfgd_doc;
typedef struct nfgd_decomp nfgd_decomp;

NFGD_API const char* nfgd_version(void);
/* Message of the most recent failed call on this thread; cleared by successful calls. */
NFGD_API const char* nfgd_last_error(void);
NFGD_API const char* nfgd_status_name(nfgd_status status);
/* Frees strings returned through char** out-parameters. */
NFGD_API void nfgd_string_free(char* s);

NFGD_API nfgd_status nfgd_doc_parse(const char* text, nfgd_doc** out);
NFGD_API nfgd_status nfgd_doc_load(const char* path, nfgd_doc** out);
NFGD_API void nfgd_doc_free(nfgd_doc* doc);
NFGD_API nfgd_status nfgd_doc_clone(const nfgd_doc* doc, nfgd_doc** out);
NFGD_API nfgd_status nfgd_doc_serialize(const nfgd_doc* doc, char** out);
NFGD_API nfgd_status nfgd_doc_save(const nfgd_doc* doc, const char* path);
/* Replaces mu/gamma/generator from one statement in document syntax,
 * e.g. "mu row 1 2". Exact documents only. */
NFGD_API nfgd_status nfgd_doc_override(nfgd_doc* doc, const char* statement);
/* Exact to float is one-way. */
NFGD_API nfgd_status nfgd_doc_set_mode(nfgd_doc* doc, nfgd_mode mode);
NFGD_API nfgd_mode nfgd_doc_mode(const nfgd_doc* doc);
NFGD_API size_t nfgd_doc_num_players(const nfgd_doc* doc);
NFGD_API size_t nfgd_doc_num_profiles(const nfgd_doc* doc);
/* Payoff of `player` at profile index `profile` (row-major, first player slowest). */
NFGD_API nfgd_status nfgd_doc_payoff(const nfgd_doc* doc, size_t player, size_t profile, char** out);

NFGD_API nfgd_status nfgd_decompose(const nfgd_doc* doc, nfgd_decomp** out);
NFGD_API void nfgd_decomp_free(nfgd_decomp* d);
NFGD_API nfgd_status nfgd_decomp_component(const nfgd_decomp* d, nfgd_component which, nfgd_doc** out);
NFGD_API nfgd_status nfgd_decomp_report(const nfgd_decomp* d, char** out);

NFGD_API nfgd_status nfgd_classify(const nfgd_doc* doc, char** report);
/* Report for the named profile; *is_nash is set when epsilon is zero. */
NFGD_API nfgd_status nfgd_check_eq(const nfgd_doc* doc, const char* profile, char** report, int* is_nash);
/* The closest potential game, with d2 and B2 recorded as comments. */
NFGD_API nfgd_status nfgd_closest_potential(const nfgd_doc* doc, nfgd_doc** out);

/* `order` lists the player's labels in their new order. */
NFGD_API nfgd_status nfgd_permute(const nfgd_doc* doc, const char* player, const char* const* order,
                                  size_t count, nfgd_doc** out);
NFGD_API nfgd_status nfgd_translate(const nfgd_doc* doc, const nfgd_doc* translation, nfgd_doc** out);
/* `beta` holds gamma/generator statements separated by newlines. */
NFGD_API nfgd_status nfgd_scale(const nfgd_doc* doc, const char* beta, nfgd_doc** out);
NFGD_API nfgd_status nfgd_extend(const nfgd_doc* doc, const char* player, const char* strategy,
                                 const char* label, const char* lambda, nfgd_doc** out);
NFGD_API nfgd_status nfgd_reduce(const nfgd_doc* doc, const char* player, const char* removed,
                                 const char* kept, nfgd_doc** out);
/* `alpha` is whitespace-separated, over the remaining strategies in order. */
NFGD_API nfgd_status nfgd_reduce_redundant(const nfgd_doc* doc, const char* player, const char* removed,
                                           const char* alpha, nfgd_doc** out);

typedef struct nfgd_verify_options {
  const char* law;
  int trials;
  uint64_t seed;
  int players;    /* 0: random in 2..3 */
  int strategies; /* 0: random in 2..4 */
  int exact;
  int minimize;
} nfgd_verify_options;

NFGD_API void nfgd_verify_defaults(nfgd_verify_options* options);
/* Space-separated list of law names. */
NFGD_API const char* nfgd_law_names(void);
/* *violated is set when a trial fails; the report then ends with the
 * minimized counterexample document. */
NFGD_API nfgd_status nfgd_verify(const nfgd_verify_options* options, char** report, int* violated);
/* Re-checks a counterexample document. */
NFGD_API nfgd_status nfgd_verify_replay(const char* law, const nfgd_doc* doc, int exact, char** report,
                                        int* violated);

#ifdef __cplusplus
}
#endif

#endif
