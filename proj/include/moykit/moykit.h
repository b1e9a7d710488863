/* moykit: colored sl(N) MOY brackets, RT polynomials and graded dimensions
 * of Koszul matrix factorizations. Plain C interface. */
#ifndef MOYKIT_MOYKIT_H
#define MOYKIT_MOYKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MOYKIT_BUILDING_LIBRARY)
#define MOYKIT_API __declspec(dllexport)
#else
#define MOYKIT_API __declspec(dllimport)
#endif
#else
#define MOYKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum moykit_status {
  MOYKIT_OK = 0,
  MOYKIT_ERR_PARSE = 1,
  MOYKIT_ERR_VALIDATION = 2,
  MOYKIT_ERR_ARGUMENT = 3,
  MOYKIT_ERR_DOMAIN = 4,
  MOYKIT_ERR_ARITHMETIC = 5,
  MOYKIT_ERR_IO = 6,
  MOYKIT_ERR_INTERNAL = 7
} moykit_status;

typedef enum moykit_engine { MOYKIT_ENGINE_DP = 0, MOYKIT_ENGINE_ENUMERATE = 1 } moykit_engine;

typedef enum moykit_gdim_source { MOYKIT_GDIM_BRACKET = 0, MOYKIT_GDIM_MF = 1 } moykit_gdim_source;

typedef struct moykit_word moykit_word;
typedef struct moykit_poly moykit_poly;
typedef struct moykit_gdim_report moykit_gdim_report;

/* Message for the last failing call on this thread; never NULL. */
MOYKIT_API const char* moykit_last_error(void);
MOYKIT_API const char* moykit_version(void);
MOYKIT_API void moykit_string_free(char* s);

/* ---- slice words ---- */

MOYKIT_API moykit_status moykit_word_parse(const char* text, moykit_word** out);
MOYKIT_API moykit_status moykit_word_load(const char* path, moykit_word** out);
MOYKIT_API void moykit_word_free(moykit_word* w);
/* A random valid closed word with at most max_events events, deterministic
 * in seed. with_crossings adds crossings; with_vertices adds splits/merges. */
MOYKIT_API moykit_status moykit_word_random(uint64_t seed, int max_events, int max_color, int with_vertices,
                                            int with_crossings, moykit_word** out);
MOYKIT_API moykit_status moykit_word_serialize(const moykit_word* w, char** out);
/* *has_n is 0 when the text had no "N" header. */
MOYKIT_API moykit_status moykit_word_header_n(const moykit_word* w, int* has_n, int* n);
/* MOYKIT_OK if every event type-checks; otherwise MOYKIT_ERR_VALIDATION with
 * the failing event index in *event_index (may be NULL). */
MOYKIT_API moykit_status moykit_word_validate(const moykit_word* w, size_t* event_index);
MOYKIT_API moykit_status moykit_word_is_closed(const moykit_word* w, int* closed);
MOYKIT_API moykit_status moykit_word_crossings(const moykit_word* w, size_t* count);
MOYKIT_API moykit_status moykit_colored_rotation(const moykit_word* w, int* out);
MOYKIT_API moykit_status moykit_total_color(const moykit_word* w, int* out);

/* ---- Laurent polynomials in q^(1/2) ---- */

MOYKIT_API void moykit_poly_free(moykit_poly* p);
MOYKIT_API size_t moykit_poly_size(const moykit_poly* p);
/* Term i in ascending exponent order: exponent num/den (den 1 or 2) and the
 * coefficient as a decimal string to release with moykit_string_free. */
MOYKIT_API moykit_status moykit_poly_term(const moykit_poly* p, size_t i, int64_t* num, int64_t* den, char** coeff);
MOYKIT_API moykit_status moykit_poly_to_string(const moykit_poly* p, char** out);
MOYKIT_API int moykit_poly_equal(const moykit_poly* a, const moykit_poly* b);

/* ---- invariants ---- */

/* <Gamma>_N for a closed graph, or <D>_N for a diagram with crossings.
 * threads <= 0 means hardware concurrency. */
MOYKIT_API moykit_status moykit_bracket(const moykit_word* w, int n, moykit_engine engine, int threads, moykit_poly** out);
MOYKIT_API moykit_status moykit_rt(const moykit_word* w, int n, int threads, moykit_poly** out);
MOYKIT_API moykit_status moykit_euler(const moykit_word* w, int n, moykit_gdim_source source, int threads, moykit_poly** out);
MOYKIT_API moykit_status moykit_parity(const moykit_word* w, int n, int* pass, int* total_color);

/* ---- homology of C(Gamma) ---- */

MOYKIT_API moykit_status moykit_gdim(const moykit_word* w, int n, int has_max_deg, int max_deg, int threads,
                                     moykit_gdim_report** out);
MOYKIT_API void moykit_gdim_report_free(moykit_gdim_report* r);
/* Borrowed pointers, valid until the report is freed. */
MOYKIT_API const moykit_poly* moykit_gdim_report_even(const moykit_gdim_report* r);
MOYKIT_API const moykit_poly* moykit_gdim_report_odd(const moykit_gdim_report* r);
MOYKIT_API const moykit_poly* moykit_gdim_report_bracket(const moykit_gdim_report* r);

typedef struct moykit_gdim_flags {
  int d_lo;
  int d_max;
  int colored_rotation;
  int support_in_window;
  int agrees;
  int buffer_vanishes;
  int parity_ok;
  int pass;
} moykit_gdim_flags;

MOYKIT_API moykit_status moykit_gdim_report_flags(const moykit_gdim_report* r, moykit_gdim_flags* out);

/* ---- identity sweeps and state dumps ---- */

typedef void (*moykit_relation_cb)(int relation, const char* params, const char* variant, int pass,
                                   const moykit_poly* lhs, const moykit_poly* rhs, void* user);

MOYKIT_API moykit_status moykit_verify_relations(int n, int max_width, moykit_engine engine, int threads,
                                                 moykit_relation_cb cb, void* user, size_t* total, size_t* failed);

/* labels[e] is a bit set over {-N+1, -N+3, ..., N-1}: bit i stands for
 * -N+1+2i. The state weight is q^(doubled_exp/2). */
typedef void (*moykit_state_cb)(size_t n_edges, const int* edge_colors, const uint32_t* labels, int64_t doubled_exp,
                                void* user);

MOYKIT_API moykit_status moykit_states(const moykit_word* w, int n, moykit_state_cb cb, void* user);

#ifdef __cplusplus
}
#endif

#endif
