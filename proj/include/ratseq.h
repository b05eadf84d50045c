/* SPDX-License-Identifier: Apache-2.0 */

/*
 * ratseq — exact arithmetic for the binary-indexed enumeration of the
 * positive rationals, its continued-fraction codec, Kepler's tree of
 * (0,1)-rationals, and 2-adic index extensions with guaranteed rational
 * bracketing of real values.
 *
 * Conventions:
 *   - Every fallible function returns a ratseq_status; results come back
 *     through out-parameters, which are written only on RATSEQ_OK.
 *   - Handles (ratseq_rat, ratseq_cf, ratseq_adic) are opaque and owned by
 *     the caller; release them with the matching *_free function.  Freeing
 *     NULL is a no-op.
 *   - Strings returned through char** are NUL-terminated, allocated by the
 *     library, and released with ratseq_string_free.
 *   - On failure, ratseq_last_error() describes the most recent error on
 *     the calling thread.
 *
 * Text formats:
 *   rational   "p/q" or bare "p"; a leading "-" where signed values appear
 *   index      decimal ("600") or binary with prefix ("0b1001011000")
 *   cf         "[z; q1, q2, ..., qm]", bare integers as "[z;]"
 *   numeral    [ "(" bits ")" ] bits?   e.g. "(01)0", "(1)", "1001011000";
 *              "(B)S" repeats block B infinitely leftward above suffix S
 */

#ifndef RATSEQ_H
#define RATSEQ_H

#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#define RATSEQ_API __declspec(dllexport)
#else
#define RATSEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ratseq_status {
    RATSEQ_OK = 0,
    RATSEQ_ERROR_DOMAIN = 1,   /* value outside an operation's domain */
    RATSEQ_ERROR_PARSE = 2,    /* malformed text input */
    RATSEQ_ERROR_ARGUMENT = 3, /* NULL handle or invalid argument */
    RATSEQ_ERROR_INTERNAL = 4
} ratseq_status;

typedef struct ratseq_rat ratseq_rat;     /* exact signed rational */
typedef struct ratseq_cf ratseq_cf;       /* finite continued fraction */
typedef struct ratseq_adic ratseq_adic;   /* 2-adic integer numeral */

/* ---- diagnostics ----------------------------------------------------- */

/* Message for the most recent failure on this thread; valid until the
 * next ratseq call on the same thread.  Never NULL. */
RATSEQ_API const char* ratseq_last_error(void);

RATSEQ_API const char* ratseq_status_name(ratseq_status status);

RATSEQ_API void ratseq_string_free(char* text);

/* ---- exact rationals -------------------------------------------------- */

RATSEQ_API ratseq_status ratseq_rat_parse(const char* text, ratseq_rat** out);
RATSEQ_API ratseq_status ratseq_rat_to_string(const ratseq_rat* r, char** out);
/* -1, 0, +1 as r is less than, equal to, greater than s. */
RATSEQ_API ratseq_status ratseq_rat_cmp(const ratseq_rat* r, const ratseq_rat* s,
                                        int* out);
/* 2-adic norm |r|_2 of a nonzero rational. */
RATSEQ_API ratseq_status ratseq_rat_norm2(const ratseq_rat* r, ratseq_rat** out);
RATSEQ_API void ratseq_rat_free(ratseq_rat* r);

/* ---- the sequence ------------------------------------------------------ */

/* Value of the enumeration at a natural index >= 1. */
RATSEQ_API ratseq_status ratseq_eval_index(const char* index_text,
                                           ratseq_rat** out);
/* The unique index whose term equals the given positive rational;
 * the index is returned in decimal. */
RATSEQ_API ratseq_status ratseq_locate(const ratseq_rat* value, char** index_out);
/* Signed enumeration of all rationals: s(1)=0, s(2n)=a(n), s(2n+1)=-a(n). */
RATSEQ_API ratseq_status ratseq_signed_term(const char* index_text,
                                            ratseq_rat** out);
/* Terms 1..count, one rendered rational per line. */
RATSEQ_API ratseq_status ratseq_first_terms(uint64_t count, char** out);

/* ---- continued fractions ---------------------------------------------- */

/* Parse CF text; lenient != 0 folds a non-canonical final quotient 1 into
 * the previous quotient instead of rejecting it. */
RATSEQ_API ratseq_status ratseq_cf_parse(const char* text, int lenient,
                                         ratseq_cf** out);
/* Canonical continued fraction of a positive rational. */
RATSEQ_API ratseq_status ratseq_cf_from_rat(const ratseq_rat* value,
                                            ratseq_cf** out);
/* Continued fraction read off the binary digits of an index >= 1. */
RATSEQ_API ratseq_status ratseq_cf_from_index(const char* index_text,
                                              ratseq_cf** out);
RATSEQ_API ratseq_status ratseq_cf_to_string(const ratseq_cf* cf, char** out);
/* Exact value of the continued fraction. */
RATSEQ_API ratseq_status ratseq_cf_value(const ratseq_cf* cf, ratseq_rat** out);
/* Index whose term has this continued fraction (canonical, leading >= 0,
 * positive value required); returned in decimal. */
RATSEQ_API ratseq_status ratseq_cf_index(const ratseq_cf* cf, char** index_out);
RATSEQ_API void ratseq_cf_free(ratseq_cf* cf);

/* ---- Kepler's tree ----------------------------------------------------- */

/* Indented text listing of the tree through max_depth. */
RATSEQ_API ratseq_status ratseq_kepler_text(uint32_t max_depth, char** out);
/* GraphViz rendering; node names "n<index>", labels "a_<index> = p/q". */
RATSEQ_API ratseq_status ratseq_kepler_dot(uint32_t max_depth, char** out);
/* Nested JSON objects with fields index, value, children. */
RATSEQ_API ratseq_status ratseq_kepler_json(uint32_t max_depth, char** out);

/* ---- 2-adic integers --------------------------------------------------- */

RATSEQ_API ratseq_status ratseq_adic_parse(const char* numeral,
                                           ratseq_adic** out);
/* Built-in indices: "sqrt2" = (01)0, "phi" = (1), "e" = the stream of the
 * classical continued-fraction expansion of e. */
RATSEQ_API ratseq_status ratseq_adic_constant(const char* name,
                                              ratseq_adic** out);
/* Canonical numeral text (least period, shortest suffix).  Stream-backed
 * numerals have no finite rendering. */
RATSEQ_API ratseq_status ratseq_adic_render(const ratseq_adic* z, char** out);
/* Exact rational value of a finite or eventually periodic numeral. */
RATSEQ_API ratseq_status ratseq_adic_value(const ratseq_adic* z,
                                           ratseq_rat** out);
/* Exact rational bracket around the extended sequence value at index z:
 * lo = hi for finite numerals, otherwise consecutive convergents with
 * hi - lo <= 2^-precision_bits. */
RATSEQ_API ratseq_status ratseq_adic_eval(const ratseq_adic* z,
                                          uint32_t precision_bits,
                                          ratseq_rat** lo, ratseq_rat** hi);
/* Keep the lowest ones_count set bits; the resulting natural index is
 * returned in decimal. */
RATSEQ_API ratseq_status ratseq_adic_truncate(const ratseq_adic* z,
                                              uint64_t ones_count,
                                              char** index_out);
RATSEQ_API void ratseq_adic_free(ratseq_adic* z);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RATSEQ_H */
