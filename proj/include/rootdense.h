/*
 * rootdense - normalized roots of integer polynomials modulo primes.
 *
 * C interface to the rootdense shared library. All functions that can fail
 * return an rd_status; results are written through out parameters. Handle
 * types are opaque; strings returned through char** out parameters are
 * allocated by the library and must be released with rd_string_free.
 * A human-readable message for the most recent failure on the calling thread
 * is available from rd_last_error.
 */
#ifndef ROOTDENSE_H
#define ROOTDENSE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
  RD_OK = 0,
  RD_ERR_PARSE = 1,     /* malformed text input */
  RD_ERR_DOMAIN = 2,    /* argument outside a documented precondition */
  RD_ERR_EXHAUSTED = 3, /* search budget exhausted, no result */
  RD_ERR_VERIFY = 4,    /* verification failed */
  RD_ERR_IO = 5         /* file could not be read or written */
} rd_status;

typedef struct rd_poly rd_poly;
typedef struct rd_witness rd_witness;
typedef struct rd_witness_list rd_witness_list;
typedef struct rd_report rd_report;

const char* rd_version(void);
const char* rd_status_name(rd_status status);
const char* rd_last_error(void);
void rd_string_free(char* s);

/* ---- integer polynomials ------------------------------------------------ */

/* Accepts "1,0,1" (coefficients, constant first) or "x^2+1". The parsed
 * polynomial is normalized to a positive leading coefficient. */
rd_status rd_poly_parse(const char* text, rd_poly** out);
void rd_poly_free(rd_poly* f);
int rd_poly_degree(const rd_poly* f);
rd_status rd_poly_to_string(const rd_poly* f, char** out);
rd_status rd_poly_eval(const rd_poly* f, const char* x_decimal, char** out_decimal);

/* r_f: the gcd of all integer values of f. */
rd_status rd_fixed_divisor(const rd_poly* f, char** out_decimal);

/* Smallest prime q <= prime_bound with f irreducible mod q (and q not
 * dividing the leading coefficient). *found is 0 when no witness exists
 * below the bound, which is NOT a proof of reducibility. */
rd_status rd_irreducibility_witness(const rd_poly* f, uint64_t prime_bound, int* found, uint64_t* out_q);

/* G(w) = sum_i c_i (b w + t)^i b^(n-i); requires b odd prime coprime to
 * c*r_f and 1 <= t < b. */
rd_status rd_conjugate_g(const rd_poly* f, uint64_t b, uint64_t t, rd_poly** out);

/* ---- primality, runs of residues ---------------------------------------- */

/* Deterministic below 3317044064679887385961981; BPSW + 16 seeded strong
 * rounds above. */
rd_status rd_is_prime(const char* n_decimal, uint64_t seed, int* out);

/* Longest run of consecutive quadratic residues or non-residues in
 * [1, b-1]; b must be an odd prime. */
rd_status rd_brauer_max_run(uint64_t b, uint64_t* out);

/* CSV "b,max_run" over primes b = 3 (mod 4), b <= limit; *within_bound is 1
 * iff max_run^2 < b for every listed b. */
rd_status rd_brauer_scan(uint64_t limit, char** out_csv, int* within_bound);

/* ---- roots mod p and the normalized root set ----------------------------- */

/* Space-separated ascending roots of f mod p (p prime, given in decimal).
 * Exhaustive below the threshold, gcd/splitting above it. */
rd_status rd_roots_mod_p(const rd_poly* f, const char* p_decimal, uint64_t exhaustive_threshold,
                         uint64_t seed, char** out_roots);

/* CSV "p,z,value" of all normalized roots z/p over primes p <= x_bound. */
rd_status rd_af_points_csv(const rd_poly* f, uint64_t x_bound, uint64_t exhaustive_threshold, uint64_t seed,
                           unsigned workers, char** out_csv);

/* Key-value summary (count, star discrepancy, extremes) of the same set. */
rd_status rd_af_stats(const rd_poly* f, uint64_t x_bound, uint64_t exhaustive_threshold, uint64_t seed,
                      unsigned workers, char** out_text);

/* ---- target fractions ---------------------------------------------------- */

rd_status rd_bf_contains(const rd_poly* f, uint64_t a, uint64_t b, int* out);

/* Smallest-b member of B_f within eps of alpha (both decimal or "num/den"
 * strings); RD_ERR_EXHAUSTED when b_max is reached first. */
rd_status rd_select_fraction(const rd_poly* f, const char* alpha, const char* eps, uint64_t b_max,
                             uint64_t* out_a, uint64_t* out_b);

/* Smallest t in [1, b-1] with a*c*t^(n-1) = -r_f (mod b); a/b must belong
 * to B_f. */
rd_status rd_solve_t(const rd_poly* f, uint64_t a, uint64_t b, uint64_t* out_t);

/* ---- witnesses ----------------------------------------------------------- */

rd_status rd_find_witness(const rd_poly* f, uint64_t a, uint64_t b, uint64_t t, uint64_t w_lo, uint64_t w_hi,
                          uint64_t seed, rd_witness** out);

/* Full pipeline toward alpha with tolerance eps. When assume_irreducible is
 * zero, an irreducibility witness below 200 is required first. out_log
 * (optional) receives a one-line search summary even on failure. */
rd_status rd_approximate(const rd_poly* f, const char* alpha, const char* eps, uint64_t b_max, uint64_t w_max,
                         uint64_t seed, int assume_irreducible, rd_witness** out, char** out_log);

rd_status rd_witness_sequence(const rd_poly* f, uint64_t a, uint64_t b, uint64_t t, uint64_t count,
                              uint64_t w_max, uint64_t seed, rd_witness_list** out);

void rd_witness_free(rd_witness* w);
uint64_t rd_witness_a(const rd_witness* w);
uint64_t rd_witness_b(const rd_witness* w);
uint64_t rd_witness_t(const rd_witness* w);
uint64_t rd_witness_w(const rd_witness* w);
rd_status rd_witness_p(const rd_witness* w, char** out_decimal);
rd_status rd_witness_z(const rd_witness* w, char** out_decimal);
rd_status rd_witness_gap(const rd_witness* w, char** out_fraction);
rd_status rd_witness_value(const rd_witness* w, char** out_decimal);
rd_status rd_witness_to_string(const rd_witness* w, char** out);

/* Re-derives and checks every invariant; *ok is 1 only if all hold. */
rd_status rd_verify_witness(const rd_poly* f, const rd_witness* w, uint64_t seed, int* ok);

void rd_witness_list_free(rd_witness_list* list);
uint64_t rd_witness_list_size(const rd_witness_list* list);
const rd_witness* rd_witness_list_get(const rd_witness_list* list, uint64_t index); /* borrowed */

/* ---- density reports ------------------------------------------------------ */

rd_status rd_scan_enumerative(const rd_poly* f, uint64_t x_bound, const char* eps,
                              uint64_t exhaustive_threshold, uint64_t seed, unsigned workers,
                              rd_report** out);
rd_status rd_scan_constructive(const rd_poly* f, const char* eps, uint64_t b_max, uint64_t w_max,
                               uint64_t seed, unsigned workers, int assume_irreducible, rd_report** out);
void rd_report_free(rd_report* r);
uint64_t rd_report_intervals(const rd_report* r);
uint64_t rd_report_covered(const rd_report* r);
double rd_report_wall_ms(const rd_report* r);
/* format: "table", "csv" or "json-lines"; output is identical for identical
 * inputs and seed, independent of the worker count. */
rd_status rd_report_render(const rd_report* r, const char* format, char** out);

/* ---- witness cache --------------------------------------------------------- */

/* Appends one line-delimited record {poly,a,b,t,w,p,z,seed,timestamp}. */
rd_status rd_cache_append(const char* path, const rd_poly* f, const rd_witness* w, uint64_t seed);

/* Revalidates every record in the file; RD_OK with *out_ok == *out_total
 * only when everything verifies (the status is still RD_OK when individual
 * records fail; inspect the counts). */
rd_status rd_cache_verify(const char* path, uint64_t seed, char** out_summary, uint64_t* out_total,
                          uint64_t* out_ok);

#ifdef __cplusplus
}
#endif

#endif /* ROOTDENSE_H */
