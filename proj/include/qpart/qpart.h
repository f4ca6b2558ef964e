#ifndef QPART_QPART_H
#define QPART_QPART_H

/*
 * C interface to the qpart library: restricted partition counts,
 * fractional-part sums and integer-valued quasi-polynomials.
 *
 * Integers cross the boundary as decimal strings. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * qpart_string_free; qpart_qpoly handles are released with qpart_qpoly_free.
 * On a nonzero status no output is written and qpart_last_error() describes
 * the failure (per thread, valid until the next call on that thread).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(QPART_BUILDING)
#define QPART_API __attribute__((visibility("default")))
#else
#define QPART_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpart_status {
  QPART_OK = 0,
  QPART_ERR_PARSE = 2,    /* malformed input text or bad argument */
  QPART_ERR_DOMAIN = 3,   /* mathematical precondition violated */
  QPART_ERR_INTERNAL = 4  /* exactness invariant failed */
} qpart_status;

typedef enum qpart_count_method {
  QPART_COUNT_FAST = 0,    /* closed form */
  QPART_COUNT_BRUTE = 1,   /* enumeration */
  QPART_COUNT_VIA_SUM = 2  /* three coefficients: sum of two-coefficient counts */
} qpart_count_method;

typedef enum qpart_sum_method {
  QPART_SUM_FAST = 0,   /* Euclid chain */
  QPART_SUM_BRUTE = 1,  /* term by term */
  QPART_SUM_LEMMA = 2   /* block decomposition */
} qpart_sum_method;

/* Integer-valued quasi-polynomial in n. */
typedef struct qpart_qpoly qpart_qpoly;

QPART_API const char* qpart_version(void);
QPART_API const char* qpart_last_error(void);
QPART_API void qpart_string_free(char* s);

/* Largest period any quasi-polynomial result may have. */
QPART_API uint64_t qpart_period_cap(void);
QPART_API qpart_status qpart_set_period_cap(uint64_t cap);

/* Polynomial grammar ("3*n^2 - n + 1") or the JSON schema
 * {"period":T,"lower_boundary":C,"components":[["c0","c1",...],...]}. */
QPART_API qpart_status qpart_qpoly_parse(const char* text, qpart_qpoly** out);
QPART_API void qpart_qpoly_free(qpart_qpoly* q);
QPART_API qpart_status qpart_qpoly_to_json(const qpart_qpoly* q, char** out);
QPART_API qpart_status qpart_qpoly_to_text(const qpart_qpoly* q, char** out);
QPART_API uint64_t qpart_qpoly_period(const qpart_qpoly* q);
QPART_API qpart_status qpart_qpoly_lower_boundary(const qpart_qpoly* q, char** out);
/* Value at n; n must exceed the lower boundary. */
QPART_API qpart_status qpart_qpoly_eval(const qpart_qpoly* q, const char* n, char** out);
QPART_API int qpart_qpoly_equals(const qpart_qpoly* a, const qpart_qpoly* b);

/* f = quotient*g + remainder with 0 <= remainder(n) < |g(n)|. */
QPART_API qpart_status qpart_qpoly_div(const qpart_qpoly* f, const qpart_qpoly* g,
                                       qpart_qpoly** quotient, qpart_qpoly** remainder);
QPART_API qpart_status qpart_qpoly_gcd(const qpart_qpoly* const* fs, size_t count,
                                       qpart_qpoly** out);
/* coefficients must have room for count handles. */
QPART_API qpart_status qpart_qpoly_bezout(const qpart_qpoly* const* fs, size_t count,
                                          qpart_qpoly** gcd, qpart_qpoly** coefficients);
QPART_API qpart_status qpart_qpoly_inverse(const qpart_qpoly* a, const qpart_qpoly* b,
                                           qpart_qpoly** out);

/* Number of x >= 0 with sum coeffs[i]*x[i] = target. The closed forms take
 * two or three coefficients; brute force takes any number. */
QPART_API qpart_status qpart_count(const char* const* coeffs, size_t count, const char* target,
                                   qpart_count_method method, char** out);
QPART_API qpart_status qpart_count_symbolic(const qpart_qpoly* const* coeffs, size_t count,
                                            const qpart_qpoly* target, qpart_qpoly** out);

/* sum_{x=r[0]}^{r[1]} ((r[2] + r[3]*x) mod r[4]), r[4] >= 1. */
QPART_API qpart_status qpart_fracsum(const char* const r[5], qpart_sum_method method, char** out);
/* Levels of the Euclid chain walked by the fast method, the input level included. */
QPART_API qpart_status qpart_fracsum_chain_length(const char* const r[5], size_t* out);
QPART_API qpart_status qpart_fracsum_symbolic(const qpart_qpoly* const r[5], qpart_qpoly** out);

#ifdef __cplusplus
}
#endif

#endif
