/*
 * C interface to the gwis engine.
 *
 * All objects are opaque and owned by the caller once returned; release them
 * with the matching *_destroy / gwis_string_free. Functions return a
 * gwis_status; on failure the context keeps a message retrievable with
 * gwis_last_error(). A context must not be used from two threads at once;
 * distinct contexts are independent.
 */
#ifndef GWIS_GWIS_H
#define GWIS_GWIS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GWIS_API __declspec(dllexport)
#else
#define GWIS_API __attribute__((visibility("default")))
#endif

typedef enum gwis_status {
  GWIS_OK = 0,
  GWIS_E_VERIFY = 1,      /* verification ran and failed */
  GWIS_E_INPUT = 2,       /* syntax or validation error in caller input */
  GWIS_E_DATA = 3,        /* data files fail their integrity checks */
  GWIS_E_NO_SOLUTION = 4, /* kernel is not one-dimensional / cannot normalize */
  GWIS_E_ARGUMENT = 5,    /* null pointer, bad enum value, index out of range */
  GWIS_E_INTERNAL = 6
} gwis_status;

typedef enum gwis_format { GWIS_FORMAT_PLAIN = 0, GWIS_FORMAT_LATEX = 1, GWIS_FORMAT_JSON = 2 } gwis_format;

typedef struct gwis_context gwis_context;
typedef struct gwis_expr gwis_expr;

GWIS_API const char* gwis_version(void);

/* data_dir may be NULL to use only the embedded data files. */
GWIS_API gwis_status gwis_context_create(const char* data_dir, gwis_context** out);
GWIS_API void gwis_context_destroy(gwis_context* ctx);
/* Message of the last failed call on ctx; "" if none. Valid until the next call. */
GWIS_API const char* gwis_last_error(const gwis_context* ctx);

GWIS_API void gwis_string_free(char* s);

/* Expressions */
GWIS_API gwis_status gwis_expr_parse(gwis_context* ctx, const char* src, gwis_expr** out);
GWIS_API gwis_status gwis_expr_parse_json(gwis_context* ctx, const char* src, gwis_expr** out);
GWIS_API void gwis_expr_destroy(gwis_expr* e);
GWIS_API gwis_status gwis_expr_print(gwis_context* ctx, const gwis_expr* e, gwis_format format, char** out);
GWIS_API gwis_status gwis_expr_equal(gwis_context* ctx, const gwis_expr* a, const gwis_expr* b, int* out);
GWIS_API gwis_status gwis_expr_term_count(gwis_context* ctx, const gwis_expr* e, unsigned long* out);
GWIS_API gwis_status gwis_expr_symmetrize_ij(gwis_context* ctx, const gwis_expr* e, gwis_expr** out);
/* out = a*e1 + b*e2 with rational factors given as "p/q" strings. */
GWIS_API gwis_status gwis_expr_combine(gwis_context* ctx, const char* a, const gwis_expr* e1, const char* b,
                                       const gwis_expr* e2, gwis_expr** out);
/* Coefficient of the single term in `term` within e, rendered in `format`. */
GWIS_API gwis_status gwis_expr_coefficient(gwis_context* ctx, const gwis_expr* e, const gwis_expr* term,
                                           gwis_format format, char** out);

/* Catalog */
GWIS_API gwis_status gwis_basis(gwis_context* ctx, int k, gwis_expr** out);
GWIS_API gwis_status gwis_generic_combination(gwis_context* ctx, gwis_expr** out);
GWIS_API gwis_status gwis_theorem_rhs(gwis_context* ctx, gwis_expr** out);

/* Linear system. Results are rendered text in the requested format. */
GWIS_API gwis_status gwis_solve(gwis_context* ctx, gwis_format format, char** out);
GWIS_API gwis_status gwis_rank(gwis_context* ctx, gwis_format format, char** out);
/* Always fills *out with the report when the pipeline ran; returns
 * GWIS_E_VERIFY if the report does not pass. */
GWIS_API gwis_status gwis_verify(gwis_context* ctx, gwis_format format, char** out);
/* The relation <x^3>_3 = sum c_k (k) rebuilt from the solved vector. */
GWIS_API gwis_status gwis_emit(gwis_context* ctx, gwis_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GWIS_GWIS_H */
