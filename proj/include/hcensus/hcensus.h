#ifndef HCENSUS_H
#define HCENSUS_H

#include <stdint.h>

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_result hc_result;

typedef enum {
  HC_OK = 0,
  HC_ERR_ARGUMENT = 1,      /* bad argument: null pointer, unknown tag, overflow */
  HC_ERR_PRECONDITION = 2,  /* input outside the operation's domain */
  HC_ERR_PARSE = 3,         /* malformed divisor class text */
  HC_ERR_INTERNAL = 4
} hc_status;

typedef enum { HC_FORMAT_TEXT = 0, HC_FORMAT_JSON = 1, HC_FORMAT_MARKDOWN = 2 } hc_format;

/*
 * Every operation stores a freshly allocated result in *out, also on failure
 * (then hc_result_error() describes it). Free it with hc_result_free().
 * Returns HC_ERR_ARGUMENT without allocating when out is NULL.
 */
HC_API hc_status hc_invariants(int64_t d, int64_t g, int64_t r, hc_result** out);
HC_API hc_status hc_verdict(int64_t d, int64_t g, int64_t r, hc_result** out);
/* family: "r+8", "r+9" or "gg4" */
HC_API hc_status hc_table(const char* family, hc_result** out);
HC_API hc_status hc_quadric_models(int64_t e, int64_t g, int64_t max_base_points, hc_result** out);
HC_API hc_status hc_cubic_classify(int64_t d, int64_t g, hc_result** out);
HC_API hc_status hc_neg_curves(int64_t n, hc_result** out);
/* cls in the "(a;b1,...,bn)" grammar, "v^k" allowed */
HC_API hc_status hc_very_ample(const char* cls, hc_result** out);
HC_API hc_status hc_genus(const char* cls, hc_result** out);
HC_API hc_status hc_intersect(const char* x, const char* y, hc_result** out);
HC_API hc_status hc_recipe(int64_t g, int64_t r, hc_result** out);
HC_API hc_status hc_compounded(int64_t e, hc_result** out);
/* When has_dim_residual is nonzero the full dimension account is included. */
HC_API hc_status hc_liaison(int64_t d, int64_t g, int64_t s, int64_t t, int has_dim_residual,
                            int64_t dim_residual, hc_result** out);

HC_API hc_status hc_result_status(const hc_result* res);
/* Rendered output, owned by res and valid until hc_result_free. NULL on error. */
HC_API const char* hc_result_render(hc_result* res, hc_format format);
/* Error document {"error":{"kind":...,"message":...}} or NULL on success. */
HC_API const char* hc_result_error(const hc_result* res);
HC_API void hc_result_free(hc_result* res);

HC_API const char* hc_version(void);

#ifdef __cplusplus
}
#endif

#endif
