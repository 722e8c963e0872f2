/* Exercises the C API from plain C. */
#include <stdio.h>
#include <string.h>

#include "hcensus/hcensus.h"

static int failures = 0;

#define CHECK(cond)                                            \
  do {                                                         \
    if (!(cond)) {                                             \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                              \
    }                                                          \
  } while (0)

int main(void) {
  hc_result* res = NULL;

  CHECK(hc_cubic_classify(10, 12, &res) == HC_OK);
  CHECK(hc_result_status(res) == HC_OK);
  {
    const char* json = hc_result_render(res, HC_FORMAT_JSON);
    CHECK(json != NULL);
    CHECK(strstr(json, "(9;3,3,3,3,3,2)") != NULL);
    CHECK(strstr(json, "(11;4,4,4,4,4,3)") != NULL);
  }
  hc_result_free(res);

  CHECK(hc_verdict(10, 12, 3, &res) == HC_OK);
  CHECK(strstr(hc_result_render(res, HC_FORMAT_TEXT), "irreducible: no") != NULL);
  hc_result_free(res);

  CHECK(hc_table("r+9", &res) == HC_OK);
  CHECK(strncmp(hc_result_render(res, HC_FORMAT_MARKDOWN), "## ", 3) == 0);
  hc_result_free(res);

  CHECK(hc_table("r+10", &res) != HC_OK);
  CHECK(hc_result_error(res) != NULL);
  hc_result_free(res);

  CHECK(hc_very_ample("(3;1,1,1", &res) == HC_ERR_PARSE);
  CHECK(hc_result_render(res, HC_FORMAT_TEXT) == NULL);
  CHECK(strstr(hc_result_error(res), "parse") != NULL);
  hc_result_free(res);

  CHECK(hc_liaison(3, 0, 1, 4, 0, 0, &res) == HC_ERR_PRECONDITION);
  hc_result_free(res);

  CHECK(hc_neg_curves(8, NULL) == HC_ERR_ARGUMENT);
  CHECK(hc_neg_curves(8, &res) == HC_OK);
  CHECK(strstr(hc_result_render(res, HC_FORMAT_JSON), "240") != NULL);
  hc_result_free(res);

  CHECK(hc_intersect("(1;1,0)", "(1;0,1)", &res) == HC_OK);
  hc_result_free(res);

  hc_result_free(NULL);
  CHECK(strlen(hc_version()) > 0);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
