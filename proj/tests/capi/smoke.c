#include <stdio.h>
#include <string.h>

#include "symbc/symbc.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

int main(void) {
  symbc_form* f = NULL;
  EXPECT(symbc_form_parse(2, "dx1^dy1 - dx2^dy2", &f) == SYMBC_OK);
  EXPECT(symbc_form_degree(f) == 2);
  char* text = symbc_form_to_string(f);
  EXPECT(text && strcmp(text, "dx1^dy1 - dx2^dy2") == 0);
  symbc_string_free(text);
  symbc_form_free(f);

  EXPECT(symbc_form_parse(2, "dx1^dx1", &f) == SYMBC_OK);
  EXPECT(symbc_form_is_zero(f));
  symbc_form_free(f);

  EXPECT(symbc_form_parse(2, "dx1 + (", &f) == SYMBC_ERR_PARSE);
  EXPECT(strstr(symbc_last_error(), "position") != NULL);
  EXPECT(symbc_form_parse(2, "x3*dx1", &f) == SYMBC_ERR_PARSE);

  symbc_manifold* m = NULL;
  EXPECT(symbc_manifold_load(SYMBC_DATA_DIR "/manifolds/IxT5.json", &m) == SYMBC_OK);
  EXPECT(symbc_manifold_n(m) == 3);

  symbc_report* r = NULL;
  EXPECT(symbc_run_check_form(m, "dy1", "D", NULL, &r) == SYMBC_OK);
  EXPECT(!symbc_report_passed(r));
  EXPECT(symbc_report_check_count(r) == 2);
  EXPECT(strstr(symbc_report_json(r), "\"witness\"") != NULL);
  symbc_report_free(r);

  EXPECT(symbc_run_check_form(m, "x1*dy1^(dx2^dy2 - dx3^dy3)", "Nplus", "plus", &r) == SYMBC_OK);
  EXPECT(symbc_report_passed(r));
  symbc_report_free(r);

  EXPECT(symbc_run_check_form(m, "dx1", "Bogus", NULL, &r) == SYMBC_ERR_ARGUMENT);

  EXPECT(symbc_run_cohomology(m, &r) == SYMBC_OK);
  EXPECT(symbc_report_passed(r));
  EXPECT(strstr(symbc_report_json(r), "\"ph_plus_abs\"") != NULL);
  symbc_report_free(r);
  symbc_manifold_free(m);

  EXPECT(symbc_manifold_from_json("{\"n\": 1}", &m) == SYMBC_ERR_PARSE);
  EXPECT(symbc_manifold_load("/nonexistent/descriptor.json", &m) == SYMBC_ERR_IO);

  EXPECT(symbc_run_identities(1, 10, 3, &r) == SYMBC_OK);
  EXPECT(symbc_report_passed(r));
  symbc_report_free(r);

  EXPECT(symbc_run_verify_tables(SYMBC_DATA_DIR, "B3xT3", SYMBC_PRINTED, NULL, &r) == SYMBC_OK);
  EXPECT(symbc_report_passed(r));
  symbc_report_free(r);
  EXPECT(symbc_run_verify_tables(SYMBC_DATA_DIR, "B3xT3", SYMBC_PRINTED, "ph_minus_abs:3:1", &r) == SYMBC_OK);
  EXPECT(symbc_report_failure_count(r) == 2);
  symbc_report_free(r);
  EXPECT(symbc_run_verify_tables(SYMBC_DATA_DIR, "nope", SYMBC_PRINTED, NULL, &r) == SYMBC_ERR_IO);

  EXPECT(symbc_run_pairing(SYMBC_DATA_DIR, "IxT5", 1, SYMBC_PRINTED, &r) == SYMBC_OK);
  EXPECT(symbc_report_passed(r));
  symbc_report_free(r);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
