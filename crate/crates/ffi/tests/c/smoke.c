#include <stdio.h>
#include <string.h>
#include "linper.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  LinperSchurDecomposition *dec = NULL;
  CHECK(linper_lemma242_decompose(2, 1, 2, &dec) == LINPER_STATUS_OK);
  CHECK(linper_schur_decomposition_len(dec) == 2);
  uint32_t parts[8];
  size_t len = 0;
  uint64_t mult = 0;
  CHECK(linper_schur_decomposition_entry(dec, 0, parts, 8, &len, &mult) == LINPER_STATUS_OK);
  CHECK(mult == 1);
  linper_schur_decomposition_free(dec);

  CHECK(linper_lemma242_decompose(2, 3, 1, &dec) == LINPER_STATUS_INVALID_ARGUMENT);
  CHECK(linper_last_error() != NULL);

  LinperLevi *levi = NULL;
  CHECK(linper_levi_new(4, "1,3/2,4", &levi) == LINPER_STATUS_OK);
  LinperLeviSweep sweep;
  memset(&sweep, 0, sizeof sweep);
  CHECK(linper_levi_sweep(levi, 1, 1, &sweep) == LINPER_STATUS_OK);
  CHECK(sweep.holds && sweep.failures == 0);
  linper_levi_free(levi);

  bool ok = false;
  CHECK(linper_verify_counts(1, 2, 2, &ok) == LINPER_STATUS_OK && ok);

  printf("linper %s ok\n", linper_version());
  return 0;
}
