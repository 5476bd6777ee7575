#include <math.h>
#include <stdio.h>
#include <string.h>

#include "logcoeff.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "check failed: %s (%s)\n", #cond, lc_last_error()); \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  LcClass *cls = NULL;
  LcSeries *psi = NULL;
  double re = 0, im = 0, b[3];
  LcRegion region;

  CHECK(strlen(lc_version()) > 0);
  CHECK(lc_class_parse("fc=2", &cls) == LC_STATUS_OK);
  CHECK(lc_psi_series(cls, 5, 0, 1, &psi) == LC_STATUS_OK);
  CHECK(lc_series_len(psi) == 6);
  CHECK(lc_series_coeff(psi, 5, &re, &im) == LC_STATUS_OK);
  CHECK(fabs(re - 1.0) < 1e-15 && fabs(im) < 1e-15);
  CHECK(lc_series_coeff(psi, 6, &re, &im) == LC_STATUS_OUT_OF_RANGE);
  lc_series_free(psi);
  lc_class_free(cls);

  CHECK(lc_class_parse("janowski=1,-1", &cls) == LC_STATUS_OK);
  CHECK(lc_gamma_bounds(cls, 0, b) == LC_STATUS_OK);
  CHECK(fabs(b[2] - 1.0 / 6.0) < 1e-15);
  lc_class_free(cls);

  CHECK(lc_ps_classify(2.25, 1.215, &region) == LC_STATUS_OK && region == LC_REGION_D6);
  CHECK(lc_class_parse("fc=7", &cls) == LC_STATUS_INVALID_ARGUMENT);
  CHECK(strlen(lc_last_error()) > 0);
  printf("ok\n");
  return 0;
}
