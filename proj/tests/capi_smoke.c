/* Compiled as C to show that the public header is usable from C. */
#include <stdio.h>
#include <string.h>

#include "sogc/sogc.h"

int main(void) {
  sogc_code* code = NULL;
  size_t n = 0, k = 0, d = 0;
  int so = 0;
  if (sogc_paper_code("so_95_7_46", &code) != SOGC_OK) {
    fprintf(stderr, "%s\n", sogc_last_error());
    return 1;
  }
  if (sogc_code_params(code, &n, &k, &d) != SOGC_OK || sogc_code_is_self_orthogonal(code, &so) != SOGC_OK) {
    sogc_code_free(code);
    return 1;
  }
  sogc_code_free(code);
  if (n != 95 || k != 7 || d != 46 || so != 1) return 1;
  if (sogc_simplex(1, &code) != SOGC_ERR_PARAMETER || strlen(sogc_last_error()) == 0) return 1;
  printf("[%zu,%zu,%zu] so=%d\n", n, k, d, so);
  return 0;
}
