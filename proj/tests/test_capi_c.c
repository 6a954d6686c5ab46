/* The header must stay valid C. */
#include <stdio.h>

#include "boolrep/boolrep.h"

int main(void) {
  br_matroid* m = NULL;
  br_repr* r = NULL;
  br_matrix* a = NULL;
  int ok = 0;
  if (br_matroid_example("w3", &m) != BR_OK) return 1;
  if (br_repr_extract(m, &r) != BR_OK) return 1;
  if (br_repr_matrix(r, &a) != BR_OK) return 1;
  if (br_verify(a, m, &ok, NULL) != BR_OK || !ok) return 1;
  if (br_repr_rows(r) != 17) return 1;
  br_matrix_free(a);
  br_repr_free(r);
  br_matroid_free(m);
  puts("ok");
  return 0;
}
