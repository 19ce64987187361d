#include <stdio.h>
#include <string.h>

#include "rotundus.h"

static int failures = 0;

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,    \
                    __LINE__, #cond);                                 \
            failures++;                                               \
        }                                                             \
    } while (0)

int main(void) {
    int64_t values[] = {5, 2, 2, 2, 1};
    char *out = NULL;
    CHECK(rotundus_rotundus(values, 5, ROTUNDUS_METHOD_PFAFFIAN, &out) == ROTUNDUS_STATUS_OK);
    CHECK(out && strcmp(out, "0") == 0);
    rotundus_string_free(out);

    RotundusPoly *poly = NULL;
    CHECK(rotundus_poly_rotundus(3, ROTUNDUS_METHOD_TRACE, &poly) == ROTUNDUS_STATUS_OK);
    CHECK(rotundus_poly_term_count(poly) == 4);
    CHECK(rotundus_poly_to_string(poly, &out) == ROTUNDUS_STATUS_OK);
    CHECK(out && strcmp(out, "a1*a2*a3 - a1 - a2 - a3") == 0);
    rotundus_string_free(out);
    rotundus_poly_free(poly);

    RotundusTriangulations *list = NULL;
    CHECK(rotundus_triangulations(8, true, &list) == ROTUNDUS_STATUS_OK);
    CHECK(rotundus_triangulations_len(list) == 20);
    int64_t q[8];
    size_t written = 0;
    CHECK(rotundus_triangulations_quiddity(list, 0, q, 8, &written) == ROTUNDUS_STATUS_OK);
    CHECK(written == 8);
    rotundus_triangulations_free(list);

    CHECK(rotundus_triangulations(9, true, &list) == ROTUNDUS_STATUS_INVALID_ARGUMENT);
    char *err = rotundus_last_error();
    CHECK(err != NULL);
    rotundus_string_free(err);

    if (failures == 0) {
        printf("c smoke test ok\n");
    }
    return failures == 0 ? 0 : 1;
}
