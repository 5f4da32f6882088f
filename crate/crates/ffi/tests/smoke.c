#include <stdio.h>
#include <string.h>

#include "partition_lab.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    uint64_t p = 0;
    CHECK(pl_count_partitions(5, &p) == PL_STATUS_OK && p == 7);

    PlMatrix *m = NULL;
    CHECK(pl_matrix_from_json("{\"top\":[4,1,1,0],\"bottom\":[0,3,0,1]}", &m) == PL_STATUS_OK);
    uint64_t w = 0;
    CHECK(pl_matrix_weight(m, &w) == PL_STATUS_OK && w == 72);
    pl_matrix_free(m);

    uint64_t top[2] = {1, 0}, bottom[2] = {1, 0};
    CHECK(pl_matrix_new(top, bottom, 2, &m) == PL_STATUS_INVALID_MATRIX);
    char msg[128];
    CHECK(pl_last_error_message(msg, sizeof msg) > 0 && strstr(msg, "d_s") != NULL);

    uint64_t lhs = 0, rhs = 0;
    CHECK(pl_verify(12, &lhs, &rhs) == PL_STATUS_OK && lhs == 77 && rhs == 77);

    PlSolutions *s = NULL;
    CHECK(pl_solutions_new(83, 0, &s) == PL_STATUS_OK && pl_solutions_len(s) == 1);
    uint64_t a = 0, b = 0, tuple[7];
    size_t len = 0;
    CHECK(pl_solutions_get(s, 0, &a, &b, tuple, 7, &len) == PL_STATUS_OK);
    CHECK(a == 17 && b == 7 && len == 7 && tuple[0] == 3 && tuple[1] == 2 && tuple[2] == 2 && tuple[3] == 0);
    pl_solutions_free(s);

    puts("ok");
    return 0;
}
