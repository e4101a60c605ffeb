#include <stdio.h>
#include <string.h>

#include "bondle.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    BondleCode *p1 = NULL, *p2 = NULL, *bad = NULL;
    BondleAlgebra *ex1 = NULL;
    uint64_t total = 0, trivial = 0;
    bool passed = false;

    CHECK(bondle_code_parse("N O1+ B2+ U1+ B2+ C", &p1) == BONDLE_STATUS_OK);
    CHECK(bondle_code_parse("N U1+ B2+ O1+ B2+ C", &p2) == BONDLE_STATUS_OK);
    CHECK(bondle_algebra_affine(15, 8, 2, 6, &ex1) == BONDLE_STATUS_OK);
    CHECK(bondle_algebra_order(ex1) == 15);
    CHECK(bondle_algebra_check(ex1, &passed) == BONDLE_STATUS_OK && passed);

    CHECK(bondle_count_colorings(p1, ex1, &total, &trivial) == BONDLE_STATUS_OK);
    CHECK(total == 45 && trivial == 15);
    CHECK(bondle_count_colorings(p2, ex1, &total, &trivial) == BONDLE_STATUS_OK);
    CHECK(total == 15);

    char *text = bondle_code_to_string(p1);
    CHECK(text && strcmp(text, "N O1+ B2+ U1+ B2+ C") == 0);
    bondle_string_free(text);

    CHECK(bondle_code_parse("N X9 C", &bad) == BONDLE_STATUS_PARSE);
    CHECK(bad == NULL);
    CHECK(bondle_last_error() != NULL);

    bondle_code_free(p1);
    bondle_code_free(p2);
    bondle_algebra_free(ex1);
    puts("ok");
    return 0;
}
