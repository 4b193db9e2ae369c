/* Build: cc example.c -I../include -L../../../target/debug -lbaer_ffi -o example */
#include <stdio.h>
#include "baer.h"

int main(void) {
    BaerGroup *g = NULL;
    BaerReport *r = NULL;
    char *text = NULL;

    if (baer_group_parse("Z^2 + Z/4 + Z/2", &g) != BAER_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", baer_last_error_message());
        return 2;
    }
    const uint32_t row[] = {1, 1};
    if (baer_polynilpotent_multiplier(g, row, 2, &r) != BAER_STATUS_OK) {
        fprintf(stderr, "multiplier: %s\n", baer_last_error_message());
        baer_group_free(g);
        return 1;
    }
    if (baer_report_paper_shape(r, &text) == BAER_STATUS_OK) {
        printf("%s\n", text);
        baer_string_free(text);
    }
    baer_report_free(r);
    baer_group_free(g);
    return 0;
}
