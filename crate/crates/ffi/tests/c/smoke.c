#include <stdio.h>
#include <string.h>

#include "wythoff.h"

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            const char *msg = wythoff_last_error_message();                \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
                    msg ? msg : "no error message");                       \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    uint64_t pos[3] = {7, 5, 6};
    uint64_t s = 0;
    CHECK(wythoff_nim_sum(pos, 3, &s) == WYTHOFF_STATUS_OK && s == 4);

    bool is_p = true;
    CHECK(wythoff_is_p_position(pos, 3, &is_p) == WYTHOFF_STATUS_OK && !is_p);

    WythoffCanonicalMove mv;
    CHECK(wythoff_winning_move(pos, 3, &mv) == WYTHOFF_STATUS_OK);
    CHECK(mv.heap == 0 && mv.amount == 4);

    uint64_t ones[3] = {1, 1, 1};
    WythoffCanonicalMove moves[4];
    size_t count = 0;
    CHECK(wythoff_all_winning_moves(ones, 3, moves, 4, &count) == WYTHOFF_STATUS_OK);
    CHECK(count == 4 && moves[3].heap == WYTHOFF_DIAGONAL && moves[3].amount == 1);

    uint64_t even[2] = {1, 2};
    CHECK(wythoff_is_p_position(even, 2, &is_p) == WYTHOFF_STATUS_UNSUPPORTED_DIMENSION);
    CHECK(wythoff_last_error_message() != NULL);

    WythoffGameSpec *spec = NULL;
    WythoffVerdictTable *table = NULL;
    CHECK(wythoff_spec_canonical(3, &spec) == WYTHOFF_STATUS_OK);
    CHECK(wythoff_solve_box(spec, 16, 0, &table) == WYTHOFF_STATUS_OK);
    CHECK(wythoff_table_len(table) == 4096 && wythoff_table_p_count(table) == 256);
    uint64_t p[3] = {1, 2, 3};
    CHECK(wythoff_table_is_p(table, p, 3, &is_p) == WYTHOFF_STATUS_OK && is_p);
    wythoff_table_free(table);
    wythoff_spec_free(spec);

    WythoffSponge *sponge = NULL;
    CHECK(wythoff_sponge_generate(3, 6, 0, &sponge) == WYTHOFF_STATUS_OK);
    CHECK(wythoff_sponge_len(sponge) == 4096);
    uint64_t last[3];
    CHECK(wythoff_sponge_point(sponge, 4095, last, 3) == WYTHOFF_STATUS_OK);
    CHECK((last[0] ^ last[1] ^ last[2]) == 0 && last[0] == 63);
    wythoff_sponge_free(sponge);

    uint64_t nums[3] = {1, 1, 3};
    uint32_t levels[3] = {1, 2, 2};
    bool member = false;
    CHECK(wythoff_q_membership(nums, levels, 3, &member) == WYTHOFF_STATUS_OK && member);

    printf("ok\n");
    return 0;
}
