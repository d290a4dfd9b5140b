// cc -I include examples/smoke.c ../../target/release/libexforge_ffi.a -lm -lpthread -ldl -o smoke
#include <stdio.h>
#include "exforge.h"

int main(void) {
    ExGraph *g = NULL;
    if (exforge_graph_construct("pipeline:7,lps,1", 1000000, &g) != EX_STATUS_OK) {
        fprintf(stderr, "construct: %s\n", exforge_last_error_message());
        return 1;
    }
    double l1, l2;
    if (exforge_graph_top2(g, 1e-10, 1, &l1, &l2) != EX_STATUS_OK) {
        fprintf(stderr, "top2: %s\n", exforge_last_error_message());
        return 1;
    }
    printf("n=%zu k=%u lambda1=%.6f lambda2=%.6f\n", exforge_graph_vertex_count(g), exforge_graph_degree(g), l1, l2);
    exforge_graph_free(g);
    return 0;
}
