/* Minimal consumer of the C ABI. Build after `cargo build -p divsum-capi`:
 *
 *   cc examples/smoke.c -I include ../../target/debug/libdivsum_capi.a -lm -o smoke
 */
#include <assert.h>
#include <stdio.h>
#include <string.h>

#include "divsum.h"

int main(void) {
    DsFamily *family = NULL;
    assert(ds_family_new(1, 1, 1, 1, 1, 1, 1, 1, &family) == DS_STATUS_OK);

    double value = 0.0, error = 0.0;
    assert(ds_sum_cf(family, 20, DS_CLOSURE_PAIRED, 22, &value, &error) == DS_STATUS_OK);
    printf("continued fraction: %.13f (+- %.3e)\n", value, error);
    assert(value > 0.596347 && value < 0.596348);

    assert(ds_borel_oracle(1, 1, 1, 1, 1e-10, &value, &error) == DS_STATUS_OK);
    printf("half-line oracle:   %.13f (+- %.3e)\n", value, error);

    assert(ds_trapezoid_factorial_unit(10, &value, &error) == DS_STATUS_OK);
    printf("ten-panel area:     %.8f (+- %.3e)\n", value, error);

    char *json = NULL;
    assert(ds_repro_json("s25", &json) == DS_STATUS_OK);
    printf("repro s25 report:   %d bytes of JSON\n", (int)strlen(json));
    ds_string_free(json);

    ds_family_free(family);
    printf("library version:    %s\n", ds_version());
    return 0;
}
