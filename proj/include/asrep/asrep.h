/*
 * asrep — symbol calculus for Weyl group representations of type D,
 * almost-special tables for the exceptional types, and the finite groups
 * attached to strata.
 *
 * C interface of the shared library.  All composite values live behind
 * opaque handles created and released by the library; functions return
 * ASREP_OK or an error code, with a human-readable message available from
 * asrep_last_error() on the failing thread.  Strings returned through
 * char** out-parameters are allocated by the library and must be released
 * with asrep_string_free().  Handles documented as static must not be freed.
 */

#ifndef ASREP_H
#define ASREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ASREP_API __declspec(dllexport)
#else
#define ASREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asrep_status {
    ASREP_OK = 0,
    ASREP_ERR_INVALID_ARGUMENT = 1,
    ASREP_ERR_PARSE = 2,
    ASREP_ERR_DOMAIN = 3,
    ASREP_ERR_RANGE = 4,
    ASREP_ERR_INTEGRITY = 5,
    ASREP_ERR_INTERNAL = 6
} asrep_status;

ASREP_API const char* asrep_version(void);
ASREP_API const char* asrep_status_name(asrep_status status);

/* Message for the most recent failure on the calling thread. */
ASREP_API const char* asrep_last_error(void);

ASREP_API void asrep_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Symbols: two strictly increasing rows of equal length.              */

typedef struct asrep_symbol asrep_symbol;

/* Wire format: "0 1 2 3 4 / 2 3 4 5 6". */
ASREP_API asrep_status asrep_symbol_parse(const char* text, asrep_symbol** out);
ASREP_API asrep_status asrep_symbol_create(const unsigned* top, const unsigned* bottom,
                                           size_t length, asrep_symbol** out);
ASREP_API void asrep_symbol_free(asrep_symbol* s);

ASREP_API asrep_status asrep_symbol_format(const asrep_symbol* s, char** out);
ASREP_API size_t asrep_symbol_length(const asrep_symbol* s);
/* row 0 = top, row 1 = bottom */
ASREP_API asrep_status asrep_symbol_entry(const asrep_symbol* s, int row, size_t index,
                                          unsigned* out);

ASREP_API asrep_status asrep_symbol_rank(const asrep_symbol* s, unsigned* out);
ASREP_API int asrep_symbol_degenerate(const asrep_symbol* s);
ASREP_API asrep_status asrep_symbol_shift_up(const asrep_symbol* s, asrep_symbol** out);
ASREP_API asrep_status asrep_symbol_reduce(const asrep_symbol* s, asrep_symbol** out);
ASREP_API asrep_status asrep_symbol_canonical(const asrep_symbol* s, asrep_symbol** out);

/* cutoff = 0 selects the smallest valid cutoff, max(max entry, length). */
ASREP_API asrep_status asrep_symbol_tensor_sign(const asrep_symbol* s, unsigned cutoff,
                                                asrep_symbol** out);

/* Classification of the class of s (degenerate classes qualify for both). */
ASREP_API asrep_status asrep_class_almost_special(const asrep_symbol* s, int* out);
ASREP_API asrep_status asrep_class_two_special(const asrep_symbol* s, int* out);

/* ------------------------------------------------------------------ */
/* Irreducible labels of W(D_n) at a fixed rank.                       */

typedef struct asrep_labels asrep_labels;

typedef struct asrep_label_info {
    int marker;     /* 0 = none, 1 = I, 2 = II */
    int degenerate; /* 0/1 */
    int almost_special;
    int two_special;
} asrep_label_info;

ASREP_API asrep_status asrep_classify(unsigned rank, asrep_labels** out);
ASREP_API void asrep_labels_free(asrep_labels* labels);
ASREP_API size_t asrep_labels_count(const asrep_labels* labels);
ASREP_API asrep_status asrep_labels_get(const asrep_labels* labels, size_t index,
                                        asrep_label_info* out);
ASREP_API asrep_status asrep_labels_symbol(const asrep_labels* labels, size_t index,
                                           asrep_symbol** out);

/* ------------------------------------------------------------------ */
/* Verification sweeps.                                                */

typedef struct asrep_report asrep_report;

ASREP_API asrep_status asrep_verify_theorem12(unsigned max_rank, unsigned threads,
                                              asrep_report** out);
ASREP_API asrep_status asrep_verify_lemma_b(unsigned max_rank, unsigned threads,
                                            asrep_report** out);
ASREP_API asrep_status asrep_verify_sign_closure(unsigned max_rank, unsigned threads,
                                                 asrep_report** out);
ASREP_API asrep_status asrep_verify_tables(asrep_report** out);
ASREP_API asrep_status asrep_verify_strata(asrep_report** out);

ASREP_API void asrep_report_free(asrep_report* report);
ASREP_API const char* asrep_report_name(const asrep_report* report);
ASREP_API const char* asrep_report_params(const asrep_report* report);
ASREP_API uint64_t asrep_report_instances(const asrep_report* report);
ASREP_API size_t asrep_report_violation_count(const asrep_report* report);
ASREP_API const char* asrep_report_violation(const asrep_report* report, size_t index);
ASREP_API double asrep_report_wall_ms(const asrep_report* report);

/* ------------------------------------------------------------------ */
/* Almost-special tables for E6/E7/E8.                                 */

typedef struct asrep_table asrep_table;

typedef struct asrep_replabel {
    char group_type[4]; /* "E6", "E7", "E8", "F4", "G2" */
    unsigned dim;
    unsigned subscript;
    unsigned variant; /* 1-based position among equal (dim, subscript) pairs */
} asrep_replabel;

/* Static handle, valid for the process lifetime; do not free. */
ASREP_API asrep_status asrep_table_load(const char* type, const asrep_table** out);
ASREP_API size_t asrep_table_row_count(const asrep_table* table);
ASREP_API size_t asrep_table_row_size(const asrep_table* table, size_t row);
ASREP_API asrep_status asrep_table_member(const asrep_table* table, size_t row, size_t index,
                                          asrep_replabel* out, int* two_special);

/* Members listed but not 2-special: none for E6, 15_7 for E7,
 * 50_8 and 700_16 for E8. */
ASREP_API asrep_status asrep_table_diff(const asrep_table* table, asrep_replabel* out,
                                        size_t capacity, size_t* count);

typedef enum asrep_provenance {
    ASREP_PROVENANCE_RECORDED = 0, /* transcribed crossing pair */
    ASREP_PROVENANCE_FORCED = 1,   /* trivial/sign pair */
    ASREP_PROVENANCE_EXTERNAL = 2  /* imported; excluded from checks */
} asrep_provenance;

ASREP_API size_t asrep_table_sign_fact_count(const asrep_table* table);
ASREP_API asrep_status asrep_table_sign_fact(const asrep_table* table, size_t index,
                                             asrep_replabel* left, asrep_replabel* right,
                                             int* provenance);
ASREP_API size_t asrep_table_exception_count(const asrep_table* table);
ASREP_API asrep_status asrep_table_exception(const asrep_table* table, size_t index,
                                             asrep_replabel* out);

/* ------------------------------------------------------------------ */
/* Permutation groups on at most five points.                          */

ASREP_API asrep_status asrep_group_order(const char* ambient, const char* name, unsigned* out);
ASREP_API asrep_status asrep_group_quotient_kind(const char* ambient, const char* upper,
                                                 const char* lower, char** out_kind);
ASREP_API asrep_status asrep_catalog_count(const char* ambient, size_t* out);
ASREP_API asrep_status asrep_catalog_entry(const char* ambient, size_t index, char** name,
                                           char** generators);

/* ------------------------------------------------------------------ */
/* Strata tables: E8_S5, F4_S4, G2_S3.                                 */

typedef struct asrep_stratum {
    asrep_replabel rep;
    char upper[8];
    char lower[8];
    char claimed[16];
    char recomputed[16];
    int unipotent; /* 0/1 */
    int ok;        /* recomputed kind matches the stored one */
} asrep_stratum;

ASREP_API asrep_status asrep_strata_count(const char* table, size_t* out);
ASREP_API asrep_status asrep_strata_entry(const char* table, size_t index, asrep_stratum* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ASREP_H */
