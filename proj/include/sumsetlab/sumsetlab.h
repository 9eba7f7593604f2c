/* C interface to sumsetlab: truncated sumsets of integer bases and the
 * order / obstruction / stability experiments built on them.
 *
 * Every call returns an ssl_status. On failure, ssl_last_error_message()
 * describes the problem (the message is per thread and stays valid until the
 * next failing call on that thread). Handles are opaque. Each handle is
 * released with its matching *_destroy call. Arrays and strings returned
 * through out-pointers are released with ssl_array_free / ssl_string_free.
 */
#ifndef SUMSETLAB_H
#define SUMSETLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SSL_API __declspec(dllexport)
#else
#define SSL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssl_status {
  SSL_OK = 0,
  SSL_ERROR_INVALID_PARAMETER = 1,
  SSL_ERROR_OVERFLOW = 2,
  SSL_ERROR_PARSE = 3,
  SSL_ERROR_IO = 4,
  SSL_ERROR_WRONG_REPORT_KIND = 5,
  SSL_ERROR_INTERNAL = 6
} ssl_status;

typedef enum ssl_format { SSL_FORMAT_STRUCTURED = 0, SSL_FORMAT_CSV = 1 } ssl_format;

typedef enum ssl_report_kind {
  SSL_REPORT_ENUMERATION = 0,
  SSL_REPORT_SUMSET = 1,
  SSL_REPORT_ORDER = 2,
  SSL_REPORT_STABILITY = 3,
  SSL_REPORT_DENSITY = 4,
  SSL_REPORT_OBSTRUCTION = 5,
  SSL_REPORT_LEGENDRE = 6,
  SSL_REPORT_VERIFY = 7
} ssl_report_kind;

typedef struct ssl_basis ssl_basis;
typedef struct ssl_bitmap ssl_bitmap;
typedef struct ssl_report ssl_report;

SSL_API const char* ssl_version(void);
SSL_API const char* ssl_status_string(ssl_status status);
SSL_API const char* ssl_last_error_message(void);
SSL_API void ssl_string_free(char* text);
SSL_API void ssl_array_free(uint64_t* values);

/* ---- bases ------------------------------------------------------------- */

/* Text forms: "poly:k", "set:a,b,c", "aug:<poly|set>+set:a,b,c". */
SSL_API ssl_status ssl_basis_parse(const char* text, ssl_basis** out);
SSL_API ssl_status ssl_basis_polygonal(uint32_t k, ssl_basis** out);
SSL_API ssl_status ssl_basis_explicit(const uint64_t* elements, size_t count, ssl_basis** out);
SSL_API ssl_status ssl_basis_augment(const ssl_basis* base, const uint64_t* finite_set, size_t count,
                                     ssl_basis** out);
SSL_API void ssl_basis_destroy(ssl_basis* basis);
SSL_API ssl_status ssl_basis_to_string(const ssl_basis* basis, char** out);
SSL_API ssl_status ssl_basis_default_hmax(const ssl_basis* basis, uint32_t* out);

SSL_API ssl_status ssl_polygonal_value(uint32_t k, uint64_t x, uint64_t* out);
SSL_API ssl_status ssl_enumerate(const ssl_basis* basis, uint64_t bound, uint64_t** out, size_t* count);

/* ---- bitmaps and the sumset engine ------------------------------------- */

SSL_API ssl_status ssl_bitmap_from_basis(const ssl_basis* basis, uint64_t bound, ssl_bitmap** out);
SSL_API ssl_status ssl_bitmap_from_members(uint64_t bound, const uint64_t* members, size_t count,
                                           ssl_bitmap** out);
SSL_API void ssl_bitmap_destroy(ssl_bitmap* bitmap);
SSL_API uint64_t ssl_bitmap_bound(const ssl_bitmap* bitmap);
SSL_API uint64_t ssl_bitmap_popcount(const ssl_bitmap* bitmap);
/* 1 if i is a member, 0 otherwise (including i > bound). */
SSL_API int ssl_bitmap_test(const ssl_bitmap* bitmap, uint64_t i);
SSL_API int ssl_bitmap_equal(const ssl_bitmap* a, const ssl_bitmap* b);

SSL_API ssl_status ssl_sumset(const ssl_bitmap* x, const ssl_bitmap* y, unsigned threads, ssl_bitmap** out);
SSL_API ssl_status ssl_hfold(const ssl_bitmap* a, uint32_t h, unsigned threads, ssl_bitmap** out);
SSL_API ssl_status ssl_counting(const ssl_bitmap* a, uint64_t n, uint64_t* out);
SSL_API ssl_status ssl_complement_members(const ssl_bitmap* a, uint64_t lo, uint64_t hi, uint64_t** out,
                                          size_t* count);

/* "SSL1" magic, bound (u64 LE), ceil((bound+1)/64) words (u64 LE). */
SSL_API ssl_status ssl_bitmap_save(const ssl_bitmap* bitmap, const char* path);
SSL_API ssl_status ssl_bitmap_load(const char* path, ssl_bitmap** out);

/* ---- representations --------------------------------------------------- */

/* parts must hold h values; *found is 0 when n has no representation. */
SSL_API ssl_status ssl_find_representation(uint64_t n, const ssl_basis* basis, uint32_t h, uint64_t* parts,
                                           int* found);
SSL_API ssl_status ssl_oracle_membership(uint64_t n, const ssl_basis* basis, uint32_t h, int* member);

/* ---- reports ----------------------------------------------------------- */

SSL_API ssl_status ssl_report_enumeration(const ssl_basis* basis, uint64_t bound, ssl_report** out);
/* Summary of an already computed bitmap; gaps listed for [lo, hi]. */
SSL_API ssl_status ssl_report_sumset(const ssl_bitmap* bitmap, const char* description, uint64_t lo, uint64_t hi,
                                     ssl_report** out);
SSL_API ssl_status ssl_report_order(const ssl_basis* basis, uint64_t bound, uint32_t h_max, unsigned threads,
                                    ssl_report** out);
SSL_API ssl_status ssl_report_stability(const ssl_basis* basis, uint64_t cutoff, uint64_t bound, uint32_t h_max,
                                        unsigned threads, ssl_report** out);
/* grid == NULL (or grid_count == 0) selects the default 32-point geometric grid. */
SSL_API ssl_status ssl_report_density(const ssl_basis* basis, uint32_t h, uint64_t bound, const uint64_t* grid,
                                      size_t grid_count, unsigned threads, ssl_report** out);
/* cross_check_bound > 0 also checks the h-fold bitmap on [0, cross_check_bound]. */
SSL_API ssl_status ssl_report_obstruction(const ssl_basis* basis, uint32_t h, uint64_t modulus,
                                          uint64_t cross_check_bound, unsigned threads, ssl_report** out);
SSL_API ssl_status ssl_report_legendre(uint32_t m, uint64_t bound, unsigned threads, ssl_report** out);

typedef struct ssl_verify_options {
  int full_scale;       /* 0: N = 10^4, otherwise N = 10^6 */
  unsigned threads;     /* 0 is treated as 1 */
  int tamper;           /* nonzero: flip tamper_bit in every checked h-fold bitmap */
  uint64_t tamper_bit;
} ssl_verify_options;

typedef void (*ssl_check_callback)(const char* id, const char* title, int passed, double seconds,
                                   const char* detail, void* user);

SSL_API ssl_status ssl_report_verify_paper(const ssl_verify_options* options, ssl_check_callback on_check,
                                           void* user, ssl_report** out);

SSL_API void ssl_report_destroy(ssl_report* report);
SSL_API ssl_report_kind ssl_report_get_kind(const ssl_report* report);
/* 0 when the report records a failed check (Legendre, cross-check, verify-paper); 1 otherwise. */
SSL_API int ssl_report_passed(const ssl_report* report);
SSL_API ssl_status ssl_report_render(const ssl_report* report, ssl_format format, char** out);

/* *found = 0 means the order exceeds h_max. */
SSL_API ssl_status ssl_report_order_value(const ssl_report* report, uint32_t* order, int* found);
/* Orders are 0 when they exceed h_max. */
SSL_API ssl_status ssl_report_stability_orders(const ssl_report* report, uint32_t* order_base,
                                               uint32_t* order_augmented, int* stable);
SSL_API ssl_status ssl_report_obstruction_missing(const ssl_report* report, uint64_t** out, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* SUMSETLAB_H */
