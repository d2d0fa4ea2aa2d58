/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ROOTFAN_ROOTFAN_H
#define ROOTFAN_ROOTFAN_H

#include <stddef.h>

#if defined(_WIN32)
#define ROOTFAN_API __declspec(dllexport)
#else
#define ROOTFAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rootfan_system rootfan_system;
typedef struct rootfan_fan rootfan_fan;

typedef enum rootfan_status {
  ROOTFAN_OK = 0,
  ROOTFAN_E_ARGUMENT = 1,  /* malformed or inadmissible input */
  ROOTFAN_E_INVARIANT = 2, /* a computed object broke a structural law */
  ROOTFAN_E_CAPACITY = 3,  /* enumeration cap exceeded, or long run not allowed */
  ROOTFAN_E_INTERNAL = 4
} rootfan_status;

typedef enum rootfan_format {
  ROOTFAN_FORMAT_JSON = 0,
  ROOTFAN_FORMAT_CSV = 1,
  ROOTFAN_FORMAT_TEXT = 2
} rootfan_format;

enum {
  ROOTFAN_OPT_ORACLE = 1u << 0,
  ROOTFAN_OPT_REGULARITY = 1u << 1,
  ROOTFAN_OPT_ALLOW_LONG = 1u << 2
};

enum {
  ROOTFAN_FLAG_Q_GORENSTEIN_FANO = 1u << 0,
  ROOTFAN_FLAG_GORENSTEIN_FANO = 1u << 1,
  ROOTFAN_FLAG_SMOOTH = 1u << 2,
  ROOTFAN_FLAG_FANO = 1u << 3
};

/* Called from worker threads, serialized. */
typedef void (*rootfan_progress_fn)(void* user, size_t done, size_t total, const char* label);

ROOTFAN_API const char* rootfan_version(void);
/* Message for the last failing call on this thread; never NULL. */
ROOTFAN_API const char* rootfan_last_error(void);
ROOTFAN_API void rootfan_string_free(char* s);

/* type_spec: "A2", "B3xG2", ... */
ROOTFAN_API rootfan_status rootfan_system_create(const char* type_spec, rootfan_system** out);
ROOTFAN_API rootfan_status rootfan_system_create_series(char type, int rank, rootfan_system** out);
ROOTFAN_API void rootfan_system_destroy(rootfan_system* sys);
ROOTFAN_API size_t rootfan_system_rank(const rootfan_system* sys);
ROOTFAN_API rootfan_status rootfan_system_name(const rootfan_system* sys, char** out);
ROOTFAN_API rootfan_status rootfan_system_weyl_order(const rootfan_system* sys, long long* out);

/* support: 1-based node indices. */
ROOTFAN_API rootfan_status rootfan_fan_build(const rootfan_system* sys, const int* support, size_t count,
                                             rootfan_fan** out);
ROOTFAN_API void rootfan_fan_destroy(rootfan_fan* fan);
ROOTFAN_API size_t rootfan_fan_prim_count(const rootfan_fan* fan);
ROOTFAN_API long long rootfan_fan_max_cones(const rootfan_fan* fan);
/* Writes the ROOTFAN_FLAG_* bits. */
ROOTFAN_API rootfan_status rootfan_fan_classify(const rootfan_fan* fan, unsigned options, unsigned* flags);

ROOTFAN_API rootfan_status rootfan_classify(const rootfan_system* sys, const int* support, size_t count,
                                            unsigned options, rootfan_format format, char** out);
ROOTFAN_API rootfan_status rootfan_scan(const rootfan_system* sys, unsigned options, rootfan_format format,
                                        rootfan_progress_fn progress, void* user, char** out,
                                        size_t* q_gorenstein_hits);
/* types: letters such as "ABCDEFG" (commas and spaces ignored). */
ROOTFAN_API rootfan_status rootfan_table(const char* types, int max_rank, unsigned options, rootfan_format format,
                                         rootfan_progress_fn progress, void* user, char** out);

#ifdef __cplusplus
}
#endif

#endif
