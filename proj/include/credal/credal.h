/*
 * C interface to the credal library.
 *
 * Objects are opaque handles created and destroyed by the library. Every
 * fallible call returns a credal_status; on failure the message is available
 * from credal_last_error() on the same thread until the next library call.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with credal_string_free(). Rationals cross the boundary as
 * exact text, "p/q" or "p".
 */
#ifndef CREDAL_CREDAL_H
#define CREDAL_CREDAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CREDAL_BUILDING_LIBRARY)
#    define CREDAL_API __declspec(dllexport)
#  else
#    define CREDAL_API __declspec(dllimport)
#  endif
#else
#  define CREDAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct credal_model credal_model;
typedef struct credal_options credal_options;

/* Values double as process exit codes for the CLI. */
typedef enum credal_status {
  CREDAL_OK = 0,
  CREDAL_ERROR_VALIDATION = 2,
  CREDAL_ERROR_CAPACITY = 3,
  CREDAL_ERROR_USAGE = 64,
  CREDAL_ERROR_INTERNAL = 70
} credal_status;

typedef enum credal_format {
  CREDAL_FORMAT_TEXT = 0,
  CREDAL_FORMAT_JSON = 1,
  CREDAL_FORMAT_CSV = 2
} credal_format;

CREDAL_API const char* credal_version(void);
CREDAL_API const char* credal_last_error(void);
CREDAL_API void credal_string_free(char* text);

/* cap = 0 selects the default enumeration cap. */
CREDAL_API credal_status credal_model_load_file(const char* path, uint64_t cap, credal_model** out);
CREDAL_API credal_status credal_model_load_json(const char* json, uint64_t cap, credal_model** out);
CREDAL_API credal_status credal_model_serialize(const credal_model* model, char** out);
CREDAL_API void credal_model_free(credal_model* model);

CREDAL_API credal_status credal_options_create(credal_options** out);
/* Keys: "gamble", "poly", "h", "theta", "n", "ns", "cap". */
CREDAL_API credal_status credal_options_set(credal_options* options, const char* key, const char* value);
CREDAL_API credal_status credal_options_set_format(credal_options* options, credal_format format);
CREDAL_API void credal_options_free(credal_options* options);

CREDAL_API int credal_is_command(const char* name);
/* Static usage text; do not free. */
CREDAL_API const char* credal_usage(void);

/* Runs a command. On success *out holds the rendered result. */
CREDAL_API credal_status credal_run(const credal_model* model, const char* command,
                                    const credal_options* options, char** out);

/* Multinomial coefficient N!/prod(m_x!) as decimal text. */
CREDAL_API credal_status credal_nu(const uint32_t* counts, size_t length, char** out);
/* Canonical lowest-terms form of a rational literal. */
CREDAL_API credal_status credal_rational_normalize(const char* text, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CREDAL_CREDAL_H */
