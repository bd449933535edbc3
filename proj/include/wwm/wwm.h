/*
 * wwm.h - C interface of the whole-word morphology learner.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a wwm_status; on
 * failure wwm_last_error() describes the error for the calling thread.
 * Strings returned through char** are NUL-terminated UTF-8 and must be
 * released with wwm_string_free().
 */
#ifndef WWM_WWM_H
#define WWM_WWM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WWM_BUILDING_LIBRARY)
#    define WWM_API __declspec(dllexport)
#  else
#    define WWM_API __declspec(dllimport)
#  endif
#else
#  define WWM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define WWM_ABI_VERSION 1u

typedef enum wwm_status {
  WWM_OK = 0,
  WWM_ERR_INVALID_ARGUMENT = 1,
  WWM_ERR_PARSE = 2,
  WWM_ERR_ENCODING = 3,
  WWM_ERR_INTERNAL = 4
} wwm_status;

typedef enum wwm_format {
  WWM_FORMAT_TEXT = 0,
  WWM_FORMAT_STRUCTURED = 1
} wwm_format;

typedef struct wwm_lexicon wwm_lexicon;
typedef struct wwm_result wwm_result;

typedef struct wwm_options {
  uint32_t min_anchor;       /* default 2 */
  uint32_t min_word_len;     /* default 3 */
  uint32_t min_support;      /* default 3 */
  uint32_t cycles;           /* default 1 */
  uint32_t jobs;             /* default 1 */
  int allow_conversion;      /* default 0 */
  int blocking;              /* default 0 */
  int reapply_only;          /* default 0 */
} wwm_options;

WWM_API uint32_t wwm_abi_version(void);
WWM_API const char* wwm_version_string(void);

/* Message of the last failed call on this thread ("" if none). */
WWM_API const char* wwm_last_error(void);

WWM_API void wwm_options_init(wwm_options* opts);

/* Parses a "form,TAG" lexicon. On WWM_ERR_PARSE / WWM_ERR_ENCODING the
 * offending line number is stored in *error_line when it is non-NULL. */
WWM_API wwm_status wwm_lexicon_parse(const char* text, size_t len, int lowercase,
                                     wwm_lexicon** out, size_t* error_line);
WWM_API size_t wwm_lexicon_size(const wwm_lexicon* lex);
WWM_API void wwm_lexicon_free(wwm_lexicon* lex);

/* Strategy discovery only. */
WWM_API wwm_status wwm_learn(const wwm_lexicon* lex, const wwm_options* opts, wwm_result** out);
/* Discovery followed by word creation. */
WWM_API wwm_status wwm_generate(const wwm_lexicon* lex, const wwm_options* opts,
                                wwm_result** out);

WWM_API size_t wwm_result_strategy_count(const wwm_result* res);
WWM_API size_t wwm_result_new_word_count(const wwm_result* res);
WWM_API size_t wwm_result_blocked_count(const wwm_result* res);
WWM_API size_t wwm_result_regenerated_count(const wwm_result* res);

WWM_API wwm_status wwm_result_strategy_table(const wwm_result* res, char** out);
WWM_API wwm_status wwm_result_new_words(const wwm_result* res, char** out);
WWM_API wwm_status wwm_result_blocked_words(const wwm_result* res, char** out);

/* Scores the new words against a reference list (one form per line, or
 * "form,TAG" lines when match_tags is non-zero). The score is kept on the
 * result and included in later reports. *precision receives -1.0 when no
 * new words were generated. */
WWM_API wwm_status wwm_result_evaluate(wwm_result* res, const char* reference, size_t len,
                                       int match_tags, double* precision);

WWM_API wwm_status wwm_result_report(const wwm_result* res, wwm_format format, char** out);
WWM_API void wwm_result_free(wwm_result* res);

WWM_API void wwm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WWM_WWM_H */
