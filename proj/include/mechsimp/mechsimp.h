/* Copyright 2026 The mechsimp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the mechsimp certifiers.
 *
 * Documents are opaque handles. Every call returns an msp_status; on
 * failure msp_last_error() describes the problem for the calling thread
 * until its next call. Strings handed out by the library are released
 * with msp_string_free.
 */

#ifndef MECHSIMP_MECHSIMP_H
#define MECHSIMP_MECHSIMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MECHSIMP_BUILDING)
#define MSP_API __declspec(dllexport)
#else
#define MSP_API __declspec(dllimport)
#endif
#else
#define MSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msp_status {
  MSP_OK = 0,
  MSP_INVALID_ARGUMENT = 1,
  MSP_PARSE_ERROR = 2,
  MSP_BUDGET_EXCEEDED = 3,
  MSP_CONSTRUCTION_ERROR = 4,
  MSP_UNSUPPORTED = 5,
  MSP_INTERNAL_ERROR = 6
} msp_status;

typedef struct msp_document msp_document;

typedef struct msp_check_options {
  const char* criterion;      /* sp, osp, wgsp, strong-osp, one-step, f-simple, strategic */
  int coalition_size;         /* wgsp; 0 means 2 */
  const char* foresight;      /* f-simple preset: full, self, one-step; NULL for the document's */
  const char* foresight_text; /* f-simple custom table document; overrides foresight */
  const char* belief_text;    /* strategic belief document; NULL for the document's or built-in */
  uint64_t budget;            /* 0 means the default */
} msp_check_options;

MSP_API const char* msp_version(void);
MSP_API const char* msp_status_name(msp_status status);

/* Thread-local description of the last failure; never NULL. */
MSP_API const char* msp_last_error(void);

MSP_API void msp_string_free(char* s);

/* Parse errors are reported one per line as "line:column: message". */
MSP_API msp_status msp_document_parse(const char* text, size_t length, msp_document** out);

/* Builds a constructor's mechanism from key/value parameters. */
MSP_API msp_status msp_generate(const char* mechanism, const char* const* keys, const char* const* values,
                                size_t count, msp_document** out);

MSP_API msp_status msp_document_serialize(const msp_document* doc, char** out);

/* JSON object with the name, parameters, players and tree sizes. */
MSP_API msp_status msp_document_summary(const msp_document* doc, char** out);

MSP_API void msp_document_free(msp_document* doc);

MSP_API void msp_check_options_init(msp_check_options* options);

/* Runs a certifier; *holds is 1 or 0 and *report receives one JSON line. */
MSP_API msp_status msp_check(const msp_document* doc, const msp_check_options* options, int* holds, char** report);

/* Accepts a witness or a whole report. *reproduced is 1 when the witness's
 * inequality is reproduced exactly. */
MSP_API msp_status msp_replay(const msp_document* doc, const char* witness_json, int* reproduced);

#ifdef __cplusplus
}
#endif

#endif /* MECHSIMP_MECHSIMP_H */
