//
// Copyright (C) 2026 The relarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

/*
 * C interface to the relarm rating library.
 *
 * Every object is an opaque handle created by a relarm_*_load / _create /
 * _fit call and released with the matching _free function. Functions return
 * a relarm_status; on failure relarm_last_error() describes the problem for
 * the calling thread until its next failing call.
 */
#ifndef RELARM_RELARM_H
#define RELARM_RELARM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RELARM_BUILDING_LIBRARY)
#    define RELARM_API __declspec(dllexport)
#  else
#    define RELARM_API __declspec(dllimport)
#  endif
#else
#  define RELARM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relarm_status {
    RELARM_OK = 0,
    RELARM_ERR_INVALID_ARGUMENT = 1,
    RELARM_ERR_IO = 2,
    RELARM_ERR_PARSE = 3,
    RELARM_ERR_VALIDATION = 4,
    RELARM_ERR_NUMERICAL = 5,
    RELARM_ERR_INTERNAL = 6
} relarm_status;

typedef struct relarm_config relarm_config;
typedef struct relarm_model relarm_model;
typedef struct relarm_ratings relarm_ratings;
typedef struct relarm_report relarm_report;

typedef struct relarm_model_info {
    size_t objects;     /* training objects, 0 for a loaded snapshot */
    size_t indicators;
    size_t components;  /* retained principal components d */
    size_t clusters;    /* k */
    double explained;   /* sum of retained variance fractions */
    double sse;
} relarm_model_info;

typedef struct relarm_rating_entry {
    const char* object;   /* valid while the ratings handle lives */
    size_t cluster;       /* 1-based */
    double projection;
    const char* category;
} relarm_rating_entry;

typedef struct relarm_report_summary {
    size_t matched;
    size_t compared;
    int has_fraction;     /* 0 when no object was comparable */
    double fraction;
} relarm_report_summary;

RELARM_API const char* relarm_version(void);
RELARM_API const char* relarm_last_error(void);
RELARM_API const char* relarm_status_string(relarm_status status);

/* Configuration */
RELARM_API relarm_status relarm_config_load(const char* path, relarm_config** out);
RELARM_API void relarm_config_free(relarm_config* config);
RELARM_API relarm_status relarm_config_set_k(relarm_config* config, size_t k);
RELARM_API relarm_status relarm_config_set_seed(relarm_config* config, uint64_t seed);
RELARM_API relarm_status relarm_config_set_threshold(relarm_config* config, double threshold);
RELARM_API relarm_status relarm_config_set_restarts(relarm_config* config, size_t restarts);
RELARM_API relarm_status relarm_config_set_dump_intermediates(relarm_config* config, int enabled);
RELARM_API int relarm_config_dump_intermediates(const relarm_config* config);
/* Empty string when the config names no output directory. */
RELARM_API const char* relarm_config_out_dir(const relarm_config* config);

/* Normalize a data file and write the [0,1] matrix as CSV. */
RELARM_API relarm_status relarm_normalize_file(const relarm_config* config, const char* data_path,
                                               const char* out_csv_path, size_t* warning_count);

/* Fitting and saved models */
RELARM_API relarm_status relarm_fit(const relarm_config* config, const char* data_path, relarm_model** out);
RELARM_API relarm_status relarm_model_load(const char* path, relarm_model** out);
RELARM_API relarm_status relarm_model_save(const relarm_model* model, const char* path);
RELARM_API void relarm_model_free(relarm_model* model);
RELARM_API relarm_status relarm_model_get_info(const relarm_model* model, relarm_model_info* out);
RELARM_API size_t relarm_model_warning_count(const relarm_model* model);
RELARM_API const char* relarm_model_warning(const relarm_model* model, size_t index);
/* Only available on a model produced by relarm_fit. */
RELARM_API relarm_status relarm_model_write_intermediates(const relarm_model* model, const char* dir);
RELARM_API relarm_status relarm_model_ratings(const relarm_model* model, relarm_ratings** out);
/* Rate the objects of a data file with a fitted or loaded model. */
RELARM_API relarm_status relarm_model_assign(const relarm_model* model, const char* data_path, relarm_ratings** out);

/* Rating lists */
RELARM_API relarm_status relarm_ratings_load(const char* path, relarm_ratings** out);
RELARM_API relarm_status relarm_ratings_save(const relarm_ratings* ratings, const char* path);
RELARM_API void relarm_ratings_free(relarm_ratings* ratings);
RELARM_API size_t relarm_ratings_count(const relarm_ratings* ratings);
RELARM_API relarm_status relarm_ratings_get(const relarm_ratings* ratings, size_t index, relarm_rating_entry* out);
RELARM_API size_t relarm_ratings_warning_count(const relarm_ratings* ratings);
RELARM_API const char* relarm_ratings_warning(const relarm_ratings* ratings, size_t index);

/* Agreement with agency ratings. config may be NULL (standard scale and collapse table). */
RELARM_API relarm_status relarm_score(const relarm_ratings* ratings, const char* reference_path,
                                      const relarm_config* config, relarm_report** out);
RELARM_API relarm_status relarm_report_save(const relarm_report* report, const char* path);
RELARM_API relarm_status relarm_report_get_summary(const relarm_report* report, relarm_report_summary* out);
RELARM_API size_t relarm_report_warning_count(const relarm_report* report);
RELARM_API const char* relarm_report_warning(const relarm_report* report, size_t index);
/* Footer text every rating report carries. */
RELARM_API const char* relarm_report_note(void);
RELARM_API void relarm_report_free(relarm_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RELARM_RELARM_H */
