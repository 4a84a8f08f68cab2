#ifndef LCSC_H
#define LCSC_H

/* C interface to the category/groupoid analysis library. All functions are
 * thread-compatible; the error message store is thread-local. Strings
 * returned through char** are allocated by the library and must be released
 * with lcsc_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lcsc_category lcsc_category;

/* Status codes. */
#define LCSC_OK 0
#define LCSC_ERR_PARSE 1    /* malformed input text or schema violation */
#define LCSC_ERR_BUILD 2    /* well-formed input describing an inconsistent category */
#define LCSC_ERR_ARG 3      /* bad argument or unsupported operation for this input */
#define LCSC_ERR_INTERNAL 4 /* internal invariant violation */

/* Version string, e.g. "lcsc 1.0.0". Static storage; do not free. */
const char* lcsc_version(void);

/* Build a category from a JSON description (see the library docs for the
 * schema) or from a built-in fixture name like "PAR" or "GROUP(2)".
 * On success *out owns the category; release it with lcsc_category_free.
 * On failure *out is NULL and lcsc_last_error() describes the problem. */
int lcsc_category_from_json(const char* json_text, lcsc_category** out);
int lcsc_fixture(const char* name, lcsc_category** out);
void lcsc_category_free(lcsc_category* cat);

/* Structural validation (identities, associativity, left cancellation).
 * Writes a JSON report; returns LCSC_OK even when the category has issues —
 * the report's "ok" field carries the verdict. */
int lcsc_validate(const lcsc_category* cat, char** report_json);

/* Run analyses selected by options_json, e.g.
 *   {"semigroup": true, "spectrum": true, "groupoid": 2, "alignment": true}
 * NULL or "" means all analyses applicable to the carrier mode. */
int lcsc_analyze(const lcsc_category* cat, const char* options_json, char** report_json);

/* Numeric experiments, selected by request_json:
 *   {"op": "shift-bound", "p": 3}
 *   {"op": "separation", "p": 3, "M": 4, "trials": 1000, "seed": 42}
 *   {"op": "wiener-hopf", "monoid": "NBOX(2,20)", "t": "(3,-2)"} */
int lcsc_numerics(const char* request_json, char** report_json);

/* Message for the most recent failure on this thread. Static storage. */
const char* lcsc_last_error(void);
void lcsc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LCSC_H */
