#ifndef BRANCH2_H
#define BRANCH2_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define B2_MAX_CROSSINGS 500

typedef enum B2Status {
  B2_STATUS_OK = 0,
  B2_STATUS_NULL_POINTER = 1,
  B2_STATUS_INVALID_ARGUMENT = 2,
  B2_STATUS_PARSE = 3,
  B2_STATUS_UNKNOWN_KNOT = 4,
  B2_STATUS_OVERFLOW = 5,
  B2_STATUS_PANIC = 6,
} B2Status;

/*
 A symmetry census, either the built-in table or one loaded from text.
 */
typedef struct B2Census B2Census;

/*
 A planar diagram.
 */
typedef struct B2Diagram B2Diagram;

/*
 A framed link.
 */
typedef struct B2Link B2Link;

/*
 Order of a first homology group; `infinite` set means `order` is unused.
 */
typedef struct B2H1Order {
  bool infinite;
  uint64_t order;
} B2H1Order;

/*
 Outcome of extending an involution over a filling.
 */
typedef struct B2Extension {
  bool extends;
  bool free;
  bool orientable;
  bool degenerate;
  uint32_t branch_components;
} B2Extension;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. The pointer is
 valid until the next failing call on the same thread.
 */
const char *b2_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed already.
 */
void b2_string_free(char *s);

/*
 Canonical word, e.g. `"T S T^3 S"`, of the slope `p/q`.
 */
enum B2Status b2_slope_word(int64_t p, int64_t q, char **word);

/*
 Diagram of the two-bridge link `b(p,q)`, at most `B2_MAX_CROSSINGS`
 crossings.
 */
enum B2Status b2_diagram_two_bridge(int64_t p, int64_t q, struct B2Diagram **diagram);

/*
 Parses `X a b c d ±` / `L a` lines.
 */
enum B2Status b2_diagram_parse(const char *src, struct B2Diagram **diagram);

enum B2Status b2_diagram_determinant(const struct B2Diagram *diagram, uint64_t *det);

enum B2Status b2_diagram_counts(const struct B2Diagram *diagram,
                                uintptr_t *crossings,
                                uintptr_t *components);

enum B2Status b2_diagram_to_string(const struct B2Diagram *diagram, char **s);

/*
 # Safety
 `diagram` must be NULL or a live handle from this library.
 */
void b2_diagram_free(struct B2Diagram *diagram);

/*
 Parses the `components: n` link format.
 */
enum B2Status b2_link_parse(const char *src, struct B2Link **link);

enum B2Status b2_link_len(const struct B2Link *link, uintptr_t *len);

enum B2Status b2_link_h1_order(const struct B2Link *link, struct B2H1Order *order);

/*
 `n` full twists along component `j`; writes a new handle.
 */
enum B2Status b2_link_rolfsen_twist(const struct B2Link *link,
                                    uintptr_t j,
                                    int64_t n,
                                    struct B2Link **result);

/*
 Blows down the `±1`-framed unknot `j`; writes a new handle.
 */
enum B2Status b2_link_blow_down(const struct B2Link *link, uintptr_t j, struct B2Link **result);

enum B2Status b2_link_to_string(const struct B2Link *link, char **s);

/*
 # Safety
 `link` must be NULL or a live handle from this library.
 */
void b2_link_free(struct B2Link *link);

/*
 Invariants of the quotient of `r/s` filling on the `(p,q)` torus knot.
 */
enum B2Status b2_seifert_quotient(int64_t p,
                                  int64_t q,
                                  int64_t r,
                                  int64_t s,
                                  char **invariants,
                                  uint64_t *order);

/*
 First homology order of `"{b,(Oo,0),(a1,b1),...}"`.
 */
enum B2Status b2_seifert_h1_order(const char *invariants, struct B2H1Order *order);

/*
 Extends an involution of type `kind` (e.g. `"S1E"`) over `p/q` filling.
 `quotient_knot` may be NULL except for type S1E. `quotient`, if not
 NULL, receives a description of the quotient.
 */
enum B2Status b2_extend_involution(const char *kind,
                                   int64_t p,
                                   int64_t q,
                                   const char *quotient_knot,
                                   struct B2Extension *extension,
                                   char **quotient);

/*
 Handle to the built-in census.
 */
enum B2Status b2_census_embedded(struct B2Census **census);

/*
 Parses a census in the text format of the built-in table.
 */
enum B2Status b2_census_parse(const char *src, struct B2Census **census);

/*
 Quotient report as `key=value` lines: `quotient_count`, then
 `quotient.N.class`, `.kind`, `.orientable`, `.free`,
 `.branch_components` and `.via` per quotient, then `covers_s3` and,
 when stated, `symmetry_group`.
 */
enum B2Status b2_census_report(const struct B2Census *census,
                               const char *knot,
                               int64_t p,
                               int64_t q,
                               char **report);

/*
 # Safety
 `census` must be NULL or a live handle from this library.
 */
void b2_census_free(struct B2Census *census);

/*
 `2π/(p² + q²)`.
 */
enum B2Status b2_core_geodesic_length(int64_t p, int64_t q, double *length);

/*
 Conjugation residuals of the filling family at `w` with modulus `zeta`.
 */
enum B2Status b2_conjugation_residual(double w_re,
                                      double w_im,
                                      double zeta_re,
                                      double zeta_im,
                                      double *residual_a,
                                      double *residual_b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRANCH2_H */
