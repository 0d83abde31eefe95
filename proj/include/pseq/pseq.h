/* C interface to the pseq library: omega-terms over a finite alphabet,
 * finite semigroups by multiplication table, exact deciders for the group
 * and commutative cases, proof-script checking with a model-checking audit,
 * and Rees matrix congruence counting.
 *
 * Conventions.  Every object is an opaque handle created and destroyed by
 * this API.  Functions return PSEQ_OK on success; on failure they return a
 * status code and leave a message retrievable via pseq_last_error (valid
 * until the next failing call on the same thread).  Out-parameters are
 * written only on PSEQ_OK.  Strings written through char** are heap copies
 * the caller releases with pseq_string_free.
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License.  You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef PSEQ_PSEQ_H
#define PSEQ_PSEQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pseq_status {
  PSEQ_OK = 0,
  PSEQ_ERR_PARSE = 1, /* malformed term, table, script, or spec text */
  PSEQ_ERR_ARG = 2,   /* null handle, unknown name, value out of range */
  PSEQ_ERR_STATE = 3  /* operation needs a state the object is not in */
} pseq_status;

typedef enum pseq_sig {
  PSEQ_SIG_MONOID = 0,    /* unit and exponent zero allowed */
  PSEQ_SIG_SEMIGROUP = 1  /* nonempty words, positive exponents */
} pseq_sig;

typedef struct pseq_term pseq_term;
typedef struct pseq_sg pseq_sg;
typedef struct pseq_proof pseq_proof;

/* Library version, a static string; do not free. */
const char* pseq_version(void);

/* Message from the most recent failing call on this thread, or "". */
const char* pseq_last_error(void);

void pseq_string_free(char* s);

/* ------------------------------------------------------------------ terms */

/* Letters a-z, juxtaposition, parentheses, powers ^N, ^w, ^(w+z), ^(w-z);
 * under the monoid signature also the unit 1 and exponent 0.  The handle
 * remembers its signature. */
pseq_status pseq_term_parse(const char* src, pseq_sig sig, pseq_term** out);
void pseq_term_free(pseq_term* t);

/* The term as written. */
pseq_status pseq_term_render(const pseq_term* t, char** out);
/* A fresh handle carrying the normal form. */
pseq_status pseq_term_normalize(const pseq_term* t, pseq_term** out);
/* 1 when the two normal forms coincide (signatures must match). */
pseq_status pseq_term_equal(const pseq_term* u, const pseq_term* v, int* eq);

/* --------------------------------------------------------- finite models */

/* Catalog names: Sl2, B2, N, T, B(m,n), C(m,n), Z<n>, V4, S3, optionally
 * suffixed ^1 for an adjoined identity. */
pseq_status pseq_sg_from_name(const char* name, pseq_sg** out);
/* Table text: "elems:" line of element names, then one product row per
 * element, entries by name; '#' lines are comments. */
pseq_status pseq_sg_from_table(const char* text, const char* name,
                               pseq_sg** out);
void pseq_sg_free(pseq_sg* s);

pseq_status pseq_sg_render(const pseq_sg* s, char** out);
pseq_status pseq_sg_size(const pseq_sg* s, int* out);
pseq_status pseq_sg_is_monoid(const pseq_sg* s, int* out);
pseq_status pseq_sg_name(const pseq_sg* s, char** out);

/* Evaluates a constant term.  The assignment lists "letter=element" pairs
 * separated by commas or spaces and must cover the term's letters; the
 * result is the element's name. */
pseq_status pseq_sg_eval(const pseq_sg* s, const pseq_term* t,
                         const char* assignment, char** out);

/* holds gets 1 when every assignment satisfies u = v.  When it gets 0 and
 * witness is non-null, witness gets the first failing assignment in
 * odometer order, formatted "x=a y=b"; on 1 the slot gets NULL. */
pseq_status pseq_sg_satisfies(const pseq_sg* s, const pseq_term* u,
                              const pseq_term* v, int* holds, char** witness);

/* Newline-separated congruence partitions of s, coarsest last, each a
 * block list like "{a,b}{c}"; the first line is the count.  Fails on
 * carriers larger than the internal guard. */
pseq_status pseq_sg_congruences(const pseq_sg* s, char** out);

/* Newline rows "name<TAB>size<TAB>monoid|semigroup" for the standard
 * catalog battery. */
pseq_status pseq_catalog(char** out);

/* Number of monoids of the given order up to isomorphism, order 1..4. */
pseq_status pseq_count_monoids(int order, int* out);

/* ------------------------------------------------------------- deciders */

/* valid gets 1 when u = v holds in every finite group (respectively every
 * finite commutative model of the terms' signature).  When it gets 0 and
 * witness is non-null, witness gets a failing model and assignment,
 * formatted "name: x=a y=b", or NULL when the search pool has no
 * counterexample in range; on 1 the slot gets NULL. */
pseq_status pseq_decide_group(const pseq_term* u, const pseq_term* v,
                              int* valid, char** witness);
pseq_status pseq_decide_com(const pseq_term* u, const pseq_term* v,
                            int* valid, char** witness);

/* ------------------------------------------------------------ proof scripts */

pseq_status pseq_proof_parse(const char* text, pseq_proof** out);
void pseq_proof_free(pseq_proof* p);

/* Runs the checker.  ok gets 1 on acceptance; otherwise 0, with the first
 * failing step id and the reason in the optional string slots (NULL on
 * acceptance). */
pseq_status pseq_proof_check(pseq_proof* p, int* ok, char** step_id,
                             char** reason);

/* The script with macro lines replaced by the primitive steps they expand
 * to, in file syntax.  Requires a prior accepting check. */
pseq_status pseq_proof_render_expanded(pseq_proof* p, char** out);

/* Model-checks every step claim of an accepted script over a pool of
 * models: "default" (all monoids of order <= 4 plus the catalog battery)
 * or a comma-separated list of catalog names.  models gets the number of
 * pool members satisfying the hypotheses, checks the number of instances
 * verified, and violations a newline list of failures (empty when sound). */
pseq_status pseq_proof_audit(pseq_proof* p, const char* pool_spec,
                             int* models, int* checks, char** violations);

/* ---------------------------------------------------------------- Rees */

/* Builds the Rees matrix semigroup M(I, G, Lambda; P) over a catalog group.
 * The sandwich spec lists Lambda rows separated by ';', each row I entries
 * by element name separated by ','; "-" means the whole matrix is identity
 * entries.  normalize scales P so its first row and column are identity. */
pseq_status pseq_rees_build(const char* group, int I, int Lambda,
                            const char* P, int normalize, pseq_sg** out);

/* Counts congruences of the Rees semigroup both ways: via linked triples
 * (partition of I, partition of Lambda, normal subgroup, sandwich-linked)
 * and via direct congruence enumeration on the multiplication table.  The
 * two counts agree; callers can assert it. */
pseq_status pseq_rees_congruence_counts(const char* group, int I, int Lambda,
                                        const char* P, int normalize,
                                        int* triples, int* congruences);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PSEQ_PSEQ_H */
