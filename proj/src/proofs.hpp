// Proof scripts for pseudoidentities: a line-oriented format, a checker for
// the finitary fragment with schematic (nu-parametric) lines, limits along
// n!, and induction over nu, plus a model-checking soundness audit.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semigroup.hpp"
#include "term.hpp"

namespace pseq {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Identity = std::pair<TermPtr, TermPtr>;

enum class StepKind {
  hyp,        // named hypothesis, substituted, optionally in context
  refl,       // t = t
  sym,        // flip an earlier claim
  trans,      // chain two or more claims with matching shared sides
  ctx,        // plug both sides into a context
  subst,      // substitute terms for letters on both sides
  ambient,    // instance of a fixed schema valid in every finite model
  ihyp,       // induction hypothesis, discharged by a later induction
  induction,  // base proves L(1), step proves L(nu+1) from L(nu)
  limit,      // send every symbolic exponent to its limit
  inst,       // evaluate symbolic exponents at nu = n!
  iterate,    // macro: from u = AuB derive the schematic u = A^nu u B^nu
  mulside     // macro: from u = v and u' = v' derive uu' = vv'
};

struct ProofStep {
  std::string id;
  StepKind kind;
  std::string hyp_name;                 // hyp
  std::map<char, TermPtr> sub;          // hyp, subst
  TermPtr context;                      // hyp, ctx, ambient (may be null)
  TermPtr refl_term;                    // refl
  std::vector<std::string> refs;        // sym, trans, ctx, subst, limit, inst
  std::string schema;                   // ambient: A3 | A4 | A6
  std::map<char, TermPtr> schema_terms; // ambient x, y
  std::map<char, ExpVal> schema_exps;   // ambient a, b
  std::string base_ref, step_ref;       // induction
  int inst_n = 0;                       // inst
  std::optional<Identity> gives;        // declared claim; required for
                                        // ihyp and induction
  std::string macro_origin;             // id of the macro line that
                                        // produced this step, if any
};

struct ProofScript {
  Sig sig = Sig::monoid;
  std::vector<std::pair<std::string, Identity>> hyps;
  std::vector<ProofStep> steps;
  Identity goal;
};

// Parses the line-oriented format.  Macro lines (iterate, mulside) are kept
// as written; check_script expands them.  Throws ProofError on syntax
// errors, duplicate ids, schematic hypotheses.
ProofScript parse_proof(const std::string& text);

// The expanded primitive script back in file syntax.
std::string render_proof(const ProofScript& s);

struct CheckResult {
  bool ok = false;
  std::string step_id;  // first failing step when rejected
  std::string reason;
  // claim established by each step, in expanded order
  std::vector<std::pair<std::string, Identity>> claims;
  // the script with macros replaced by the primitive steps they expand to
  ProofScript expanded;
};

// Verifies every step and that some fully discharged step proves the goal.
// Macros are expanded here (their source claims must be known), so the
// result carries the equivalent primitive script.
CheckResult check_script(const ProofScript& s);

// Display forms of the ambient schemas usable by the ambient rule.
std::vector<std::pair<std::string, std::string>> ambient_schemas();

// The schema instance before any context is applied: A3 and A4 take the
// base term bound to x and exponents a, b; A6 takes x, y and exponent a.
Identity ambient_instance(const std::string& schema,
                          const std::map<char, TermPtr>& terms,
                          const std::map<char, ExpVal>& exps);

struct AuditReport {
  int models_used = 0;    // pool members satisfying all hypotheses
  int checks = 0;         // identity instances model-checked
  std::vector<std::string> violations;
};

// For every pool member satisfying the hypotheses, model-checks every step
// claim: constant claims directly, schematic ones instantiated at n = 1..4
// (skipping n below the claim's validity threshold).  The script must have
// been accepted; any violation indicates a checker bug.
AuditReport audit_soundness(const ProofScript& s,
                            const std::vector<FinSemigroup>& pool);

// Default audit pool: all monoids of order <= 4 and the catalog with
// identities adjoined; under the semigroup signature also the raw catalog.
std::vector<FinSemigroup> audit_pool(Sig sig);

}  // namespace pseq
