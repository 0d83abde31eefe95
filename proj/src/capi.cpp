// C interface over the C++ core.  Handles are heap objects owned by the
// caller; every entry point traps exceptions and converts them to status
// codes plus a thread-local message.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "pseq/pseq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deciders.hpp"
#include "proofs.hpp"
#include "rees.hpp"
#include "semigroup.hpp"
#include "term.hpp"

struct pseq_term {
  pseq::TermPtr t;
  pseq::Sig sig;
};

struct pseq_sg {
  pseq::FinSemigroup S;
};

struct pseq_proof {
  pseq::ProofScript script;
  std::optional<pseq::CheckResult> checked;
};

namespace {

thread_local std::string g_last_error;

pseq_status fail(pseq_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pseq::Sig to_sig(pseq_sig sig) {
  return sig == PSEQ_SIG_SEMIGROUP ? pseq::Sig::semigroup : pseq::Sig::monoid;
}

std::string format_assignment(const pseq::FinSemigroup& S,
                              const std::map<char, int>& a) {
  std::ostringstream o;
  bool first = true;
  for (auto& [c, e] : a) {
    if (!first) o << ' ';
    first = false;
    o << c << '=' << S.elem_name(e);
  }
  return o.str();
}

// "x=a,y=b" or space separated; element values by name.  Commas inside
// element names (product and band elements) are kept: only a comma that
// starts the next letter=value pair separates entries.
std::map<char, int> parse_assignment(const pseq::FinSemigroup& S,
                                     const std::string& text) {
  std::map<char, int> out;
  std::string tok;
  std::string norm = text;
  for (size_t i = 0; i + 2 < norm.size(); ++i)
    if (norm[i] == ',' && norm[i + 1] >= 'a' && norm[i + 1] <= 'z' &&
        norm[i + 2] == '=')
      norm[i] = ' ';
  std::istringstream in2(norm);
  while (in2 >> tok) {
    size_t eq = tok.find('=');
    if (eq != 1 || tok.size() < 3 || tok[0] < 'a' || tok[0] > 'z')
      throw pseq::SgError("bad assignment entry '" + tok + "'");
    int idx = S.element_index(tok.substr(2));
    if (idx < 0)
      throw pseq::SgError("no element named '" + tok.substr(2) + "'");
    out.emplace(tok[0], idx);
  }
  return out;
}

std::string render_partition(const pseq::FinSemigroup& S,
                             const std::vector<int>& p) {
  int classes = *std::max_element(p.begin(), p.end()) + 1;
  std::ostringstream o;
  for (int c = 0; c < classes; ++c) {
    o << '{';
    bool first = true;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[i] == c) {
        if (!first) o << ',';
        first = false;
        o << S.elem_name(i);
      }
    o << '}';
  }
  return o.str();
}

std::vector<pseq::FinSemigroup> parse_pool_spec(const std::string& spec,
                                                pseq::Sig sig) {
  if (spec.empty() || spec == "default") return pseq::audit_pool(sig);
  std::vector<pseq::FinSemigroup> pool;
  std::string norm = spec;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream in(norm);
  std::string name;
  while (in >> name) pool.push_back(pseq::resolve_semigroup(name));
  if (pool.empty()) throw pseq::SgError("empty pool spec");
  return pool;
}

pseq::ReesMatrix parse_rees(const std::string& group, int I, int Lambda,
                            const std::string& P, int normalize) {
  if (I < 1 || Lambda < 1)
    throw pseq::ReesError("index set sizes must be at least 1");
  pseq::FinSemigroup G = pseq::resolve_semigroup(group);
  if (!pseq::is_group(G))
    throw pseq::ReesError("'" + group + "' is not a group");
  std::vector<std::vector<int>> mat(Lambda, std::vector<int>(I, 0));
  if (P == "-" || P.empty()) {
    int e = *G.identity();
    for (auto& row : mat)
      for (int& x : row) x = e;
  } else {
    std::vector<std::string> rows;
    std::istringstream in(P);
    std::string row;
    while (std::getline(in, row, ';')) rows.push_back(row);
    if (static_cast<int>(rows.size()) != Lambda)
      throw pseq::ReesError("sandwich matrix needs one row per Lambda index");
    for (int l = 0; l < Lambda; ++l) {
      std::vector<std::string> cells;
      std::istringstream rin(rows[l]);
      std::string cell;
      while (std::getline(rin, cell, ',')) cells.push_back(cell);
      if (static_cast<int>(cells.size()) != I)
        throw pseq::ReesError("sandwich row needs one entry per I index");
      for (int i = 0; i < I; ++i) {
        int idx = G.element_index(cells[i]);
        if (idx < 0)
          throw pseq::ReesError("no group element named '" + cells[i] + "'");
        mat[l][i] = idx;
      }
    }
  }
  pseq::ReesMatrix R{I, Lambda, std::move(G), std::move(mat)};
  if (normalize) R = pseq::normalize_rees(R);
  return R;
}

}  // namespace

extern "C" {

const char* pseq_version(void) { return "1.0.0"; }

const char* pseq_last_error(void) { return g_last_error.c_str(); }

void pseq_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ terms */

pseq_status pseq_term_parse(const char* src, pseq_sig sig, pseq_term** out) {
  if (!src || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    auto s = to_sig(sig);
    *out = new pseq_term{pseq::parse_term(src, s), s};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_PARSE, e.what());
  }
}

void pseq_term_free(pseq_term* t) { delete t; }

pseq_status pseq_term_render(const pseq_term* t, char** out) {
  if (!t || !out) return fail(PSEQ_ERR_ARG, "null argument");
  *out = dup_string(pseq::render(t->t));
  return PSEQ_OK;
}

pseq_status pseq_term_normalize(const pseq_term* t, pseq_term** out) {
  if (!t || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    *out = new pseq_term{pseq::normalize_ambient(t->t, t->sig), t->sig};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_term_equal(const pseq_term* u, const pseq_term* v, int* eq) {
  if (!u || !v || !eq) return fail(PSEQ_ERR_ARG, "null argument");
  if (u->sig != v->sig)
    return fail(PSEQ_ERR_ARG, "terms carry different signatures");
  try {
    *eq = pseq::term_equal(pseq::normalize_ambient(u->t, u->sig),
                           pseq::normalize_ambient(v->t, v->sig))
              ? 1
              : 0;
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

/* --------------------------------------------------------- finite models */

pseq_status pseq_sg_from_name(const char* name, pseq_sg** out) {
  if (!name || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    *out = new pseq_sg{pseq::resolve_semigroup(name)};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_sg_from_table(const char* text, const char* name,
                               pseq_sg** out) {
  if (!text || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    *out = new pseq_sg{
        pseq::parse_semigroup_table(text, name ? name : "S")};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_PARSE, e.what());
  }
}

void pseq_sg_free(pseq_sg* s) { delete s; }

pseq_status pseq_sg_render(const pseq_sg* s, char** out) {
  if (!s || !out) return fail(PSEQ_ERR_ARG, "null argument");
  *out = dup_string(pseq::render_semigroup_table(s->S));
  return PSEQ_OK;
}

pseq_status pseq_sg_size(const pseq_sg* s, int* out) {
  if (!s || !out) return fail(PSEQ_ERR_ARG, "null argument");
  *out = s->S.size();
  return PSEQ_OK;
}

pseq_status pseq_sg_is_monoid(const pseq_sg* s, int* out) {
  if (!s || !out) return fail(PSEQ_ERR_ARG, "null argument");
  *out = s->S.is_monoid() ? 1 : 0;
  return PSEQ_OK;
}

pseq_status pseq_sg_name(const pseq_sg* s, char** out) {
  if (!s || !out) return fail(PSEQ_ERR_ARG, "null argument");
  *out = dup_string(s->S.name());
  return PSEQ_OK;
}

pseq_status pseq_sg_eval(const pseq_sg* s, const pseq_term* t,
                         const char* assignment, char** out) {
  if (!s || !t || !assignment || !out)
    return fail(PSEQ_ERR_ARG, "null argument");
  try {
    if (pseq::is_schematic(t->t))
      throw pseq::SgError("cannot evaluate a schematic term");
    auto a = parse_assignment(s->S, assignment);
    for (char c : pseq::letters(t->t))
      if (!a.count(c))
        throw pseq::SgError(std::string("assignment misses letter '") + c +
                            "'");
    int v = pseq::eval_term(s->S, t->t, a);
    *out = dup_string(s->S.elem_name(v));
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_sg_satisfies(const pseq_sg* s, const pseq_term* u,
                              const pseq_term* v, int* holds, char** witness) {
  if (!s || !u || !v || !holds) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    auto cx = pseq::find_counterexample(s->S, u->t, v->t);
    *holds = cx ? 0 : 1;
    if (witness)
      *witness = cx ? dup_string(format_assignment(s->S, *cx)) : nullptr;
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_sg_congruences(const pseq_sg* s, char** out) {
  if (!s || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    auto cs = pseq::enumerate_congruences(s->S);
    std::stable_sort(cs.begin(), cs.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       int ca = *std::max_element(a.begin(), a.end());
                       int cb = *std::max_element(b.begin(), b.end());
                       if (ca != cb) return ca > cb;
                       return a < b;
                     });
    std::ostringstream o;
    o << cs.size() << "\n";
    for (auto& p : cs) o << render_partition(s->S, p) << "\n";
    *out = dup_string(o.str());
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_catalog(char** out) {
  if (!out) return fail(PSEQ_ERR_ARG, "null argument");
  std::ostringstream o;
  for (auto& S : pseq::catalog())
    o << S.name() << "\t" << S.size() << "\t"
      << (S.is_monoid() ? "monoid" : "semigroup") << "\n";
  *out = dup_string(o.str());
  return PSEQ_OK;
}

pseq_status pseq_count_monoids(int order, int* out) {
  if (!out) return fail(PSEQ_ERR_ARG, "null argument");
  if (order < 1 || order > 4)
    return fail(PSEQ_ERR_ARG, "order must be between 1 and 4");
  *out = static_cast<int>(pseq::enumerate_monoids(order).size());
  return PSEQ_OK;
}

/* ------------------------------------------------------------- deciders */

pseq_status pseq_decide_group(const pseq_term* u, const pseq_term* v,
                              int* valid, char** witness) {
  if (!u || !v || !valid) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    *valid = pseq::decide_group(u->t, v->t) ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (!*valid) {
        auto found = pseq::find_group_witness(u->t, v->t);
        if (found)
          *witness = dup_string(found->S.name() + ": " +
                                format_assignment(found->S, found->assignment));
      }
    }
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_decide_com(const pseq_term* u, const pseq_term* v,
                            int* valid, char** witness) {
  if (!u || !v || !valid) return fail(PSEQ_ERR_ARG, "null argument");
  if (u->sig != v->sig)
    return fail(PSEQ_ERR_ARG, "terms carry different signatures");
  try {
    *valid = pseq::decide_com(u->t, v->t, u->sig) ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (!*valid) {
        auto found = pseq::find_com_witness(u->t, v->t);
        if (found)
          *witness = dup_string(found->S.name() + ": " +
                                format_assignment(found->S, found->assignment));
      }
    }
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

/* ------------------------------------------------------------ proof scripts */

pseq_status pseq_proof_parse(const char* text, pseq_proof** out) {
  if (!text || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    *out = new pseq_proof{pseq::parse_proof(text), std::nullopt};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_PARSE, e.what());
  }
}

void pseq_proof_free(pseq_proof* p) { delete p; }

pseq_status pseq_proof_check(pseq_proof* p, int* ok, char** step_id,
                             char** reason) {
  if (!p || !ok) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    if (!p->checked) p->checked = pseq::check_script(p->script);
    *ok = p->checked->ok ? 1 : 0;
    if (step_id) *step_id = *ok ? nullptr : dup_string(p->checked->step_id);
    if (reason) *reason = *ok ? nullptr : dup_string(p->checked->reason);
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_proof_render_expanded(pseq_proof* p, char** out) {
  if (!p || !out) return fail(PSEQ_ERR_ARG, "null argument");
  if (!p->checked || !p->checked->ok)
    return fail(PSEQ_ERR_STATE, "script has no accepting check");
  *out = dup_string(pseq::render_proof(p->checked->expanded));
  return PSEQ_OK;
}

pseq_status pseq_proof_audit(pseq_proof* p, const char* pool_spec,
                             int* models, int* checks, char** violations) {
  if (!p || !models || !checks) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    if (!p->checked) p->checked = pseq::check_script(p->script);
    if (!p->checked->ok)
      return fail(PSEQ_ERR_STATE, "script has no accepting check");
    auto pool =
        parse_pool_spec(pool_spec ? pool_spec : "default", p->script.sig);
    auto report = pseq::audit_soundness(p->script, pool);
    *models = report.models_used;
    *checks = report.checks;
    if (violations) {
      std::ostringstream o;
      for (auto& v : report.violations) o << v << "\n";
      *violations = dup_string(o.str());
    }
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

/* ---------------------------------------------------------------- Rees */

pseq_status pseq_rees_build(const char* group, int I, int Lambda,
                            const char* P, int normalize, pseq_sg** out) {
  if (!group || !P || !out) return fail(PSEQ_ERR_ARG, "null argument");
  try {
    auto R = parse_rees(group, I, Lambda, P, normalize);
    *out = new pseq_sg{pseq::build_rees(R)};
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

pseq_status pseq_rees_congruence_counts(const char* group, int I, int Lambda,
                                        const char* P, int normalize,
                                        int* triples, int* congruences) {
  if (!group || !P || !triples || !congruences)
    return fail(PSEQ_ERR_ARG, "null argument");
  try {
    auto R = parse_rees(group, I, Lambda, P, normalize);
    auto S = pseq::build_rees(R);
    *triples = static_cast<int>(pseq::enumerate_triples(R).size());
    *congruences = static_cast<int>(
        pseq::enumerate_congruences(S, std::max(12, S.size())).size());
    return PSEQ_OK;
  } catch (const std::exception& e) {
    return fail(PSEQ_ERR_ARG, e.what());
  }
}

} /* extern "C" */
