// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "proofs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pseq {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string joined(const std::vector<std::string>& toks, size_t from) {
  std::string s;
  for (size_t i = from; i < toks.size(); ++i) s += toks[i];
  return s;
}

bool ident_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_' && c != '-' && c != '.')
      return false;
  return true;
}

bool letter_ok(char c) {
  return std::islower((unsigned char)c) && c != 'w' && c != 'k';
}

Identity parse_identity(const std::string& src, Sig sig) {
  size_t eq = src.find('=');
  if (eq == std::string::npos) throw ProofError("expected '=' in identity");
  std::string l = strip(src.substr(0, eq)), r = strip(src.substr(eq + 1));
  if (l.empty() || r.empty()) throw ProofError("empty identity side");
  return {parse_term(l, sig), parse_term(r, sig)};
}

// One x->value mapping; ambient exponent parameters use keys a and b.
void parse_mapping(const std::string& tok, Sig sig, bool ambient_keys,
                   std::map<char, TermPtr>& terms, std::map<char, ExpVal>& exps) {
  std::string t = tok;
  while (!t.empty() && t.back() == ',') t.pop_back();
  if (t.empty()) return;
  size_t arrow = t.find("->");
  if (arrow != 1) throw ProofError("bad mapping '" + tok + "'");
  char key = t[0];
  std::string val = t.substr(3);
  if (val.empty()) throw ProofError("empty mapping value in '" + tok + "'");
  if (ambient_keys && (key == 'a' || key == 'b')) {
    if (!exps.emplace(key, parse_expval(val, sig)).second)
      throw ProofError("duplicate exponent parameter in '" + tok + "'");
    return;
  }
  if (!letter_ok(key)) throw ProofError("bad substitution key in '" + tok + "'");
  if (!terms.emplace(key, parse_term(val, sig)).second)
    throw ProofError("duplicate substitution key in '" + tok + "'");
}

// Shared tail of a step line: [subst ...] [ctx c] [gives l = r].
void parse_clauses(const std::vector<std::string>& toks, size_t at, Sig sig,
                   bool ambient_keys, ProofStep& st, bool allow_subst,
                   bool allow_ctx) {
  while (at < toks.size()) {
    if (toks[at] == "subst" && allow_subst) {
      ++at;
      size_t n0 = at;
      while (at < toks.size() && toks[at] != "ctx" && toks[at] != "gives") {
        parse_mapping(toks[at], sig, ambient_keys,
                      ambient_keys ? st.schema_terms : st.sub, st.schema_exps);
        ++at;
      }
      if (at == n0) throw ProofError("subst clause needs mappings");
      continue;
    }
    if (toks[at] == "ctx" && allow_ctx) {
      if (at + 1 >= toks.size()) throw ProofError("ctx clause needs a context");
      st.context = parse_term(toks[at + 1], sig);
      if (count_holes(st.context) == 0)
        throw ProofError("context has no hole");
      at += 2;
      continue;
    }
    if (toks[at] == "gives") {
      st.gives = parse_identity(joined(toks, at + 1), sig);
      return;
    }
    throw ProofError("unexpected token '" + toks[at] + "'");
  }
}

ProofStep parse_step_line(const std::string& id, const std::string& just,
                          Sig sig) {
  ProofStep st;
  st.id = id;
  auto toks = tokens_of(just);
  if (toks.empty()) throw ProofError("empty justification");
  const std::string& kind = toks[0];
  auto need = [&](size_t n, const char* what) {
    if (toks.size() < n) throw ProofError(std::string(what));
  };
  if (kind == "hyp") {
    need(2, "hyp needs a hypothesis name");
    st.kind = StepKind::hyp;
    st.hyp_name = toks[1];
    parse_clauses(toks, 2, sig, false, st, true, true);
  } else if (kind == "refl") {
    need(2, "refl needs a term");
    st.kind = StepKind::refl;
    st.refl_term = parse_term(toks[1], sig);
    parse_clauses(toks, 2, sig, false, st, false, false);
  } else if (kind == "sym" || kind == "limit") {
    need(2, "rule needs a step reference");
    st.kind = kind == "sym" ? StepKind::sym : StepKind::limit;
    st.refs = {toks[1]};
    parse_clauses(toks, 2, sig, false, st, false, false);
  } else if (kind == "trans") {
    st.kind = StepKind::trans;
    size_t at = 1;
    while (at < toks.size() && toks[at] != "gives") st.refs.push_back(toks[at++]);
    if (st.refs.size() < 2) throw ProofError("trans needs two or more steps");
    parse_clauses(toks, at, sig, false, st, false, false);
  } else if (kind == "ctx") {
    need(3, "ctx needs a step and a context");
    st.kind = StepKind::ctx;
    st.refs = {toks[1]};
    st.context = parse_term(toks[2], sig);
    if (count_holes(st.context) == 0) throw ProofError("context has no hole");
    parse_clauses(toks, 3, sig, false, st, false, false);
  } else if (kind == "subst") {
    need(3, "subst needs a step and mappings");
    st.kind = StepKind::subst;
    st.refs = {toks[1]};
    size_t at = 2;
    while (at < toks.size() && toks[at] != "gives")
      parse_mapping(toks[at++], sig, false, st.sub, st.schema_exps);
    if (st.sub.empty()) throw ProofError("subst needs at least one mapping");
    parse_clauses(toks, at, sig, false, st, false, false);
  } else if (kind == "ambient") {
    need(2, "ambient needs a schema name");
    st.kind = StepKind::ambient;
    st.schema = toks[1];
    if (st.schema != "A3" && st.schema != "A4" && st.schema != "A6")
      throw ProofError("unknown schema '" + st.schema + "'");
    parse_clauses(toks, 2, sig, true, st, true, true);
  } else if (kind == "ihyp") {
    st.kind = StepKind::ihyp;
    parse_clauses(toks, 1, sig, false, st, false, false);
    if (!st.gives) throw ProofError("ihyp needs a gives clause");
  } else if (kind == "induction") {
    need(3, "induction needs base= and step=");
    st.kind = StepKind::induction;
    for (size_t at = 1; at < toks.size(); ++at) {
      if (toks[at].rfind("base=", 0) == 0) st.base_ref = toks[at].substr(5);
      else if (toks[at].rfind("step=", 0) == 0) st.step_ref = toks[at].substr(5);
      else if (toks[at] == "gives") {
        st.gives = parse_identity(joined(toks, at + 1), sig);
        break;
      } else throw ProofError("unexpected token '" + toks[at] + "'");
    }
    if (st.base_ref.empty() || st.step_ref.empty())
      throw ProofError("induction needs base= and step=");
    if (!st.gives) throw ProofError("induction needs a gives clause");
  } else if (kind == "inst") {
    need(3, "inst needs a step and n=");
    st.kind = StepKind::inst;
    st.refs = {toks[1]};
    if (toks[2].rfind("n=", 0) != 0) throw ProofError("inst needs n=<int>");
    st.inst_n = std::stoi(toks[2].substr(2));
    if (st.inst_n < 1 || st.inst_n > 8)
      throw ProofError("instantiation index out of range");
    parse_clauses(toks, 3, sig, false, st, false, false);
  } else if (kind == "iterate") {
    need(2, "iterate needs a step reference");
    st.kind = StepKind::iterate;
    st.refs = {toks[1]};
    parse_clauses(toks, 2, sig, false, st, false, false);
  } else if (kind == "mulside") {
    need(3, "mulside needs two step references");
    st.kind = StepKind::mulside;
    st.refs = {toks[1], toks[2]};
    parse_clauses(toks, 3, sig, false, st, false, false);
  } else {
    throw ProofError("unknown justification '" + kind + "'");
  }
  for (const auto& r : st.refs)
    if (!ident_ok(r)) throw ProofError("bad step reference '" + r + "'");
  return st;
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  ProofScript out;
  bool have_sig = false, have_goal = false;
  std::set<std::string> ids, hypnames;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (line.rfind("sig ", 0) == 0) {
        std::string s = strip(line.substr(4));
        if (s == "monoid") out.sig = Sig::monoid;
        else if (s == "semigroup") out.sig = Sig::semigroup;
        else throw ProofError("unknown signature '" + s + "'");
        have_sig = true;
      } else if (line.rfind("hyp ", 0) == 0) {
        if (!have_sig) throw ProofError("sig line must come first");
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw ProofError("hyp needs ':'");
        std::string name = strip(line.substr(4, colon - 4));
        if (!ident_ok(name)) throw ProofError("bad hypothesis name");
        if (!hypnames.insert(name).second)
          throw ProofError("duplicate hypothesis '" + name + "'");
        Identity id = parse_identity(line.substr(colon + 1), out.sig);
        if (is_schematic(id.first) || is_schematic(id.second))
          throw ProofError("hypotheses must be constant");
        out.hyps.emplace_back(name, id);
      } else if (line.rfind("step ", 0) == 0) {
        if (!have_sig) throw ProofError("sig line must come first");
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ProofError("step needs '='");
        std::string id = strip(line.substr(5, eq - 5));
        if (!ident_ok(id)) throw ProofError("bad step id");
        if (!ids.insert(id).second)
          throw ProofError("duplicate step id '" + id + "'");
        out.steps.push_back(parse_step_line(id, line.substr(eq + 1), out.sig));
      } else if (line.rfind("goal", 0) == 0) {
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw ProofError("goal needs ':'");
        if (!have_sig) throw ProofError("sig line must come first");
        out.goal = parse_identity(line.substr(colon + 1), out.sig);
        have_goal = true;
      } else {
        throw ProofError("unrecognized line");
      }
    } catch (const TermError& e) {
      throw ProofError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ProofError& e) {
      throw ProofError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_sig) throw ProofError("missing sig line");
  if (!have_goal) throw ProofError("missing goal line");
  return out;
}

std::vector<std::pair<std::string, std::string>> ambient_schemas() {
  return {{"A3", "x^a x^b = x^(a+b)"},
          {"A4", "(x^a)^b = x^(ab)"},
          {"A6", "(xy)^a x = x(yx)^a"}};
}

Identity ambient_instance(const std::string& schema,
                          const std::map<char, TermPtr>& terms,
                          const std::map<char, ExpVal>& exps) {
  auto term_of = [&](char c) {
    auto it = terms.find(c);
    return it == terms.end() ? Term::make_letter(c) : it->second;
  };
  auto exp_of = [&](char c) {
    auto it = exps.find(c);
    if (it == exps.end())
      throw ProofError(schema + " needs exponent parameter " + std::string(1, c));
    return it->second;
  };
  for (const auto& [c, t] : terms) {
    (void)t;
    if (c != 'x' && !(schema == "A6" && c == 'y'))
      throw ProofError(schema + " has no term variable " + std::string(1, c));
  }
  if (schema == "A3") {
    TermPtr t = term_of('x');
    ExpVal a = exp_of('a'), b = exp_of('b');
    return {Term::make_concat({Term::make_power(t, a), Term::make_power(t, b)}),
            Term::make_power(t, expval_add(a, b))};
  }
  if (schema == "A4") {
    TermPtr t = term_of('x');
    ExpVal a = exp_of('a'), b = exp_of('b');
    return {Term::make_power(Term::make_power(t, a), b),
            Term::make_power(t, expval_mul(a, b))};
  }
  if (schema == "A6") {
    TermPtr x = term_of('x'), y = term_of('y');
    ExpVal a = exp_of('a');
    TermPtr xy = Term::make_concat({x, y}), yx = Term::make_concat({y, x});
    return {Term::make_concat({Term::make_power(xy, a), x}),
            Term::make_concat({x, Term::make_power(yx, a)})};
  }
  throw ProofError("unknown schema '" + schema + "'");
}

namespace {

struct RejectError {
  std::string id;
  std::string reason;
};

ExpVal nu_exp() { return ExpVal{SymExponent::nu()}; }
ExpVal nu_plus_1() {
  return ExpVal{sym_add(SymExponent::nu(), SymExponent::int_const(1))};
}

std::vector<TermPtr> parts_of(const TermPtr& t) {
  if (t->kind() == NodeKind::concat) return t->parts();
  return {t};
}

TermPtr from_parts(std::vector<TermPtr> parts) {
  if (parts.empty()) throw ProofError("empty term");
  if (parts.size() == 1) return parts[0];
  return Term::make_concat(std::move(parts));
}

struct Checker {
  const ProofScript& s;
  CheckResult out;
  std::vector<Identity> norms;                 // per expanded step
  std::vector<std::set<std::string>> undis;    // per expanded step
  std::map<std::string, size_t> idx;
  std::map<std::string, Identity> hyp_by_name;

  explicit Checker(const ProofScript& script) : s(script) {}

  [[noreturn]] void fail(const ProofStep& st, const std::string& why) {
    throw RejectError{st.macro_origin.empty() ? st.id : st.macro_origin,
                      st.macro_origin.empty()
                          ? why
                          : ("in expansion step " + st.id + ": " + why)};
  }

  Identity norm_of(const ProofStep& st, const Identity& c) {
    try {
      Identity n{normalize_ambient(c.first, s.sig),
                 normalize_ambient(c.second, s.sig)};
      term_n0(n.first, s.sig);
      term_n0(n.second, s.sig);
      return n;
    } catch (const TermError& e) {
      fail(st, std::string("invalid claim: ") + e.what());
    } catch (const ExponentError& e) {
      fail(st, std::string("invalid claim: ") + e.what());
    }
  }

  static bool same(const Identity& a, const Identity& b) {
    return term_equal(a.first, b.first) && term_equal(a.second, b.second);
  }
  static bool same_either(const Identity& a, const Identity& b) {
    return same(a, b) ||
           (term_equal(a.first, b.second) && term_equal(a.second, b.first));
  }

  size_t ref(const ProofStep& st, const std::string& r) {
    auto it = idx.find(r);
    if (it == idx.end()) fail(st, "unknown step reference '" + r + "'");
    return it->second;
  }

  Identity compute(const ProofStep& st, std::set<std::string>& u) {
    switch (st.kind) {
      case StepKind::hyp: {
        auto it = hyp_by_name.find(st.hyp_name);
        if (it == hyp_by_name.end())
          fail(st, "unknown hypothesis '" + st.hyp_name + "'");
        Identity c = it->second;
        try {
          if (!st.sub.empty())
            c = {substitute(c.first, st.sub, s.sig),
                 substitute(c.second, st.sub, s.sig)};
          if (st.context)
            c = {plug(st.context, c.first, s.sig),
                 plug(st.context, c.second, s.sig)};
        } catch (const TermError& e) {
          fail(st, e.what());
        }
        return c;
      }
      case StepKind::refl:
        return {st.refl_term, st.refl_term};
      case StepKind::sym: {
        size_t j = ref(st, st.refs[0]);
        u = undis[j];
        return {out.claims[j].second.second, out.claims[j].second.first};
      }
      case StepKind::trans: {
        size_t j = ref(st, st.refs[0]);
        u = undis[j];
        Identity acc = out.claims[j].second;
        TermPtr shared = norms[j].second;
        for (size_t i = 1; i < st.refs.size(); ++i) {
          size_t k = ref(st, st.refs[i]);
          if (!term_equal(shared, norms[k].first))
            fail(st, "shared side mismatch between " + st.refs[i - 1] +
                         " and " + st.refs[i]);
          u.insert(undis[k].begin(), undis[k].end());
          acc.second = out.claims[k].second.second;
          shared = norms[k].second;
        }
        return acc;
      }
      case StepKind::ctx: {
        size_t j = ref(st, st.refs[0]);
        u = undis[j];
        try {
          return {plug(st.context, out.claims[j].second.first, s.sig),
                  plug(st.context, out.claims[j].second.second, s.sig)};
        } catch (const TermError& e) {
          fail(st, e.what());
        }
      }
      case StepKind::subst: {
        size_t j = ref(st, st.refs[0]);
        u = undis[j];
        try {
          return {substitute(out.claims[j].second.first, st.sub, s.sig),
                  substitute(out.claims[j].second.second, st.sub, s.sig)};
        } catch (const TermError& e) {
          fail(st, e.what());
        }
      }
      case StepKind::ambient: {
        try {
          Identity c = ambient_instance(st.schema, st.schema_terms, st.schema_exps);
          if (st.context)
            c = {plug(st.context, c.first, s.sig),
                 plug(st.context, c.second, s.sig)};
          return c;
        } catch (const ProofError& e) {
          fail(st, e.what());
        } catch (const TermError& e) {
          fail(st, e.what());
        } catch (const ExponentError& e) {
          fail(st, e.what());
        }
      }
      case StepKind::ihyp:
        u.insert(st.id);
        return *st.gives;
      case StepKind::induction: {
        size_t b = ref(st, st.base_ref), k = ref(st, st.step_ref);
        Identity L = *st.gives;
        Identity nL = norm_of(st, L);
        if (!is_schematic(nL.first) && !is_schematic(nL.second))
          fail(st, "induction claim is not schematic");
        Identity base_target;
        try {
          base_target = {term_inst(L.first, 1, s.sig),
                         term_inst(L.second, 1, s.sig)};
        } catch (const TermError& e) {
          fail(st, std::string("claim has no base instance: ") + e.what());
        } catch (const ExponentError& e) {
          fail(st, std::string("claim has no base instance: ") + e.what());
        }
        if (!same(norms[b], norm_of(st, base_target)))
          fail(st, "base step does not prove the claim at nu=1");
        Identity step_target{term_shift(L.first), term_shift(L.second)};
        if (!same(norms[k], norm_of(st, step_target)))
          fail(st, "step does not prove the claim at nu+1");
        for (const auto& h : undis[b])
          if (same_either(norms[idx.at(h)], nL))
            fail(st, "base step uses the induction hypothesis");
        u = undis[b];
        for (const auto& h : undis[k])
          if (!same_either(norms[idx.at(h)], nL)) u.insert(h);
        return L;
      }
      case StepKind::limit: {
        size_t j = ref(st, st.refs[0]);
        if (!undis[j].empty())
          fail(st, "limit over an undischarged induction hypothesis");
        try {
          return {term_limit(out.claims[j].second.first, s.sig),
                  term_limit(out.claims[j].second.second, s.sig)};
        } catch (const TermError& e) {
          fail(st, e.what());
        } catch (const ExponentError& e) {
          fail(st, e.what());
        }
      }
      case StepKind::inst: {
        size_t j = ref(st, st.refs[0]);
        if (!undis[j].empty())
          fail(st, "instantiation of an undischarged induction hypothesis");
        try {
          return {term_inst(out.claims[j].second.first, st.inst_n, s.sig),
                  term_inst(out.claims[j].second.second, st.inst_n, s.sig)};
        } catch (const TermError& e) {
          fail(st, e.what());
        } catch (const ExponentError& e) {
          fail(st, e.what());
        }
      }
      case StepKind::iterate:
      case StepKind::mulside:
        fail(st, "macro reached the primitive checker");
    }
    fail(st, "unreachable");
  }

  void check_primitive(const ProofStep& st) {
    if (idx.count(st.id)) fail(st, "duplicate step id '" + st.id + "'");
    std::set<std::string> u;
    Identity c = compute(st, u);
    Identity nc = norm_of(st, c);
    if (st.gives && st.kind != StepKind::ihyp &&
        st.kind != StepKind::induction) {
      Identity ng = norm_of(st, *st.gives);
      if (!same_either(nc, ng))
        fail(st, "declared claim does not match the derived one");
      c = *st.gives;
      nc = ng;
    }
    idx[st.id] = out.claims.size();
    out.claims.emplace_back(st.id, c);
    norms.push_back(nc);
    undis.push_back(std::move(u));
    out.expanded.steps.push_back(st);
  }

  void expand_mulside(const ProofStep& st) {
    size_t j = ref(st, st.refs[0]), k = ref(st, st.refs[1]);
    // By value: check_primitive grows out.claims and would invalidate refs.
    Identity a = out.claims[j].second;
    Identity b = out.claims[k].second;
    ProofStep g1;
    g1.id = st.id + ".l";
    g1.kind = StepKind::ctx;
    g1.refs = {st.refs[0]};
    g1.context = Term::make_concat({Term::make_hole(), b.first});
    g1.macro_origin = st.id;
    check_primitive(g1);
    ProofStep g2;
    g2.id = st.id + ".r";
    g2.kind = StepKind::ctx;
    g2.refs = {st.refs[1]};
    g2.context = Term::make_concat({a.second, Term::make_hole()});
    g2.macro_origin = st.id;
    check_primitive(g2);
    ProofStep fin;
    fin.id = st.id;
    fin.kind = StepKind::trans;
    fin.refs = {g1.id, g2.id};
    fin.gives = st.gives;
    fin.macro_origin = st.id;
    check_primitive(fin);
  }

  void expand_iterate(const ProofStep& st) {
    size_t j = ref(st, st.refs[0]);
    Identity src = out.claims[j].second;
    if (is_schematic(src.first) || is_schematic(src.second))
      fail(st, "iterate needs a constant source claim");
    // The written form keeps u's parts literal; the normal form may have
    // merged them into powers, so it is only the fallback.
    auto locate = [](const Identity& id, std::vector<TermPtr>& U,
                     std::vector<TermPtr>& A, std::vector<TermPtr>& B) {
      U = parts_of(id.first);
      std::vector<TermPtr> R = parts_of(id.second);
      for (size_t p = 0; p + U.size() <= R.size(); ++p) {
        bool hit = true;
        for (size_t i = 0; i < U.size() && hit; ++i)
          hit = term_equal(R[p + i], U[i]);
        if (hit && !(p == 0 && U.size() == R.size())) {
          A.assign(R.begin(), R.begin() + (long)p);
          B.assign(R.begin() + (long)(p + U.size()), R.end());
          return true;
        }
      }
      return false;
    };
    std::vector<TermPtr> U, A, B;
    if (!locate(src, U, A, B) && !locate(norms[j], U, A, B))
      fail(st, "iterated side does not recur in a context");
    TermPtr u_term = from_parts(U);
    // L(nu): u = A^nu u B^nu
    std::vector<TermPtr> lparts;
    if (!A.empty()) lparts.push_back(Term::make_power(from_parts(A), nu_exp()));
    lparts.insert(lparts.end(), U.begin(), U.end());
    if (!B.empty()) lparts.push_back(Term::make_power(from_parts(B), nu_exp()));
    Identity L{u_term, from_parts(lparts)};
    bool flipped = false;
    if (st.gives) {
      Identity nL = norm_of(st, L), ng = norm_of(st, *st.gives);
      if (same(nL, ng)) L = *st.gives;
      else if (same_either(nL, ng)) flipped = true;
      else fail(st, "declared claim does not match the iterated schema");
    }

    ProofStep ih;
    ih.id = st.id + ".ih";
    ih.kind = StepKind::ihyp;
    ih.gives = L;
    ih.macro_origin = st.id;
    check_primitive(ih);

    ProofStep cx;
    cx.id = st.id + ".cx";
    cx.kind = StepKind::ctx;
    cx.refs = {ih.id};
    {
      std::vector<TermPtr> cparts(A.begin(), A.end());
      cparts.push_back(Term::make_hole());
      cparts.insert(cparts.end(), B.begin(), B.end());
      cx.context = from_parts(std::move(cparts));
    }
    cx.macro_origin = st.id;
    check_primitive(cx);

    ProofStep t1;
    t1.id = st.id + ".t1";
    t1.kind = StepKind::trans;
    t1.refs = {st.refs[0], cx.id};
    t1.macro_origin = st.id;
    check_primitive(t1);
    std::string last = t1.id;

    if (!A.empty()) {
      ProofStep ma;
      ma.id = st.id + ".ma";
      ma.kind = StepKind::ambient;
      ma.schema = "A3";
      ma.schema_terms['x'] = from_parts(A);
      ma.schema_exps.emplace('a', ExpVal{Exponent::finite(1)});
      ma.schema_exps.emplace('b', nu_exp());
      {
        std::vector<TermPtr> cparts{Term::make_hole()};
        cparts.insert(cparts.end(), U.begin(), U.end());
        if (!B.empty()) {
          cparts.push_back(Term::make_power(from_parts(B), nu_exp()));
          cparts.insert(cparts.end(), B.begin(), B.end());
        }
        ma.context = from_parts(std::move(cparts));
      }
      ma.macro_origin = st.id;
      check_primitive(ma);
      ProofStep t2;
      t2.id = st.id + ".t2";
      t2.kind = StepKind::trans;
      t2.refs = {last, ma.id};
      t2.macro_origin = st.id;
      check_primitive(t2);
      last = t2.id;
    }
    if (!B.empty()) {
      ProofStep mb;
      mb.id = st.id + ".mb";
      mb.kind = StepKind::ambient;
      mb.schema = "A3";
      mb.schema_terms['x'] = from_parts(B);
      mb.schema_exps.emplace('a', nu_exp());
      mb.schema_exps.emplace('b', ExpVal{Exponent::finite(1)});
      {
        std::vector<TermPtr> cparts;
        if (!A.empty())
          cparts.push_back(Term::make_power(from_parts(A), nu_plus_1()));
        cparts.insert(cparts.end(), U.begin(), U.end());
        cparts.push_back(Term::make_hole());
        mb.context = from_parts(std::move(cparts));
      }
      mb.macro_origin = st.id;
      check_primitive(mb);
      ProofStep t3;
      t3.id = st.id + ".t3";
      t3.kind = StepKind::trans;
      t3.refs = {last, mb.id};
      t3.macro_origin = st.id;
      check_primitive(t3);
      last = t3.id;
    }
    ProofStep fin;
    fin.id = flipped ? st.id + ".ind" : st.id;
    fin.kind = StepKind::induction;
    fin.base_ref = st.refs[0];
    fin.step_ref = last;
    fin.gives = L;
    fin.macro_origin = st.id;
    check_primitive(fin);
    if (flipped) {
      ProofStep fl;
      fl.id = st.id;
      fl.kind = StepKind::sym;
      fl.refs = {fin.id};
      fl.gives = st.gives;
      fl.macro_origin = st.id;
      check_primitive(fl);
    }
  }

  CheckResult run() {
    out.expanded.sig = s.sig;
    out.expanded.hyps = s.hyps;
    out.expanded.goal = s.goal;
    try {
      // Hypotheses stay in written form; comparisons normalize on demand
      // and macros need the literal factorizations.
      for (const auto& [name, id] : s.hyps) hyp_by_name.emplace(name, id);
      for (const auto& st : s.steps) {
        if (st.kind == StepKind::iterate) expand_iterate(st);
        else if (st.kind == StepKind::mulside) expand_mulside(st);
        else check_primitive(st);
      }
      Identity goal_n{normalize_ambient(s.goal.first, s.sig),
                      normalize_ambient(s.goal.second, s.sig)};
      for (size_t i = 0; i < norms.size(); ++i)
        if (undis[i].empty() && same_either(norms[i], goal_n)) {
          out.ok = true;
          return out;
        }
      out.step_id = "goal";
      out.reason = "no fully discharged step establishes the goal";
    } catch (const RejectError& e) {
      out.ok = false;
      out.step_id = e.id;
      out.reason = e.reason;
    } catch (const TermError& e) {
      out.ok = false;
      out.step_id = "script";
      out.reason = e.what();
    }
    return out;
  }
};

}  // namespace

CheckResult check_script(const ProofScript& s) { return Checker(s).run(); }

namespace {

std::string render_identity(const Identity& id) {
  return render(id.first) + " = " + render(id.second);
}

std::string render_mappings(const std::map<char, TermPtr>& terms,
                            const std::map<char, ExpVal>& exps) {
  std::string s;
  for (const auto& [c, t] : terms) {
    if (!s.empty()) s += ", ";
    s += std::string(1, c) + "->" + render(t);
  }
  for (const auto& [c, e] : exps) {
    if (!s.empty()) s += ", ";
    s += std::string(1, c) + "->" + render(e);
  }
  return s;
}

}  // namespace

std::string render_proof(const ProofScript& s) {
  std::ostringstream o;
  o << "sig " << (s.sig == Sig::monoid ? "monoid" : "semigroup") << "\n";
  for (const auto& [name, id] : s.hyps)
    o << "hyp " << name << ": " << render_identity(id) << "\n";
  for (const auto& st : s.steps) {
    o << "step " << st.id << " = ";
    switch (st.kind) {
      case StepKind::hyp:
        o << "hyp " << st.hyp_name;
        if (!st.sub.empty()) o << " subst " << render_mappings(st.sub, {});
        if (st.context) o << " ctx " << render(st.context);
        break;
      case StepKind::refl:
        o << "refl " << render(st.refl_term);
        break;
      case StepKind::sym:
        o << "sym " << st.refs[0];
        break;
      case StepKind::trans: {
        o << "trans";
        for (const auto& r : st.refs) o << " " << r;
        break;
      }
      case StepKind::ctx:
        o << "ctx " << st.refs[0] << " " << render(st.context);
        break;
      case StepKind::subst:
        o << "subst " << st.refs[0] << " " << render_mappings(st.sub, {});
        break;
      case StepKind::ambient:
        o << "ambient " << st.schema;
        if (!st.schema_terms.empty() || !st.schema_exps.empty())
          o << " subst " << render_mappings(st.schema_terms, st.schema_exps);
        if (st.context) o << " ctx " << render(st.context);
        break;
      case StepKind::ihyp:
        o << "ihyp";
        break;
      case StepKind::induction:
        o << "induction base=" << st.base_ref << " step=" << st.step_ref;
        break;
      case StepKind::limit:
        o << "limit " << st.refs[0];
        break;
      case StepKind::inst:
        o << "inst " << st.refs[0] << " n=" << st.inst_n;
        break;
      case StepKind::iterate:
        o << "iterate " << st.refs[0];
        break;
      case StepKind::mulside:
        o << "mulside " << st.refs[0] << " " << st.refs[1];
        break;
    }
    if (st.gives) o << " gives " << render_identity(*st.gives);
    o << "\n";
  }
  o << "goal: " << render_identity(s.goal) << "\n";
  return o.str();
}

AuditReport audit_soundness(const ProofScript& s,
                            const std::vector<FinSemigroup>& pool) {
  CheckResult res = check_script(s);
  if (!res.ok)
    throw ProofError("audit requires an accepted script (rejected at " +
                     res.step_id + ": " + res.reason + ")");
  AuditReport rep;
  for (const auto& S : pool) {
    if (s.sig == Sig::monoid && !S.is_monoid()) continue;
    bool models = true;
    for (const auto& [name, id] : s.hyps) {
      (void)name;
      if (!satisfies(S, id.first, id.second)) {
        models = false;
        break;
      }
    }
    if (!models) continue;
    ++rep.models_used;
    for (const auto& [id, claim] : res.claims) {
      if (!is_schematic(claim.first) && !is_schematic(claim.second)) {
        ++rep.checks;
        if (!satisfies(S, claim.first, claim.second))
          rep.violations.push_back("step " + id + " fails in " + S.name());
        continue;
      }
      int n_lo = std::max(term_n0(claim.first, s.sig),
                          term_n0(claim.second, s.sig));
      for (int n = std::max(1, n_lo); n <= 4; ++n) {
        ++rep.checks;
        TermPtr l = term_inst(claim.first, n, s.sig);
        TermPtr r = term_inst(claim.second, n, s.sig);
        if (!satisfies(S, l, r))
          rep.violations.push_back("step " + id + " at n=" + std::to_string(n) +
                                   " fails in " + S.name());
      }
    }
  }
  return rep;
}

std::vector<FinSemigroup> audit_pool(Sig sig) {
  std::vector<FinSemigroup> pool;
  for (int n = 1; n <= 4; ++n)
    for (auto& M : enumerate_monoids(n)) pool.push_back(std::move(M));
  for (const auto& S : catalog()) {
    if (sig == Sig::semigroup) pool.push_back(S);
    pool.push_back(adjoin_identity(S));
  }
  return pool;
}

}  // namespace pseq
