// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "term.hpp"

#include <algorithm>
#include <cctype>

namespace pseq {

TermPtr Term::make_letter(char c) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = NodeKind::letter;
  t->letter_ = c;
  return t;
}

TermPtr Term::make_unit() {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = NodeKind::unit;
  return t;
}

TermPtr Term::make_concat(std::vector<TermPtr> parts) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = NodeKind::concat;
  t->parts_ = std::move(parts);
  return t;
}

TermPtr Term::make_power(TermPtr base, ExpVal e) {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = NodeKind::power;
  t->parts_ = {std::move(base)};
  t->exp_ = std::move(e);
  return t;
}

TermPtr Term::make_hole() {
  auto t = std::shared_ptr<Term>(new Term);
  t->kind_ = NodeKind::hole;
  return t;
}

namespace {

// Constant-valued schematic exponents collapse to the constant alternative;
// a negative finite constant has no legal term position, so this throws.
ExpVal collapse(const ExpVal& e) {
  if (auto* s = std::get_if<SymExponent>(&e); s && s->constant_p())
    return s->constant_value();
  return e;
}

SymExponent to_sym(const ExpVal& e) {
  if (auto* x = std::get_if<Exponent>(&e)) return SymExponent::constant(*x);
  return std::get<SymExponent>(e);
}

bool is_fin(const ExpVal& e, long long n) {
  auto* x = std::get_if<Exponent>(&e);
  return x && x->finite_p() && x->value() == n;
}

}  // namespace

bool expval_equal(const ExpVal& a, const ExpVal& b) {
  ExpVal ca = collapse(a), cb = collapse(b);
  if (ca.index() != cb.index()) return false;
  if (auto* x = std::get_if<Exponent>(&ca)) return *x == std::get<Exponent>(cb);
  return std::get<SymExponent>(ca) == std::get<SymExponent>(cb);
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case NodeKind::letter:
      return a->letter() == b->letter();
    case NodeKind::unit:
    case NodeKind::hole:
      return true;
    case NodeKind::power:
      return expval_equal(a->exp(), b->exp()) && term_equal(a->base(), b->base());
    case NodeKind::concat: {
      if (a->parts().size() != b->parts().size()) return false;
      for (size_t i = 0; i < a->parts().size(); ++i)
        if (!term_equal(a->parts()[i], b->parts()[i])) return false;
      return true;
    }
  }
  return false;
}

ExpVal expval_add(const ExpVal& a, const ExpVal& b) {
  if (a.index() == 0 && b.index() == 0)
    return exp_add(std::get<Exponent>(a), std::get<Exponent>(b));
  return collapse(ExpVal(sym_add(to_sym(a), to_sym(b))));
}

ExpVal expval_mul(const ExpVal& a, const ExpVal& b) {
  if (a.index() == 0 && b.index() == 0)
    return exp_mul(std::get<Exponent>(a), std::get<Exponent>(b));
  return collapse(ExpVal(sym_mul(to_sym(a), to_sym(b))));
}

std::string render(const ExpVal& e) {
  if (auto* x = std::get_if<Exponent>(&e)) return render(*x);
  return std::get<SymExponent>(e).render();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  char peek() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i < s.size() ? s[i] : '\0';
  }
  void take(char c) {
    if (peek() != c)
      throw TermError(std::string("expected '") + c + "' in term at offset " +
                      std::to_string(i));
    ++i;
  }
  long long nat() {
    long long v = 0;
    int digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (++digits > 12) throw TermError("numeric exponent too large");
      ++i;
    }
    return v;
  }
};

SymExponent parse_sexp(Cursor& cur);

SymExponent parse_sfactor(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c)))
    return SymExponent::int_const(cur.nat());
  if (c == 'w') {
    cur.take('w');
    return SymExponent::constant(Exponent::omega());
  }
  if (c == 'k') {
    cur.take('k');
    return SymExponent::nu();
  }
  if (c == '(') {
    cur.take('(');
    SymExponent v = parse_sexp(cur);
    cur.take(')');
    return v;
  }
  throw TermError("expected an exponent atom at offset " + std::to_string(cur.i));
}

SymExponent parse_sprod(Cursor& cur) {
  SymExponent v = parse_sfactor(cur);
  for (;;) {
    char c = cur.peek();
    if (c == '*') {
      cur.take('*');
      v = sym_mul(v, parse_sfactor(cur));
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'k' ||
               c == '(') {
      v = sym_mul(v, parse_sfactor(cur));  // juxtaposition, as in "2k"
    } else {
      return v;
    }
  }
}

SymExponent parse_sexp(Cursor& cur) {
  SymExponent v = parse_sprod(cur);
  for (;;) {
    char c = cur.peek();
    if (c == '+') {
      cur.take('+');
      v = sym_add(v, parse_sprod(cur));
    } else if (c == '-') {
      cur.take('-');
      v = sym_add(v, sym_mul(SymExponent::int_const(-1), parse_sprod(cur)));
    } else {
      return v;
    }
  }
}

ExpVal parse_exp(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c)))
    return Exponent::finite(cur.nat());
  if (c == 'w') {
    cur.take('w');
    return Exponent::omega();
  }
  if (c == 'k') {
    cur.take('k');
    return ExpVal(SymExponent::nu());
  }
  if (c == '(') {
    cur.take('(');
    SymExponent v = parse_sexp(cur);
    cur.take(')');
    return collapse(ExpVal(v));
  }
  throw TermError("expected an exponent at offset " + std::to_string(cur.i));
}

TermPtr parse_term_inner(Cursor& cur, Sig sig);

TermPtr parse_atom(Cursor& cur, Sig sig) {
  char c = cur.peek();
  if (c == '(') {
    cur.take('(');
    TermPtr t = parse_term_inner(cur, sig);
    cur.take(')');
    return t;
  }
  if (c == '1') {
    if (sig != Sig::monoid)
      throw TermError("the empty product needs the monoid signature");
    cur.take('1');
    return Term::make_unit();
  }
  if (c == '_') {
    cur.take('_');
    return Term::make_hole();
  }
  if (std::islower(static_cast<unsigned char>(c)) && c != 'w' && c != 'k') {
    cur.take(c);
    return Term::make_letter(c);
  }
  throw TermError("expected a term atom at offset " + std::to_string(cur.i));
}

TermPtr parse_term_inner(Cursor& cur, Sig sig) {
  std::vector<TermPtr> parts;
  for (;;) {
    TermPtr a = parse_atom(cur, sig);
    if (cur.peek() == '^') {
      cur.take('^');
      ExpVal e = parse_exp(cur);
      if (auto* x = std::get_if<Exponent>(&e)) {
        if (!exp_valid(*x, sig))
          throw TermError("exponent " + render(*x) + " is invalid here");
      } else if (!std::get<SymExponent>(e).eventually_valid(sig)) {
        throw TermError("schematic exponent " + render(e) + " is never valid");
      }
      a = Term::make_power(a, e);
    }
    parts.push_back(a);
    char c = cur.peek();
    if (c == '\0' || c == ')') break;
  }
  if (parts.size() == 1) return parts[0];
  return Term::make_concat(std::move(parts));
}

}  // namespace

TermPtr parse_term(const std::string& src, Sig sig) {
  Cursor cur{src};
  try {
    TermPtr t = parse_term_inner(cur, sig);
    if (cur.peek() != '\0')
      throw TermError("trailing input in term at offset " + std::to_string(cur.i));
    return t;
  } catch (const ExponentError& e) {
    throw TermError(std::string("bad exponent in term: ") + e.what());
  }
}

ExpVal parse_expval(const std::string& src, Sig sig) {
  Cursor cur{src};
  try {
    ExpVal e = parse_exp(cur);
    if (cur.peek() != '\0')
      throw TermError("trailing input in exponent: " + src);
    if (auto* x = std::get_if<Exponent>(&e)) {
      if (!exp_valid(*x, sig))
        throw TermError("exponent " + render(*x) + " is invalid here");
    } else if (!std::get<SymExponent>(e).eventually_valid(sig)) {
      throw TermError("schematic exponent " + render(e) + " is never valid");
    }
    return e;
  } catch (const ExponentError& e) {
    throw TermError(std::string("bad exponent: ") + e.what());
  }
}

std::string render(const TermPtr& t) {
  switch (t->kind()) {
    case NodeKind::letter:
      return std::string(1, t->letter());
    case NodeKind::unit:
      return "1";
    case NodeKind::hole:
      return "_";
    case NodeKind::concat: {
      std::string out;
      for (const auto& p : t->parts()) {
        bool wrap = p->kind() == NodeKind::concat;
        out += wrap ? "(" + render(p) + ")" : render(p);
      }
      return out;
    }
    case NodeKind::power: {
      const TermPtr& b = t->base();
      bool wrap = b->kind() == NodeKind::concat || b->kind() == NodeKind::power;
      std::string bs = wrap ? "(" + render(b) + ")" : render(b);
      return bs + "^" + render(t->exp());
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Normal form

TermPtr normalize_ambient(TermPtr t, Sig sig) {
  switch (t->kind()) {
    case NodeKind::letter:
    case NodeKind::unit:
    case NodeKind::hole:
      return t;
    case NodeKind::power: {
      TermPtr b = normalize_ambient(t->base(), sig);
      ExpVal e = collapse(t->exp());
      while (b->kind() == NodeKind::power) {  // (b^e1)^e2 = b^(e1*e2)
        e = expval_mul(b->exp(), e);
        b = b->base();
      }
      if (b->kind() == NodeKind::unit) return b;
      if (is_fin(e, 1)) return b;
      if (is_fin(e, 0)) {
        if (sig == Sig::monoid) return Term::make_unit();
        throw TermError("zero exponent outside the monoid signature");
      }
      return Term::make_power(b, e);
    }
    case NodeKind::concat: {
      std::vector<TermPtr> flat;
      for (const auto& part : t->parts()) {
        TermPtr n = normalize_ambient(part, sig);
        if (n->kind() == NodeKind::unit) continue;
        if (n->kind() == NodeKind::concat)
          flat.insert(flat.end(), n->parts().begin(), n->parts().end());
        else
          flat.push_back(n);
      }
      // Merge adjacent factors with equal bases, treating a bare factor as
      // its own first power.  Merging never changes a base, so one
      // left-to-right pass suffices.
      auto key = [](const TermPtr& p) -> std::pair<TermPtr, ExpVal> {
        if (p->kind() == NodeKind::power) return {p->base(), p->exp()};
        return {p, ExpVal(Exponent::finite(1))};
      };
      std::vector<TermPtr> out;
      for (const auto& p : flat) {
        if (!out.empty()) {
          auto [b1, e1] = key(out.back());
          auto [b2, e2] = key(p);
          if (term_equal(b1, b2)) {
            ExpVal e = collapse(expval_add(e1, e2));
            out.pop_back();
            if (is_fin(e, 0)) {
              if (sig != Sig::monoid)
                throw TermError("zero exponent outside the monoid signature");
            } else if (is_fin(e, 1)) {
              out.push_back(b1);
            } else {
              out.push_back(Term::make_power(b1, e));
            }
            continue;
          }
        }
        out.push_back(p);
      }
      if (out.empty()) {
        if (sig == Sig::monoid) return Term::make_unit();
        throw TermError("empty product outside the monoid signature");
      }
      if (out.size() == 1) return out[0];
      return Term::make_concat(std::move(out));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Structural maps

namespace {

template <typename LeafFn, typename ExpFn>
TermPtr rebuild(const TermPtr& t, LeafFn&& leaf, ExpFn&& expfn) {
  switch (t->kind()) {
    case NodeKind::letter:
    case NodeKind::unit:
    case NodeKind::hole:
      return leaf(t);
    case NodeKind::concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t->parts().size());
      for (const auto& p : t->parts()) parts.push_back(rebuild(p, leaf, expfn));
      return Term::make_concat(std::move(parts));
    }
    case NodeKind::power:
      return Term::make_power(rebuild(t->base(), leaf, expfn), expfn(t->exp()));
  }
  return t;
}

ExpVal keep_exp(const ExpVal& e) { return e; }

}  // namespace

TermPtr substitute(const TermPtr& t, const std::map<char, TermPtr>& sub, Sig sig) {
  auto leaf = [&](const TermPtr& n) -> TermPtr {
    if (n->kind() == NodeKind::letter) {
      auto it = sub.find(n->letter());
      if (it != sub.end()) return it->second;
    }
    return n;
  };
  return normalize_ambient(rebuild(t, leaf, keep_exp), sig);
}

TermPtr plug(const TermPtr& ctx, const TermPtr& t, Sig sig) {
  auto leaf = [&](const TermPtr& n) -> TermPtr {
    return n->kind() == NodeKind::hole ? t : n;
  };
  return normalize_ambient(rebuild(ctx, leaf, keep_exp), sig);
}

int count_holes(const TermPtr& t) {
  switch (t->kind()) {
    case NodeKind::hole:
      return 1;
    case NodeKind::concat: {
      int n = 0;
      for (const auto& p : t->parts()) n += count_holes(p);
      return n;
    }
    case NodeKind::power:
      return count_holes(t->base());
    default:
      return 0;
  }
}

bool is_schematic(const TermPtr& t) {
  switch (t->kind()) {
    case NodeKind::concat:
      return std::any_of(t->parts().begin(), t->parts().end(),
                         [](const TermPtr& p) { return is_schematic(p); });
    case NodeKind::power:
      return t->exp().index() == 1 || is_schematic(t->base());
    default:
      return false;
  }
}

std::set<char> letters(const TermPtr& t) {
  std::set<char> out;
  auto walk = [&](auto&& self, const TermPtr& n) -> void {
    switch (n->kind()) {
      case NodeKind::letter:
        out.insert(n->letter());
        break;
      case NodeKind::concat:
        for (const auto& p : n->parts()) self(self, p);
        break;
      case NodeKind::power:
        self(self, n->base());
        break;
      default:
        break;
    }
  };
  walk(walk, t);
  return out;
}

TermPtr term_inst(const TermPtr& t, int n, Sig sig) {
  auto expfn = [n](const ExpVal& e) -> ExpVal {
    if (auto* s = std::get_if<SymExponent>(&e)) return s->instantiate(n);
    return e;
  };
  return normalize_ambient(rebuild(t, [](const TermPtr& x) { return x; }, expfn), sig);
}

TermPtr term_limit(const TermPtr& t, Sig sig) {
  auto expfn = [](const ExpVal& e) -> ExpVal {
    if (auto* s = std::get_if<SymExponent>(&e)) return s->limit();
    return e;
  };
  return normalize_ambient(rebuild(t, [](const TermPtr& x) { return x; }, expfn), sig);
}

TermPtr term_shift(const TermPtr& t) {
  auto expfn = [](const ExpVal& e) -> ExpVal {
    if (auto* s = std::get_if<SymExponent>(&e)) return ExpVal(s->shift());
    return e;
  };
  return rebuild(t, [](const TermPtr& x) { return x; }, expfn);
}

int term_n0(const TermPtr& t, Sig sig) {
  int n = 1;
  auto walk = [&](auto&& self, const TermPtr& x) -> void {
    if (x->kind() == NodeKind::concat) {
      for (const auto& p : x->parts()) self(self, p);
    } else if (x->kind() == NodeKind::power) {
      if (auto* s = std::get_if<SymExponent>(&x->exp()))
        n = std::max(n, s->n0(sig));
      self(self, x->base());
    }
  };
  walk(walk, t);
  return n;
}

// ---------------------------------------------------------------------------
// Ground-term views

std::vector<char> first_occurrence_order(const TermPtr& t, bool left_to_right) {
  std::vector<char> order;
  std::set<char> seen;
  auto walk = [&](auto&& self, const TermPtr& n) -> void {
    switch (n->kind()) {
      case NodeKind::letter:
        if (seen.insert(n->letter()).second) order.push_back(n->letter());
        break;
      case NodeKind::unit:
        break;
      case NodeKind::hole:
        throw TermError("contexts have no first-occurrence order");
      case NodeKind::concat:
        if (left_to_right)
          for (const auto& p : n->parts()) self(self, p);
        else
          for (auto it = n->parts().rbegin(); it != n->parts().rend(); ++it)
            self(self, *it);
        break;
      case NodeKind::power: {
        auto* x = std::get_if<Exponent>(&n->exp());
        if (!x) throw TermError("schematic terms have no first-occurrence order");
        // A positive or omega power contains its base's letters once.
        if (!(x->finite_p() && x->value() == 0)) self(self, n->base());
        break;
      }
    }
  };
  walk(walk, t);
  return order;
}

std::map<char, Exponent> com_vector(const TermPtr& t, Sig sig) {
  std::map<char, Exponent> totals;
  auto walk = [&](auto&& self, const TermPtr& n, Exponent mult) -> void {
    switch (n->kind()) {
      case NodeKind::letter: {
        auto it = totals.find(n->letter());
        if (it == totals.end())
          totals.emplace(n->letter(), mult);
        else
          it->second = exp_add(it->second, mult);
        break;
      }
      case NodeKind::unit:
        break;
      case NodeKind::hole:
        throw TermError("contexts have no letter totals");
      case NodeKind::concat:
        for (const auto& p : n->parts()) self(self, p, mult);
        break;
      case NodeKind::power: {
        auto* x = std::get_if<Exponent>(&n->exp());
        if (!x) throw TermError("schematic terms have no letter totals");
        self(self, n->base(), exp_mul(mult, *x));
        break;
      }
    }
  };
  walk(walk, t, Exponent::finite(1));
  if (sig == Sig::monoid) {
    for (auto it = totals.begin(); it != totals.end();)
      it = it->second == Exponent::finite(0) ? totals.erase(it) : std::next(it);
  }
  return totals;
}

namespace {

using GWord = std::vector<std::pair<char, int>>;

void gw_push(GWord& w, char c, long long e) {
  if (e == 0) return;
  if (e > 1000000000 || e < -1000000000) throw TermError("group exponent too large");
  if (!w.empty() && w.back().first == c) {
    long long s = static_cast<long long>(w.back().second) + e;
    if (s > 1000000000 || s < -1000000000)
      throw TermError("group exponent too large");
    if (s == 0)
      w.pop_back();
    else
      w.back().second = static_cast<int>(s);
  } else {
    w.push_back({c, static_cast<int>(e)});
  }
}

GWord gw_concat(GWord a, const GWord& b) {
  for (auto [c, e] : b) {
    gw_push(a, c, e);
    if (a.size() > 100000) throw TermError("group word too large");
  }
  return a;
}

GWord gw_pow(const GWord& w, long long z) {
  if (z < 0) {
    GWord inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      inv.push_back({it->first, -it->second});
    return gw_pow(inv, -z);
  }
  if (z > 100000) throw TermError("group word power too large");
  GWord r;
  for (long long i = 0; i < z; ++i) r = gw_concat(std::move(r), w);
  return r;
}

}  // namespace

std::vector<std::pair<char, int>> group_word(const TermPtr& t) {
  switch (t->kind()) {
    case NodeKind::letter:
      return {{t->letter(), 1}};
    case NodeKind::unit:
      return {};
    case NodeKind::hole:
      throw TermError("contexts have no group word");
    case NodeKind::concat: {
      GWord w;
      for (const auto& p : t->parts()) w = gw_concat(std::move(w), group_word(p));
      return w;
    }
    case NodeKind::power: {
      auto* x = std::get_if<Exponent>(&t->exp());
      if (!x) throw TermError("schematic terms have no group word");
      // In a group the idempotent power is the identity, so omega+z acts
      // as the plain z-th power.
      return gw_pow(group_word(t->base()), x->value());
    }
  }
  return {};
}

}  // namespace pseq
