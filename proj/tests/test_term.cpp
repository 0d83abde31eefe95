// Term parsing, normalization, substitution, and the ground-term views.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "doctest.h"
#include "term.hpp"

#include <functional>
#include <random>

using namespace pseq;

namespace {

TermPtr P(const std::string& s, Sig sig = Sig::monoid) { return parse_term(s, sig); }

std::string N(const std::string& s, Sig sig = Sig::monoid) {
  return render(normalize_ambient(parse_term(s, sig), sig));
}

}  // namespace

TEST_CASE("parsing and rendering round-trip") {
  for (const char* s : {"x", "xy", "x^2", "x^w", "x^(w+1)", "x^(w-1)", "(xy)^w",
                        "x^wy(zx)^w", "x^k", "x^(k-1)", "(xy^wz)^(w-1)", "_",
                        "x_z", "(x_)^wy", "x^(2k)", "x^(k*k)", "x^(w+k)"}) {
    TermPtr t = P(s);
    CHECK(render(t) == s);
    CHECK(term_equal(parse_term(render(t), Sig::monoid), t));
  }
  CHECK(render(P("1")) == "1");
  CHECK(render(P(" x  y ")) == "xy");
}

TEST_CASE("parse rejects ill-formed and ill-signed input") {
  CHECK_THROWS_AS(P("x^"), TermError);
  CHECK_THROWS_AS(P("(xy"), TermError);
  CHECK_THROWS_AS(P("x)"), TermError);
  CHECK_THROWS_AS(P("x^2^3"), TermError);
  CHECK_THROWS_AS(P("w"), TermError);   // reserved
  CHECK_THROWS_AS(P("k"), TermError);   // reserved
  CHECK_THROWS_AS(P("X"), TermError);
  CHECK_THROWS_AS(P(""), TermError);
  CHECK_THROWS_AS(P("1", Sig::semigroup), TermError);
  CHECK_THROWS_AS(P("x^0", Sig::semigroup), TermError);
  CHECK_THROWS_AS(P("x^(0-2)"), TermError);   // negative constant
  CHECK_THROWS_AS(P("x^(2-k)"), TermError);   // eventually negative
  CHECK_THROWS_AS(P("x^(1-k)", Sig::semigroup), TermError);
  CHECK(render(P("x^0")) == "x^0");           // monoid allows it
}

TEST_CASE("normalization golden cases") {
  CHECK(N("xx") == "x^2");
  CHECK(N("x^wx") == "x^(w+1)");
  CHECK(N("xx^w") == "x^(w+1)");
  CHECK(N("x^(w-1)x") == "x^w");
  CHECK(N("x^wx^w") == "x^w");
  CHECK(N("(x^w)^w") == "x^w");
  CHECK(N("(x^2)^3") == "x^6");
  CHECK(N("(x^w)^(w+2)") == "x^w");
  CHECK(N("(x^(w+1))^2") == "x^(w+2)");
  CHECK(N("x^1") == "x");
  CHECK(N("x^0") == "1");
  CHECK(N("x^0y") == "y");
  CHECK(N("1") == "1");
  CHECK(N("11") == "1");
  CHECK(N("1x1") == "x");
  CHECK(N("(xy)^w(xy)^w") == "(xy)^w");
  CHECK(N("x(yx)^wy") == "x(yx)^wy");
  CHECK(N("x^ky^wy") == "x^ky^(w+1)");
  CHECK(N("x^kx") == "x^(k+1)");
  CHECK(N("x^kx^(w-k)") == "x^w");
  CHECK(N("(x^k)^k") == "x^(k*k)");
  CHECK(N("(x^w)^k") == "x^w");
  CHECK(N("(x^k)^w") == "x^w");
  // The base of a power is not spliced into neighbours automatically.
  CHECK(N("(xy)^wxy") == "(xy)^wxy");
}

TEST_CASE("normalization is idempotent on random terms") {
  std::mt19937 rng(777);
  auto letter = [&] { return std::string(1, "xyz"[rng() % 3]); };
  auto exps = std::vector<std::string>{"2", "3", "w", "(w+1)", "(w-1)", "k", "(k+1)"};
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    int c = rng() % (depth <= 0 ? 2 : 5);
    switch (c) {
      case 0:
        return letter();
      case 1:
        return "1";
      case 2:
        return gen(depth - 1) + gen(depth - 1);
      case 3:
        return "(" + gen(depth - 1) + ")^" + exps[rng() % exps.size()];
      default:
        return "(" + gen(depth - 1) + gen(depth - 1) + ")";
    }
  };
  int trials = 0;
  for (int i = 0; i < 500; ++i) {
    TermPtr t;
    try {
      t = parse_term(gen(4), Sig::monoid);
    } catch (const TermError&) {
      continue;
    }
    TermPtr n1 = normalize_ambient(t, Sig::monoid);
    TermPtr n2 = normalize_ambient(n1, Sig::monoid);
    CHECK(term_equal(n1, n2));
    CHECK(term_equal(parse_term(render(n1), Sig::monoid), n1));
    ++trials;
  }
  CHECK(trials > 400);
}

TEST_CASE("substitution and contexts") {
  auto t = P("x(yx)^w");
  auto s = substitute(t, {{'x', P("ab")}}, Sig::monoid);
  CHECK(render(s) == "ab(yab)^w");

  CHECK(render(substitute(P("xy"), {{'x', P("y")}}, Sig::monoid)) == "y^2");
  CHECK(render(substitute(P("xyx"), {{'x', P("1")}}, Sig::monoid)) == "y");
  // Simultaneous: swapping letters is not sequential replacement.
  CHECK(render(substitute(P("xy"), {{'x', P("y")}, {'y', P("x")}}, Sig::monoid)) ==
        "yx");

  CHECK(count_holes(P("x_z")) == 1);
  CHECK(count_holes(P("_(x_)^w")) == 2);
  CHECK(count_holes(P("xyz")) == 0);
  CHECK(render(plug(P("x_z"), P("y^w"), Sig::monoid)) == "xy^wz");
  CHECK(render(plug(P("_x^w"), P("x"), Sig::monoid)) == "x^(w+1)");
  CHECK(render(plug(P("_"), P("xy"), Sig::monoid)) == "xy");
}

TEST_CASE("schematic instantiation, limit, and shift") {
  auto t = P("x^(k-1)y");
  CHECK(is_schematic(t));
  CHECK_FALSE(is_schematic(P("x^wy")));
  CHECK(render(term_inst(t, 3, Sig::monoid)) == "x^5y");
  CHECK(render(term_inst(t, 1, Sig::monoid)) == "y");  // x^0 vanishes
  CHECK(render(term_limit(t, Sig::monoid)) == "x^(w-1)y");
  CHECK(render(term_shift(t)) == "x^ky");
  CHECK(render(term_limit(P("x^(2k)"), Sig::monoid)) == "x^w");
  CHECK(term_n0(P("x^(k-1)"), Sig::semigroup) == 2);
  CHECK(term_n0(P("x^(k-1)"), Sig::monoid) == 1);
  CHECK(term_n0(P("xy^w"), Sig::semigroup) == 1);
  // Instantiation respects the signature: x^0 has no semigroup reading.
  CHECK_THROWS_AS(term_inst(P("x^(k-1)", Sig::semigroup), 1, Sig::semigroup),
                  TermError);
}

TEST_CASE("first occurrence orders") {
  auto ltr = [&](const char* s) { return first_occurrence_order(P(s), true); };
  auto rtl = [&](const char* s) { return first_occurrence_order(P(s), false); };
  CHECK(ltr("x^wy(zx)^w") == std::vector<char>{'x', 'y', 'z'});
  CHECK(rtl("x^wy(zx)^w") == std::vector<char>{'x', 'z', 'y'});
  CHECK(ltr("x^0yx") == std::vector<char>{'y', 'x'});  // zero power skipped
  CHECK(rtl("xy") == std::vector<char>{'y', 'x'});
  CHECK(ltr("1") == std::vector<char>{});
  CHECK_THROWS_AS(first_occurrence_order(P("x^k"), true), TermError);
}

TEST_CASE("letter totals") {
  auto cv = com_vector(P("x^wy^2x"), Sig::monoid);
  CHECK(cv.size() == 2);
  CHECK(cv.at('x') == Exponent::omega_plus(1));
  CHECK(cv.at('y') == Exponent::finite(2));

  auto cw = com_vector(P("(x^wy)^(w-1)"), Sig::monoid);
  CHECK(cw.at('x') == Exponent::omega());
  CHECK(cw.at('y') == Exponent::omega_plus(-1));

  CHECK(com_vector(P("x^0y"), Sig::monoid).size() == 1);
  auto cs = com_vector(P("xyx", Sig::semigroup), Sig::semigroup);
  CHECK(cs.at('x') == Exponent::finite(2));
  CHECK(cs.at('y') == Exponent::finite(1));
}

TEST_CASE("free group words") {
  using W = std::vector<std::pair<char, int>>;
  CHECK(group_word(P("x^(w-1)")) == W{{'x', -1}});
  CHECK(group_word(P("(xy)^(w-1)")) == W{{'y', -1}, {'x', -1}});
  CHECK(group_word(P("x^wy")) == W{{'y', 1}});
  CHECK(group_word(P("xx^(w-1)")) == W{});
  CHECK(group_word(P("1")) == W{});
  CHECK(group_word(P("xyy^(w-2)x^(w-1)")) == W{{'x', 1}, {'y', -1}, {'x', -1}});
  CHECK(group_word(P("(xy)(yx)^(w-1)")) ==
        W{{'x', 1}, {'y', 1}, {'x', -1}, {'y', -1}});
  CHECK(group_word(P("x^3y^0x^(w-3)")) == W{});
  CHECK_THROWS_AS(group_word(P("x^k")), TermError);
}
