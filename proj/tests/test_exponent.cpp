// Exponent arithmetic: algebraic laws, schematic polynomials, and the
// homomorphism between symbolic operations and instantiated values.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "doctest.h"
#include "exponent.hpp"

#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

using namespace pseq;

namespace {

Exponent fin(long long n) { return Exponent::finite(n); }
Exponent om(long long z) { return Exponent::omega_plus(z); }

// Sample points covering both kinds; used to sweep binary laws.
std::vector<Exponent> samples() {
  std::vector<Exponent> v;
  for (long long n : {0, 1, 2, 3, 7}) v.push_back(fin(n));
  for (long long z : {-3, -1, 0, 1, 2}) v.push_back(om(z));
  return v;
}

}  // namespace

TEST_CASE("constant exponent arithmetic follows the defining rules") {
  CHECK(exp_add(fin(2), fin(3)) == fin(5));
  CHECK(exp_add(fin(2), om(0)) == om(2));
  CHECK(exp_add(om(-1), fin(1)) == om(0));
  CHECK(exp_add(om(2), om(-5)) == om(-3));
  CHECK(exp_add(om(0), om(0)) == om(0));  // w + w = w

  CHECK(exp_mul(fin(2), fin(3)) == fin(6));
  CHECK(exp_mul(fin(0), om(7)) == fin(0));
  CHECK(exp_mul(om(7), fin(0)) == fin(0));
  CHECK(exp_mul(fin(3), om(2)) == om(6));
  CHECK(exp_mul(om(2), fin(3)) == om(6));
  CHECK(exp_mul(om(-1), om(-1)) == om(1));  // (w-1)(w-1) = w+1
  CHECK(exp_mul(om(0), om(5)) == om(0));

  CHECK_THROWS_AS(Exponent::finite(-1), ExponentError);
}

TEST_CASE("constant exponent arithmetic is commutative, associative, distributive") {
  auto pts = samples();
  for (auto a : pts)
    for (auto b : pts) {
      CHECK(exp_add(a, b) == exp_add(b, a));
      CHECK(exp_mul(a, b) == exp_mul(b, a));
      for (auto c : pts) {
        CHECK(exp_add(exp_add(a, b), c) == exp_add(a, exp_add(b, c)));
        CHECK(exp_mul(exp_mul(a, b), c) == exp_mul(a, exp_mul(b, c)));
        CHECK(exp_mul(a, exp_add(b, c)) == exp_add(exp_mul(a, b), exp_mul(a, c)));
      }
    }
}

TEST_CASE("signature validity and rendering") {
  CHECK(exp_valid(fin(0), Sig::monoid));
  CHECK_FALSE(exp_valid(fin(0), Sig::semigroup));
  CHECK(exp_valid(fin(1), Sig::semigroup));
  CHECK(exp_valid(om(-9), Sig::semigroup));

  CHECK(render(fin(5)) == "5");
  CHECK(render(om(0)) == "w");
  CHECK(render(om(2)) == "(w+2)");
  CHECK(render(om(-1)) == "(w-1)");
}

TEST_CASE("factorial bounds") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(3) == 6);
  CHECK(factorial(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(factorial(21), ExponentError);
}

TEST_CASE("schematic exponents instantiate and take limits as specified") {
  auto nu = SymExponent::nu();

  // nu - 1 at n = 3 is 3! - 1 = 5.
  auto nm1 = sym_add(nu, SymExponent::int_const(-1));
  CHECK(nm1.instantiate(3) == fin(5));
  CHECK(sym_limit(nm1) == om(-1));

  // (w-2) * nu at n = 2 is om(-2 * 2!) = om(-4).
  auto wm2nu = sym_mul(SymExponent::constant(om(-2)), nu);
  CHECK(wm2nu.instantiate(2) == om(-4));

  // nu * nu and (w+3) * nu both collapse to plain omega in the limit.
  CHECK(sym_limit(sym_mul(nu, nu)) == om(0));
  CHECK(sym_limit(sym_mul(SymExponent::constant(om(3)), nu)) == om(0));

  // Constants pass straight through.
  auto c = SymExponent::constant(om(-1));
  CHECK(c.constant_p());
  CHECK(c.constant_value() == om(-1));
  CHECK(sym_limit(c) == om(-1));
  CHECK(c.instantiate(1) == om(-1));

  // A negative finite value cannot be realized.
  CHECK_THROWS_AS(nm1.at_integer(0), ExponentError);
  auto m3 = sym_add(nu, SymExponent::int_const(-3));
  CHECK_THROWS_AS(m3.instantiate(1), ExponentError);  // 1! - 3 < 0
  CHECK(m3.instantiate(3) == fin(3));

  // The limit of an eventually negative polynomial does not exist.
  auto neg = sym_mul(SymExponent::int_const(-1), nu);
  CHECK_THROWS_AS(sym_limit(neg), ExponentError);

  // omega times an eventually nonpositive factor is rejected outright,
  // while omega times zero is the defined fin(0) case.
  CHECK_THROWS_AS(sym_mul(SymExponent::constant(om(0)), neg), ExponentError);
  CHECK_THROWS_AS(
      sym_mul(SymExponent::constant(om(1)), SymExponent::int_const(-2)), ExponentError);
  CHECK(sym_mul(SymExponent::constant(om(1)), SymExponent::int_const(0))
            .constant_value() == fin(0));
}

TEST_CASE("canonical forms identify equal schematic exponents") {
  auto nu = SymExponent::nu();
  // (w+2) * nu = w + 2nu: folding the omega product is canonical.
  auto folded = sym_mul(SymExponent::constant(om(2)), nu);
  auto direct = sym_add(SymExponent::constant(om(0)),
                        sym_mul(SymExponent::int_const(2), nu));
  CHECK(folded == direct);

  // nu + nu = 2 * nu.
  CHECK(sym_add(nu, nu) == sym_mul(SymExponent::int_const(2), nu));

  // Shifting nu := nu + 1 expands polynomially: (nu)^2 becomes nu^2+2nu+1.
  auto sq = sym_mul(nu, nu);
  auto shifted = sq.shift();
  auto expect = sym_add(sym_add(sq, sym_mul(SymExponent::int_const(2), nu)),
                        SymExponent::int_const(1));
  CHECK(shifted == expect);
  for (int n = 1; n <= 4; ++n) {
    long long x = factorial(n);
    CHECK(shifted.at_integer(x) == sq.at_integer(x + 1));
  }
}

TEST_CASE("validity thresholds for schematic exponents") {
  auto nu = SymExponent::nu();
  auto nm2 = sym_add(nu, SymExponent::int_const(-2));  // nu - 2
  CHECK(nm2.eventually_valid(Sig::semigroup));
  CHECK(nm2.n0(Sig::semigroup) == 3);  // n! - 2 >= 1 needs n! >= 3, first at n = 3
  CHECK(nm2.n0(Sig::monoid) == 2);     // n! - 2 >= 0 needs n! >= 2, first at n = 2
  CHECK_FALSE(sym_mul(SymExponent::int_const(-1), nu).eventually_valid(Sig::semigroup));
  CHECK(SymExponent::constant(om(-5)).eventually_valid(Sig::semigroup));
}

TEST_CASE("rendering schematic exponents") {
  auto nu = SymExponent::nu();
  CHECK(nu.render() == "k");
  CHECK(SymExponent::int_const(5).render() == "5");
  CHECK(SymExponent::constant(om(0)).render() == "w");
  CHECK(SymExponent::constant(om(-1)).render() == "(w-1)");
  CHECK(sym_add(nu, SymExponent::int_const(-1)).render() == "(k-1)");
  CHECK(sym_mul(SymExponent::int_const(2), nu).render() == "(2k)");
  CHECK(sym_mul(nu, nu).render() == "(k*k)");
  CHECK(sym_add(SymExponent::constant(om(0)), nu).render() == "(w+k)");
}

// ---------------------------------------------------------------------------
// Randomized oracle: a schematic exponent built by symbolic operations must
// instantiate to the same value as evaluating the original expression tree
// step by step in constant-exponent arithmetic.

namespace {

// (has_omega, integer component); the integer may be negative for plain
// values, modeling polynomial intermediates.  nullopt marks an undefined
// product (omega times a nonpositive plain value).  __int128 keeps the
// bookkeeping exact even when subtree values overflow the instantiated
// range; such trees are skipped on the symbolic side by the overflow check.
using I = __int128;
using Flat = std::optional<std::pair<bool, I>>;

struct RandomExp {
  SymExponent sym = SymExponent::int_const(0);
  std::function<Flat(long long)> eval;
};

Flat flat_add(Flat a, Flat b) {
  if (!a || !b) return std::nullopt;
  return std::pair{a->first || b->first, a->second + b->second};
}

Flat flat_mul(Flat a, Flat b) {
  if (!a || !b) return std::nullopt;
  auto [ao, av] = *a;
  auto [bo, bv] = *b;
  if (!ao && av == 0) return std::pair{false, I(0)};
  if (!bo && bv == 0) return std::pair{false, I(0)};
  if (!ao && !bo) return std::pair{false, av * bv};
  if (ao && bo) return std::pair{true, av * bv};
  I plain = ao ? bv : av;
  if (plain < 1) return std::nullopt;
  return std::pair{true, (ao ? av : bv) * plain};
}

RandomExp random_exp(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 4);
  switch (pick(rng)) {
    case 0: {
      long long k = std::uniform_int_distribution<long long>(-3, 3)(rng);
      return {SymExponent::int_const(k),
              [k](long long) -> Flat { return std::pair{false, I(k)}; }};
    }
    case 1:
      return {SymExponent::nu(),
              [](long long x) -> Flat { return std::pair{false, I(x)}; }};
    case 2: {
      long long z = std::uniform_int_distribution<long long>(-2, 2)(rng);
      return {SymExponent::constant(om(z)),
              [z](long long) -> Flat { return std::pair{true, I(z)}; }};
    }
    case 3: {
      auto a = random_exp(rng, depth - 1);
      auto b = random_exp(rng, depth - 1);
      return {sym_add(a.sym, b.sym), [a, b](long long x) -> Flat {
                return flat_add(a.eval(x), b.eval(x));
              }};
    }
    default: {
      auto a = random_exp(rng, depth - 1);
      auto b = random_exp(rng, depth - 1);
      SymExponent s = SymExponent::int_const(0);
      try {
        s = sym_mul(a.sym, b.sym);
      } catch (const ExponentError&) {
        return random_exp(rng, depth - 1);  // eventually nonpositive: retry smaller
      }
      return {s, [a, b](long long x) -> Flat {
                return flat_mul(a.eval(x), b.eval(x));
              }};
    }
  }
}

}  // namespace

TEST_CASE("instantiation agrees with step-by-step evaluation on random trees") {
  std::mt19937 rng(20240917);
  int compared = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    auto e = random_exp(rng, 4);
    for (int n = 1; n <= 5; ++n) {
      long long x = factorial(n);
      Exponent got = fin(0);
      try {
        got = e.sym.instantiate(n);
      } catch (const ExponentError&) {
        // Below the canonical form's floor, or a negative finite value;
        // both are legitimate refusals, so nothing to compare.
        continue;
      }
      auto want = e.eval(x);
      REQUIRE(want.has_value());
      CHECK(got.omega_p() == want->first);
      CHECK(got.value() == want->second);
      ++compared;
    }
  }
  CHECK(compared > 2000);
}

TEST_CASE("symbolic operations commute with instantiation") {
  std::mt19937 rng(515151);
  std::vector<SymExponent> pool;
  while (pool.size() < 60) pool.push_back(random_exp(rng, 3).sym);
  int compared = 0;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j)
      for (int n = 2; n <= 4; ++n) {
        std::optional<Exponent> ai, bj;
        try {
          ai = pool[i].instantiate(n);
          bj = pool[j].instantiate(n);
        } catch (const ExponentError&) {
          continue;
        }
        // add
        try {
          Exponent lhs = sym_add(pool[i], pool[j]).instantiate(n);
          CHECK(lhs == exp_add(*ai, *bj));
          ++compared;
        } catch (const ExponentError&) {
        }
        // mul: both orders must agree with the constant product when defined
        try {
          Exponent lhs = sym_mul(pool[i], pool[j]).instantiate(n);
          Exponent rhs = exp_mul(*ai, *bj);
          CHECK(lhs == rhs);
          ++compared;
        } catch (const ExponentError&) {
        }
      }
  CHECK(compared > 3000);
}
