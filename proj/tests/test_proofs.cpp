// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "proofs.hpp"

#include <doctest.h>

#include "semigroup.hpp"
#include "term.hpp"

using namespace pseq;

namespace {

CheckResult run(const std::string& text) { return check_script(parse_proof(text)); }

ProofScript flip_hyps(ProofScript s) {
  for (auto& [name, id] : s.hyps) std::swap(id.first, id.second);
  return s;
}

const char* kOneVar = R"(
# x = x x^w from the idempotency hypothesis
sig semigroup
hyp h: x=xx
step b = hyp h
step i1 = ihyp gives x=xx^k
step i2 = hyp h ctx _x^k
step i3 = trans i1 i2
step ind = induction base=b step=i3 gives x=xx^k
step lim = limit ind
goal: x=xx^w
)";

const char* kChain = R"(
sig monoid
hyp h1: (xy)^wx=(xy)^w
hyp h2: y(xy)^w=(xy)^w
step a = hyp h2 gives y(xy)^w=(xy)^w
step b = sym a
step c = ambient A6 subst x->y, y->x, a->w gives (yx)^wy=y(xy)^w
step d = sym c
step e = hyp h1 subst x->y, y->x gives (yx)^wy=(yx)^w
step f = trans b d e
goal: (xy)^w=(yx)^w
)";

}  // namespace

TEST_CASE("idempotent hypothesis yields x = x x^w by induction and limit") {
  CheckResult r = run(kOneVar);
  CHECK(r.ok);
  REQUIRE(r.claims.size() == 6);
  CHECK(r.claims[0].first == "b");
  CHECK(render(normalize_ambient(r.claims[5].second.second, Sig::semigroup)) ==
        "x^(w+1)");
}

TEST_CASE("sym, trans and an ambient schema chain two hypotheses") {
  CheckResult r = run(kChain);
  CHECK(r.ok);
  CHECK(r.reason.empty());
}

TEST_CASE("refl cannot claim distinct sides") {
  CheckResult direct = run("sig monoid\nstep s1 = refl x gives x=y\ngoal: x=y\n");
  CHECK_FALSE(direct.ok);
  CHECK(direct.step_id == "s1");
  CheckResult unproved = run("sig monoid\nstep s1 = refl x\ngoal: x=y\n");
  CHECK_FALSE(unproved.ok);
  CHECK(unproved.step_id == "goal");
}

TEST_CASE("gives accepts either orientation and pins the claim") {
  CheckResult r = run(
      "sig monoid\nhyp h: x=xx\nstep a = hyp h gives xx=x\ngoal: xx=x\n");
  CHECK(r.ok);
  REQUIRE(r.claims.size() == 1);
  CHECK(render(r.claims[0].second.first) == "xx");
  CheckResult bad = run(
      "sig monoid\nhyp h: x=xx\nstep a = hyp h gives x=xxx\ngoal: x=xxx\n");
  CHECK_FALSE(bad.ok);
  CHECK(bad.step_id == "a");
}

TEST_CASE("flipping every hypothesis of a pinned script preserves acceptance") {
  ProofScript one = parse_proof(
      "sig semigroup\nhyp h: x=xx\nstep b = hyp h gives x=xx\n"
      "step i1 = ihyp gives x=xx^k\nstep i2 = hyp h ctx _x^k gives "
      "xx^k=xxx^k\nstep i3 = trans i1 i2\n"
      "step ind = induction base=b step=i3 gives x=xx^k\n"
      "step lim = limit ind\ngoal: x=xx^w\n");
  CHECK(check_script(one).ok);
  CHECK(check_script(flip_hyps(one)).ok);
  ProofScript chain = parse_proof(kChain);
  CHECK(check_script(chain).ok);
  CHECK(check_script(flip_hyps(chain)).ok);
}

TEST_CASE("undischarged induction hypotheses block limits, goals and bases") {
  CheckResult lim = run(
      "sig semigroup\nhyp h: x=xx\nstep i1 = ihyp gives x=xx^k\n"
      "step l = limit i1\ngoal: x=xx^w\n");
  CHECK_FALSE(lim.ok);
  CHECK(lim.step_id == "l");
  CheckResult ins = run(
      "sig semigroup\nhyp h: x=xx\nstep i1 = ihyp gives x=xx^k\n"
      "step l = inst i1 n=2\ngoal: x=xxx\n");
  CHECK_FALSE(ins.ok);
  CHECK(ins.step_id == "l");
  // A schematic goal matching only the bare induction hypothesis is unproved.
  CheckResult goal = run(
      "sig semigroup\nhyp h: x=xx\nstep i1 = ihyp gives x=xx^k\n"
      "goal: x=xx^k\n");
  CHECK_FALSE(goal.ok);
  CHECK(goal.step_id == "goal");
  // Smuggling the induction hypothesis into the base is circular.
  CheckResult circ = run(
      "sig semigroup\nhyp h: x=xx\nstep b0 = hyp h\n"
      "step i1 = ihyp gives x=xx^k\nstep w1 = sym i1\nstep w2 = trans i1 w1\n"
      "step b = trans w2 b0\nstep i2 = hyp h ctx _x^k\nstep i3 = trans i1 i2\n"
      "step ind = induction base=b step=i3 gives x=xx^k\n"
      "step lim = limit ind\ngoal: x=xx^w\n");
  CHECK_FALSE(circ.ok);
  CHECK(circ.step_id == "ind");
  CHECK(circ.reason.find("base") != std::string::npos);
}

TEST_CASE("induction demands matching base and step instances") {
  CheckResult base = run(
      "sig semigroup\nhyp h: x=xxx\nstep b = hyp h\n"
      "step i1 = ihyp gives x=xx^k\nstep i2 = hyp h ctx _x^k\n"
      "step i3 = trans i1 i2\n"
      "step ind = induction base=b step=i3 gives x=xx^k\n"
      "step lim = limit ind\ngoal: x=xx^w\n");
  CHECK_FALSE(base.ok);
  CHECK(base.step_id == "ind");
  CheckResult step = run(
      "sig semigroup\nhyp h: x=xx\nstep b = hyp h\n"
      "step i1 = ihyp gives x=xx^k\n"
      "step ind = induction base=b step=i1 gives x=xx^k\n"
      "step lim = limit ind\ngoal: x=xx^w\n");
  CHECK_FALSE(step.ok);
  CHECK(step.step_id == "ind");
}

TEST_CASE("instantiation evaluates a schematic claim at a factorial") {
  CheckResult r = run(
      "sig semigroup\nhyp h: x=xx\nstep b = hyp h\n"
      "step i1 = ihyp gives x=xx^k\nstep i2 = hyp h ctx _x^k\n"
      "step i3 = trans i1 i2\n"
      "step ind = induction base=b step=i3 gives x=xx^k\n"
      "step two = inst ind n=2\ngoal: x=xxx\n");
  CHECK(r.ok);
}

TEST_CASE("ambient instances") {
  std::map<char, TermPtr> none;
  std::map<char, ExpVal> ab{{'a', ExpVal{Exponent::omega_plus(0)}},
                            {'b', ExpVal{Exponent::finite(1)}}};
  Identity a3 = ambient_instance("A3", none, ab);
  CHECK(render(normalize_ambient(a3.first, Sig::monoid)) == "x^(w+1)");
  CHECK(render(normalize_ambient(a3.second, Sig::monoid)) == "x^(w+1)");
  std::map<char, ExpVal> two_w{{'a', ExpVal{Exponent::finite(2)}},
                               {'b', ExpVal{Exponent::omega_plus(0)}}};
  Identity a4 = ambient_instance("A4", none, two_w);
  CHECK(render(normalize_ambient(a4.first, Sig::monoid)) == "x^w");
  CHECK(render(normalize_ambient(a4.second, Sig::monoid)) == "x^w");
  std::map<char, TermPtr> sub{
      {'x', parse_term("(xy)^wx", Sig::monoid)},
      {'y', parse_term("(xy)^w", Sig::monoid)}};
  std::map<char, ExpVal> w{{'a', ExpVal{Exponent::omega_plus(0)}}};
  Identity a6 = ambient_instance("A6", sub, w);
  CHECK(render(normalize_ambient(a6.first, Sig::monoid)) ==
        "((xy)^wx(xy)^w)^w(xy)^wx");
  CHECK_THROWS_AS(ambient_instance("A3", none, {}), ProofError);
  CHECK_THROWS_AS(
      ambient_instance("A3", {{'z', parse_term("x", Sig::monoid)}}, ab),
      ProofError);
  CHECK(ambient_schemas().size() == 3);
}

TEST_CASE("every ambient schema holds in every catalog monoid") {
  std::map<char, TermPtr> none;
  std::vector<Identity> instances;
  for (auto a : {ExpVal{Exponent::finite(2)}, ExpVal{Exponent::omega_plus(-1)}})
    for (auto b : {ExpVal{Exponent::finite(3)}, ExpVal{Exponent::omega_plus(1)}}) {
      instances.push_back(ambient_instance("A3", none, {{'a', a}, {'b', b}}));
      instances.push_back(ambient_instance("A4", none, {{'a', a}, {'b', b}}));
      instances.push_back(ambient_instance("A6", none, {{'a', a}}));
    }
  for (const auto& S : catalog()) {
    FinSemigroup M = adjoin_identity(S);
    for (const auto& [l, r] : instances) CHECK(satisfies(M, l, r));
  }
}

TEST_CASE("iterate macro expands to an accepted induction") {
  CheckResult r = run(
      "sig semigroup\nhyp h: x=xx\nstep src = hyp h\n"
      "step it = iterate src gives x=xx^k\nstep lim = limit it\n"
      "goal: x=xx^w\n");
  REQUIRE_MESSAGE(r.ok, (r.step_id + ": " + r.reason));
  // Two-sided recurrence: u = AuB with both contexts nonempty.
  CheckResult two = run(
      "sig semigroup\nhyp h: y=xyyx\nstep src = hyp h\n"
      "step it = iterate src\nstep lim = limit it\n"
      "goal: y=x^wy(yx)^w\n");
  REQUIRE_MESSAGE(two.ok, (two.step_id + ": " + two.reason));
  // A flipped gives clause flips the final claim.
  CheckResult flipped = run(
      "sig semigroup\nhyp h: x=xx\nstep src = hyp h\n"
      "step it = iterate src gives xx^k=x\nstep lim = limit it\n"
      "goal: xx^w=x\n");
  REQUIRE_MESSAGE(flipped.ok, (flipped.step_id + ": " + flipped.reason));
}

TEST_CASE("mulside macro multiplies claims side by side") {
  CheckResult r = run(
      "sig monoid\nhyp h1: x=xx\nhyp h2: y=yy\nstep a = hyp h1\n"
      "step b = hyp h2\nstep m = mulside a b\ngoal: xy=xxyy\n");
  REQUIRE_MESSAGE(r.ok, (r.step_id + ": " + r.reason));
}

TEST_CASE("expanded macro scripts replay as primitive scripts") {
  for (const char* text :
       {"sig semigroup\nhyp h: x=xx\nstep src = hyp h\n"
        "step it = iterate src gives x=xx^k\nstep lim = limit it\n"
        "goal: x=xx^w\n",
        "sig monoid\nhyp h1: x=xx\nhyp h2: y=yy\nstep a = hyp h1\n"
        "step b = hyp h2\nstep m = mulside a b\ngoal: xy=xxyy\n"}) {
    CheckResult r = run(text);
    REQUIRE(r.ok);
    for (const auto& st : r.expanded.steps) {
      CHECK(st.kind != StepKind::iterate);
      CHECK(st.kind != StepKind::mulside);
    }
    CheckResult replay = check_script(parse_proof(render_proof(r.expanded)));
    REQUIRE_MESSAGE(replay.ok, (replay.step_id + ": " + replay.reason));
  }
}

TEST_CASE("macro rejection points at the macro line") {
  CheckResult r = run(
      "sig semigroup\nhyp h: xy=yx\nstep src = hyp h\n"
      "step it = iterate src\nstep lim = limit it\ngoal: xy=yx\n");
  CHECK_FALSE(r.ok);
  CHECK(r.step_id == "it");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_proof("hyp h: x=xx\ngoal: x=x\n"), ProofError);
  CHECK_THROWS_AS(parse_proof("sig monoid\nstep a = refl x\nstep a = refl x\n"
                              "goal: x=x\n"),
                  ProofError);
  CHECK_THROWS_AS(parse_proof("sig monoid\nhyp h: x=xx^k\ngoal: x=x\n"),
                  ProofError);
  CHECK_THROWS_AS(parse_proof("sig monoid\nstep a = refl x\n"), ProofError);
  CHECK_THROWS_AS(parse_proof("sig monoid\nstep a = frobnicate x\ngoal: x=x\n"),
                  ProofError);
  CHECK_THROWS_AS(parse_proof("sig monoid\nstep a = ihyp\ngoal: x=x\n"),
                  ProofError);
  CHECK_THROWS_AS(parse_proof("sig semigroup\nstep a = refl 1\ngoal: x=x\n"),
                  ProofError);
}

TEST_CASE("check rejections carry the failing step") {
  CheckResult unknown_hyp =
      run("sig monoid\nstep a = hyp nope\ngoal: x=x\n");
  CHECK_FALSE(unknown_hyp.ok);
  CHECK(unknown_hyp.step_id == "a");
  CheckResult unknown_ref = run("sig monoid\nstep a = sym zzz\ngoal: x=x\n");
  CHECK_FALSE(unknown_ref.ok);
  CHECK(unknown_ref.step_id == "a");
  CheckResult mismatch = run(
      "sig monoid\nhyp h1: x=xy\nhyp h2: yx=x\nstep a = hyp h1\n"
      "step b = hyp h2\nstep t = trans a b\ngoal: x=x\n");
  CHECK_FALSE(mismatch.ok);
  CHECK(mismatch.step_id == "t");
}

TEST_CASE("audit confirms accepted scripts over a pool") {
  ProofScript one = parse_proof(kOneVar);
  std::vector<FinSemigroup> pool;
  for (int n = 1; n <= 3; ++n)
    for (auto& M : enumerate_monoids(n)) pool.push_back(std::move(M));
  pool.push_back(resolve_semigroup("Sl2"));
  pool.push_back(resolve_semigroup("B(2,2)"));
  pool.push_back(resolve_semigroup("Z4"));
  AuditReport rep = audit_soundness(one, pool);
  CHECK(rep.violations.empty());
  CHECK(rep.models_used > 0);
  CHECK(rep.checks > 0);
  AuditReport chain = audit_soundness(parse_proof(kChain), pool);
  CHECK(chain.violations.empty());
  CHECK(chain.models_used > 0);
  ProofScript rejected = parse_proof("sig monoid\nstep a = refl x\ngoal: x=y\n");
  CHECK_THROWS_AS(audit_soundness(rejected, pool), ProofError);
}

TEST_CASE("default audit pool covers small monoids and the catalog") {
  std::vector<FinSemigroup> mon = audit_pool(Sig::monoid);
  std::vector<FinSemigroup> sem = audit_pool(Sig::semigroup);
  CHECK(mon.size() > 40);
  CHECK(sem.size() == mon.size() + catalog().size());
  for (const auto& S : mon)
    if (S.name().rfind("M", 0) == 0) CHECK(S.is_monoid());
}
