// Random constant-exponent term generator shared by the decider tests and
// the acceptance checks.  Exponent ranges: finite 0..6, omega offsets -4..4.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "term.hpp"

namespace pseq_testing {

inline pseq::Exponent random_exponent(std::mt19937& rng, pseq::Sig sig) {
  using pseq::Exponent;
  if (rng() % 2) {
    int lo = sig == pseq::Sig::monoid ? 0 : 1;
    return Exponent::finite(lo + (int)(rng() % (size_t)(7 - lo)));
  }
  return Exponent::omega_plus((int)(rng() % 9) - 4);
}

// Depth-bounded random term over letters x, y, z (first max_letters of them).
inline pseq::TermPtr random_const_term(std::mt19937& rng, int max_letters,
                                       int depth, pseq::Sig sig) {
  using namespace pseq;
  const char letters[3] = {'x', 'y', 'z'};
  int pick = (int)(rng() % 10);
  if (depth == 0 || pick < 4) {
    if (sig == Sig::monoid && pick == 0) return Term::make_unit();
    return Term::make_letter(letters[rng() % (size_t)max_letters]);
  }
  if (pick < 7) {
    int width = 2 + (int)(rng() % 2);
    std::vector<TermPtr> parts;
    for (int i = 0; i < width; ++i)
      parts.push_back(random_const_term(rng, max_letters, depth - 1, sig));
    return Term::make_concat(std::move(parts));
  }
  TermPtr base = random_const_term(rng, max_letters, depth - 1, sig);
  // avoid 1^e and x^0 in the semigroup signature
  if (base->kind() == NodeKind::unit)
    base = Term::make_letter(letters[rng() % (size_t)max_letters]);
  return Term::make_power(base, ExpVal{random_exponent(rng, sig)});
}

// A term with the same letter totals: concat parts shuffled recursively.
inline pseq::TermPtr commutative_shuffle(std::mt19937& rng,
                                         const pseq::TermPtr& t) {
  using namespace pseq;
  switch (t->kind()) {
    case NodeKind::letter:
    case NodeKind::unit:
    case NodeKind::hole:
      return t;
    case NodeKind::power:
      return Term::make_power(commutative_shuffle(rng, t->base()), t->exp());
    case NodeKind::concat: {
      std::vector<TermPtr> parts;
      for (const auto& p : t->parts()) parts.push_back(commutative_shuffle(rng, p));
      std::shuffle(parts.begin(), parts.end(), rng);
      return Term::make_concat(std::move(parts));
    }
  }
  throw TermError("unreachable");
}

// A term with the same reduced group word: appends cancelling pairs and
// splits an omega exponent off the end.
inline pseq::TermPtr group_equal_variant(std::mt19937& rng,
                                         const pseq::TermPtr& t) {
  using namespace pseq;
  const char letters[3] = {'x', 'y', 'z'};
  TermPtr out = t;
  int form = (int)(rng() % 3);
  TermPtr c = Term::make_letter(letters[rng() % 3]);
  TermPtr inv = Term::make_power(c, ExpVal{Exponent::omega_plus(-1)});
  if (form == 0) out = Term::make_concat({out, c, inv});
  else if (form == 1) out = Term::make_concat({inv, c, out});
  else {
    TermPtr w = Term::make_power(c, ExpVal{Exponent::omega_plus(0)});
    out = Term::make_concat({out, w});
  }
  return out;
}

}  // namespace pseq_testing
