// Decision procedures for constant omega-terms over two classical
// pseudovarieties: all finite groups (free group reduction) and commutative
// monoids (letterwise exponent totals).  Both are exact; the finite pools
// here exist only to cross-validate them by model checking.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>

#include "semigroup.hpp"
#include "term.hpp"

namespace pseq {

// Freely reduced group word: letters with nonzero integer exponents,
// adjacent entries on distinct letters.
using GroupWord = std::vector<std::pair<char, int>>;

// Omega exponents lose their omega part (s^w = 1 in a group), so OmegaPlus(z)
// contributes z and Finite(n) contributes n; the result is freely reduced.
// Throws on symbolic exponents.
GroupWord to_group_word(const TermPtr& t);

// Valid in every finite group iff both sides reduce to the same group word.
bool decide_group(const TermPtr& u, const TermPtr& v);

// Valid in every finite commutative monoid (or semigroup, per sig) iff the
// letter totals agree; com_vector drops Finite(0) totals under the monoid
// signature so absent letters compare equal to letters with vanishing total.
bool decide_com(const TermPtr& u, const TermPtr& v, Sig sig = Sig::monoid);

// Model-checking pools used to cross-validate the deciders.  They bound the
// tests, not the procedures.
std::vector<FinSemigroup> group_check_pool();   // soundness: C2..C6, S3, D4, Q8
std::vector<FinSemigroup> group_search_pool();  // witnesses: up to S4
std::vector<FinSemigroup> com_check_pool();     // C(m,n)^1, m+n <= 6, and products
std::vector<FinSemigroup> com_search_pool();    // the same, smallest first

FinSemigroup make_dihedral4();
FinSemigroup make_quaternion8();
FinSemigroup make_alt4();
FinSemigroup make_sym4();

struct Witness {
  FinSemigroup S;
  std::map<char, int> assignment;
};

// First pool member (smallest first) with an assignment where u and v differ.
std::optional<Witness> find_group_witness(const TermPtr& u, const TermPtr& v);
std::optional<Witness> find_com_witness(const TermPtr& u, const TermPtr& v);

}  // namespace pseq
