// Terms over a finite alphabet with constant and schematic exponents:
// parsing, rendering, normalization, substitution, contexts, and the
// letter-content views used by the identity deciders.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "exponent.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pseq {

// Thrown for malformed input, signature violations, and values that fall
// outside the representable term domain.
struct TermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exponent position holds either a constant or a schematic exponent.
// Constant-valued schematic exponents are collapsed to the Exponent
// alternative by normalization, so the SymExponent alternative always
// carries a genuine occurrence of the parameter.
using ExpVal = std::variant<Exponent, SymExponent>;

enum class NodeKind { letter, unit, concat, power, hole };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable syntax node.  Concat parts are in left-to-right order; the
// constructors do not normalize.
class Term {
 public:
  static TermPtr make_letter(char c);
  static TermPtr make_unit();
  static TermPtr make_concat(std::vector<TermPtr> parts);
  static TermPtr make_power(TermPtr base, ExpVal e);
  static TermPtr make_hole();

  NodeKind kind() const { return kind_; }
  char letter() const { return letter_; }
  const std::vector<TermPtr>& parts() const { return parts_; }
  const TermPtr& base() const { return parts_[0]; }
  const ExpVal& exp() const { return exp_; }

 private:
  Term() = default;
  NodeKind kind_ = NodeKind::unit;
  char letter_ = 0;
  std::vector<TermPtr> parts_;  // concat parts, or the power base at [0]
  ExpVal exp_ = Exponent::finite(1);
};

bool expval_equal(const ExpVal& a, const ExpVal& b);
bool term_equal(const TermPtr& a, const TermPtr& b);

// Exponent arithmetic lifted to ExpVal; results that lose the parameter
// collapse back to the constant alternative.
ExpVal expval_add(const ExpVal& a, const ExpVal& b);
ExpVal expval_mul(const ExpVal& a, const ExpVal& b);
std::string render(const ExpVal& e);

// Concrete syntax.  term := factor+, factor := atom ['^' exp],
// atom := letter | '1' | '(' term ')' | '_', exp := nat | 'w' | 'k' |
// '(' sum-of-products over nat, w, k ')'.  Letters are single lowercase
// characters other than the reserved w and k; whitespace is ignored.
// The parse validates against the signature: '1' and exponent 0 need the
// monoid signature, and schematic exponents must be eventually valid.
TermPtr parse_term(const std::string& src, Sig sig);
std::string render(const TermPtr& t);
// Parses a bare exponent expression (same grammar as after '^').
ExpVal parse_expval(const std::string& src, Sig sig);

// Rewrites to the ambient normal form: flatten products, drop units,
// collapse nested powers by multiplying exponents, erase exponent 1, turn
// exponent 0 into the unit, and merge adjacent factors with equal bases by
// adding exponents.  Idempotent and evaluation-preserving.
TermPtr normalize_ambient(TermPtr t, Sig sig);

// Letter-for-term substitution followed by normalization.  Letters absent
// from the map are kept.
TermPtr substitute(const TermPtr& t, const std::map<char, TermPtr>& sub, Sig sig);

// Replaces every hole of the context by t and normalizes.
TermPtr plug(const TermPtr& ctx, const TermPtr& t, Sig sig);
int count_holes(const TermPtr& t);

bool is_schematic(const TermPtr& t);
std::set<char> letters(const TermPtr& t);

// Replaces nu by n! / by its limit value in every schematic exponent,
// then normalizes.  term_shift replaces nu by nu+1 and needs no
// renormalization because merging structure is unchanged.
TermPtr term_inst(const TermPtr& t, int n, Sig sig);
TermPtr term_limit(const TermPtr& t, Sig sig);
TermPtr term_shift(const TermPtr& t);
// Smallest n from which every schematic exponent of t instantiates to a
// valid exponent of the signature.
int term_n0(const TermPtr& t, Sig sig);

// Letters in order of first occurrence, scanning left-to-right or
// right-to-left; a power base is visited once when its exponent is
// nonzero.  Ground terms only.
std::vector<char> first_occurrence_order(const TermPtr& t, bool left_to_right);

// Total exponent of each letter: the sum over occurrences of the product
// of enclosing exponents.  In the monoid signature letters with total 0
// are dropped.  Ground terms only.
std::map<char, Exponent> com_vector(const TermPtr& t, Sig sig);

// The reduced free-group word of a ground term, with omega+z acting as
// the z-th power.  Pairs are (letter, nonzero integer exponent) with
// adjacent letters distinct.
std::vector<std::pair<char, int>> group_word(const TermPtr& t);

}  // namespace pseq
