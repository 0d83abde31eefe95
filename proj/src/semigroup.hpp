// Finite semigroups given by multiplication tables: construction, powers
// with omega exponents, term evaluation, identity checking, a catalog of
// standard examples, and exhaustive monoid enumeration.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pseq {

struct SgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite semigroup as a full multiplication table over indices 0..n-1.
// Construction verifies associativity and locates the identity if any.
class FinSemigroup {
 public:
  static FinSemigroup from_table(std::string name,
                                 std::vector<std::string> elem_names,
                                 std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int op(int a, int b) const { return table_[a][b]; }
  std::optional<int> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }
  const std::string& name() const { return name_; }
  const std::string& elem_name(int i) const { return elem_names_[i]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int element_index(const std::string& name) const;  // -1 when absent

  // s^e.  Finite exponents use binary powering; omega+z goes through the
  // index and period of s, never through repeated multiplication.
  int power(int s, Exponent e) const;
  // Smallest i with s^i in the cycle, and the cycle length.
  std::pair<int, int> index_period(int s) const;

 private:
  FinSemigroup() = default;
  std::string name_;
  std::vector<std::string> elem_names_;
  std::vector<std::vector<int>> table_;
  std::optional<int> identity_;
};

// Evaluates a ground term under an assignment of letters to elements.
// The unit and exponent 0 need an identity element.
int eval_term(const FinSemigroup& S, const TermPtr& t,
              const std::map<char, int>& assignment);

// Whether S satisfies u = v under every assignment of the joint alphabet.
bool satisfies(const FinSemigroup& S, const TermPtr& u, const TermPtr& v);
// The first failing assignment in odometer order, if any.
std::optional<std::map<char, int>> find_counterexample(const FinSemigroup& S,
                                                       const TermPtr& u,
                                                       const TermPtr& v);

// ---------------------------------------------------------------------------
// Catalog

FinSemigroup make_sl2();                      // two-element semilattice {e, z}
FinSemigroup make_rect_band(int m, int n);    // B(m,n): (i,j)(k,l) = (i,l)
FinSemigroup make_mono_cyclic(int m, int n);  // C(m,n): a with a^m = a^(m+n)
FinSemigroup make_cyclic_group(int n);        // Z_n
FinSemigroup make_klein4();                   // Z_2 x Z_2
FinSemigroup make_sym3();                     // symmetric group on 3 points
FinSemigroup make_b2();                       // 2x2 matrix units with zero
FinSemigroup make_nilpotent3();               // {a, b, ab, 0}, ab only nonzero product
FinSemigroup make_left_unit3();               // {e, a, 0}: ee=e, ea=a, ae=aa=0

// S with a fresh identity adjoined at index 0 (named "1").
FinSemigroup adjoin_identity(const FinSemigroup& S);

// Mirror image, pairwise product, and quotient by a congruence.
FinSemigroup opposite(const FinSemigroup& S);
FinSemigroup direct_product(const FinSemigroup& S, const FinSemigroup& T);
FinSemigroup quotient(const FinSemigroup& S, const std::vector<int>& partition);

// Partitions are class-id vectors in canonical form: ids numbered by first
// occurrence.  A congruence is a partition stable under both translations.
std::vector<int> normalize_partition(std::vector<int> p);
bool is_congruence(const FinSemigroup& S, const std::vector<int>& partition);
// Smallest congruence identifying a with b.
std::vector<int> principal_congruence(const FinSemigroup& S, int a, int b);
// Every congruence, as the join closure of the principal congruences.
// The guard bounds |S|; enumeration cost grows with the congruence lattice.
std::vector<std::vector<int>> enumerate_congruences(const FinSemigroup& S,
                                                    int guard = 12);
// All set partitions of {0..n-1} in canonical form, n <= 12.
std::vector<std::vector<int>> all_partitions(int n);

// The standard battery used by exclusion facts and audits.
std::vector<FinSemigroup> catalog();

// Resolves "Sl2", "B2", "N", "T", "B(m,n)", "C(m,n)", "Z<n>", "V4", "S3",
// each optionally suffixed with "^1" for an adjoined identity.
FinSemigroup resolve_semigroup(const std::string& name);

// Multiplication-table text: an "elems:" line of element names, then one
// line per row giving products by name.  '#' starts a comment line.
FinSemigroup parse_semigroup_table(const std::string& text, const std::string& name);
std::string render_semigroup_table(const FinSemigroup& S);

// All monoids of order n up to isomorphism, identity at index 0.
// Counts for n = 1..4: 1, 2, 7, 35.
std::vector<FinSemigroup> enumerate_monoids(int n);

}  // namespace pseq
