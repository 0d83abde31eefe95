// Rees matrix semigroups over finite groups and the triple form of their
// congruences: an equivalence on each index set plus a normal subgroup,
// linked through the sandwich matrix.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semigroup.hpp"

namespace pseq {

struct ReesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// M(I, G, Lambda, P): index sets of sizes I and Lambda, a finite group G,
// and a Lambda x I sandwich matrix of G elements.
struct ReesMatrix {
  int I;
  int Lambda;
  FinSemigroup G;
  std::vector<std::vector<int>> P;
};

// Congruence data: partitions of the two index sets (canonical class-id
// vectors) and a normal subgroup as a sorted list of G indices.
struct CongruenceTriple {
  std::vector<int> rho1;
  std::vector<int> rho2;
  std::vector<int> N;
};

bool is_group(const FinSemigroup& S);
// Inverse of a group element.
int group_inverse(const FinSemigroup& G, int g);
// All normal subgroups (each sorted), found by brute force; |G| <= 12.
std::vector<std::vector<int>> normal_subgroups(const FinSemigroup& G);
bool is_normal_subgroup(const FinSemigroup& G, const std::vector<int>& N);

// First row and first column of P all identity.
bool rees_normalized(const ReesMatrix& R);
// An equivalent Rees matrix with normalized P (row and column scaling).
ReesMatrix normalize_rees(const ReesMatrix& R);

// The semigroup on I x G x Lambda with (i,g,l)(j,h,m) = (i, g p_{l,j} h, m).
// Elements are ordered with l fastest, then g, then i; names "(i,g,l)"
// with 1-based indices.
FinSemigroup build_rees(const ReesMatrix& R);
// Element index of (i, g, l) in the build_rees ordering.
int rees_index(const ReesMatrix& R, int i, int g, int l);

// Checks normality of N and both sandwich-coset conditions:
// i ~1 j implies p_{l,i}N = p_{l,j}N, and l ~2 m implies p_{l,i}N = p_{m,i}N.
bool triple_valid(const ReesMatrix& R, const CongruenceTriple& t);

// The partition identifying (i,g,l) with (j,h,m) iff i ~1 j, l ~2 m, and
// gN = hN.  Requires a valid triple.
std::vector<int> congruence_from_triple(const ReesMatrix& R,
                                        const CongruenceTriple& t);

// Extracts the triple from a congruence via the coordinate-1 formulas;
// requires a normalized sandwich matrix.
CongruenceTriple triple_from_congruence(const ReesMatrix& R,
                                        const std::vector<int>& rho);

// All valid triples: partitions of I, partitions of Lambda, and normal
// subgroups, filtered by triple_valid.
std::vector<CongruenceTriple> enumerate_triples(const ReesMatrix& R);

}  // namespace pseq
