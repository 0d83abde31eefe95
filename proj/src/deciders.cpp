// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "deciders.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

namespace pseq {

GroupWord to_group_word(const TermPtr& t) { return group_word(t); }

bool decide_group(const TermPtr& u, const TermPtr& v) {
  return group_word(u) == group_word(v);
}

bool decide_com(const TermPtr& u, const TermPtr& v, Sig sig) {
  return com_vector(u, sig) == com_vector(v, sig);
}

namespace {

// Closure of a generating set of permutations under composition.
FinSemigroup perm_group(const std::string& name,
                        std::vector<std::vector<int>> gens) {
  size_t deg = gens.at(0).size();
  std::vector<int> id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = (int)i;
  std::vector<std::vector<int>> elems{id};
  std::set<std::vector<int>> seen{id};
  for (size_t at = 0; at < elems.size(); ++at)
    for (const auto& g : gens) {
      std::vector<int> next(deg);
      for (size_t i = 0; i < deg; ++i) next[i] = elems[at][(size_t)g[i]];
      if (seen.insert(next).second) elems.push_back(next);
    }
  auto pname = [](const std::vector<int>& p) {
    std::string s = "[";
    for (int v : p) s += std::to_string(v);
    return s + "]";
  };
  int n = (int)elems.size();
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(pname(p));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(deg);
      for (size_t i = 0; i < deg; ++i) c[i] = elems[a][(size_t)elems[b][i]];
      std::vector<std::vector<int>>::const_iterator it =
          std::find(elems.begin(), elems.end(), c);
      t[a][b] = (int)(it - elems.begin());
    }
  return FinSemigroup::from_table(name, names, t);
}

}  // namespace

FinSemigroup make_dihedral4() {
  // rotation (0 1 2 3) and the reflection fixing 0 and 2
  return perm_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

FinSemigroup make_alt4() {
  // a 3-cycle and a double transposition
  return perm_group("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

FinSemigroup make_sym4() {
  return perm_group("S4", {{1, 0, 2, 3}, {1, 2, 3, 0}});
}

FinSemigroup make_quaternion8() {
  // elements s*b with sign s and basis b in {1,i,j,k}; index = sign*4 + basis
  // basis products with sign: i*i = -1, i*j = k, j*k = i, k*i = j
  static const int bprod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int bsign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* bn[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int s = 0; s < 2; ++s)
    for (int b = 0; b < 4; ++b)
      names.push_back(std::string(s ? "-" : "") + bn[b]);
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a / 4, ba = a % 4, sb = b / 4, bb = b % 4;
      int sign = (sa + sb + bsign[ba][bb]) % 2;
      t[a][b] = sign * 4 + bprod[ba][bb];
    }
  return FinSemigroup::from_table("Q8", names, t);
}

std::vector<FinSemigroup> group_check_pool() {
  std::vector<FinSemigroup> v;
  for (int n = 2; n <= 6; ++n) v.push_back(make_cyclic_group(n));
  v.push_back(make_sym3());
  v.push_back(make_dihedral4());
  v.push_back(make_quaternion8());
  return v;
}

std::vector<FinSemigroup> group_search_pool() {
  std::vector<FinSemigroup> v;
  for (int n = 2; n <= 8; ++n) v.push_back(make_cyclic_group(n));
  v.push_back(make_sym3());
  v.push_back(make_dihedral4());
  v.push_back(make_quaternion8());
  v.push_back(make_alt4());
  v.push_back(make_sym4());
  std::stable_sort(v.begin(), v.end(),
                   [](const FinSemigroup& a, const FinSemigroup& b) {
                     return a.size() < b.size();
                   });
  return v;
}

std::vector<FinSemigroup> com_check_pool() {
  std::vector<FinSemigroup> singles;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n)
      singles.push_back(adjoin_identity(make_mono_cyclic(m, n)));
  std::vector<FinSemigroup> v = singles;
  for (size_t i = 0; i < singles.size(); ++i)
    for (size_t j = i; j < singles.size(); ++j)
      v.push_back(direct_product(singles[i], singles[j]));
  return v;
}

std::vector<FinSemigroup> com_search_pool() {
  auto v = com_check_pool();
  std::stable_sort(v.begin(), v.end(),
                   [](const FinSemigroup& a, const FinSemigroup& b) {
                     return a.size() < b.size();
                   });
  return v;
}

namespace {

std::optional<Witness> search(const std::vector<FinSemigroup>& pool,
                              const TermPtr& u, const TermPtr& v) {
  for (const auto& S : pool)
    if (auto cx = find_counterexample(S, u, v)) return Witness{S, *cx};
  return std::nullopt;
}

}  // namespace

std::optional<Witness> find_group_witness(const TermPtr& u, const TermPtr& v) {
  return search(group_search_pool(), u, v);
}

std::optional<Witness> find_com_witness(const TermPtr& u, const TermPtr& v) {
  return search(com_search_pool(), u, v);
}

}  // namespace pseq
