// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "rees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace pseq {

namespace {

void check_rees(const ReesMatrix& R) {
  if (R.I < 1 || R.Lambda < 1) throw ReesError("index sets must be nonempty");
  if (!is_group(R.G)) throw ReesError("structure group is not a group");
  if ((int)R.P.size() != R.Lambda) throw ReesError("sandwich matrix has wrong row count");
  for (const auto& row : R.P) {
    if ((int)row.size() != R.I) throw ReesError("sandwich matrix has wrong column count");
    for (int g : row)
      if (g < 0 || g >= R.G.size()) throw ReesError("sandwich entry out of range");
  }
}

// Identity-containing subsets closed under product are subgroups (finite).
bool is_subgroup(const FinSemigroup& G, const std::vector<int>& N) {
  if (N.empty()) return false;
  std::set<int> s(N.begin(), N.end());
  if (!s.count(*G.identity())) return false;
  for (int a : N)
    for (int b : N)
      if (!s.count(G.op(a, b))) return false;
  return true;
}

}  // namespace

bool is_group(const FinSemigroup& S) {
  // A finite semigroup is a group iff its table is a Latin square.
  int n = S.size();
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[S.op(a, b)] = 1;
      col[S.op(b, a)] = 1;
    }
    for (int c = 0; c < n; ++c)
      if (!row[c] || !col[c]) return false;
  }
  return n > 0;
}

int group_inverse(const FinSemigroup& G, int g) {
  auto e = G.identity();
  if (!e || !is_group(G)) throw SgError("inverse requires a group");
  for (int h = 0; h < G.size(); ++h)
    if (G.op(g, h) == *e) return h;
  throw SgError("no inverse found");
}

bool is_normal_subgroup(const FinSemigroup& G, const std::vector<int>& N) {
  if (!is_group(G)) throw SgError("normality requires a group");
  if (!is_subgroup(G, N)) return false;
  std::set<int> s(N.begin(), N.end());
  for (int g = 0; g < G.size(); ++g) {
    int gi = group_inverse(G, g);
    for (int n : N)
      if (!s.count(G.op(G.op(g, n), gi))) return false;
  }
  return true;
}

std::vector<std::vector<int>> normal_subgroups(const FinSemigroup& G) {
  if (!is_group(G)) throw SgError("normal subgroups require a group");
  int n = G.size();
  if (n > 12) throw SgError("group too large for subgroup enumeration");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> N;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) N.push_back(i);
    if (N.empty()) continue;
    if (is_subgroup(G, N) && is_normal_subgroup(G, N)) out.push_back(N);
  }
  return out;
}

bool rees_normalized(const ReesMatrix& R) {
  check_rees(R);
  int e = *R.G.identity();
  for (int l = 0; l < R.Lambda; ++l)
    if (R.P[l][0] != e) return false;
  for (int i = 0; i < R.I; ++i)
    if (R.P[0][i] != e) return false;
  return true;
}

ReesMatrix normalize_rees(const ReesMatrix& R) {
  check_rees(R);
  // Row and column scaling: p'(l,i) = p(l,0)^-1 p(l,i) p(0,i)^-1 p(0,0).
  ReesMatrix out = R;
  const auto& G = R.G;
  int p00 = R.P[0][0];
  for (int l = 0; l < R.Lambda; ++l) {
    int rl = group_inverse(G, R.P[l][0]);
    for (int i = 0; i < R.I; ++i) {
      int ci = group_inverse(G, R.P[0][i]);
      out.P[l][i] = G.op(G.op(rl, R.P[l][i]), G.op(ci, p00));
    }
  }
  return out;
}

int rees_index(const ReesMatrix& R, int i, int g, int l) {
  return (i * R.G.size() + g) * R.Lambda + l;
}

FinSemigroup build_rees(const ReesMatrix& R) {
  check_rees(R);
  const auto& G = R.G;
  int n = R.I * G.size() * R.Lambda;
  std::vector<std::string> names(n);
  for (int i = 0; i < R.I; ++i)
    for (int g = 0; g < G.size(); ++g)
      for (int l = 0; l < R.Lambda; ++l)
        names[rees_index(R, i, g, l)] = "(" + std::to_string(i + 1) + "," +
                                        G.elem_name(g) + "," +
                                        std::to_string(l + 1) + ")";
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < R.I; ++i)
    for (int g = 0; g < G.size(); ++g)
      for (int l = 0; l < R.Lambda; ++l)
        for (int j = 0; j < R.I; ++j)
          for (int h = 0; h < G.size(); ++h)
            for (int m = 0; m < R.Lambda; ++m) {
              int prod = G.op(G.op(g, R.P[l][j]), h);
              table[rees_index(R, i, g, l)][rees_index(R, j, h, m)] =
                  rees_index(R, i, prod, m);
            }
  std::string nm = "M(" + std::to_string(R.I) + "," + G.name() + "," +
                   std::to_string(R.Lambda) + ")";
  return FinSemigroup::from_table(nm, names, table);
}

bool triple_valid(const ReesMatrix& R, const CongruenceTriple& t) {
  check_rees(R);
  if ((int)t.rho1.size() != R.I || (int)t.rho2.size() != R.Lambda)
    throw ReesError("triple partition sizes do not match index sets");
  if (!is_normal_subgroup(R.G, t.N)) return false;
  const auto& G = R.G;
  std::set<int> N(t.N.begin(), t.N.end());
  auto same_coset = [&](int a, int b) {
    return N.count(G.op(group_inverse(G, a), b)) > 0;
  };
  for (int i = 0; i < R.I; ++i)
    for (int j = i + 1; j < R.I; ++j) {
      if (t.rho1[i] != t.rho1[j]) continue;
      for (int l = 0; l < R.Lambda; ++l)
        if (!same_coset(R.P[l][i], R.P[l][j])) return false;
    }
  for (int l = 0; l < R.Lambda; ++l)
    for (int m = l + 1; m < R.Lambda; ++m) {
      if (t.rho2[l] != t.rho2[m]) continue;
      for (int i = 0; i < R.I; ++i)
        if (!same_coset(R.P[l][i], R.P[m][i])) return false;
    }
  return true;
}

std::vector<int> congruence_from_triple(const ReesMatrix& R,
                                        const CongruenceTriple& t) {
  if (!triple_valid(R, t)) throw ReesError("triple is not valid");
  const auto& G = R.G;
  // Left-coset id of g: minimal element of gN.
  std::vector<int> coset(G.size());
  for (int g = 0; g < G.size(); ++g) {
    int best = G.size();
    for (int n : t.N) best = std::min(best, G.op(g, n));
    coset[g] = best;
  }
  int n = R.I * G.size() * R.Lambda;
  std::vector<int> rho(n);
  std::map<std::tuple<int, int, int>, int> ids;
  for (int i = 0; i < R.I; ++i)
    for (int g = 0; g < G.size(); ++g)
      for (int l = 0; l < R.Lambda; ++l) {
        std::tuple<int, int, int> key{t.rho1[i], coset[g], t.rho2[l]};
        auto it = ids.find(key);
        int id = it == ids.end() ? (ids[key] = (int)ids.size()) : it->second;
        rho[rees_index(R, i, g, l)] = id;
      }
  return normalize_partition(rho);
}

CongruenceTriple triple_from_congruence(const ReesMatrix& R,
                                        const std::vector<int>& rho) {
  if (!rees_normalized(R))
    throw ReesError("triple extraction requires a normalized sandwich matrix");
  FinSemigroup S = build_rees(R);
  if ((int)rho.size() != S.size() || !is_congruence(S, rho))
    throw ReesError("relation is not a congruence");
  const auto& G = R.G;
  int e = *G.identity();
  CongruenceTriple t;
  std::vector<int> r1(R.I), r2(R.Lambda);
  for (int i = 0; i < R.I; ++i) r1[i] = rho[rees_index(R, i, e, 0)];
  for (int l = 0; l < R.Lambda; ++l) r2[l] = rho[rees_index(R, 0, e, l)];
  t.rho1 = normalize_partition(r1);
  t.rho2 = normalize_partition(r2);
  int base = rho[rees_index(R, 0, e, 0)];
  for (int g = 0; g < G.size(); ++g)
    if (rho[rees_index(R, 0, g, 0)] == base) t.N.push_back(g);
  return t;
}

std::vector<CongruenceTriple> enumerate_triples(const ReesMatrix& R) {
  check_rees(R);
  auto p1 = all_partitions(R.I);
  auto p2 = all_partitions(R.Lambda);
  auto ns = normal_subgroups(R.G);
  std::vector<CongruenceTriple> out;
  for (const auto& a : p1)
    for (const auto& b : p2)
      for (const auto& N : ns) {
        CongruenceTriple t{a, b, N};
        if (triple_valid(R, t)) out.push_back(t);
      }
  return out;
}

}  // namespace pseq
