// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "semigroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace pseq {

FinSemigroup FinSemigroup::from_table(std::string name,
                                      std::vector<std::string> elem_names,
                                      std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw SgError("empty semigroup");
  if (elem_names.size() != table.size())
    throw SgError("element name count does not match the table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw SgError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw SgError("table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw SgError("not associative at (" + elem_names[a] + ", " +
                        elem_names[b] + ", " + elem_names[c] + ")");
  FinSemigroup S;
  S.name_ = std::move(name);
  S.elem_names_ = std::move(elem_names);
  S.table_ = std::move(table);
  for (int e = 0; e < n; ++e) {
    bool id = true;
    for (int x = 0; x < n && id; ++x)
      id = S.table_[e][x] == x && S.table_[x][e] == x;
    if (id) {
      S.identity_ = e;
      break;
    }
  }
  return S;
}

int FinSemigroup::element_index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elem_names_[i] == name) return i;
  return -1;
}

std::pair<int, int> FinSemigroup::index_period(int s) const {
  std::map<int, int> first;
  int cur = s, e = 1;
  while (!first.count(cur)) {
    first[cur] = e;
    cur = op(cur, s);
    ++e;
  }
  return {first[cur], e - first[cur]};
}

namespace {

int power_pos(const FinSemigroup& S, int s, long long n) {
  // binary powering; n >= 1
  int acc = -1;
  int sq = s;
  while (n > 0) {
    if (n & 1) acc = acc < 0 ? sq : S.op(acc, sq);
    n >>= 1;
    if (n > 0) sq = S.op(sq, sq);
  }
  return acc;
}

}  // namespace

int FinSemigroup::power(int s, Exponent e) const {
  if (e.finite_p()) {
    if (e.value() == 0) {
      if (!identity_) throw SgError("power 0 needs an identity element");
      return *identity_;
    }
    return power_pos(*this, s, e.value());
  }
  auto [idx, per] = index_period(s);
  // The cycle consists of s^m for m >= idx, with s^m depending only on
  // m mod per.  The idempotent power sits at the multiple of per in the
  // cycle, and omega+z shifts it by z places around the cycle.
  long long m0 = ((idx + per - 1) / per) * static_cast<long long>(per);
  long long r = ((m0 + e.value()) % per + per) % per;
  long long m = r < idx ? r + ((idx - r + per - 1) / per) * per : r;
  return power_pos(*this, s, m);
}

int eval_term(const FinSemigroup& S, const TermPtr& t,
              const std::map<char, int>& assignment) {
  switch (t->kind()) {
    case NodeKind::letter: {
      auto it = assignment.find(t->letter());
      if (it == assignment.end())
        throw SgError(std::string("unassigned letter ") + t->letter());
      return it->second;
    }
    case NodeKind::unit: {
      if (!S.identity()) throw SgError("the unit needs an identity element");
      return *S.identity();
    }
    case NodeKind::hole:
      throw SgError("contexts cannot be evaluated");
    case NodeKind::concat: {
      int acc = -1;
      for (const auto& p : t->parts()) {
        int v = eval_term(S, p, assignment);
        acc = acc < 0 ? v : S.op(acc, v);
      }
      return acc;
    }
    case NodeKind::power: {
      auto* x = std::get_if<Exponent>(&t->exp());
      if (!x) throw SgError("schematic terms cannot be evaluated");
      return S.power(eval_term(S, t->base(), assignment), *x);
    }
  }
  throw SgError("unreachable term kind");
}

namespace {

template <typename Fn>
std::optional<std::map<char, int>> scan_assignments(const FinSemigroup& S,
                                                    const std::set<char>& alpha,
                                                    Fn&& fails) {
  std::vector<char> letters(alpha.begin(), alpha.end());
  std::vector<int> vals(letters.size(), 0);
  for (;;) {
    std::map<char, int> asg;
    for (size_t i = 0; i < letters.size(); ++i) asg[letters[i]] = vals[i];
    if (fails(asg)) return asg;
    size_t i = 0;
    while (i < vals.size() && ++vals[i] == S.size()) vals[i++] = 0;
    if (i == vals.size()) return std::nullopt;
    if (vals.empty()) return std::nullopt;
  }
}

}  // namespace

std::optional<std::map<char, int>> find_counterexample(const FinSemigroup& S,
                                                       const TermPtr& u,
                                                       const TermPtr& v) {
  std::set<char> alpha = letters(u);
  auto lv = letters(v);
  alpha.insert(lv.begin(), lv.end());
  return scan_assignments(S, alpha, [&](const std::map<char, int>& asg) {
    return eval_term(S, u, asg) != eval_term(S, v, asg);
  });
}

bool satisfies(const FinSemigroup& S, const TermPtr& u, const TermPtr& v) {
  return !find_counterexample(S, u, v).has_value();
}

// ---------------------------------------------------------------------------
// Catalog

FinSemigroup make_sl2() {
  return FinSemigroup::from_table("Sl2", {"e", "z"}, {{0, 1}, {1, 1}});
}

FinSemigroup make_rect_band(int m, int n) {
  if (m < 1 || n < 1) throw SgError("rectangular band needs positive sides");
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(m * n, std::vector<int>(m * n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ")");
  auto at = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) t[at(i, j)][at(k, l)] = at(i, l);
  return FinSemigroup::from_table(
      "B(" + std::to_string(m) + "," + std::to_string(n) + ")", names, t);
}

FinSemigroup make_mono_cyclic(int m, int n) {
  if (m < 1 || n < 1) throw SgError("monogenic semigroup needs index and period >= 1");
  const int sz = m + n - 1;  // elements a^1 .. a^(m+n-1)
  std::vector<std::string> names;
  for (int i = 1; i <= sz; ++i)
    names.push_back(i == 1 ? "a" : "a" + std::to_string(i));
  std::vector<std::vector<int>> t(sz, std::vector<int>(sz));
  for (int i = 1; i <= sz; ++i)
    for (int j = 1; j <= sz; ++j) {
      int s = i + j;
      if (s > sz) s = m + (s - m) % n;
      t[i - 1][j - 1] = s - 1;
    }
  return FinSemigroup::from_table("C(" + std::to_string(m) + "," +
                                      std::to_string(n) + ")",
                                  names, t);
}

FinSemigroup make_cyclic_group(int n) {
  if (n < 1) throw SgError("cyclic group needs a positive order");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FinSemigroup::from_table("Z" + std::to_string(n), names, t);
}

FinSemigroup make_klein4() {
  return FinSemigroup::from_table(
      "V4", {"e", "a", "b", "c"},
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

FinSemigroup make_sym3() {
  // permutations of {0,1,2}; composition (p*q)(x) = p(q(x))
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> base{0, 1, 2};
  std::sort(base.begin(), base.end());
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  auto pname = [](const std::array<int, 3>& p) {
    std::string s = "[";
    for (int v : p) s += std::to_string(v);
    return s + "]";
  };
  const int n = static_cast<int>(perms.size());
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(pname(p));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FinSemigroup::from_table("S3", names, t);
}

FinSemigroup make_b2() {
  // a = E12, b = E21, ab = E11, ba = E22, plus the zero matrix
  const std::vector<std::string> names{"a", "b", "ab", "ba", "0"};
  auto idx = [&](const std::string& s) {
    return static_cast<int>(std::find(names.begin(), names.end(), s) -
                            names.begin());
  };
  std::vector<std::vector<int>> t(5, std::vector<int>(5, idx("0")));
  t[idx("a")][idx("b")] = idx("ab");
  t[idx("b")][idx("a")] = idx("ba");
  t[idx("ab")][idx("a")] = idx("a");
  t[idx("ba")][idx("b")] = idx("b");
  t[idx("ab")][idx("ab")] = idx("ab");
  t[idx("ba")][idx("ba")] = idx("ba");
  t[idx("a")][idx("ba")] = idx("a");
  t[idx("b")][idx("ab")] = idx("b");
  return FinSemigroup::from_table("B2", names, t);
}

FinSemigroup make_nilpotent3() {
  // only ab is a nonzero product
  return FinSemigroup::from_table(
      "N", {"a", "b", "ab", "0"},
      {{3, 2, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}});
}

FinSemigroup make_left_unit3() {
  // e acts as identity from the left only; all other products are 0
  return FinSemigroup::from_table("T", {"e", "a", "0"},
                                  {{0, 1, 2}, {2, 2, 2}, {2, 2, 2}});
}

FinSemigroup adjoin_identity(const FinSemigroup& S) {
  const int n = S.size();
  std::vector<std::string> names{"1"};
  for (int i = 0; i < n; ++i) names.push_back(S.elem_name(i));
  std::vector<std::vector<int>> t(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[0][i] = i;
    t[i][0] = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i + 1][j + 1] = S.op(i, j) + 1;
  return FinSemigroup::from_table(S.name() + "^1", names, t);
}

FinSemigroup opposite(const FinSemigroup& S) {
  const int n = S.size();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(S.elem_name(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = S.op(j, i);
  return FinSemigroup::from_table(S.name() + "^op", names, t);
}

FinSemigroup direct_product(const FinSemigroup& S, const FinSemigroup& T) {
  const int n = S.size(), m = T.size();
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      names.push_back("(" + S.elem_name(i) + "," + T.elem_name(j) + ")");
  for (int a = 0; a < n * m; ++a)
    for (int b = 0; b < n * m; ++b)
      t[a][b] = S.op(a / m, b / m) * m + T.op(a % m, b % m);
  return FinSemigroup::from_table(S.name() + "x" + T.name(), names, t);
}

std::vector<int> normalize_partition(std::vector<int> p) {
  std::map<int, int> seen;
  for (int& v : p) {
    auto [it, fresh] = seen.emplace(v, static_cast<int>(seen.size()));
    v = it->second;
    (void)fresh;
  }
  return p;
}

bool is_congruence(const FinSemigroup& S, const std::vector<int>& partition) {
  const int n = S.size();
  if (static_cast<int>(partition.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (partition[a] != partition[b]) continue;
      for (int s = 0; s < n; ++s) {
        if (partition[S.op(s, a)] != partition[S.op(s, b)]) return false;
        if (partition[S.op(a, s)] != partition[S.op(b, s)]) return false;
      }
    }
  return true;
}

FinSemigroup quotient(const FinSemigroup& S, const std::vector<int>& partition) {
  if (!is_congruence(S, partition))
    throw SgError("partition is not a congruence");
  auto p = normalize_partition(partition);
  int classes = *std::max_element(p.begin(), p.end()) + 1;
  std::vector<std::string> names(classes);
  for (int i = 0; i < S.size(); ++i) {
    if (!names[p[i]].empty()) names[p[i]] += "|";
    names[p[i]] += S.elem_name(i);
  }
  for (auto& nm : names) nm = "{" + nm + "}";
  std::vector<std::vector<int>> t(classes, std::vector<int>(classes, -1));
  for (int a = 0; a < S.size(); ++a)
    for (int b = 0; b < S.size(); ++b) t[p[a]][p[b]] = p[S.op(a, b)];
  return FinSemigroup::from_table(S.name() + "/~", names, t);
}

namespace {

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[b] = a;
    return true;
  }
  std::vector<int> partition() {
    std::vector<int> p(up.size());
    for (size_t i = 0; i < up.size(); ++i) p[i] = find(static_cast<int>(i));
    return normalize_partition(p);
  }
};

}  // namespace

std::vector<int> principal_congruence(const FinSemigroup& S, int a, int b) {
  const int n = S.size();
  Dsu d(n);
  std::vector<std::pair<int, int>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!d.unite(x, y)) continue;
    // a fresh identification must be stable under both translations
    for (int s = 0; s < n; ++s) {
      work.push_back({S.op(s, x), S.op(s, y)});
      work.push_back({S.op(x, s), S.op(y, s)});
    }
  }
  return d.partition();
}

std::vector<std::vector<int>> enumerate_congruences(const FinSemigroup& S,
                                                    int guard) {
  const int n = S.size();
  if (n > guard)
    throw SgError("semigroup exceeds the congruence enumeration guard");
  std::set<std::vector<int>> principals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      principals.insert(principal_congruence(S, a, b));
  // Every congruence is a join of principal ones, and the join of two
  // congruences is their equivalence join, so a plain union-find merge.
  std::vector<int> bottom(n);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::set<std::vector<int>> found{normalize_partition(bottom)};
  std::vector<std::vector<int>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& q : principals) {
        Dsu d(n);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (p[i] == p[j] || q[i] == q[j]) d.unite(i, j);
        auto joined = d.partition();
        if (found.insert(joined).second) next.push_back(joined);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> all_partitions(int n) {
  if (n < 1 || n > 12) throw SgError("partition enumeration supports 1..12");
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  // restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1])
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::vector<FinSemigroup> catalog() {
  std::vector<FinSemigroup> v;
  v.push_back(make_sl2());
  v.push_back(make_rect_band(1, 2));
  v.push_back(make_rect_band(2, 1));
  v.push_back(make_mono_cyclic(2, 1));
  v.push_back(make_cyclic_group(2));
  v.push_back(make_cyclic_group(3));
  v.push_back(make_b2());
  v.push_back(make_nilpotent3());
  v.push_back(make_left_unit3());
  return v;
}

FinSemigroup resolve_semigroup(const std::string& name) {
  std::string base = name;
  bool adjoin = false;
  if (base.size() > 2 && base.substr(base.size() - 2) == "^1") {
    adjoin = true;
    base = base.substr(0, base.size() - 2);
  }
  auto parse_pair = [&](const std::string& s) -> std::pair<int, int> {
    // "(m,n)"
    size_t comma = s.find(',');
    if (s.size() < 5 || s.front() != '(' || s.back() != ')' ||
        comma == std::string::npos)
      throw SgError("bad parameters in semigroup name: " + s);
    int m = std::stoi(s.substr(1, comma - 1));
    int n = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
    return {m, n};
  };
  std::optional<FinSemigroup> S;
  if (base == "Sl2") S = make_sl2();
  else if (base == "B2") S = make_b2();
  else if (base == "N") S = make_nilpotent3();
  else if (base == "T") S = make_left_unit3();
  else if (base == "V4") S = make_klein4();
  else if (base == "S3") S = make_sym3();
  else if (base.size() > 1 && base[0] == 'B' && base[1] == '(') {
    auto [m, n] = parse_pair(base.substr(1));
    S = make_rect_band(m, n);
  } else if (base.size() > 1 && base[0] == 'C' && base[1] == '(') {
    auto [m, n] = parse_pair(base.substr(1));
    S = make_mono_cyclic(m, n);
  } else if (base.size() > 1 && base[0] == 'Z') {
    S = make_cyclic_group(std::stoi(base.substr(1)));
  }
  if (!S) throw SgError("unknown semigroup name: " + name);
  return adjoin ? adjoin_identity(*S) : *S;
}

FinSemigroup parse_semigroup_table(const std::string& text,
                                   const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  auto tokens = [](const std::string& l) {
    std::istringstream ls(l);
    std::vector<std::string> out;
    std::string w;
    while (ls >> w) out.push_back(w);
    return out;
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks[0] == "elems:") {
      names.assign(toks.begin() + 1, toks.end());
      continue;
    }
    if (names.empty()) throw SgError("table rows before the elems: line");
    if (toks.size() != names.size())
      throw SgError("table row has " + std::to_string(toks.size()) +
                    " entries, expected " + std::to_string(names.size()));
    std::vector<int> row;
    for (const auto& t : toks) {
      auto it = std::find(names.begin(), names.end(), t);
      if (it == names.end()) throw SgError("unknown element in table: " + t);
      row.push_back(static_cast<int>(it - names.begin()));
    }
    table.push_back(std::move(row));
  }
  if (names.empty()) throw SgError("missing elems: line");
  if (table.size() != names.size())
    throw SgError("expected " + std::to_string(names.size()) + " table rows");
  return FinSemigroup::from_table(name, names, table);
}

std::string render_semigroup_table(const FinSemigroup& S) {
  std::ostringstream out;
  out << "elems:";
  for (int i = 0; i < S.size(); ++i) out << ' ' << S.elem_name(i);
  out << '\n';
  for (int i = 0; i < S.size(); ++i) {
    for (int j = 0; j < S.size(); ++j)
      out << (j ? " " : "") << S.elem_name(S.op(i, j));
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Monoid enumeration

namespace {

// Checks every triple whose three lookups are already defined (-1 = unset).
bool partial_associative(const std::vector<std::vector<int>>& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t[a][b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = t[b][c];
        if (bc < 0) continue;
        int l = t[ab][c], r = t[a][bc];
        if (l < 0 || r < 0) continue;
        if (l != r) return false;
      }
    }
  return true;
}

// Canonical form: the lexicographically least table over all permutations
// that fix the identity at 0.
std::vector<int> canonical_flat(const std::vector<std::vector<int>>& t, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<int> flat;
    flat.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(inv[t[perm[i]][perm[j]]]);
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

void fill_monoid(std::vector<std::vector<int>>& t, int n, int cell,
                 std::vector<std::vector<std::vector<int>>>& out) {
  // cells run over i,j >= 1 in row-major order
  const int free_cells = (n - 1) * (n - 1);
  if (cell == free_cells) {
    std::vector<int> flat;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(t[i][j]);
    if (canonical_flat(t, n) == flat) out.push_back(t);
    return;
  }
  int i = cell / (n - 1) + 1, j = cell % (n - 1) + 1;
  for (int v = 0; v < n; ++v) {
    t[i][j] = v;
    if (partial_associative(t, n)) fill_monoid(t, n, cell + 1, out);
  }
  t[i][j] = -1;
}

}  // namespace

std::vector<FinSemigroup> enumerate_monoids(int n) {
  if (n < 1 || n > 5) throw SgError("monoid enumeration supports orders 1..5");
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    t[0][i] = i;
    t[i][0] = i;
  }
  std::vector<std::vector<std::vector<int>>> tables;
  fill_monoid(t, n, 0, tables);
  std::vector<FinSemigroup> out;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : std::string(1, static_cast<char>('a' + i - 1)));
  int k = 0;
  for (auto& tb : tables)
    out.push_back(FinSemigroup::from_table(
        "M" + std::to_string(n) + "_" + std::to_string(k++), names, tb));
  return out;
}

}  // namespace pseq
