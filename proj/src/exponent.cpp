// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "exponent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace pseq {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentError("exponent overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentError("exponent overflow");
  return r;
}

}  // namespace

Exponent Exponent::finite(long long n) {
  if (n < 0) throw ExponentError("negative finite exponent");
  return Exponent(true, n);
}

Exponent Exponent::omega_plus(long long z) { return Exponent(false, z); }

Exponent exp_add(Exponent a, Exponent b) {
  if (a.finite_p() && b.finite_p())
    return Exponent::finite(checked_add(a.value(), b.value()));
  // omega absorbs finite summands into its shift; omega+omega = omega.
  if (a.finite_p()) std::swap(a, b);
  if (b.finite_p()) return Exponent::omega_plus(checked_add(a.value(), b.value()));
  return Exponent::omega_plus(checked_add(a.value(), b.value()));
}

Exponent exp_mul(Exponent a, Exponent b) {
  if (a.finite_p() && a.value() == 0) return Exponent::finite(0);
  if (b.finite_p() && b.value() == 0) return Exponent::finite(0);
  if (a.finite_p() && b.finite_p())
    return Exponent::finite(checked_mul(a.value(), b.value()));
  // omega is multiplicatively idempotent and absorbs positive finite
  // factors, so only the shifts multiply.
  return Exponent::omega_plus(checked_mul(a.value(), b.value()));
}

bool exp_valid(Exponent e, Sig sig) {
  if (e.omega_p()) return true;
  return e.value() >= (sig == Sig::semigroup ? 1 : 0);
}

std::string render(Exponent e) {
  if (e.finite_p()) return std::to_string(e.value());
  if (e.value() == 0) return "w";
  if (e.value() > 0) return "(w+" + std::to_string(e.value()) + ")";
  return "(w-" + std::to_string(-e.value()) + ")";
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw ExponentError("factorial argument out of range");
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// ---------------------------------------------------------------------------
// SymExponent

void SymExponent::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

SymExponent SymExponent::constant(Exponent e) {
  SymExponent s;
  s.omega_ = e.omega_p();
  s.coeffs_ = {e.value()};
  return s;
}

SymExponent SymExponent::int_const(long long k) {
  SymExponent s;
  s.coeffs_ = {k};
  return s;
}

SymExponent SymExponent::nu() {
  SymExponent s;
  s.coeffs_ = {0, 1};
  return s;
}

bool SymExponent::constant_p() const { return coeffs_.size() == 1; }

Exponent SymExponent::constant_value() const {
  if (!constant_p()) throw ExponentError("schematic exponent is not constant");
  if (omega_) return Exponent::omega_plus(coeffs_[0]);
  if (coeffs_[0] < 0) throw ExponentError("negative finite exponent");
  return Exponent::finite(coeffs_[0]);
}

long long SymExponent::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

long long SymExponent::eval(long long x) const {
  long long r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = checked_add(checked_mul(r, x), *it);
  return r;
}

long long SymExponent::stable_from(long long lo) const {
  int d = degree();
  if (d == 0) return coeffs_[0] >= lo ? 1 : -1;
  long long lead = coeffs_.back();
  if (lead < 0) return -1;
  // Beyond B the leading term dominates: P(x) >= x^(d-1)(lead*x - sum|a_i|).
  long long tail = 0;
  for (int i = 0; i < d; ++i) tail = checked_add(tail, std::llabs(coeffs_[i]));
  long long bound = checked_add(tail, std::llabs(lo)) / lead + 2;
  if (bound > 2'000'000) throw ExponentError("exponent polynomial too large");
  long long last_bad = 0;
  for (long long x = 1; x <= bound; ++x)
    if (eval(x) < lo) last_bad = x;
  return last_bad + 1;
}

Exponent SymExponent::instantiate(int n) const {
  if (n < 1) throw ExponentError("instantiation index must be >= 1");
  long long x = factorial(n);
  if (x < nu_floor_)
    throw ExponentError("instantiation below the schematic exponent's floor");
  long long v = eval(x);
  if (omega_) return Exponent::omega_plus(v);
  if (v < 0) throw ExponentError("instantiation yields a negative finite value");
  return Exponent::finite(v);
}

Exponent SymExponent::at_integer(long long m) const {
  if (m < 1 || m < nu_floor_)
    throw ExponentError("schematic exponent evaluated below its floor");
  long long v = eval(m);
  if (omega_) return Exponent::omega_plus(v);
  if (v < 0) throw ExponentError("negative finite exponent");
  return Exponent::finite(v);
}

Exponent SymExponent::limit() const {
  if (degree() == 0) {
    if (omega_) return Exponent::omega_plus(coeffs_[0]);
    if (coeffs_[0] < 0) throw ExponentError("negative finite limit");
    return Exponent::finite(coeffs_[0]);
  }
  // Every nonconstant term contributes an omega summand; only the constant
  // coefficient survives as the shift.
  if (!omega_ && stable_from(0) < 0)
    throw ExponentError("limit of an eventually negative exponent");
  return Exponent::omega_plus(coeffs_[0]);
}

SymExponent SymExponent::shift() const {
  // P(nu) -> P(nu+1) by Horner-style expansion.
  SymExponent r;
  r.omega_ = omega_;
  r.nu_floor_ = std::max<long long>(1, nu_floor_ - 1);
  r.coeffs_ = {0};
  SymExponent xp1;  // nu + 1
  xp1.coeffs_ = {1, 1};
  SymExponent acc = int_const(1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    SymExponent term = acc;
    for (auto& c : term.coeffs_) c = checked_mul(c, coeffs_[i]);
    std::vector<long long> sum(std::max(r.coeffs_.size(), term.coeffs_.size()), 0);
    for (size_t j = 0; j < r.coeffs_.size(); ++j) sum[j] = r.coeffs_[j];
    for (size_t j = 0; j < term.coeffs_.size(); ++j)
      sum[j] = checked_add(sum[j], term.coeffs_[j]);
    r.coeffs_ = std::move(sum);
    acc = sym_mul(acc, xp1);
  }
  r.trim();
  return r;
}

bool SymExponent::eventually_valid(Sig sig) const {
  if (omega_) return true;
  return stable_from(sig == Sig::semigroup ? 1 : 0) >= 0;
}

int SymExponent::n0(Sig sig) const {
  long long floor = nu_floor_;
  if (!omega_) {
    long long s = stable_from(sig == Sig::semigroup ? 1 : 0);
    if (s < 0) throw ExponentError("schematic exponent never becomes valid");
    floor = std::max(floor, s);
  }
  for (int n = 1; n <= 20; ++n)
    if (factorial(n) >= floor) return n;
  throw ExponentError("schematic exponent floor out of range");
}

std::string SymExponent::render() const {
  std::string out;
  if (omega_) out = "w";
  for (int i = degree(); i >= 0; --i) {
    long long c = coeffs_[i];
    if (c == 0 && !(i == 0 && out.empty())) continue;
    std::string piece;
    long long a = std::llabs(c);
    if (i == 0) {
      piece = std::to_string(a);
    } else {
      if (a != 1) piece = std::to_string(a);
      for (int j = 0; j < i; ++j) piece += (j ? "*k" : "k");
    }
    if (out.empty())
      out = (c < 0 ? "0-" : "") + piece;
    else
      out += (c < 0 ? "-" : "+") + piece;
  }
  bool atom = out == "w" || out == "k" ||
              std::all_of(out.begin(), out.end(), [](char c) { return std::isdigit(c); });
  return atom ? out : "(" + out + ")";
}

SymExponent sym_add(const SymExponent& a, const SymExponent& b) {
  SymExponent r;
  // omega absorbs integer summands into its shift, and omega+omega = omega.
  r.omega_ = a.omega_ || b.omega_;
  r.nu_floor_ = std::max(a.nu_floor_, b.nu_floor_);
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i)
    r.coeffs_[i] = checked_add(r.coeffs_[i], b.coeffs_[i]);
  r.trim();
  return r;
}

SymExponent sym_mul(const SymExponent& a, const SymExponent& b) {
  auto zero = [](const SymExponent& s) {
    return !s.omega_ && s.coeffs_.size() == 1 && s.coeffs_[0] == 0;
  };
  SymExponent r;
  if (zero(a) || zero(b)) return SymExponent::int_const(0);
  r.nu_floor_ = std::max(a.nu_floor_, b.nu_floor_);
  if (a.omega_ || b.omega_) {
    // (omega + P)(omega + Q) has omega in every cross term; a plain factor
    // folds into omega only from the point where it is positive.
    r.omega_ = true;
    for (auto [w, s] : {std::pair{a.omega_, &b}, std::pair{b.omega_, &a}}) {
      if (w && !s->omega_) {
        long long from = s->stable_from(1);
        if (from < 0)
          throw ExponentError("omega times an eventually nonpositive exponent");
        r.nu_floor_ = std::max(r.nu_floor_, from);
      }
    }
  }
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] =
          checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  r.trim();
  return r;
}

Exponent sym_instantiate(const SymExponent& e, int n) { return e.instantiate(n); }

Exponent sym_limit(const SymExponent& e) { return e.limit(); }

}  // namespace pseq
