// Exponent arithmetic for omega-terms: constant exponents (finite counts and
// omega+z shifts) and schematic exponents (polynomials in the parameter nu,
// which ranges over the factorials n!).
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License.  You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseq {

// Signature the ambient algebra is taken in.  Monoid terms admit the empty
// word and exponent 0; semigroup terms do not.
enum class Sig { semigroup, monoid };

// Thrown when arithmetic leaves the exponent domain: a negative finite
// value, omega times an eventually nonpositive factor, or overflow.
struct ExponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constant exponent: either a finite count n >= 0 or omega+z with z an
// arbitrary integer.  omega is the idempotent power; omega+z its shifts.
class Exponent {
 public:
  static Exponent finite(long long n);
  static Exponent omega_plus(long long z);
  static Exponent omega() { return omega_plus(0); }

  bool finite_p() const { return finite_; }
  bool omega_p() const { return !finite_; }
  // The count n for finite exponents, the shift z for omega+z.
  long long value() const { return v_; }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(bool f, long long v) : finite_(f), v_(v) {}
  bool finite_;
  long long v_;
};

// Addition and multiplication of exponent values.  Both are commutative and
// associative, and multiplication distributes over addition:
//   fin(n)+fin(m) = fin(n+m)        fin(n)+om(z) = om(z+n)
//   om(z)+om(t)   = om(z+t)         om(z)om(t)   = om(zt)
//   fin(n)om(z)   = om(nz), n >= 1  fin(0)e      = fin(0)
Exponent exp_add(Exponent a, Exponent b);
Exponent exp_mul(Exponent a, Exponent b);

// Whether e is a legal exponent for the signature: omega+z always is,
// finite n needs n >= 1 (semigroup) or n >= 0 (monoid).
bool exp_valid(Exponent e, Sig sig);

// Textual form: "5", "w", "(w+2)", "(w-1)".
std::string render(Exponent e);

// n! as a long long; n <= 20.
long long factorial(int n);

// A schematic exponent: an integer polynomial in nu plus an optional
// additive omega part, in canonical form.  nu stands for n!; the value at
// instantiation n is P(n!), lifted by omega when the omega part is present.
// Canonical: (omega+z)*Q folds to omega + z*Q whenever Q is eventually
// positive, because (omega+z)*m = omega+zm for every m >= 1.  Structural
// equality of canonical forms therefore coincides with equality of the
// instantiation values for all large n.
class SymExponent {
 public:
  static SymExponent constant(Exponent e);
  static SymExponent int_const(long long k);  // negative allowed mid-expression
  static SymExponent nu();

  // True when no nu remains; such a value collapses to an Exponent.
  bool constant_p() const;
  Exponent constant_value() const;  // requires constant_p(); finite must be >= 0

  bool omega_part() const { return omega_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int i) const;
  // Smallest value of nu from which the canonical form is meaningful
  // (collected from omega-absorbing products).
  long long nu_floor() const { return nu_floor_; }

  // nu := n!.  Errors below the floor or on a negative finite result.
  Exponent instantiate(int n) const;
  // nu := omega+0, combining with the omega part.  Errors when the result
  // would be a negative finite value or no finite limit exists.
  Exponent limit() const;
  // nu := nu+1, as a schematic exponent (used to state induction steps).
  SymExponent shift() const;
  // nu := m for a plain integer m >= 1 (used to state induction bases).
  Exponent at_integer(long long m) const;

  // True when every instantiation from some point on is a legal exponent
  // of the signature.
  bool eventually_valid(Sig sig) const;
  // Smallest n such that instantiation is legal for every n' >= n.
  int n0(Sig sig) const;

  std::string render() const;

  friend SymExponent sym_add(const SymExponent& a, const SymExponent& b);
  friend SymExponent sym_mul(const SymExponent& a, const SymExponent& b);
  friend bool operator==(const SymExponent& a, const SymExponent& b) {
    return a.omega_ == b.omega_ && a.coeffs_ == b.coeffs_;
  }

 private:
  SymExponent() = default;
  void trim();
  // P(x) over the integers, throwing on overflow.
  long long eval(long long x) const;
  // Smallest v >= 1 such that P(x) >= lo for every integer x >= v, or -1.
  long long stable_from(long long lo) const;

  bool omega_ = false;
  std::vector<long long> coeffs_ = {0};  // coeffs_[i] * nu^i
  long long nu_floor_ = 1;
};

// Aliases matching the operation names used throughout: instantiate at n!
// and take the limit nu -> omega.
Exponent sym_instantiate(const SymExponent& e, int n);
Exponent sym_limit(const SymExponent& e);

}  // namespace pseq
