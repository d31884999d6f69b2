#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "akinv/errors.hpp"

namespace akinv {

using Natural = mpz_class;
using Rational = mpq_class;

/// An element of an exact base field: either Q (characteristic 0) or a
/// prime field F_p. The characteristic travels with the value; mixing
/// scalars of different characteristics is a ValidationError.
///
/// Invariants: rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); F_p values are residues in [0, p).
class Scalar {
  public:
    Scalar() : value_(0), p_(0) {}

    static Scalar zero(long characteristic) { return Scalar(Rational(0), characteristic); }
    static Scalar one(long characteristic) { return Scalar(Rational(1), characteristic); }

    /// Characteristic-0 scalar from a rational (canonicalized).
    static Scalar rational(Rational v);
    static Scalar rational(long num, long den = 1);

    /// Residue v mod p in F_p. p must be prime.
    static Scalar mod_p(const Natural& v, long p);

    /// Integer n embedded in the field of the given characteristic.
    static Scalar from_integer(const Natural& n, long characteristic);

    long characteristic() const { return p_; }
    const Rational& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return p_ == o.p_ && value_ == o.value_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Structural order, usable as a map key. Not a field order.
    bool operator<(const Scalar& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return value_ < o.value_;
    }

    /// "5", "-2/3"; F_p residues print as plain integers.
    std::string str() const;

  private:
    Scalar(Rational v, long p) : value_(std::move(v)), p_(p) {}

    Rational value_;
    long p_;  // 0 for Q, a prime otherwise

    void check_same_field(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Deterministic primality test (exact for the word-sized inputs used here).
bool is_prime(long p);

/// C(n, r) exactly, arbitrary precision. Returns 0 for r > n.
Natural binomial(const Natural& n, const Natural& r);

/// C(n, r) mod p by Lucas' theorem: the product over base-p digits
/// C(n_i, r_i) mod p. Rejects non-prime p.
Scalar binomial_mod_p(const Natural& n, const Natural& r, long p);

/// C(n, r) as an element of the field with the given characteristic:
/// exact rational for characteristic 0, Lucas for prime p.
Scalar binomial_in_field(const Natural& n, const Natural& r, long characteristic);

}  // namespace akinv
