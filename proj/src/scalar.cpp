#include "akinv/scalar.hpp"

#include <ostream>

namespace akinv {

namespace {

Rational reduce_mod(const Rational& v, long p) {
    // v must have denominator coprime to p; for scalars built through the
    // public interface the denominator is always 1.
    Natural num = v.get_num();
    Natural den = v.get_den();
    Natural pz(p);
    if (den != 1) {
        Natural den_inv;
        if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw ArithmeticError("denominator not invertible mod " + std::to_string(p));
        num *= den_inv;
    }
    Natural r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    return Rational(r);
}

}  // namespace

Scalar Scalar::rational(Rational v) {
    v.canonicalize();
    return Scalar(std::move(v), 0);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    Rational v(num, den);
    v.canonicalize();
    return Scalar(std::move(v), 0);
}

Scalar Scalar::mod_p(const Natural& v, long p) {
    if (!is_prime(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    return Scalar(reduce_mod(Rational(v), p), p);
}

Scalar Scalar::from_integer(const Natural& n, long characteristic) {
    if (characteristic == 0) return Scalar(Rational(n), 0);
    return mod_p(n, characteristic);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw ValidationError("mixed characteristics: " + std::to_string(p_) + " vs " +
                              std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(-value_, 0);
    return Scalar(reduce_mod(-value_, p_), p_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Rational v = value_ + o.value_;
    if (p_ != 0) v = reduce_mod(v, p_);
    return Scalar(std::move(v), p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Rational v = value_ - o.value_;
    if (p_ != 0) v = reduce_mod(v, p_);
    return Scalar(std::move(v), p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Rational v = value_ * o.value_;
    if (p_ != 0) v = reduce_mod(v, p_);
    return Scalar(std::move(v), p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    if (p_ == 0) return Scalar(1 / value_, 0);
    Natural inv;
    Natural num = value_.get_num();
    Natural pz(p_);
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw ArithmeticError("non-invertible residue");
    return Scalar(Rational(inv), p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

std::string Scalar::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool is_prime(long p) {
    if (p < 2) return false;
    Natural z(p);
    // 2 = definitely prime, 1 = probably; mpz_probab_prime_p with 40 rounds
    // is exact well beyond the word-sized range used here.
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Natural binomial(const Natural& n, const Natural& r) {
    if (sgn(n) < 0 || sgn(r) < 0) throw ValidationError("binomial expects naturals");
    if (r > n) return 0;  // convention, keeps Leibniz-style sums simple
    if (!r.fits_ulong_p()) throw ResourceError("binomial index too large");
    Natural out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r.get_ui());
    return out;
}

Scalar binomial_mod_p(const Natural& n, const Natural& r, long p) {
    if (!is_prime(p)) throw ValidationError("binomial_mod_p: " + std::to_string(p) + " is not prime");
    if (sgn(n) < 0 || sgn(r) < 0) throw ValidationError("binomial_mod_p expects naturals");
    if (r > n) return Scalar::zero(p);
    // Lucas: C(n, r) = prod_i C(n_i, r_i) mod p over base-p digits.
    Natural nn = n, rr = r, pz(p);
    Natural acc(1);
    while (sgn(rr) > 0 || sgn(nn) > 0) {
        Natural nd, rd;
        mpz_tdiv_qr(nn.get_mpz_t(), nd.get_mpz_t(), nn.get_mpz_t(), pz.get_mpz_t());
        mpz_tdiv_qr(rr.get_mpz_t(), rd.get_mpz_t(), rr.get_mpz_t(), pz.get_mpz_t());
        if (rd > nd) return Scalar::zero(p);
        acc *= binomial(nd, rd) % pz;
        acc %= pz;
    }
    return Scalar::mod_p(acc, p);
}

Scalar binomial_in_field(const Natural& n, const Natural& r, long characteristic) {
    if (characteristic == 0) return Scalar::rational(Rational(binomial(n, r)));
    return binomial_mod_p(n, r, characteristic);
}

}  // namespace akinv
