#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "akinv/scalar.hpp"

namespace akinv {

/// Power product of variables, e.g. x^2*y. Factors are kept sorted by
/// variable name with strictly positive exponents; the empty product is 1.
class Monomial {
  public:
    using Factors = std::vector<std::pair<std::string, int>>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(const std::string& name, int exp = 1);
    static Monomial from_factors(Factors factors);  // sorts, drops zero exponents

    const Factors& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(const std::string& name) const;
    int total_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; requires o.divides(*this).
    Monomial divide_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Structural order (map key use only, not a monomial order).
    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }

    std::string str() const;  // "x^2*y", "1" for the empty product

  private:
    Factors factors_;
};

/// Total multiplicative order on monomials with 1 minimal. Variables in the
/// priority list form the dominant block; variables outside it (the
/// deformation variables t, s) form a lower block compared lexicographically
/// by name. This keeps a Groebner basis over the ring variables valid for
/// reduction in A[t] and A[s,t].
class MonomialOrder {
  public:
    enum class Kind { Lex, GrevLex };

    MonomialOrder(Kind kind, std::vector<std::string> priority);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& priority() const { return priority_; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && priority_ == o.priority_;
    }

  private:
    Kind kind_;
    std::vector<std::string> priority_;
};

/// -infinity is represented by an empty optional (degree of the zero
/// polynomial).
using Degree = std::optional<int>;

std::string degree_str(const Degree& d);

/// Sparse multivariate polynomial over Scalar. Terms are a map from
/// monomials to nonzero coefficients; the zero polynomial has an empty map.
/// The characteristic travels with the polynomial so that the zero
/// polynomial knows its field.
class Polynomial {
  public:
    using Terms = std::map<Monomial, Scalar>;

    explicit Polynomial(long characteristic = 0) : p_(characteristic) {}

    static Polynomial zero(long characteristic) { return Polynomial(characteristic); }
    static Polynomial constant(const Scalar& c);
    static Polynomial variable(const std::string& name, long characteristic);
    static Polynomial term(const Monomial& m, const Scalar& c);

    long characteristic() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (0 if absent).
    Scalar constant_term() const;

    std::set<std::string> variables() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// Structural order for use as a map key.
    bool operator<(const Polynomial& o) const;

    /// Ring-homomorphic substitution; variables without an image map to
    /// themselves. Image characteristics must match.
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const;
    Polynomial rename_variables(const std::map<std::string, std::string>& renaming) const;

    /// Coefficient of v^i, a polynomial free of v.
    Polynomial coeff_in(const std::string& v, int i) const;
    /// Highest exponent of v; -infinity for the zero polynomial.
    Degree degree_in(const std::string& v) const;
    Degree total_degree() const;

    /// Formal partial derivative.
    Polynomial derivative(const std::string& v) const;

    /// Full evaluation; every variable must be assigned.
    Scalar evaluate(const std::map<std::string, Scalar>& values) const;

    void add_term(const Monomial& m, const Scalar& c);

    /// Deterministic rendering: terms by total degree descending, then by
    /// structural order. Reparses to the same polynomial.
    std::string str() const;

  private:
    long p_;
    Terms terms_;

    void check_same_field(const Polynomial& o) const;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Order-maximal term of a nonzero polynomial.
std::pair<Monomial, Scalar> leading_term(const Polynomial& f, const MonomialOrder& order);

/// Quotient and remainder of f by a divisor that is monic as a polynomial
/// in v (leading v-coefficient 1); the remainder has deg_v < deg_v(divisor).
/// Works with coefficients in the remaining variables.
std::pair<Polynomial, Polynomial> divide_monic_in_var(const Polynomial& f,
                                                      const Polynomial& divisor,
                                                      const std::string& v);

/// Exact multivariate division: returns f/g when g divides f exactly,
/// std::nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Monic gcd of two univariate polynomials in v over the coefficient field.
Polynomial gcd_univariate(Polynomial a, Polynomial b, const std::string& v);

}  // namespace akinv
