#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akinv/scalar.hpp"

using namespace akinv;

namespace {

// Independent oracle: Pascal's triangle up to n rows.
std::vector<std::vector<Natural>> pascal(unsigned rows) {
    std::vector<std::vector<Natural>> tri(rows + 1);
    for (unsigned n = 0; n <= rows; ++n) {
        tri[n].assign(n + 1, Natural(1));
        for (unsigned r = 1; r < n; ++r) tri[n][r] = tri[n - 1][r - 1] + tri[n - 1][r];
    }
    return tri;
}

}  // namespace

TEST_CASE("binomial matches the Pascal-triangle oracle") {
    auto tri = pascal(40);
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned r = 0; r <= n; ++r)
            CHECK(binomial(Natural(n), Natural(r)) == tri[n][r]);
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("binomial conventions") {
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 8) == 0);  // r > n is 0 by convention
    CHECK_THROWS_AS(binomial(Natural(-1), Natural(0)), ValidationError);
}

TEST_CASE("binomial_mod_p by Lucas") {
    // 6 = 3 * 2 with p = 3, j = 1, q = 2: C(6, 3) = 2 mod 3.
    CHECK(binomial_mod_p(6, 3, 3) == Scalar::mod_p(2, 3));
    // C(6, 2) = 15, 15 mod 2 = 1.
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial_mod_p(6, 2, 2) == Scalar::one(2));
    CHECK(binomial_mod_p(123, 0, 5) == Scalar::one(5));
    CHECK_THROWS_AS(binomial_mod_p(6, 3, 4), ValidationError);
}

TEST_CASE("Lucas agrees with the exact binomial mod p") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        for (unsigned n = 0; n <= 60; ++n) {
            for (unsigned r = 0; r <= n; ++r) {
                Natural exact = binomial(Natural(n), Natural(r)) % Natural(p);
                CHECK(binomial_mod_p(Natural(n), Natural(r), p) == Scalar::mod_p(exact, p));
            }
        }
    }
}

TEST_CASE("C(p^j q, p^j) = q mod p") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        for (unsigned j = 0; j <= 5; ++j) {
            Natural pj(1);
            for (unsigned k = 0; k < j; ++k) pj *= p;
            for (unsigned q = 1; q <= 20; ++q) {
                if (q % p == 0) continue;
                Natural i = pj * q;
                CHECK(binomial_mod_p(i, pj, p) == Scalar::from_integer(q, p));
            }
        }
    }
}

TEST_CASE("scalar field axioms, exactly") {
    std::mt19937_64 rng(20240121);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    auto random_rational = [&] { return Scalar::rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar::zero(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(0));
    }
    for (long p : {2L, 5L, 11L}) {
        std::uniform_int_distribution<long> res(0, p - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = Scalar::from_integer(res(rng), p);
            Scalar b = Scalar::from_integer(res(rng), p);
            Scalar c = Scalar::from_integer(res(rng), p);
            CHECK((a + b) * c == a * c + b * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(p));
        }
    }
}

TEST_CASE("canonical residues and lowest terms") {
    CHECK(Scalar::mod_p(Natural(-1), 5) == Scalar::from_integer(4, 5));
    CHECK(Scalar::mod_p(17, 5) == Scalar::from_integer(2, 5));
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(-2, 4).str() == "-1/2");
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));  // structural equality
}

TEST_CASE("mixing characteristics is rejected") {
    CHECK_THROWS_AS(Scalar::one(0) + Scalar::one(5), ValidationError);
    CHECK_THROWS_AS(Scalar::mod_p(1, 6), ValidationError);  // 6 not prime
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar::one(0) / Scalar::zero(0), ArithmeticError);
    CHECK_THROWS_AS(Scalar::zero(7).inverse(), ArithmeticError);
}
