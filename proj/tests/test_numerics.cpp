#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "purebirth/numerics.hpp"

using namespace purebirth;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(2, 4)).str() == "1/2");
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("multiplicative identity") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 50; ++i) {
        long num = static_cast<long>(gen() % 2000) - 1000;
        long den = static_cast<long>(gen() % 999) + 1;
        Rational x(num, den);
        CHECK(x * Rational(1) == x);
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 100; ++i) {
        long num = static_cast<long>(gen() % 100000) - 50000;
        long den = static_cast<long>(gen() % 9999) + 1;
        Rational x(num, den);
        Rational renorm(x.numerator(), x.denominator());
        CHECK(renorm == x);
        CHECK(renorm.str() == x.str());
    }
}

TEST_CASE("rational parsing round-trips") {
    CHECK(Rational::from_string("3/9") == Rational(1, 3));
    CHECK(Rational::from_string("-4/6").str() == "-2/3");
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK_THROWS(Rational::from_string("a/b"));
}

TEST_CASE("rational_to_float rounds correctly") {
    CHECK(rational_to_float(Rational(1, 2)) == 0.5);
    CHECK(rational_to_float(Rational(0, 1)) == 0.0);
    // 2/3 = 0.66666666666666666666... long division to 20 digits rounds to
    // the binary64 neighbor 0.66666666666666663.
    CHECK(rational_to_float(Rational(2, 3)) == 0x1.5555555555555p-1);
    CHECK(rational_to_float(Rational(1, 3)) == 0x1.5555555555555p-2);
    // Exactly representable values pass through unchanged.
    CHECK(rational_to_float(Rational(7, 8)) == 0.875);
    Rational big = Rational(mpz_class(10)).pow(400);
    CHECK_THROWS_AS(rational_to_float(big), std::overflow_error);
}

TEST_CASE("exact and float backends agree within 1e-12 on random inputs") {
    std::mt19937_64 gen(2024);
    auto rand_rational = [&]() {
        std::uint64_t num = gen() & ((1ULL << 40) - 1);
        std::uint64_t den = (gen() & ((1ULL << 40) - 1)) | 1ULL;
        return Rational(mpz_class(num), mpz_class(den));
    };
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_rational(), b = rand_rational();
        for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
            Scalar ex = scalar_arith(Scalar(a), Scalar(b), op);
            Scalar fl = scalar_arith(Scalar(a.to_double()), Scalar(b.to_double()), op);
            double exact_as_float = ex.exact().to_double();
            double denom = std::max(1.0, std::abs(exact_as_float));
            CHECK(std::abs(exact_as_float - fl.flt()) / denom <= 1e-12);
        }
    }
}

TEST_CASE("scalar backend rules") {
    CHECK_THROWS_AS(scalar_arith(Scalar(Rational(1)), Scalar(0.5), ArithOp::Add), std::domain_error);
    CHECK_THROWS_AS(scalar_arith(Scalar(1.0), Scalar(0.0), ArithOp::Div), std::domain_error);
    Scalar huge(1e308);
    CHECK_THROWS_AS(scalar_arith(huge, huge, ArithOp::Add), std::overflow_error);
}

TEST_CASE("log-space addition matches direct float addition at moderate magnitude") {
    LogFloat e = LogFloat::from_log(1.0);  // the value e
    LogFloat s = e + e;
    CHECK(s.log() == doctest::Approx(std::log(2.0 * std::exp(1.0))).epsilon(1e-14));

    // Products survive far below the float64 underflow threshold.
    LogFloat tiny = LogFloat::from_value(0.5).pow(5000);
    CHECK(tiny.log() == doctest::Approx(5000.0 * std::log(0.5)));
    CHECK(tiny.value() == 0.0);  // not representable directly

    CHECK((LogFloat::zero() + e).log() == 1.0);
    CHECK((LogFloat::zero() * e).is_zero());
    CHECK_THROWS_AS(scalar_arith(Scalar(e), Scalar(e), ArithOp::Sub), std::domain_error);
}

TEST_CASE("float serialization is shortest round-trip") {
    CHECK(float_to_string(0.5) == "0.5");
    CHECK(float_to_string(1.0 / 3.0) == "0.3333333333333333");
    double v = 0.1 + 0.2;
    CHECK(std::stod(float_to_string(v)) == v);
}
