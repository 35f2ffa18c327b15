#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/scalars.hpp"

using namespace koszul;

TEST_CASE("field contexts and floors")
{
    CHECK(FieldContext::rationals(5).is_rational());
    CHECK_THROWS_AS(FieldContext::prime(2, 2), FieldError);
    CHECK(FieldContext::prime(101, 6).characteristic() == 101);
    CHECK_THROWS_AS(FieldContext::prime(100), FieldError);
    CHECK_THROWS_AS(FieldContext::prime(7).with_floor(7), FieldError);
    CHECK(FieldContext::prime(7).with_floor(6).char_floor() == 6);
}

TEST_CASE("parsing field names")
{
    CHECK(FieldContext::parse("rat").is_rational());
    CHECK(FieldContext::parse("p=32003").characteristic() == 32003);
    CHECK(FieldContext::parse("p=5").name() == "p=5");
    CHECK_THROWS_AS(FieldContext::parse("p=abc"), FieldError);
    CHECK_THROWS_AS(FieldContext::parse("q"), FieldError);
}

TEST_CASE("primality")
{
    CHECK(is_prime(2));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
}

TEST_CASE("prime field arithmetic")
{
    PrimeField f(7);
    for (std::uint64_t a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_rational(make_rational(1, 2)) == 4);
    CHECK(f.from_rational(make_rational(-3)) == 4);
    CHECK_THROWS_AS(f.from_rational(make_rational(1, 14)), FieldError);
}

TEST_CASE("small rationals agree with gmp and overflow cleanly")
{
    SmallRationalField s;
    const Rational a = make_rational(3, 4), b = make_rational(-5, 6);
    CHECK(s.to_rational(s.add(s.from_rational(a), s.from_rational(b))) == a + b);
    CHECK(s.to_rational(s.mul(s.from_rational(a), s.from_rational(b))) == a * b);
    CHECK(s.to_rational(s.inv(s.from_rational(b))) == 1 / b);
    CHECK(s.to_rational(s.sub(s.from_rational(a), s.from_rational(a))) == 0);
    const auto big = s.from_rational(Rational(4000000000L));
    CHECK_THROWS_AS(s.mul(s.mul(big, big), big), SmallOverflow);
    Rational huge("123456789012345678901234567890");
    CHECK_THROWS_AS(s.from_rational(huge), SmallOverflow);
}
