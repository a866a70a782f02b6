/*
   Copyright 2026 The polymask Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include "doctest.h"
#include "polymask/errors.hpp"
#include "polymask/rational.hpp"
#include "test_support.hpp"

using polymask::Rational;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, -8).str() == "3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(7).num() == 7);
    CHECK(Rational(7).den() == 1);
}

TEST_CASE("zero denominator is rejected at construction") {
    CHECK_THROWS_AS(Rational(1, 0), polymask::DivisionByZero);
    CHECK_THROWS_AS(Rational(0, 0), polymask::DivisionByZero);
}

TEST_CASE("field arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK((Rational(2, 3) - Rational(2, 3)).is_zero());
    // The float classic: exact here.
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), polymask::DivisionByZero);
    Rational r(5, 3);
    CHECK_THROWS_AS(r /= Rational(0), polymask::DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), polymask::DivisionByZero);
}

TEST_CASE("inverse and negation") {
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
    CHECK((-Rational(2, 3)).str() == "-2/3");
    CHECK(-(-Rational(5)) == Rational(5));
}

TEST_CASE("pow with integer exponents, including zero and negatives") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(0).pow(3) == Rational(0));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(-2).pow(2) == Rational(4));
    CHECK_THROWS_AS(Rational(0).pow(-1), polymask::DivisionByZero);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7, 7) <= Rational(1));
    CHECK(Rational(3, 2) > Rational(1));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("sign and zero tests") {
    CHECK(Rational(3, 4).sign() == 1);
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 1000).is_zero());
}

TEST_CASE("parse accepts exactly the literal grammar") {
    auto parsed = [](std::string_view s) { return Rational::parse(s); };

    REQUIRE(parsed("5/8").has_value());
    CHECK(*parsed("5/8") == Rational(5, 8));
    CHECK(*parsed("-3/4") == Rational(-3, 4));
    CHECK(*parsed("2") == Rational(2));
    CHECK(*parsed("-2") == Rational(-2));
    CHECK(*parsed("0") == Rational(0));
    CHECK(*parsed("6/8") == Rational(3, 4));  // value reduces even if the text does not
    CHECK(*parsed("007") == Rational(7));

    CHECK_FALSE(parsed("").has_value());
    CHECK_FALSE(parsed("-").has_value());
    CHECK_FALSE(parsed("+3").has_value());
    CHECK_FALSE(parsed("3/").has_value());
    CHECK_FALSE(parsed("/3").has_value());
    CHECK_FALSE(parsed("3/-4").has_value());
    CHECK_FALSE(parsed("-3/-4").has_value());
    CHECK_FALSE(parsed("1/0").has_value());
    CHECK_FALSE(parsed("3/0").has_value());
    CHECK_FALSE(parsed(" 2").has_value());
    CHECK_FALSE(parsed("2 ").has_value());
    CHECK_FALSE(parsed("1.5").has_value());
    CHECK_FALSE(parsed("1e3").has_value());
    CHECK_FALSE(parsed("3//4").has_value());
    CHECK_FALSE(parsed("a").has_value());
}

TEST_CASE("str and parse round trip on random values") {
    std::mt19937_64 rng(0x5eed0001);
    for (int i = 0; i < 200; ++i) {
        const Rational r = polymask::test::random_rational(rng, 100000, 100000);
        const auto back = Rational::parse(r.str());
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
}

TEST_CASE("operation counter counts scalar field operations") {
    const Rational a(3, 7);
    const Rational b(-2, 5);

    polymask::reset_op_count();
    CHECK(polymask::op_count() == 0);

    (void)(a + b);
    CHECK(polymask::op_count() == 1);
    (void)(a - b);
    CHECK(polymask::op_count() == 2);
    (void)(a * b);
    CHECK(polymask::op_count() == 3);
    (void)(a / b);
    CHECK(polymask::op_count() == 4);
    (void)a.inverse();
    CHECK(polymask::op_count() == 5);
    (void)a.pow(9);
    CHECK(polymask::op_count() == 6);

    // Comparisons, negation and copies are bookkeeping, not arithmetic.
    (void)(a == b);
    (void)(a < b);
    (void)(-a);
    Rational copy = a;
    (void)copy;
    CHECK(polymask::op_count() == 6);

    polymask::reset_op_count();
    CHECK(polymask::op_count() == 0);
}

TEST_CASE("binomial coefficients") {
    CHECK(polymask::binomial(0, 0) == 1);
    CHECK(polymask::binomial(5, 2) == 10);
    CHECK(polymask::binomial(10, 10) == 1);
    CHECK(polymask::binomial(10, 0) == 1);
    CHECK(polymask::binomial(5, 7) == 0);
    CHECK(polymask::binomial(30, 15) == 155117520);
    // Pascal rule spot check high up.
    CHECK(polymask::binomial(40, 20) == polymask::binomial(39, 19) + polymask::binomial(39, 20));
}
