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

#ifndef POLYMASK_RATIONAL_HPP
#define POLYMASK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace polymask {

// Scalar-operation counter for the current thread: every Rational +, -, *, /
// and pow bumps it by one.  Comparisons, negation and copies do not count.
// The structured-vs-dense solver benchmarks read it through reset/read pairs.
std::uint64_t op_count() noexcept;
void reset_op_count() noexcept;

/// Arbitrary-precision rational scalar in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.  Immutable value
/// semantics; every operation is exact.
class Rational {
   public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // implicit on purpose: 0, 1, -3 read naturally
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws DivisionByZero
    Rational operator-() const;

    /// 1/x; throws DivisionByZero on zero.
    Rational inverse() const;

    /// x^e with 0^0 = 1; negative e inverts first (throws DivisionByZero on 0).
    Rational pow(long e) const;

    /// Canonical text form: "5/8", "-3/4", "2" (denominator omitted when 1).
    std::string str() const { return value_.get_str(); }

    /// Strict literal parser: optional '-', digits, optional '/' followed by
    /// digits whose value is positive.  Anything else (signs on the
    /// denominator, whitespace, empty fields, zero denominator) is rejected.
    static std::optional<Rational> parse(std::string_view text);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

   private:
    explicit Rational(mpq_class q) : value_(std::move(q)) {}

    mpq_class value_;  // invariant: canonical (mpq arithmetic preserves this)
};

inline Rational operator+(Rational a, const Rational& b) { return a += b; }
inline Rational operator-(Rational a, const Rational& b) { return a -= b; }
inline Rational operator*(Rational a, const Rational& b) { return a *= b; }
inline Rational operator/(Rational a, const Rational& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// binom(n, k) over arbitrary-precision integers.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace polymask

#endif
