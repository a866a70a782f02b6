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

#include "polymask/rational.hpp"

#include <cctype>
#include <ostream>

#include "polymask/errors.hpp"

namespace polymask {

namespace {
thread_local std::uint64_t g_op_count = 0;
}

std::uint64_t op_count() noexcept { return g_op_count; }
void reset_op_count() noexcept { g_op_count = 0; }

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    ++g_op_count;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    ++g_op_count;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    ++g_op_count;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    ++g_op_count;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    ++g_op_count;
    return Rational(std::move(inv));
}

Rational Rational::pow(long e) const {
    if (e == 0) {
        ++g_op_count;
        return Rational(1);  // includes 0^0 = 1 (empty product)
    }
    const Rational base = e > 0 ? *this : inverse();
    const auto exp = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.value_.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.value_.get_mpq_t()), exp);
    // gcd(num, den) = 1 implies gcd(num^e, den^e) = 1: still canonical.
    ++g_op_count;
    return Rational(std::move(out));
}

std::optional<Rational> Rational::parse(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) return std::nullopt;
    }
    if (!num.empty() && num.front() == '-') num.remove_prefix(1);
    if (!all_digits(num)) return std::nullopt;

    mpz_class n(std::string(text.substr(0, text.find('/'))), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (sgn(d) == 0) return std::nullopt;  // grammar wants a positive denominator
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace polymask
