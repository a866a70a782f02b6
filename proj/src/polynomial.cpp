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

#include "polymask/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "polymask/errors.hpp"

namespace polymask {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        throw ZeroPolynomial();
    }
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (auto it = coeffs_.crbegin() + 1; it != coeffs_.crend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string Polynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero() && coeffs_.size() > 1) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            os << mag.str();
            if (k > 0) os << " ";
        }
        if (k == 1) {
            os << "x";
        } else if (k > 1) {
            os << "x^" << k;
        }
    }
    return os.str();
}

Polynomial affine_compose(const Polynomial& p, const Rational& a, std::int64_t shift) {
    if (a.is_zero()) {
        throw ZeroDilation("affine composition with zero scale would collapse the degree");
    }
    const std::size_t n = p.degree();

    // (a*x - s)^k expanded term by term: binom(k,j) * a^j * (-s)^(k-j) * x^j.
    std::vector<Rational> a_pow(n + 1), s_pow(n + 1);
    const Rational neg_shift(mpz_class(-mpz_class(static_cast<long>(shift))), mpz_class(1));
    a_pow[0] = 1;
    s_pow[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        a_pow[k] = a_pow[k - 1] * a;
        s_pow[k] = s_pow[k - 1] * neg_shift;
    }

    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        if (p[k].is_zero()) continue;
        for (std::size_t j = 0; j <= k; ++j) {
            const Rational term =
                p[k] * Rational(binomial(static_cast<unsigned long>(k),
                                         static_cast<unsigned long>(j)),
                                mpz_class(1));
            out[j] += term * a_pow[j] * s_pow[k - j];
        }
    }
    // Leading coefficient is p_n * a^n, nonzero by hypothesis: no trimming happens.
    return Polynomial(std::move(out));
}

std::optional<Polynomial> linear_combination(
    std::span<const std::pair<Rational, Polynomial>> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("linear combination needs at least one term");
    }
    std::size_t max_deg = 0;
    for (const auto& [weight, poly] : terms) {
        max_deg = std::max(max_deg, poly.degree());
    }
    std::vector<Rational> acc(max_deg + 1, Rational(0));
    for (const auto& [weight, poly] : terms) {
        for (std::size_t k = 0; k <= poly.degree(); ++k) {
            acc[k] += weight * poly[k];
        }
    }
    bool all_zero = true;
    for (const Rational& c : acc) {
        if (!c.is_zero()) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) return std::nullopt;
    return Polynomial(std::move(acc));
}

}  // namespace polymask
