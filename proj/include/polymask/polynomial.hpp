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

#ifndef POLYMASK_POLYNOMIAL_HPP
#define POLYMASK_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polymask/rational.hpp"

namespace polymask {

/// Univariate polynomial over the rationals, stored as the ascending
/// coefficient list (index k holds the coefficient of x^k).  The list is
/// nonempty and its last entry is nonzero, so degree() is always defined.
/// Construction strips trailing zeros; the zero polynomial is rejected
/// (ZeroPolynomial) because it has no degree.
class Polynomial {
   public:
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& leading() const noexcept { return coeffs_.back(); }

    /// Horner evaluation, exact.
    Rational eval(const Rational& x) const;

    /// Human-oriented rendering, highest power first: "x^2 + 1", "-x - 1".
    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

   private:
    std::vector<Rational> coeffs_;
};

/// q(x) = p(a*x - shift) by exact binomial expansion; a must be nonzero
/// (ZeroDilation otherwise) so the degree is preserved.
Polynomial affine_compose(const Polynomial& p, const Rational& a, std::int64_t shift);

/// Sum of weight*poly terms.  Returns nullopt when every coefficient cancels,
/// so callers can tell total cancellation apart from a valid polynomial.
std::optional<Polynomial> linear_combination(
    std::span<const std::pair<Rational, Polynomial>> terms);

}  // namespace polymask

#endif
