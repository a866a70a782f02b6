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

#include "polymask/refinement.hpp"

#include <string>
#include <utility>

#include "polymask/errors.hpp"
#include "polymask/solve.hpp"

namespace polymask {

RefinementProblem::RefinementProblem(Polynomial p, std::vector<std::int64_t> shifts,
                                     Rational dilation)
    : p_(std::move(p)), shifts_(std::move(shifts)), dilation_(std::move(dilation)) {
    if (dilation_.is_zero()) {
        throw ZeroDilation();
    }
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
        for (std::size_t j = i + 1; j < shifts_.size(); ++j) {
            if (shifts_[i] == shifts_[j]) {
                throw DuplicateShifts("shift " + std::to_string(shifts_[i]) +
                                      " appears more than once");
            }
        }
    }
    if (shifts_.size() != p_.degree() + 1) {
        throw ShiftCountMismatch("degree " + std::to_string(p_.degree()) + " needs " +
                                 std::to_string(p_.degree() + 1) + " shifts, got " +
                                 std::to_string(shifts_.size()));
    }
}

Mask compute_mask(const RefinementProblem& problem) {
    const Polynomial& p = problem.poly();
    const Rational& a = problem.dilation();
    const std::size_t n = p.degree();

    Vec y(n + 1, Rational(0));
    Rational a_pow(1);
    for (std::size_t i = 0; i <= n; ++i) {
        y[i] = p[i] / a_pow;
        a_pow *= a;
    }

    const Vec w = solve_upper_triangular(coefficient_matrix(p), y);

    Vec nodes;
    nodes.reserve(n + 1);
    for (std::int64_t shift : problem.shifts()) {
        nodes.push_back(-Rational(shift));
    }
    return solve_dual_vandermonde(nodes, w);
}

Mask compute_mask_oracle(const RefinementProblem& problem) {
    const Polynomial& p = problem.poly();
    const Matrix d = dilation_matrix(problem.dilation(), p.degree());
    const Matrix c = coefficient_matrix(p);
    const Matrix v = vandermonde_matrix(problem.shifts());
    return solve_exact(mat_mul(mat_mul(d, c), v), p.coeffs());
}

std::optional<Polynomial> expand_refinement(const Polynomial& p,
                                            std::span<const std::int64_t> shifts,
                                            const Rational& a, const Mask& mask) {
    if (mask.size() != shifts.size()) {
        throw DimensionMismatch("mask length " + std::to_string(mask.size()) +
                                " vs shift count " + std::to_string(shifts.size()));
    }
    if (shifts.empty()) {
        return std::nullopt;  // empty sum
    }
    std::vector<std::pair<Rational, Polynomial>> terms;
    terms.reserve(shifts.size());
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        terms.emplace_back(mask[i], affine_compose(p, a, shifts[i]));
    }
    return linear_combination(terms);
}

bool verify_refinement(const Polynomial& p, std::span<const std::int64_t> shifts,
                       const Rational& a, const Mask& mask) {
    const std::optional<Polynomial> rhs = expand_refinement(p, shifts, a, mask);
    return rhs.has_value() && *rhs == p;
}

}  // namespace polymask
