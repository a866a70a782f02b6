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

#ifndef POLYMASK_LINALG_HPP
#define POLYMASK_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "polymask/polynomial.hpp"
#include "polymask/rational.hpp"

namespace polymask {

using Vec = std::vector<Rational>;

/// Dense square rational matrix, row-major, 0-based.
class Matrix {
   public:
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, Rational(0)) {}

    std::size_t dim() const noexcept { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    static Matrix identity(std::size_t dim);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

   private:
    std::size_t dim_;
    std::vector<Rational> data_;
};

/// diag(a^0, a^1, ..., a^n); ZeroDilation when a = 0.
Matrix dilation_matrix(const Rational& a, std::size_t n);

/// Upper triangular matrix pairing the coefficients of p with binomial
/// weights: entry (i, j) = p_{n-j+i} * binom(n-j+i, i) for i <= j, zero below.
/// The binomial's lower index is the ROW index; using the column index
/// instead looks plausible but breaks the refinement identity (see the
/// entry-formula arbitration test).  Diagonal entries are p_n * binom(n, i),
/// all nonzero, so the matrix is invertible.
Matrix coefficient_matrix(const Polynomial& p);

/// Power matrix of the negated shifts: entry (i, j) = (-shift_j)^(n-i), with
/// 0^0 = 1 so the bottom row is all ones.  DuplicateShifts when two shifts
/// coincide (the matrix would be singular).
Matrix vandermonde_matrix(std::span<const std::int64_t> shifts);

/// Same layout over arbitrary rational nodes: entry (i, j) = node_j^(n-i).
/// DuplicateNodes when two nodes coincide.
Matrix vandermonde_matrix_from_nodes(std::span<const Rational> nodes);

Vec mat_vec_mul(const Matrix& m, const Vec& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);

}  // namespace polymask

#endif
