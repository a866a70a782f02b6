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

#include "polymask/linalg.hpp"

#include <stdexcept>

#include "polymask/errors.hpp"

namespace polymask {

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix dilation_matrix(const Rational& a, std::size_t n) {
    if (a.is_zero()) {
        throw ZeroDilation();
    }
    Matrix d(n + 1);
    d(0, 0) = Rational(1);
    for (std::size_t i = 1; i <= n; ++i) {
        d(i, i) = d(i - 1, i - 1) * a;
    }
    return d;
}

Matrix coefficient_matrix(const Polynomial& p) {
    const std::size_t n = p.degree();
    Matrix c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            const std::size_t k = n - j + i;  // coefficient index, runs i..n
            c(i, j) = p[k] * Rational(binomial(static_cast<unsigned long>(k),
                                               static_cast<unsigned long>(i)),
                                      mpz_class(1));
        }
    }
    return c;
}

Matrix vandermonde_matrix_from_nodes(std::span<const Rational> nodes) {
    const std::size_t count = nodes.size();
    if (count == 0) {
        throw std::invalid_argument("at least one node is required");
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            if (nodes[i] == nodes[j]) {
                throw DuplicateNodes("nodes " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide");
            }
        }
    }
    const std::size_t n = count - 1;
    Matrix v(count);
    // Column j holds descending powers of node_j; pow(0) = 1 even for node 0.
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t i = 0; i < count; ++i) {
            v(i, j) = nodes[j].pow(static_cast<long>(n - i));
        }
    }
    return v;
}

Matrix vandermonde_matrix(std::span<const std::int64_t> shifts) {
    if (shifts.empty()) {
        throw std::invalid_argument("at least one shift is required");
    }
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        for (std::size_t j = i + 1; j < shifts.size(); ++j) {
            if (shifts[i] == shifts[j]) {
                throw DuplicateShifts("shift " + std::to_string(shifts[i]) +
                                      " appears more than once");
            }
        }
    }
    Vec nodes;
    nodes.reserve(shifts.size());
    for (std::int64_t s : shifts) {
        nodes.push_back(Rational(mpz_class(-mpz_class(static_cast<long>(s))), mpz_class(1)));
    }
    return vandermonde_matrix_from_nodes(nodes);
}

Vec mat_vec_mul(const Matrix& m, const Vec& v) {
    if (v.size() != m.dim()) {
        throw DimensionMismatch("matrix dimension " + std::to_string(m.dim()) +
                                " vs vector length " + std::to_string(v.size()));
    }
    Vec out(m.dim(), Rational(0));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    Matrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.dim(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

}  // namespace polymask
