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

#include "polymask/solve.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "polymask/errors.hpp"

namespace polymask {

Vec solve_exact(const Matrix& m, const Vec& b) {
    const std::size_t n = m.dim();
    if (b.size() != n) {
        throw DimensionMismatch("matrix dimension " + std::to_string(n) +
                                " vs vector length " + std::to_string(b.size()));
    }
    Matrix a = m;
    Vec rhs = b;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrix("no nonzero pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
            }
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Rational factor = a(i, col) / a(col, col);
            a(i, col) = Rational(0);
            for (std::size_t j = col + 1; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
            }
            rhs[i] -= factor * rhs[col];
        }
    }

    Vec x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= a(i, j) * x[j];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

Vec solve_upper_triangular(const Matrix& u, const Vec& b) {
    const std::size_t n = u.dim();
    if (b.size() != n) {
        throw DimensionMismatch("matrix dimension " + std::to_string(n) +
                                " vs vector length " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!u(i, j).is_zero()) {
                throw NotTriangular("nonzero entry at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (u(i, i).is_zero()) {
            throw SingularMatrix("zero diagonal entry at " + std::to_string(i));
        }
    }
    Vec x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= u(i, j) * x[j];
        }
        x[i] = acc / u(i, i);
    }
    return x;
}

Vec solve_dual_vandermonde(std::span<const Rational> nodes, const Vec& b) {
    const std::size_t n = nodes.size();
    if (n == 0) {
        throw std::invalid_argument("at least one node is required");
    }
    if (b.size() != n) {
        throw DimensionMismatch("node count " + std::to_string(n) +
                                " vs vector length " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (nodes[i] == nodes[j]) {
                throw DuplicateNodes("nodes " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide");
            }
        }
    }

    // Row i of the system fixes the moment of order n-1-i; flip b so that
    // moments[k] goes with power k.
    Vec moments(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        moments[k] = b[n - 1 - k];
    }

    // Monic master polynomial prod_j (x - node_j), ascending coefficients.
    Vec master(n + 1, Rational(0));
    master[0] = Rational(1);
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        master[deg + 1] = master[deg];
        for (std::size_t k = deg; k >= 1; --k) {
            master[k] = master[k - 1] - nodes[j] * master[k];
        }
        master[0] = -(nodes[j] * master[0]);
        ++deg;
    }

    Vec x(n, Rational(0));
    Vec q(n, Rational(0));  // deflated coefficients, reused per node
    for (std::size_t i = 0; i < n; ++i) {
        // Q_i = master / (x - node_i), exact synthetic division.
        q[n - 1] = master[n];
        for (std::size_t k = n - 1; k-- > 0;) {
            q[k] = master[k + 1] + nodes[i] * q[k + 1];
        }
        // Denominator Q_i(node_i) = prod_{j != i} (node_i - node_j), never zero.
        Rational denom = q[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) {
            denom = denom * nodes[i] + q[k];
        }
        Rational numer = q[0] * moments[0];
        for (std::size_t k = 1; k < n; ++k) {
            numer += q[k] * moments[k];
        }
        x[i] = numer / denom;
    }
    return x;
}

}  // namespace polymask
