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

#ifndef POLYMASK_SOLVE_HPP
#define POLYMASK_SOLVE_HPP

#include <span>

#include "polymask/linalg.hpp"

namespace polymask {

/// Dense Gaussian elimination over the rationals.  Pivot selection is "first
/// nonzero in the column" (exact arithmetic needs no numerical pivoting), so
/// runs are fully deterministic.  SingularMatrix when some column has no
/// nonzero pivot.  O(n^3) scalar operations; this is the oracle the
/// structured solvers are validated against.
Vec solve_exact(const Matrix& m, const Vec& b);

/// Back substitution.  NotTriangular if anything nonzero sits below the
/// diagonal, SingularMatrix if a diagonal entry is zero.  O(n^2).
Vec solve_upper_triangular(const Matrix& u, const Vec& b);

/// Solves V*x = b where V is the descending-power matrix of the given nodes
/// (V(i,j) = node_j^(n-i), the layout vandermonde_matrix_from_nodes builds).
/// O(n^2) scalar operations via the classical Lagrange route: build the monic
/// master polynomial M(x) = prod (x - node_j); for each node deflate M by
/// (x - node_i) synthetically, giving Q_i with Q_i(node_j) = 0 for j != i;
/// then x_i = <coeffs(Q_i), moments> / Q_i(node_i), where the moment vector
/// is b read in ascending-power order.  DuplicateNodes when nodes coincide,
/// DimensionMismatch when lengths differ.  Agrees exactly with
/// solve_exact on the same system.
Vec solve_dual_vandermonde(std::span<const Rational> nodes, const Vec& b);

}  // namespace polymask

#endif
