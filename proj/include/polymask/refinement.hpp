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

#ifndef POLYMASK_REFINEMENT_HPP
#define POLYMASK_REFINEMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polymask/linalg.hpp"
#include "polymask/polynomial.hpp"

namespace polymask {

/// Mask entry k is the weight of the term p(a*x - shift_k); entries align
/// index-by-index with the shift list they were computed for.
using Mask = Vec;

/// A polynomial together with the data of its refinement equation
///     p(x) = sum_i mask_i * p(a*x - shift_i).
/// Construction enforces everything the mask computation needs: dilation
/// nonzero (ZeroDilation), shifts pairwise distinct (DuplicateShifts), and
/// exactly degree+1 shifts (ShiftCountMismatch).  Fewer shifts leave the
/// system unsolvable in general and more make the mask non-unique, so both
/// are rejected instead of picking an arbitrary answer.
class RefinementProblem {
   public:
    RefinementProblem(Polynomial p, std::vector<std::int64_t> shifts, Rational dilation);

    const Polynomial& poly() const noexcept { return p_; }
    const std::vector<std::int64_t>& shifts() const noexcept { return shifts_; }
    const Rational& dilation() const noexcept { return dilation_; }

   private:
    Polynomial p_;
    std::vector<std::int64_t> shifts_;
    Rational dilation_;
};

/// The unique mask m with D*C*V*m = p, where D = dilation_matrix,
/// C = coefficient_matrix, V = vandermonde_matrix.  Solved structurally,
/// never by dense elimination: undo the diagonal (y_i = p_i / a^i), back
/// substitute through C, then solve the power system on the negated shifts.
/// Total cost O(n^2) scalar operations.  Succeeds on every valid problem;
/// D, C and V are each invertible by construction.
Mask compute_mask(const RefinementProblem& problem);

/// Same mask via the dense route: assemble the product matrix D*C*V and run
/// Gaussian elimination.  O(n^3); exists to cross-check compute_mask, which
/// must agree with it entry for entry.
Mask compute_mask_oracle(const RefinementProblem& problem);

/// Right-hand side of the refinement equation, expanded symbolically:
/// sum_i mask_i * p(a*x - shift_i).  Returns nullopt when every coefficient
/// cancels (for instance under an all-zero mask).  DimensionMismatch when
/// mask and shift lengths differ.  Any number of shifts is accepted here;
/// the identity makes sense for arbitrary finite support.
std::optional<Polynomial> expand_refinement(const Polynomial& p,
                                            std::span<const std::int64_t> shifts,
                                            const Rational& a, const Mask& mask);

/// True iff the refinement identity holds exactly: the expansion above is
/// compared to p coefficient by coefficient, never by sampling.
bool verify_refinement(const Polynomial& p, std::span<const std::int64_t> shifts,
                       const Rational& a, const Mask& mask);

}  // namespace polymask

#endif
