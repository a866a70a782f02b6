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

#ifndef POLYMASK_ERRORS_HPP
#define POLYMASK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polymask {

// Base for all domain errors.  name() is the stable identifier the CLI puts
// in its error messages; the what() string carries context.
class DomainError : public std::runtime_error {
   public:
    DomainError(std::string_view name, const std::string& what)
        : std::runtime_error(what), name_(name) {}
    std::string_view name() const noexcept { return name_; }

   private:
    std::string_view name_;  // always a string literal
};

class ZeroPolynomial : public DomainError {
   public:
    explicit ZeroPolynomial(const std::string& what = "all coefficients are zero, degree is undefined")
        : DomainError("ZeroPolynomial", what) {}
};

class ZeroDilation : public DomainError {
   public:
    explicit ZeroDilation(const std::string& what = "dilation factor must be nonzero")
        : DomainError("ZeroDilation", what) {}
};

class DivisionByZero : public DomainError {
   public:
    explicit DivisionByZero(const std::string& what = "division by zero")
        : DomainError("DivisionByZero", what) {}
};

class DuplicateShifts : public DomainError {
   public:
    explicit DuplicateShifts(const std::string& what = "shifts must be pairwise distinct")
        : DomainError("DuplicateShifts", what) {}
};

class DuplicateNodes : public DomainError {
   public:
    explicit DuplicateNodes(const std::string& what = "nodes must be pairwise distinct")
        : DomainError("DuplicateNodes", what) {}
};

class ShiftCountMismatch : public DomainError {
   public:
    explicit ShiftCountMismatch(const std::string& what = "number of shifts must equal degree + 1")
        : DomainError("ShiftCountMismatch", what) {}
};

class DimensionMismatch : public DomainError {
   public:
    explicit DimensionMismatch(const std::string& what = "operand dimensions do not agree")
        : DomainError("DimensionMismatch", what) {}
};

class SingularMatrix : public DomainError {
   public:
    explicit SingularMatrix(const std::string& what = "matrix is singular")
        : DomainError("SingularMatrix", what) {}
};

class NotTriangular : public DomainError {
   public:
    explicit NotTriangular(const std::string& what = "matrix has a nonzero entry below the diagonal")
        : DomainError("NotTriangular", what) {}
};

}  // namespace polymask

#endif
