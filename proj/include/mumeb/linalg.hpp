// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mumeb {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> entries() const noexcept { return data_; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// A pure state; basis vectors are expected to have unit norm.
struct StateVector {
    std::vector<Complex> amplitudes;

    std::size_t dim() const noexcept { return amplitudes.size(); }
    double norm() const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Kronecker product; row (i_a, i_b) maps to i_a * b.rows() + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// a^dagger * b without materialising the adjoint.
ComplexMatrix adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// G(i, j) = <a_i | b_j> where a_i, b_j are the rows of a and b.
ComplexMatrix row_inner_products(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix scale(const ComplexMatrix& a, Complex c);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct UnitarityCheck {
    bool unitary = false;
    double max_deviation = 0.0;
};

/// max |(A^dagger A - I)_{ij}| compared against tol. Throws on non-square input.
UnitarityCheck is_unitary(const ComplexMatrix& a, double tol);

/// Reshapes v into the d x d2 coefficient matrix M (row = subsystem A index)
/// and returns max |(M M^dagger)_{ij} - delta_{ij} / d|.
double reduced_density_check(std::span<const Complex> v, std::size_t d, std::size_t d2);
double reduced_density_check(const StateVector& v, std::size_t d, std::size_t d2);

}  // namespace mumeb
