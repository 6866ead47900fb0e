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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mumeb/linalg.hpp"
#include "mumeb/numeric.hpp"

namespace mumeb {
namespace {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& gen) {
    std::normal_distribution<double> dist;
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = {dist(gen), dist(gen)};
    }
    return m;
}

// Textbook triple loop, kept independent of the library kernels.
ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex s{};
            for (std::size_t l = 0; l < a.cols(); ++l) s += a(i, l) * b(l, j);
            c(i, j) = s;
        }
    }
    return c;
}

// G(i, j) = <row i of a, row j of b>.
ComplexMatrix naive_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix g(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            for (std::size_t x = 0; x < a.cols(); ++x) g(i, j) += std::conj(a(i, x)) * b(j, x);
        }
    }
    return g;
}

TEST(Linalg, MatmulAgreesWithNaiveProduct) {
    std::mt19937 gen(7);
    const auto a = random_matrix(5, 7, gen), b = random_matrix(7, 3, gen);
    EXPECT_LT(max_abs_diff(matmul(a, b), naive_product(a, b)), 1e-12);
    EXPECT_THROW(matmul(a, a), PreconditionError);
}

TEST(Linalg, AdjointProductAndRowInnerProducts) {
    std::mt19937 gen(11);
    const auto a = random_matrix(6, 4, gen), b = random_matrix(6, 5, gen);
    EXPECT_LT(max_abs_diff(adjoint_product(a, b), naive_product(conj_transpose(a), b)), 1e-12);

    const auto r = random_matrix(4, 9, gen), t = random_matrix(6, 9, gen);
    const auto g = row_inner_products(r, t);
    ASSERT_EQ(g.rows(), 4u);
    ASSERT_EQ(g.cols(), 6u);
    EXPECT_LT(max_abs_diff(g, naive_inner(r, t)), 1e-12);
}

TEST(Linalg, RowInnerProductsSparsePathMatchesDense) {
    std::mt19937 gen(13);
    const auto dense = random_matrix(16, 16, gen);
    ComplexMatrix sparse(16, 16);
    for (std::size_t i = 0; i < 16; ++i) sparse(i, (3 * i + 1) % 16) = {0.0, 1.0};
    EXPECT_LT(max_abs_diff(row_inner_products(sparse, dense), naive_inner(sparse, dense)), 1e-12);
    EXPECT_LT(max_abs_diff(row_inner_products(dense, sparse), naive_inner(dense, sparse)), 1e-12);
    EXPECT_LT(max_abs_diff(row_inner_products(dense, dense), naive_inner(dense, dense)), 1e-12);
}

TEST(Linalg, TensorMixedProductAndAssociativity) {
    std::mt19937 gen(3);
    const auto a = random_matrix(2, 3, gen), b = random_matrix(3, 2, gen);
    const auto c = random_matrix(3, 3, gen), d = random_matrix(3, 2, gen);
    EXPECT_LT(max_abs_diff(matmul(tensor(a, c), tensor(b, d)), tensor(matmul(a, b), matmul(c, d))), 1e-12);
    EXPECT_LT(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-12);
    const auto t = tensor(a, c);
    EXPECT_EQ(t(1 * 3 + 2, 2 * 3 + 0), a(1, 2) * c(2, 0));
}

TEST(Linalg, UnitarityCheck) {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix h(2, 2, {s, s, s, -s});
    EXPECT_TRUE(is_unitary(h, 1e-12).unitary);
    const ComplexMatrix bad(2, 2, {1.0, 0.1, 0.0, 1.0});
    const auto check = is_unitary(bad, 1e-9);
    EXPECT_FALSE(check.unitary);
    EXPECT_NEAR(check.max_deviation, 0.1, 1e-12);
    EXPECT_THROW(is_unitary(ComplexMatrix(2, 3), 1e-9), PreconditionError);
}

TEST(Linalg, ReducedDensityExamples) {
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector bell{{s, 0.0, 0.0, s}};
    EXPECT_LT(reduced_density_check(bell, 2, 2), 1e-15);
    const StateVector product{{1.0, 0.0, 0.0, 0.0}};
    EXPECT_NEAR(reduced_density_check(product, 2, 2), 0.5, 1e-15);
    // C^2 x C^4 with Schmidt vectors |0>,|1> on the larger side.
    const StateVector wide{{s, 0.0, 0.0, 0.0, 0.0, s, 0.0, 0.0}};
    EXPECT_LT(reduced_density_check(wide, 2, 4), 1e-15);
    EXPECT_NEAR(bell.norm(), 1.0, 1e-15);
}

}  // namespace
}  // namespace mumeb
