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

#include "mumeb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mumeb/numeric.hpp"

#include <cblas.h>

namespace mumeb {
namespace {

// std::complex operator* carries inf/nan recovery that blocks vectorisation.
inline Complex cmul(Complex x, Complex y) {
    return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

inline Complex cmul_conj(Complex x, Complex y) {  // conj(x) * y
    return {x.real() * y.real() + x.imag() * y.imag(), x.real() * y.imag() - x.imag() * y.real()};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw PreconditionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw PreconditionError("matmul: dimension mismatch " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) out[j] += cmul(aik, brow[j]);
        }
    }
    return c;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    }
    return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex x = a(ia, ja);
            if (x == Complex{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = cmul(x, b(ib, jb));
                }
            }
        }
    }
    return c;
}

ComplexMatrix adjoint_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("adjoint_product: dimension mismatch");
    ComplexMatrix c(a.cols(), b.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const auto arow = a.row(k);
        const auto brow = b.row(k);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const Complex x = std::conj(arow[i]);
            if (x == Complex{}) continue;
            auto out = c.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j) out[j] += cmul(x, brow[j]);
        }
    }
    return c;
}

namespace {

std::size_t count_nonzero(const ComplexMatrix& m) {
    return static_cast<std::size_t>(
        std::count_if(m.entries().begin(), m.entries().end(), [](Complex z) { return z != Complex{}; }));
}

// y += c * x over n complex values, written on doubles so it vectorizes.
void axpy(Complex c, const Complex* x, Complex* y, std::size_t n) {
    const double cr = c.real(), ci = c.imag();
    const double* __restrict xs = reinterpret_cast<const double*>(x);
    double* __restrict ys = reinterpret_cast<double*>(y);
    for (std::size_t j = 0; j < n; ++j) {
        const double xr = xs[2 * j], xi = xs[2 * j + 1];
        ys[2 * j] += cr * xr - ci * xi;
        ys[2 * j + 1] += cr * xi + ci * xr;
    }
}

// G(i, :) += conj(a_ix) * b(:, x) over the nonzeros of each row of a.
ComplexMatrix sparse_rows_times_dense(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = b.rows();
    const bool b_sparse = count_nonzero(b) * 8 <= b.rows() * b.cols();
    // Column x of b as (j, b_jx) pairs when b is sparse, else as a dense row of b^T.
    std::vector<std::vector<std::pair<std::size_t, Complex>>> cols(b_sparse ? b.cols() : 0);
    ComplexMatrix bt(b_sparse ? 0 : b.cols(), b_sparse ? 0 : n);
    if (b_sparse) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto brow = b.row(j);
            for (std::size_t x = 0; x < brow.size(); ++x) {
                if (brow[x] != Complex{}) cols[x].emplace_back(j, brow[x]);
            }
        }
    } else {
        constexpr std::size_t kTile = 32;  // tiled transpose keeps both sides in cache
        for (std::size_t j0 = 0; j0 < n; j0 += kTile) {
            for (std::size_t x0 = 0; x0 < b.cols(); x0 += kTile) {
                const std::size_t j1 = std::min(n, j0 + kTile), x1 = std::min(b.cols(), x0 + kTile);
                for (std::size_t j = j0; j < j1; ++j) {
                    for (std::size_t x = x0; x < x1; ++x) bt(x, j) = b(j, x);
                }
            }
        }
    }
    ComplexMatrix g(a.rows(), n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* out = g.row(i).data();
        const auto arow = a.row(i);
        for (std::size_t x = 0; x < arow.size(); ++x) {
            if (arow[x] == Complex{}) continue;
            const Complex c = std::conj(arow[x]);
            if (b_sparse) {
                for (const auto& [j, v] : cols[x]) out[j] += cmul(c, v);
            } else {
                axpy(c, bt.row(x).data(), out, n);
            }
        }
    }
    return g;
}

}  // namespace

ComplexMatrix row_inner_products(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("row_inner_products: dimension mismatch");
    // Skip zeros exactly when one side is sparse (permutation generators give
    // bases with one nonzero per block); otherwise use a dense zgemm.
    const std::size_t total = a.rows() * a.cols();
    if (total > 0 && count_nonzero(a) * 8 <= total) return sparse_rows_times_dense(a, b);
    if (total > 0 && count_nonzero(b) * 8 <= b.rows() * b.cols()) {
        const ComplexMatrix h = sparse_rows_times_dense(b, a);  // h(j, i) = conj(G(i, j))
        ComplexMatrix g(a.rows(), b.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < b.rows(); ++j) g(i, j) = std::conj(h(j, i));
        }
        return g;
    }
    // G = conj(A) B^T in one call (ConjNoTrans is an OpenBLAS extension).
    const auto m = static_cast<blasint>(a.rows());
    const auto n = static_cast<blasint>(b.rows());
    const auto kk = static_cast<blasint>(a.cols());
    ComplexMatrix g(a.rows(), b.rows());
    const Complex one{1.0, 0.0}, zero{0.0, 0.0};
    if (m > 0 && n > 0 && kk > 0) {
        cblas_zgemm3m(CblasRowMajor, CblasConjNoTrans, CblasTrans, m, n, kk, &one, a.entries().data(), kk,
                      b.entries().data(), kk, &zero, g.row(0).data(), n);
    }
    return g;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex c) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    }
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw PreconditionError("max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
    return m;
}

UnitarityCheck is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.square()) throw PreconditionError("is_unitary: matrix is not square");
    const ComplexMatrix g = adjoint_product(a, a);
    const double dev = max_abs_diff(g, ComplexMatrix::identity(a.rows()));
    return {dev <= tol, dev};
}

double reduced_density_check(std::span<const Complex> v, std::size_t d, std::size_t d2) {
    if (v.size() != d * d2) {
        throw PreconditionError("reduced_density_check: vector of dimension " +
                                std::to_string(v.size()) + " is not " + std::to_string(d) + "x" +
                                std::to_string(d2));
    }
    if (d > d2) throw PreconditionError("reduced_density_check: need d <= d2");
    double dev = 0.0;
    const double diag = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Complex s{};
            for (std::size_t t = 0; t < d2; ++t) s += cmul_conj(v[j * d2 + t], v[i * d2 + t]);
            const double target = i == j ? diag : 0.0;
            dev = std::max(dev, std::abs(s - target));
        }
    }
    return dev;
}

double reduced_density_check(const StateVector& v, std::size_t d, std::size_t d2) {
    return reduced_density_check(std::span<const Complex>(v.amplitudes), d, d2);
}

}  // namespace mumeb
