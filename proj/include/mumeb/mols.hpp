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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mumeb/linalg.hpp"

namespace mumeb {

/// Malformed MOLS text (bad header, missing rows, non-numeric tokens).
class MolsParseError : public std::runtime_error {
public:
    MolsParseError(const std::string& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A symbol repeats within a row or column of one square.
class LatinViolation : public std::runtime_error {
public:
    LatinViolation(std::size_t square, std::size_t row, std::size_t col, std::uint32_t symbol,
                   const std::string& detail);
    std::size_t square() const noexcept { return square_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t square_, row_, col_;
};

/// Two squares superimpose to a repeated ordered pair.
class OrthogonalityViolation : public std::runtime_error {
public:
    struct Cell {
        std::size_t row, col;
    };
    OrthogonalityViolation(std::size_t first, std::size_t second, Cell a, Cell b);
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }
    Cell cell_a() const noexcept { return a_; }
    Cell cell_b() const noexcept { return b_; }

private:
    std::size_t first_, second_;
    Cell a_, b_;
};

class LatinSquare {
public:
    /// Throws LatinViolation (square index 0) if a row or column repeats a symbol.
    LatinSquare(std::size_t order, std::vector<std::uint32_t> cells);

    std::size_t order() const noexcept { return order_; }
    std::uint32_t at(std::size_t row, std::size_t col) const { return cells_[row * order_ + col]; }
    const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::size_t order_;
    std::vector<std::uint32_t> cells_;
};

struct IncidenceVector {
    std::vector<std::uint8_t> bits;
    std::vector<std::size_t> support;  // ascending

    static IncidenceVector from_support(std::size_t length, std::vector<std::size_t> support);
    std::size_t weight() const noexcept { return support.size(); }
};

/// n blocks of x incidence vectors on x^2 points.
struct Net {
    std::size_t n = 0;
    std::size_t x = 0;
    std::vector<std::vector<IncidenceVector>> blocks;
};

/// Unit-modulus x-by-x matrix with H H^dagger = x I.
class GeneralizedHadamard {
public:
    explicit GeneralizedHadamard(ComplexMatrix entries);
    static GeneralizedHadamard fourier(std::size_t x);

    std::size_t order() const noexcept { return entries_.rows(); }
    const ComplexMatrix& entries() const noexcept { return entries_; }

private:
    ComplexMatrix entries_;
};

/// L_a(i, j) = a*i + j over F_x for every nonzero a: x - 1 squares.
std::vector<LatinSquare> mols_prime_power(std::size_t x);

/// Product construction on order x1*x2; pairs the t-th squares of each set.
std::vector<LatinSquare> mols_macneish(const std::vector<LatinSquare>& first,
                                       const std::vector<LatinSquare>& second);

/// Prime-power set for prime powers, otherwise the MacNeish product of the
/// prime-power factors (min(q_i) - 1 squares).
std::vector<LatinSquare> mols_for_order(std::size_t x);

bool check_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Throws OrthogonalityViolation naming the first failing pair and cells.
void validate_mols(std::span<const LatinSquare> squares);

/// Rows, columns, then one block per square (cells holding each symbol).
Net net_from_mols(std::span<const LatinSquare> squares, std::size_t order);

struct NetCheck {
    bool ok = true;
    std::string message;
};

/// Exhaustive check of within-block disjointness and unit cross intersection.
NetCheck check_net(const Net& net);

/// h placed on the support of m in ascending order.
std::vector<Complex> embed(std::span<const Complex> h, const IncidenceVector& m);

/// One k x k matrix per block; column i*x + l is (h_l embedded on m_bi) / sqrt(x).
std::vector<ComplexMatrix> mubs_from_net(const Net& net, const GeneralizedHadamard& h);

/// A validated set of mutually orthogonal Latin squares of one order.
struct MolsSet {
    std::size_t order = 0;
    std::vector<LatinSquare> squares;
};

/// Text format: "x w", then w blank-line separated blocks of x rows.
MolsSet parse_mols(std::istream& in);
MolsSet import_mols(const std::string& path);
void write_mols(std::ostream& out, std::span<const LatinSquare> squares, std::size_t order);

}  // namespace mumeb
