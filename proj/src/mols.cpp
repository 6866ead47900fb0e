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

#include "mumeb/mols.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "mumeb/finite_field.hpp"
#include "mumeb/numeric.hpp"
#include "mumeb/product_ring.hpp"

namespace mumeb {
namespace {

std::string cell_text(std::size_t row, std::size_t col) {
    return "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

void check_latin(std::size_t order, const std::vector<std::uint32_t>& cells, std::size_t square) {
    if (order == 0) throw PreconditionError("LatinSquare: order must be positive");
    if (cells.size() != order * order) {
        throw PreconditionError("LatinSquare: expected " + std::to_string(order * order) +
                                " cells");
    }
    for (std::size_t i = 0; i < order; ++i) {
        std::vector<bool> in_row(order, false), in_col(order, false);
        for (std::size_t j = 0; j < order; ++j) {
            const std::uint32_t r = cells[i * order + j];
            if (r >= order) {
                throw LatinViolation(square, i, j, r, "symbol out of range");
            }
            if (in_row[r]) throw LatinViolation(square, i, j, r, "symbol repeats in row");
            in_row[r] = true;
            const std::uint32_t c = cells[j * order + i];
            if (c >= order) throw LatinViolation(square, j, i, c, "symbol out of range");
            if (in_col[c]) throw LatinViolation(square, j, i, c, "symbol repeats in column");
            in_col[c] = true;
        }
    }
}

// First cell pair (in row-major order) sharing an ordered symbol pair.
bool find_repeat(const LatinSquare& a, const LatinSquare& b, OrthogonalityViolation::Cell& first,
                 OrthogonalityViolation::Cell& second) {
    const std::size_t x = a.order();
    std::vector<std::size_t> seen(x * x, SIZE_MAX);
    for (std::size_t i = 0; i < x; ++i) {
        for (std::size_t j = 0; j < x; ++j) {
            const std::size_t key = std::size_t{a.at(i, j)} * x + b.at(i, j);
            if (seen[key] != SIZE_MAX) {
                first = {seen[key] / x, seen[key] % x};
                second = {i, j};
                return true;
            }
            seen[key] = i * x + j;
        }
    }
    return false;
}

}  // namespace

MolsParseError::MolsParseError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

LatinViolation::LatinViolation(std::size_t square, std::size_t row, std::size_t col,
                               std::uint32_t symbol, const std::string& detail)
    : std::runtime_error("Latin violation in square " + std::to_string(square) + " at " +
                         cell_text(row, col) + ": " + detail + " (symbol " +
                         std::to_string(symbol) + ")"),
      square_(square),
      row_(row),
      col_(col) {}

OrthogonalityViolation::OrthogonalityViolation(std::size_t first, std::size_t second, Cell a,
                                               Cell b)
    : std::runtime_error("squares " + std::to_string(first) + " and " + std::to_string(second) +
                         " are not orthogonal: cells " + cell_text(a.row, a.col) + " and " +
                         cell_text(b.row, b.col) + " carry the same symbol pair"),
      first_(first),
      second_(second),
      a_(a),
      b_(b) {}

LatinSquare::LatinSquare(std::size_t order, std::vector<std::uint32_t> cells)
    : order_(order), cells_(std::move(cells)) {
    check_latin(order_, cells_, 0);
}

IncidenceVector IncidenceVector::from_support(std::size_t length, std::vector<std::size_t> support) {
    IncidenceVector m;
    m.bits.assign(length, 0);
    std::sort(support.begin(), support.end());
    for (auto s : support) {
        if (s >= length) throw PreconditionError("IncidenceVector: support index out of range");
        if (m.bits[s]) throw PreconditionError("IncidenceVector: repeated support index");
        m.bits[s] = 1;
    }
    m.support = std::move(support);
    return m;
}

GeneralizedHadamard::GeneralizedHadamard(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.square() || entries_.rows() == 0) {
        throw PreconditionError("GeneralizedHadamard: matrix must be square and non-empty");
    }
    for (const auto& z : entries_.entries()) {
        if (std::abs(std::abs(z) - 1.0) > 1e-12) {
            throw PreconditionError("GeneralizedHadamard: entry modulus is not one");
        }
    }
    const auto x = static_cast<double>(entries_.rows());
    const ComplexMatrix g = matmul(entries_, conj_transpose(entries_));
    if (max_abs_diff(g, scale(ComplexMatrix::identity(entries_.rows()), x)) > 1e-9) {
        throw PreconditionError("GeneralizedHadamard: H H^dagger != x I");
    }
}

GeneralizedHadamard GeneralizedHadamard::fourier(std::size_t x) {
    ComplexMatrix f(x, x);
    for (std::size_t m = 0; m < x; ++m) {
        for (std::size_t n = 0; n < x; ++n) {
            f(m, n) = root_of_unity(static_cast<long long>((m * n) % x), static_cast<long long>(x));
        }
    }
    return GeneralizedHadamard(std::move(f));
}

std::vector<LatinSquare> mols_prime_power(std::size_t x) {
    if (!is_prime_power(x)) {
        throw PreconditionError("mols_prime_power: " + std::to_string(x) + " is not a prime power");
    }
    const auto pp = factorize(x).front();
    const FiniteField f(static_cast<std::uint32_t>(pp.p), pp.a);
    std::vector<LatinSquare> out;
    for (std::uint32_t a = 1; a < x; ++a) {
        std::vector<std::uint32_t> cells(x * x);
        for (std::uint32_t i = 0; i < x; ++i) {
            for (std::uint32_t j = 0; j < x; ++j) {
                cells[i * x + j] = f.add(f.mul({a}, {i}), {j}).value;
            }
        }
        out.emplace_back(x, std::move(cells));
    }
    return out;
}

std::vector<LatinSquare> mols_macneish(const std::vector<LatinSquare>& first,
                                       const std::vector<LatinSquare>& second) {
    if (first.empty() || second.empty()) {
        throw PreconditionError("mols_macneish: both factor sets must be non-empty");
    }
    validate_mols(first);
    validate_mols(second);
    const std::size_t x1 = first.front().order();
    const std::size_t x2 = second.front().order();
    for (const auto& s : first) {
        if (s.order() != x1) throw PreconditionError("mols_macneish: mixed orders in first set");
    }
    for (const auto& s : second) {
        if (s.order() != x2) throw PreconditionError("mols_macneish: mixed orders in second set");
    }
    const std::size_t x = x1 * x2;
    const std::size_t w = std::min(first.size(), second.size());
    std::vector<LatinSquare> out;
    for (std::size_t t = 0; t < w; ++t) {
        std::vector<std::uint32_t> cells(x * x);
        for (std::size_t i = 0; i < x; ++i) {
            for (std::size_t j = 0; j < x; ++j) {
                const auto s1 = first[t].at(i / x2, j / x2);
                const auto s2 = second[t].at(i % x2, j % x2);
                cells[i * x + j] = static_cast<std::uint32_t>(s1 * x2 + s2);
            }
        }
        out.emplace_back(x, std::move(cells));
    }
    return out;
}

std::vector<LatinSquare> mols_for_order(std::size_t x) {
    if (x < 2) throw PreconditionError("mols_for_order: order must be >= 2");
    const auto factors = factorize(x);
    std::vector<LatinSquare> acc = mols_prime_power(factors.front().value);
    for (std::size_t t = 1; t < factors.size(); ++t) {
        acc = mols_macneish(acc, mols_prime_power(factors[t].value));
    }
    return acc;
}

bool check_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw PreconditionError("check_orthogonal: order mismatch");
    OrthogonalityViolation::Cell c1{}, c2{};
    return !find_repeat(a, b, c1, c2);
}

void validate_mols(std::span<const LatinSquare> squares) {
    for (std::size_t s = 0; s < squares.size(); ++s) {
        for (std::size_t t = s + 1; t < squares.size(); ++t) {
            if (squares[s].order() != squares[t].order()) {
                throw PreconditionError("validate_mols: order mismatch");
            }
            OrthogonalityViolation::Cell c1{}, c2{};
            if (find_repeat(squares[s], squares[t], c1, c2)) {
                throw OrthogonalityViolation(s, t, c1, c2);
            }
        }
    }
}

Net net_from_mols(std::span<const LatinSquare> squares, std::size_t order) {
    if (order < 2) throw PreconditionError("net_from_mols: order must be >= 2");
    for (const auto& s : squares) {
        if (s.order() != order) throw PreconditionError("net_from_mols: square order mismatch");
    }
    validate_mols(squares);
    const std::size_t x = order;
    const std::size_t k = x * x;
    Net net;
    net.x = x;
    net.n = squares.size() + 2;
    std::vector<IncidenceVector> rows, cols;
    for (std::size_t i = 0; i < x; ++i) {
        std::vector<std::size_t> r, c;
        for (std::size_t j = 0; j < x; ++j) {
            r.push_back(i * x + j);
            c.push_back(j * x + i);
        }
        rows.push_back(IncidenceVector::from_support(k, std::move(r)));
        cols.push_back(IncidenceVector::from_support(k, std::move(c)));
    }
    net.blocks.push_back(std::move(rows));
    net.blocks.push_back(std::move(cols));
    for (const auto& sq : squares) {
        std::vector<std::vector<std::size_t>> supports(x);
        for (std::size_t i = 0; i < x; ++i) {
            for (std::size_t j = 0; j < x; ++j) supports[sq.at(i, j)].push_back(i * x + j);
        }
        std::vector<IncidenceVector> block;
        for (auto& s : supports) block.push_back(IncidenceVector::from_support(k, std::move(s)));
        net.blocks.push_back(std::move(block));
    }
    return net;
}

NetCheck check_net(const Net& net) {
    const std::size_t k = net.x * net.x;
    auto dot = [](const IncidenceVector& u, const IncidenceVector& v) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < u.bits.size(); ++i) s += std::size_t{u.bits[i]} * v.bits[i];
        return s;
    };
    if (net.blocks.size() != net.n) return {false, "block count differs from n"};
    for (std::size_t b = 0; b < net.n; ++b) {
        if (net.blocks[b].size() != net.x) return {false, "block " + std::to_string(b) + " size"};
        for (const auto& m : net.blocks[b]) {
            if (m.bits.size() != k || m.weight() != net.x) {
                return {false, "block " + std::to_string(b) + " has a vector of wrong weight"};
            }
        }
    }
    for (std::size_t b = 0; b < net.n; ++b) {
        for (std::size_t b2 = b; b2 < net.n; ++b2) {
            for (std::size_t i = 0; i < net.x; ++i) {
                for (std::size_t j = 0; j < net.x; ++j) {
                    if (b == b2 && i == j) continue;
                    const std::size_t want = b == b2 ? 0 : 1;
                    const std::size_t got = dot(net.blocks[b][i], net.blocks[b2][j]);
                    if (got != want) {
                        std::ostringstream os;
                        os << "m_" << b << i << " . m_" << b2 << j << " = " << got << ", expected "
                           << want;
                        return {false, os.str()};
                    }
                }
            }
        }
    }
    return {};
}

std::vector<Complex> embed(std::span<const Complex> h, const IncidenceVector& m) {
    if (h.size() != m.weight()) {
        throw PreconditionError("embed: vector length " + std::to_string(h.size()) +
                                " differs from Hamming weight " + std::to_string(m.weight()));
    }
    std::vector<Complex> out(m.bits.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[m.support[i]] = h[i];
    return out;
}

std::vector<ComplexMatrix> mubs_from_net(const Net& net, const GeneralizedHadamard& h) {
    if (h.order() != net.x) {
        throw PreconditionError("mubs_from_net: Hadamard order " + std::to_string(h.order()) +
                                " does not match net order " + std::to_string(net.x));
    }
    const std::size_t x = net.x;
    const std::size_t k = x * x;
    const double norm = 1.0 / std::sqrt(static_cast<double>(x));
    std::vector<ComplexMatrix> bases;
    for (const auto& block : net.blocks) {
        ComplexMatrix basis(k, k);
        for (std::size_t i = 0; i < x; ++i) {
            for (std::size_t l = 0; l < x; ++l) {
                const auto v = embed(h.entries().row(l), block[i]);
                for (std::size_t r = 0; r < k; ++r) basis(r, i * x + l) = v[r] * norm;
            }
        }
        bases.push_back(std::move(basis));
    }
    return bases;
}

MolsSet parse_mols(std::istream& in) {
    std::size_t line_no = 0;
    std::string line;
    auto next_content = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                out = line;
                return true;
            }
        }
        return false;
    };
    std::string header;
    if (!next_content(header)) throw MolsParseError("missing header \"x w\"", line_no);
    std::istringstream hs(header);
    long long x = 0, w = 0;
    std::string extra;
    if (!(hs >> x >> w) || (hs >> extra) || x < 2 || w < 0) {
        throw MolsParseError("header must be two integers \"x w\" with x >= 2, w >= 0", line_no);
    }
    const auto order = static_cast<std::size_t>(x);
    std::vector<LatinSquare> squares;
    for (long long s = 0; s < w; ++s) {
        std::vector<std::uint32_t> cells;
        for (std::size_t r = 0; r < order; ++r) {
            std::string row;
            if (!next_content(row)) {
                throw MolsParseError("unexpected end of file in square " + std::to_string(s), line_no);
            }
            std::istringstream rs(row);
            std::string tok;
            std::size_t count = 0;
            while (rs >> tok) {
                std::size_t used = 0;
                long long v = -1;
                try {
                    v = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size() || v < 0) {
                    throw MolsParseError("invalid symbol \"" + tok + "\"", line_no);
                }
                cells.push_back(static_cast<std::uint32_t>(v));
                ++count;
            }
            if (count != order) {
                throw MolsParseError("expected " + std::to_string(order) + " symbols, got " +
                                         std::to_string(count),
                                     line_no);
            }
        }
        check_latin(order, cells, static_cast<std::size_t>(s));
        squares.emplace_back(order, std::move(cells));
    }
    std::string trailing;
    if (next_content(trailing)) throw MolsParseError("trailing content after last square", line_no);
    validate_mols(squares);
    return {order, std::move(squares)};
}

MolsSet import_mols(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MolsParseError("cannot open " + path, 0);
    return parse_mols(in);
}

void write_mols(std::ostream& out, std::span<const LatinSquare> squares, std::size_t order) {
    out << order << ' ' << squares.size() << '\n';
    for (const auto& sq : squares) {
        out << '\n';
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = 0; j < order; ++j) out << (j ? " " : "") << sq.at(i, j);
            out << '\n';
        }
    }
}

}  // namespace mumeb
