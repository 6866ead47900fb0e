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
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mumeb/linalg.hpp"
#include "mumeb/mols.hpp"
#include "mumeb/numeric.hpp"

namespace mumeb {
namespace {

// Exhaustive net axioms straight from the incidence bits.
void expect_net_axioms(const Net& net) {
    const std::size_t k = net.x * net.x;
    ASSERT_EQ(net.blocks.size(), net.n);
    for (std::size_t b = 0; b < net.n; ++b) {
        ASSERT_EQ(net.blocks[b].size(), net.x);
        std::vector<int> cover(k, 0);
        for (const auto& v : net.blocks[b]) {
            ASSERT_EQ(v.bits.size(), k);
            for (std::size_t p = 0; p < k; ++p) cover[p] += v.bits[p];
        }
        for (int c : cover) ASSERT_EQ(c, 1) << "block " << b << " is not a partition";
        for (std::size_t c = 0; c < b; ++c) {
            for (const auto& v : net.blocks[b]) {
                for (const auto& w : net.blocks[c]) {
                    int meet = 0;
                    for (std::size_t p = 0; p < k; ++p) meet += v.bits[p] & w.bits[p];
                    ASSERT_EQ(meet, 1) << "blocks " << c << "," << b;
                }
            }
        }
    }
}

TEST(Mols, PrimePowerOrdersAttainFullSets) {
    for (std::size_t x : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto squares = mols_prime_power(x);
        ASSERT_EQ(squares.size(), x - 1) << "x=" << x;
        for (std::size_t i = 0; i < squares.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(check_orthogonal(squares[i], squares[j]));
        }
    }
    EXPECT_THROW(mols_prime_power(6), PreconditionError);
}

TEST(Mols, MacNeishProducts) {
    EXPECT_EQ(mols_for_order(6).size(), 1u);
    EXPECT_EQ(mols_for_order(12).size(), 2u);
    EXPECT_EQ(mols_for_order(15).size(), 2u);
    const auto sq = mols_for_order(12);
    EXPECT_NO_THROW(validate_mols(sq));
    EXPECT_EQ(sq.front().order(), 12u);
}

TEST(Mols, NetsSatisfyAxioms) {
    for (std::size_t x : {2u, 3u, 4u, 5u, 7u, 8u}) {
        const auto squares = mols_prime_power(x);
        const Net net = net_from_mols(squares, x);
        EXPECT_EQ(net.n, x + 1);
        expect_net_axioms(net);
        EXPECT_TRUE(check_net(net).ok) << check_net(net).message;
    }
    expect_net_axioms(net_from_mols(mols_for_order(6), 6));
}

TEST(Mols, CheckNetReportsBrokenBlock) {
    Net net = net_from_mols(mols_prime_power(3), 3);
    std::swap(net.blocks[2][0], net.blocks[1][0]);
    EXPECT_FALSE(check_net(net).ok);
}

TEST(Mols, EmbedPreservesNorm) {
    const auto h = GeneralizedHadamard::fourier(4);
    const auto m = IncidenceVector::from_support(16, {1, 6, 11, 12});
    const auto v = embed(h.entries().row(2), m);
    ASSERT_EQ(v.size(), 16u);
    double n2 = 0.0;
    for (auto z : v) n2 += std::norm(z);
    EXPECT_NEAR(n2, 4.0, 1e-12);
    EXPECT_EQ(v[0], Complex{});
    EXPECT_LT(std::abs(v[6] - h.entries()(2, 1)), 1e-15);
}

TEST(Mols, MubsFromNetAreFlat) {
    for (std::size_t x : {2u, 3u, 4u, 5u}) {
        const auto bases = mubs_from_net(net_from_mols(mols_prime_power(x), x), GeneralizedHadamard::fourier(x));
        ASSERT_EQ(bases.size(), x + 1);
        for (std::size_t i = 0; i < bases.size(); ++i) {
            EXPECT_TRUE(is_unitary(bases[i], 1e-12).unitary);
            for (std::size_t j = 0; j < i; ++j) {
                const ComplexMatrix g = adjoint_product(bases[i], bases[j]);
                for (auto z : g.entries()) {
                    ASSERT_NEAR(std::abs(z), 1.0 / static_cast<double>(x), 1e-12)
                        << "x=" << x << " bases " << j << "," << i;
                }
            }
        }
    }
}

TEST(Mols, FourierHadamardUpTo26) {
    for (std::size_t x = 2; x <= 26; ++x) EXPECT_NO_THROW(GeneralizedHadamard::fourier(x)) << x;
    EXPECT_THROW(GeneralizedHadamard(ComplexMatrix(2, 2, {1.0, 1.0, 1.0, 1.0})), PreconditionError);
}

TEST(Mols, ParseWriteRoundTrip) {
    const auto squares = mols_prime_power(4);
    std::ostringstream out;
    write_mols(out, squares, 4);
    std::istringstream in(out.str());
    const MolsSet parsed = parse_mols(in);
    EXPECT_EQ(parsed.order, 4u);
    EXPECT_EQ(parsed.squares, squares);

    std::istringstream empty_set("5 0\n");
    EXPECT_EQ(parse_mols(empty_set).order, 5u);
}

TEST(Mols, ParseErrorCarriesLine) {
    std::istringstream in("3 1\n0 1\n");
    try {
        parse_mols(in);
        FAIL() << "expected MolsParseError";
    } catch (const MolsParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Mols, LatinViolationCarriesCoordinates) {
    std::istringstream in("3 2\n0 1 2\n1 2 0\n2 0 1\n\n0 1 2\n2 2 1\n1 0 2\n");
    try {
        parse_mols(in);
        FAIL() << "expected LatinViolation";
    } catch (const LatinViolation& e) {
        EXPECT_EQ(e.square(), 1u);
        EXPECT_EQ(e.row(), 1u);
        EXPECT_EQ(e.col(), 1u);
    }
}

TEST(Mols, OrthogonalityViolationNamesRepeatedPair) {
    std::istringstream in("3 2\n0 1 2\n1 2 0\n2 0 1\n\n0 1 2\n1 2 0\n2 0 1\n");
    try {
        parse_mols(in);
        FAIL() << "expected OrthogonalityViolation";
    } catch (const OrthogonalityViolation& e) {
        EXPECT_EQ(e.first(), 0u);
        EXPECT_EQ(e.second(), 1u);
        EXPECT_EQ(e.cell_a().row, 0u);
        EXPECT_EQ(e.cell_a().col, 1u);
        EXPECT_EQ(e.cell_b().row, 1u);
        EXPECT_EQ(e.cell_b().col, 0u);
    }
}

}  // namespace
}  // namespace mumeb
