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
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "mumeb/finite_field.hpp"
#include "mumeb/galois_ring.hpp"
#include "mumeb/numeric.hpp"
#include "mumeb/product_ring.hpp"

namespace mumeb {
namespace {

// Fields with q <= 81 get exhaustive axiom checks.
const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
    {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}};

// Order of x in the multiplicative group, by repeated multiplication.
std::uint64_t naive_order(const FiniteField& f, FieldElement x) {
    FieldElement y = x;
    std::uint64_t n = 1;
    while (y != f.one()) {
        y = f.mul(y, x);
        ++n;
    }
    return n;
}

TEST(Numeric, FactorizeSortsByPrimePowerValue) {
    const auto fs = factorize(2 * 2 * 2 * 3 * 3 * 5);
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(fs[0].value, 5u);
    EXPECT_EQ(fs[1].value, 8u);
    EXPECT_EQ(fs[2].value, 9u);
    EXPECT_THROW(factorize(1), PreconditionError);
}

TEST(Numeric, PrimePowersAndSquares) {
    EXPECT_TRUE(is_prime_power(49));
    EXPECT_TRUE(is_prime_power(64));
    EXPECT_FALSE(is_prime_power(15));
    EXPECT_FALSE(is_prime_power(1));
    EXPECT_EQ(exact_sqrt(5776), 76u);
    EXPECT_EQ(exact_sqrt(26), 0u);
    EXPECT_EQ(ipow(3, 4), 81u);
}

TEST(FiniteField, TableModuliAreIrreducibleWithPrimitiveRoot) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (unsigned a = 1; a <= 4; ++a) {
            const auto m = FiniteField::default_modulus(p, a);
            ASSERT_EQ(m.size(), a + 1);
            EXPECT_TRUE(FiniteField::is_irreducible(p, m)) << p << "^" << a;
            if (a >= 2 && ipow(p, a) <= 20000) {
                // The class of t generates the multiplicative group.
                const FiniteField f(p, a);
                EXPECT_EQ(naive_order(f, f.element(p)), f.size() - 1u) << p << "^" << a;
            }
        }
    }
}

TEST(FiniteField, ReducibleModulusRejected) {
    EXPECT_FALSE(FiniteField::is_irreducible(3, {1, 1, 1}));  // (t - 1)^2
    EXPECT_TRUE(FiniteField::is_irreducible(3, {1, 0, 1}));
    EXPECT_THROW(FiniteField(3, std::vector<std::uint32_t>{2, 0, 1}), PreconditionError);  // t^2 - 1
}

TEST(FiniteField, AxiomsExhaustiveSmallFields) {
    for (auto [p, a] : kSmallFields) {
        const FiniteField f(p, a);
        const std::uint32_t q = f.size();
        for (std::uint32_t i = 0; i < q; ++i) {
            const FieldElement x = f.element(i);
            EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
            EXPECT_EQ(f.mul(x, f.one()), x);
            if (x != f.zero()) {
                EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
            }
            for (std::uint32_t j = 0; j < q; ++j) {
                const FieldElement y = f.element(j);
                ASSERT_EQ(f.add(x, y), f.add(y, x));
                ASSERT_EQ(f.mul(x, y), f.mul(y, x));
                ASSERT_EQ(f.sub(f.add(x, y), y), x);
                if (q > 27) continue;  // triples stay cheap below 27
                for (std::uint32_t l = 0; l < q; ++l) {
                    const FieldElement z = f.element(l);
                    ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                }
            }
        }
    }
}

TEST(FiniteField, AxiomsRandomizedLargerFields) {
    std::mt19937 gen(20260101);
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 5}, {5, 3}, {2, 8}, {7, 3}, {101, 1}}) {
        const FiniteField f(p, a);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
        for (int n = 0; n < 10000; ++n) {
            const auto x = f.element(pick(gen)), y = f.element(pick(gen)), z = f.element(pick(gen));
            ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
    }
}

TEST(FiniteField, CoefficientsRoundTrip) {
    const FiniteField f(5, 3);
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        EXPECT_EQ(f.from_coeffs(f.coeffs(f.element(i))).value, i);
    }
    // Index digits are the coefficients, low degree first.
    EXPECT_EQ(f.coeffs(f.element(1 + 2 * 5 + 3 * 25)), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(FiniteField, TraceMatchesFrobeniusSum) {
    for (auto [p, a] : kSmallFields) {
        const FiniteField f(p, a);
        for (std::uint32_t i = 0; i < f.size(); ++i) {
            const FieldElement x = f.element(i);
            FieldElement s = f.zero(), c = x;
            for (unsigned e = 0; e < a; ++e) {
                s = f.add(s, c);
                c = f.pow(c, p);
            }
            ASSERT_LT(s.value, p);  // lands in the prime subfield
            ASSERT_EQ(f.trace(x), s.value);
        }
    }
}

TEST(FiniteField, TraceExamplesAndFibers) {
    const FiniteField f9(3, std::vector<std::uint32_t>{1, 0, 1});  // t^2 + 1
    EXPECT_EQ(f9.trace(f9.element(3)), 0u);  // t + t^3 = t - t
    EXPECT_EQ(f9.trace(f9.one()), 2u);
    EXPECT_EQ(FiniteField(3, 1).trace(FieldElement{1}), 1u);
    for (auto [p, a] : kSmallFields) {
        const FiniteField f(p, a);
        std::vector<std::uint32_t> fiber(p, 0);
        for (std::uint32_t i = 0; i < f.size(); ++i) ++fiber[f.trace(f.element(i))];
        for (auto n : fiber) EXPECT_EQ(n, ipow(p, a - 1));
    }
}

TEST(FiniteField, LogAndPrimitiveElement) {
    const FiniteField f(7, 2);
    const FieldElement g = f.primitive_element();
    EXPECT_EQ(naive_order(f, g), 48u);
    for (std::uint32_t i = 1; i < f.size(); ++i) {
        const FieldElement x = f.element(i);
        EXPECT_EQ(f.pow(g, f.log(x)), x);
    }
    EXPECT_THROW(f.inv(f.zero()), PreconditionError);
    EXPECT_THROW(f.element(49), PreconditionError);
}

TEST(GaloisRing, TraceOfOneIsDegree) {
    const GaloisRing r2(2);
    EXPECT_EQ(r2.trace(r2.one()), 2u);
    const GaloisRing r3(3);
    EXPECT_EQ(r3.trace(r3.one()), 3u);
}

TEST(GaloisRing, TeichmullerClosedUnderMultiplication) {
    for (unsigned a = 1; a <= 5; ++a) {
        const GaloisRing r(a);
        const auto& t = r.teichmuller();
        ASSERT_EQ(t.size(), std::size_t{1} << a);
        const std::set<GaloisElement> set(t.begin(), t.end());
        EXPECT_EQ(set.size(), t.size());
        for (auto x : t) {
            EXPECT_EQ(r.pow(x, std::uint64_t{1} << a), x);  // x^{2^a} = x
            EXPECT_EQ(r.frobenius(x), r.mul(x, x));
            for (auto y : t) EXPECT_TRUE(set.count(r.mul(x, y)));
        }
        // Reductions mod 2 are distinct, so T is a transversal of 2R.
        std::set<std::uint32_t> reductions;
        for (auto x : t) {
            std::uint32_t bits = 0;
            const auto c = r.coeffs(x);
            for (std::size_t i = 0; i < c.size(); ++i) bits |= (c[i] & 1u) << i;
            reductions.insert(bits);
        }
        EXPECT_EQ(reductions.size(), t.size());
    }
}

TEST(GaloisRing, TraceIsAdditiveAndScalar) {
    const GaloisRing r(3);
    for (std::uint32_t i = 0; i < r.size(); i += 5) {
        for (std::uint32_t j = 0; j < r.size(); j += 7) {
            const auto x = r.element(i), y = r.element(j);
            EXPECT_EQ(r.trace(r.add(x, y)), (r.trace(x) + r.trace(y)) % 4);
        }
    }
}

TEST(ProductRing, UnitCounts) {
    EXPECT_EQ(units(ProductRing::for_dimension(3)).size(), 2u);
    EXPECT_EQ(units(ProductRing::for_dimension(15)).size(), 8u);
    EXPECT_EQ(units(ProductRing::for_dimension(9)).size(), 8u);
    EXPECT_EQ(units(ProductRing::for_dimension(45)).size(), 8u * 4u);
}

TEST(ProductRing, UnitDifferenceSet) {
    for (std::uint64_t d : {3u, 9u, 15u, 21u, 35u, 45u, 63u}) {
        const ProductRing ring = ProductRing::for_dimension(d);
        const auto s = unit_difference_set(ring);
        EXPECT_EQ(s.size(), ring.factors().front().size() - 1u);
        EXPECT_EQ(s.front(), ring.one());
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_TRUE(ring.is_unit(s[i]));
            for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(ring.is_unit(ring.sub(s[i], s[j])));
        }
    }
    // Not every pair of units differs by a unit.
    const ProductRing r15 = ProductRing::for_dimension(15);
    const ProductRingElement a{{FieldElement{1}, FieldElement{1}}}, b{{FieldElement{1}, FieldElement{2}}};
    EXPECT_TRUE(r15.is_unit(a) && r15.is_unit(b));
    EXPECT_FALSE(r15.is_unit(r15.sub(a, b)));
}

TEST(ProductRing, IndexArithmeticMatchesElements) {
    const ProductRing ring = ProductRing::for_dimension(45);
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        EXPECT_EQ(ring.index_of(ring.element(x)), x);
        for (std::uint32_t y = 0; y < ring.size(); y += 4) {
            EXPECT_EQ(ring.add_index(x, y), ring.index_of(ring.add(ring.element(x), ring.element(y))));
            EXPECT_EQ(ring.mul_index(x, y), ring.index_of(ring.mul(ring.element(x), ring.element(y))));
        }
    }
    EXPECT_EQ(ring.to_string(ring.one()), "(1,1)");
    EXPECT_EQ(ProductRing::for_dimension(7).to_string(ProductRing::for_dimension(7).element(2)), "2");
}

TEST(ProductRing, CharacterIsGenericUpTo225) {
    for (std::uint64_t d = 2; d <= 225; ++d) {
        const ProductRing ring = ProductRing::for_dimension(d);
        for (std::uint32_t a = 1; a < ring.size(); ++a) {
            std::complex<double> s{};
            for (std::uint32_t r = 0; r < ring.size(); ++r) s += ring.character_index(ring.mul_index(a, r));
            ASSERT_LT(std::abs(s), 1e-9) << "d=" << d << " a=" << a;
        }
    }
}

TEST(ProductRing, CharacterIsAdditive) {
    const ProductRing ring = ProductRing::for_dimension(63);
    for (std::uint32_t x = 0; x < ring.size(); ++x) {
        for (std::uint32_t y = 0; y < ring.size(); y += 3) {
            const auto lhs = ring.character_index(ring.add_index(x, y));
            const auto rhs = ring.character_index(x) * ring.character_index(y);
            ASSERT_LT(std::abs(lhs - rhs), 1e-12);
        }
    }
    EXPECT_LT(std::abs(root_of_unity(3, 4) - std::complex<double>(0, -1)), 1e-15);
}

TEST(ProductRing, RejectsUnsortedFactors) {
    EXPECT_THROW(ProductRing({FiniteField(5, 1), FiniteField(3, 1)}), PreconditionError);
}

}  // namespace
}  // namespace mumeb
