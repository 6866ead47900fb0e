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
#include <cstdint>
#include <string>
#include <vector>

#include "mumeb/finite_field.hpp"

namespace mumeb {

/// Element of a ProductRing: one field element per factor.
struct ProductRingElement {
    std::vector<FieldElement> parts;

    friend bool operator==(const ProductRingElement&, const ProductRingElement&) = default;
};

/// R = F_{q_1} + ... + F_{q_s} with q_1 <= ... <= q_s, equipped with the
/// generic character lambda(x) = prod_t exp(2 pi i T(x_t) / p_t).
///
/// Elements have a canonical index in [0, d): mixed radix with the first
/// factor most significant, each digit the factor's canonical field index.
class ProductRing {
public:
    /// Factors must be listed in ascending order of size.
    explicit ProductRing(std::vector<FiniteField> factors);

    /// Ring for the prime-power factorization of d >= 2 (default moduli).
    static ProductRing for_dimension(std::uint64_t d);

    const std::vector<FiniteField>& factors() const noexcept { return factors_; }
    std::uint32_t size() const noexcept { return d_; }
    bool all_odd() const noexcept;

    ProductRingElement element(std::uint32_t index) const;
    std::uint32_t index_of(const ProductRingElement& x) const;
    ProductRingElement zero() const;
    ProductRingElement one() const;

    ProductRingElement add(const ProductRingElement& x, const ProductRingElement& y) const;
    ProductRingElement sub(const ProductRingElement& x, const ProductRingElement& y) const;
    ProductRingElement neg(const ProductRingElement& x) const;
    ProductRingElement mul(const ProductRingElement& x, const ProductRingElement& y) const;
    ProductRingElement inv(const ProductRingElement& x) const;
    bool is_unit(const ProductRingElement& x) const;

    /// Index-level arithmetic, backed by tables built at construction.
    std::uint32_t add_index(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t sub_index(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t mul_index(std::uint32_t x, std::uint32_t y) const;

    std::complex<double> character(const ProductRingElement& x) const;
    std::complex<double> character_index(std::uint32_t x) const { return chars_.at(x); }

    /// Human readable form: "2" for one factor, "(1,2)" otherwise.
    std::string to_string(const ProductRingElement& x) const;

private:
    void check(const ProductRingElement& x) const;

    std::vector<FiniteField> factors_;
    std::vector<std::uint32_t> radix_;  // radix_[t] = q_{t+1} * ... * q_s
    std::uint32_t d_ = 1;
    std::vector<std::complex<double>> chars_;
    std::vector<std::vector<std::uint32_t>> digits_;  // per index, per factor
};

/// Trace of x in F_q down to F_p.
std::uint32_t field_trace(const FiniteField& field, FieldElement x);

/// lambda(r) for the ring's generic character.
std::complex<double> generic_character(const ProductRing& ring, const ProductRingElement& r);

/// All units, in canonical index order. Count is prod (q_t - 1).
std::vector<ProductRingElement> units(const ProductRing& ring);

/// {(u, iota_2(u), ..., iota_s(u)) : u in F_{q_1}^*}, where iota_t sends the
/// i-th nonzero element of F_{q_1} to the i-th nonzero element of F_{q_t}.
/// Pairwise differences are units.
std::vector<ProductRingElement> unit_difference_set(const ProductRing& ring);

/// exp(2 pi i n / m).
std::complex<double> root_of_unity(long long n, long long m);

}  // namespace mumeb
