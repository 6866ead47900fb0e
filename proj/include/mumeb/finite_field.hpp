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

#include <compare>
#include <cstdint>
#include <vector>

namespace mumeb {

/// Element of a FiniteField, stored as its canonical index: the base-p
/// digits of the index are the polynomial coefficients, lowest degree first.
struct FieldElement {
    std::uint32_t value = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// The field F_{p^a} = F_p[t] / (modulus).
///
/// Arithmetic is table driven: addition works digit-wise on the canonical
/// index, multiplication goes through discrete log / antilog tables built
/// from the least primitive element. Instances are immutable once built.
class FiniteField {
public:
    /// Uses the built-in modulus table for p <= 13, a <= 4 and a deterministic
    /// search (first monic irreducible in index order) otherwise.
    FiniteField(std::uint32_t p, unsigned a);

    /// Explicit monic modulus, coefficients low to high degree (length a + 1).
    FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return a_; }
    std::uint32_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint32_t index) const;

    /// i-th nonzero element in canonical order (i = 0 gives one).
    FieldElement nonzero(std::uint32_t i) const;

    FieldElement add(FieldElement x, FieldElement y) const;
    FieldElement sub(FieldElement x, FieldElement y) const;
    FieldElement neg(FieldElement x) const;
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement inv(FieldElement x) const;
    FieldElement pow(FieldElement x, std::uint64_t e) const;

    /// Absolute trace x + x^p + ... + x^{p^{a-1}}, as a residue in [0, p).
    std::uint32_t trace(FieldElement x) const { return trace_.at(x.value); }

    std::vector<std::uint32_t> coeffs(FieldElement x) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const;

    /// Least element (canonical order) generating the multiplicative group.
    FieldElement primitive_element() const noexcept { return {exp_[1]}; }

    /// Discrete log to base primitive_element(); x must be nonzero.
    std::uint32_t log(FieldElement x) const;

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned a);
    static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    friend bool operator==(const FiniteField& x, const FiniteField& y) {
        return x.p_ == y.p_ && x.modulus_ == y.modulus_;
    }

private:
    void build();
    void check(FieldElement x) const;

    std::uint32_t p_;
    unsigned a_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length q - 1
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::uint32_t> trace_;
};

}  // namespace mumeb
