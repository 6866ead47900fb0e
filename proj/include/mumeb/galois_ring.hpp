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

/// Element of GR(4, a): base-4 digits of value are the coefficients of
/// 1, xi, ..., xi^{a-1}.
struct GaloisElement {
    std::uint32_t value = 0;

    friend auto operator<=>(const GaloisElement&, const GaloisElement&) = default;
};

/// The Galois ring GR(4, a) = Z_4[x] / (h), h the Hensel lift of a primitive
/// binary polynomial, together with its Teichmuller set and Z_4-valued trace.
class GaloisRing {
public:
    explicit GaloisRing(unsigned a);

    unsigned degree() const noexcept { return a_; }
    std::uint32_t size() const noexcept { return size_; }
    /// Monic basic irreducible modulus over Z_4, low to high degree.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Binary reduction the modulus was lifted from.
    const std::vector<std::uint32_t>& binary_modulus() const noexcept { return binary_; }

    GaloisElement zero() const noexcept { return {0}; }
    GaloisElement one() const noexcept { return {1}; }
    GaloisElement xi() const noexcept { return teich_.size() > 2 ? teich_[2] : GaloisElement{1}; }
    GaloisElement element(std::uint32_t index) const;
    GaloisElement scalar(std::uint32_t c) const { return {c % 4}; }

    GaloisElement add(GaloisElement x, GaloisElement y) const;
    GaloisElement neg(GaloisElement x) const;
    GaloisElement mul(GaloisElement x, GaloisElement y) const;
    GaloisElement pow(GaloisElement x, std::uint64_t e) const;

    /// {0, 1, xi, ..., xi^{2^a - 2}} in that order.
    const std::vector<GaloisElement>& teichmuller() const noexcept { return teich_; }

    /// Ring automorphism fixing Z_4 and sending xi to xi^2.
    GaloisElement frobenius(GaloisElement x) const;

    /// Sum of the a Frobenius conjugates of x; always lies in Z_4.
    std::uint32_t trace(GaloisElement x) const;

    std::vector<std::uint32_t> coeffs(GaloisElement x) const;

private:
    void check(GaloisElement x) const;

    unsigned a_;
    std::uint32_t size_;
    std::vector<std::uint32_t> binary_;
    std::vector<std::uint32_t> modulus_;
    std::vector<GaloisElement> teich_;
    std::vector<GaloisElement> xi_square_powers_;  // xi^{2i}, i < a
};

}  // namespace mumeb
