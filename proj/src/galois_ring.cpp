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

#include "mumeb/galois_ring.hpp"

#include <string>

#include "mumeb/finite_field.hpp"
#include "mumeb/numeric.hpp"

namespace mumeb {
namespace {

using Poly = std::vector<std::uint32_t>;

// First binary polynomial (index order) that is irreducible with t primitive.
Poly primitive_binary(unsigned a) {
    const std::uint64_t count = ipow(2, a);
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly m(a + 1, 0);
        for (unsigned i = 0; i < a; ++i) m[i] = (n >> i) & 1u;
        m[a] = 1;
        if (m[0] == 0 || !FiniteField::is_irreducible(2, m)) continue;
        if (a == 1) return m;
        const FiniteField f(2, m);
        const std::uint32_t order = f.size() - 1;
        std::uint32_t g = f.log(f.element(2));
        std::uint32_t x = order, y = g;
        while (y != 0) {
            const std::uint32_t t = x % y;
            x = y;
            y = t;
        }
        if (x == 1) return m;
    }
    throw PreconditionError("GaloisRing: no primitive binary polynomial");
}

// Graeffe lift: h(x^2) = +-(e(x)^2 - o(x)^2) mod 4, where f = e + o splits
// f into even- and odd-degree parts.
Poly hensel_lift(const Poly& f) {
    const std::size_t n = f.size();
    Poly e(n, 0), o(n, 0);
    for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? e : o)[i] = f[i];
    std::vector<long long> sq(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sq[i + j] += static_cast<long long>(e[i]) * e[j] - static_cast<long long>(o[i]) * o[j];
        }
    }
    const std::size_t a = n - 1;
    Poly h(a + 1, 0);
    const long long sign = ((sq[2 * a] % 4) + 4) % 4 == 1 ? 1 : -1;
    for (std::size_t i = 0; i <= a; ++i) {
        h[i] = static_cast<std::uint32_t>(((sign * sq[2 * i]) % 4 + 4) % 4);
    }
    return h;
}

}  // namespace

GaloisRing::GaloisRing(unsigned a) : a_(a), size_(0) {
    if (a == 0 || a > 8) throw PreconditionError("GaloisRing: degree must be in [1, 8]");
    size_ = static_cast<std::uint32_t>(ipow(4, a));
    binary_ = primitive_binary(a);
    modulus_ = hensel_lift(binary_);
    if (modulus_.back() != 1) throw std::logic_error("GaloisRing: lifted modulus not monic");

    const std::uint32_t order = static_cast<std::uint32_t>(ipow(2, a) - 1);
    const GaloisElement root = a == 1 ? scalar(static_cast<std::uint32_t>((4 - modulus_[0]) % 4))
                                      : GaloisElement{4};
    teich_.push_back(zero());
    GaloisElement cur = one();
    for (std::uint32_t i = 0; i < order; ++i) {
        if (i > 0 && cur == one()) throw std::logic_error("GaloisRing: xi has too small an order");
        teich_.push_back(cur);
        cur = mul(cur, root);
    }
    if (cur != one()) throw std::logic_error("GaloisRing: xi^(2^a - 1) != 1");

    const GaloisElement root_sq = mul(root, root);
    GaloisElement acc = one();
    for (unsigned i = 0; i < a_; ++i) {
        xi_square_powers_.push_back(acc);
        acc = mul(acc, root_sq);
    }
}

void GaloisRing::check(GaloisElement x) const {
    if (x.value >= size_) {
        throw PreconditionError("GaloisRing: element index " + std::to_string(x.value) +
                                " out of range");
    }
}

GaloisElement GaloisRing::element(std::uint32_t index) const {
    check({index});
    return {index};
}

std::vector<std::uint32_t> GaloisRing::coeffs(GaloisElement x) const {
    check(x);
    std::vector<std::uint32_t> c(a_, 0);
    for (unsigned i = 0; i < a_; ++i) c[i] = (x.value >> (2 * i)) & 3u;
    return c;
}

GaloisElement GaloisRing::add(GaloisElement x, GaloisElement y) const {
    check(x);
    check(y);
    std::uint32_t r = 0;
    for (unsigned i = 0; i < a_; ++i) {
        const std::uint32_t s = ((x.value >> (2 * i)) + (y.value >> (2 * i))) & 3u;
        r |= s << (2 * i);
    }
    return {r};
}

GaloisElement GaloisRing::neg(GaloisElement x) const {
    check(x);
    std::uint32_t r = 0;
    for (unsigned i = 0; i < a_; ++i) {
        r |= ((4 - ((x.value >> (2 * i)) & 3u)) & 3u) << (2 * i);
    }
    return {r};
}

GaloisElement GaloisRing::mul(GaloisElement x, GaloisElement y) const {
    const auto cx = coeffs(x);
    const auto cy = coeffs(y);
    std::vector<std::uint32_t> prod(2 * a_ - 1, 0);
    for (unsigned i = 0; i < a_; ++i) {
        for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) & 3u;
    }
    for (std::size_t top = prod.size() - 1; top >= a_; --top) {
        const std::uint32_t lead = prod[top];
        if (lead != 0) {
            for (unsigned i = 0; i <= a_; ++i) {
                const std::size_t at = top - a_ + i;
                prod[at] = (prod[at] + 4 * 4 - lead * modulus_[i]) & 3u;
            }
        }
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < a_; ++i) r |= prod[i] << (2 * i);
    return {r};
}

GaloisElement GaloisRing::pow(GaloisElement x, std::uint64_t e) const {
    GaloisElement result = one();
    while (e > 0) {
        if (e & 1u) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

GaloisElement GaloisRing::frobenius(GaloisElement x) const {
    const auto c = coeffs(x);
    GaloisElement r = zero();
    for (unsigned i = 0; i < a_; ++i) {
        if (c[i] != 0) r = add(r, mul(scalar(c[i]), xi_square_powers_[i]));
    }
    return r;
}

std::uint32_t GaloisRing::trace(GaloisElement x) const {
    GaloisElement sum = zero();
    GaloisElement conj = x;
    for (unsigned i = 0; i < a_; ++i) {
        sum = add(sum, conj);
        conj = frobenius(conj);
    }
    if (sum.value >= 4) throw std::logic_error("GaloisRing: trace is not a Z_4 scalar");
    return sum.value;
}

}  // namespace mumeb
