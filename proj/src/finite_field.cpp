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

#include "mumeb/finite_field.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "mumeb/numeric.hpp"

namespace mumeb {
namespace {

using Poly = std::vector<std::uint32_t>;  // low to high degree

// Remainder of f modulo the monic polynomial g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                const std::uint64_t sub = (lead * g[i]) % p;
                f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
            }
        }
        f.pop_back();
    }
    return f;
}

Poly poly_mul(const Poly& x, const Poly& y, std::uint32_t p) {
    Poly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{x[i]} * y[j]) % p);
        }
    }
    return r;
}

Poly digits(std::uint64_t index, std::uint32_t p, unsigned n) {
    Poly c(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        c[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return c;
}

std::uint32_t undigits(const Poly& c, std::uint32_t p) {
    std::uint64_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return static_cast<std::uint32_t>(v);
}

// Conway polynomials for p <= 13, a <= 4 (low coefficients; leading 1 implied).
const std::map<std::pair<std::uint32_t, unsigned>, Poly>& conway_table() {
    static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
        {{2, 1}, {1}},           {{2, 2}, {1, 1}},        {{2, 3}, {1, 1, 0}},
        {{2, 4}, {1, 1, 0, 0}},  {{3, 1}, {1}},           {{3, 2}, {2, 2}},
        {{3, 3}, {1, 2, 0}},     {{3, 4}, {2, 0, 0, 2}},  {{5, 1}, {3}},
        {{5, 2}, {2, 4}},        {{5, 3}, {3, 3, 0}},     {{5, 4}, {2, 4, 4, 0}},
        {{7, 1}, {4}},           {{7, 2}, {3, 6}},        {{7, 3}, {4, 0, 6}},
        {{7, 4}, {3, 4, 5, 0}},  {{11, 1}, {9}},          {{11, 2}, {2, 7}},
        {{11, 3}, {9, 2, 0}},    {{11, 4}, {2, 10, 8, 0}}, {{13, 1}, {11}},
        {{13, 2}, {2, 12}},      {{13, 3}, {11, 2, 0}},   {{13, 4}, {2, 12, 3, 0}},
    };
    return table;
}

}  // namespace

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t p, unsigned a) {
    if (!is_prime(p)) throw PreconditionError("FiniteField: characteristic must be prime");
    if (a == 0) throw PreconditionError("FiniteField: degree must be positive");
    const auto& table = conway_table();
    if (auto it = table.find({p, a}); it != table.end()) {
        Poly m = it->second;
        m.push_back(1);
        return m;
    }
    const std::uint64_t count = ipow(p, a);
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly m = digits(n, p, a);
        m.push_back(1);
        if (is_irreducible(p, m)) return m;
    }
    throw PreconditionError("FiniteField: no irreducible polynomial found");
}

bool FiniteField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (modulus.size() < 2 || modulus.back() != 1) return false;
    const unsigned a = static_cast<unsigned>(modulus.size() - 1);
    if (a == 1) return true;
    for (unsigned deg = 1; deg <= a / 2; ++deg) {
        const std::uint64_t count = ipow(p, deg);
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly g = digits(n, p, deg);
            g.push_back(1);
            const Poly r = poly_mod(modulus, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) {
                return false;
            }
        }
    }
    return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned a)
    : FiniteField(p, default_modulus(p, a)) {}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), a_(0), q_(0), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw PreconditionError("FiniteField: characteristic must be prime");
    if (modulus_.size() < 2) throw PreconditionError("FiniteField: modulus degree must be >= 1");
    for (auto c : modulus_) {
        if (c >= p_) throw PreconditionError("FiniteField: modulus coefficient out of range");
    }
    if (modulus_.back() != 1) throw PreconditionError("FiniteField: modulus must be monic");
    a_ = static_cast<unsigned>(modulus_.size() - 1);
    if (ipow(p_, a_) > (std::uint64_t{1} << 24)) {
        throw PreconditionError("FiniteField: field too large for table arithmetic");
    }
    if (!is_irreducible(p_, modulus_)) {
        throw PreconditionError("FiniteField: modulus is not irreducible over F_" +
                                std::to_string(p_));
    }
    q_ = static_cast<std::uint32_t>(ipow(p_, a_));
    build();
}

void FiniteField::build() {
    const std::uint32_t order = q_ - 1;
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    auto mulmod = [&](const Poly& x, const Poly& y) {
        Poly r = poly_mod(poly_mul(x, y, p_), modulus_, p_);
        r.resize(a_, 0);
        return r;
    };
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        const Poly g = digits(cand, p_, a_);
        Poly cur = digits(1, p_, a_);
        bool primitive = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            const std::uint32_t v = undigits(cur, p_);
            if (i > 0 && v == 1) {
                primitive = false;
                break;
            }
            exp_[i] = v;
            cur = mulmod(cur, g);
        }
        if (primitive) break;
    }
    for (std::uint32_t i = 0; i < order; ++i) log_[exp_[i]] = i;

    trace_.assign(q_, 0);
    for (std::uint32_t x = 0; x < q_; ++x) {
        FieldElement term{x};
        FieldElement sum{x};
        for (unsigned i = 1; i < a_; ++i) {
            term = pow(term, p_);
            sum = add(sum, term);
        }
        if (sum.value >= p_) throw std::logic_error("FiniteField: trace left the prime field");
        trace_[x] = sum.value;
    }
}

void FiniteField::check(FieldElement x) const {
    if (x.value >= q_) {
        throw PreconditionError("FiniteField: element index " + std::to_string(x.value) +
                                " outside F_" + std::to_string(q_));
    }
}

FieldElement FiniteField::element(std::uint32_t index) const {
    check({index});
    return {index};
}

FieldElement FiniteField::nonzero(std::uint32_t i) const {
    if (i >= q_ - 1) {
        throw PreconditionError("FiniteField: nonzero index out of range");
    }
    return {i + 1};
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const {
    check(x);
    check(y);
    if (a_ == 1) return {(x.value + y.value) % p_};
    std::uint32_t r = 0, scale = 1, xv = x.value, yv = y.value;
    for (unsigned i = 0; i < a_; ++i) {
        r += ((xv % p_ + yv % p_) % p_) * scale;
        xv /= p_;
        yv /= p_;
        scale *= p_;
    }
    return {r};
}

FieldElement FiniteField::neg(FieldElement x) const {
    check(x);
    std::uint32_t r = 0, scale = 1, xv = x.value;
    for (unsigned i = 0; i < a_; ++i) {
        r += ((p_ - xv % p_) % p_) * scale;
        xv /= p_;
        scale *= p_;
    }
    return {r};
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const {
    check(x);
    check(y);
    if (x.value == 0 || y.value == 0) return {0};
    return {exp_[(std::uint64_t{log_[x.value]} + log_[y.value]) % (q_ - 1)]};
}

FieldElement FiniteField::inv(FieldElement x) const {
    check(x);
    if (x.value == 0) throw PreconditionError("FiniteField: zero has no inverse");
    return {exp_[(q_ - 1 - log_[x.value]) % (q_ - 1)]};
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t e) const {
    check(x);
    if (e == 0) return one();
    if (x.value == 0) return zero();
    return {exp_[(log_[x.value] * (e % (q_ - 1))) % (q_ - 1)]};
}

std::uint32_t FiniteField::log(FieldElement x) const {
    check(x);
    if (x.value == 0) throw PreconditionError("FiniteField: log of zero");
    return log_[x.value];
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement x) const {
    check(x);
    return digits(x.value, p_, a_);
}

FieldElement FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != a_) throw PreconditionError("FiniteField: coefficient count mismatch");
    for (auto v : c) {
        if (v >= p_) throw PreconditionError("FiniteField: coefficient out of range");
    }
    return {undigits(c, p_)};
}

}  // namespace mumeb
