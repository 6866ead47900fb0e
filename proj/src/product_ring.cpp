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

#include "mumeb/product_ring.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "mumeb/numeric.hpp"

namespace mumeb {

std::complex<double> root_of_unity(long long n, long long m) {
    n %= m;
    if (n < 0) n += m;
    if (n == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

ProductRing::ProductRing(std::vector<FiniteField> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw PreconditionError("ProductRing: need at least one factor");
    std::uint64_t d = 1;
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        if (t > 0 && factors_[t].size() < factors_[t - 1].size()) {
            throw PreconditionError("ProductRing: factors must be sorted by ascending size");
        }
        d *= factors_[t].size();
        if (d > (std::uint64_t{1} << 24)) throw PreconditionError("ProductRing: ring too large");
    }
    d_ = static_cast<std::uint32_t>(d);
    radix_.assign(factors_.size(), 1);
    for (std::size_t t = factors_.size() - 1; t > 0; --t) {
        radix_[t - 1] = radix_[t] * factors_[t].size();
    }

    // lambda = exp(2 pi i sum_t T(x_t) / p_t); use a common denominator so the
    // phase is a single exact rational before conversion to double.
    long long denom = 1;
    for (const auto& f : factors_) denom *= f.characteristic();
    digits_.resize(d_);
    chars_.resize(d_);
    for (std::uint32_t i = 0; i < d_; ++i) {
        auto& dig = digits_[i];
        dig.resize(factors_.size());
        long long numer = 0;
        for (std::size_t t = 0; t < factors_.size(); ++t) {
            dig[t] = (i / radix_[t]) % factors_[t].size();
            const long long p = factors_[t].characteristic();
            numer += static_cast<long long>(factors_[t].trace({dig[t]})) * (denom / p);
        }
        chars_[i] = root_of_unity(numer, denom);
    }
}

ProductRing ProductRing::for_dimension(std::uint64_t d) {
    std::vector<FiniteField> fs;
    for (const auto& pp : factorize(d)) {
        fs.emplace_back(static_cast<std::uint32_t>(pp.p), pp.a);
    }
    return ProductRing(std::move(fs));
}

bool ProductRing::all_odd() const noexcept {
    for (const auto& f : factors_) {
        if (f.characteristic() == 2) return false;
    }
    return true;
}

void ProductRing::check(const ProductRingElement& x) const {
    if (x.parts.size() != factors_.size()) {
        throw PreconditionError("ProductRing: component count mismatch");
    }
    for (std::size_t t = 0; t < factors_.size(); ++t) {
        if (x.parts[t].value >= factors_[t].size()) {
            throw PreconditionError("ProductRing: component out of range");
        }
    }
}

ProductRingElement ProductRing::element(std::uint32_t index) const {
    if (index >= d_) throw PreconditionError("ProductRing: index out of range");
    ProductRingElement e;
    e.parts.reserve(factors_.size());
    for (auto v : digits_[index]) e.parts.push_back({v});
    return e;
}

std::uint32_t ProductRing::index_of(const ProductRingElement& x) const {
    check(x);
    std::uint32_t idx = 0;
    for (std::size_t t = 0; t < factors_.size(); ++t) idx += x.parts[t].value * radix_[t];
    return idx;
}

ProductRingElement ProductRing::zero() const { return element(0); }

ProductRingElement ProductRing::one() const {
    ProductRingElement e;
    for (const auto& f : factors_) e.parts.push_back(f.one());
    return e;
}

namespace {

template <class Op>
ProductRingElement componentwise(const std::vector<FiniteField>& fs, const ProductRingElement& x,
                                 const ProductRingElement& y, Op op) {
    ProductRingElement r;
    r.parts.reserve(fs.size());
    for (std::size_t t = 0; t < fs.size(); ++t) r.parts.push_back(op(fs[t], x.parts[t], y.parts[t]));
    return r;
}

}  // namespace

ProductRingElement ProductRing::add(const ProductRingElement& x, const ProductRingElement& y) const {
    check(x);
    check(y);
    return componentwise(factors_, x, y,
                         [](const FiniteField& f, FieldElement u, FieldElement v) { return f.add(u, v); });
}

ProductRingElement ProductRing::sub(const ProductRingElement& x, const ProductRingElement& y) const {
    check(x);
    check(y);
    return componentwise(factors_, x, y,
                         [](const FiniteField& f, FieldElement u, FieldElement v) { return f.sub(u, v); });
}

ProductRingElement ProductRing::mul(const ProductRingElement& x, const ProductRingElement& y) const {
    check(x);
    check(y);
    return componentwise(factors_, x, y,
                         [](const FiniteField& f, FieldElement u, FieldElement v) { return f.mul(u, v); });
}

ProductRingElement ProductRing::neg(const ProductRingElement& x) const {
    check(x);
    ProductRingElement r;
    for (std::size_t t = 0; t < factors_.size(); ++t) r.parts.push_back(factors_[t].neg(x.parts[t]));
    return r;
}

ProductRingElement ProductRing::inv(const ProductRingElement& x) const {
    if (!is_unit(x)) throw PreconditionError("ProductRing: element " + to_string(x) + " is not a unit");
    ProductRingElement r;
    for (std::size_t t = 0; t < factors_.size(); ++t) r.parts.push_back(factors_[t].inv(x.parts[t]));
    return r;
}

bool ProductRing::is_unit(const ProductRingElement& x) const {
    check(x);
    for (const auto& part : x.parts) {
        if (part.value == 0) return false;
    }
    return true;
}

std::uint32_t ProductRing::add_index(std::uint32_t x, std::uint32_t y) const {
    return index_of(add(element(x), element(y)));
}

std::uint32_t ProductRing::sub_index(std::uint32_t x, std::uint32_t y) const {
    return index_of(sub(element(x), element(y)));
}

std::uint32_t ProductRing::mul_index(std::uint32_t x, std::uint32_t y) const {
    return index_of(mul(element(x), element(y)));
}

std::complex<double> ProductRing::character(const ProductRingElement& x) const {
    return chars_[index_of(x)];
}

std::string ProductRing::to_string(const ProductRingElement& x) const {
    check(x);
    std::ostringstream os;
    if (x.parts.size() == 1) {
        os << x.parts[0].value;
        return os.str();
    }
    os << '(';
    for (std::size_t t = 0; t < x.parts.size(); ++t) os << (t ? "," : "") << x.parts[t].value;
    os << ')';
    return os.str();
}

std::uint32_t field_trace(const FiniteField& field, FieldElement x) { return field.trace(x); }

std::complex<double> generic_character(const ProductRing& ring, const ProductRingElement& r) {
    return ring.character(r);
}

std::vector<ProductRingElement> units(const ProductRing& ring) {
    std::vector<ProductRingElement> out;
    for (std::uint32_t i = 0; i < ring.size(); ++i) {
        auto e = ring.element(i);
        if (ring.is_unit(e)) out.push_back(std::move(e));
    }
    return out;
}

std::vector<ProductRingElement> unit_difference_set(const ProductRing& ring) {
    const auto& fs = ring.factors();
    const std::uint32_t n = fs.front().size() - 1;
    std::vector<ProductRingElement> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        ProductRingElement e;
        for (const auto& f : fs) e.parts.push_back(f.nonzero(i));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mumeb
