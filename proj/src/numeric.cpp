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

#include "mumeb/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace mumeb {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 2) throw PreconditionError("factorize: n must be >= 2, got " + std::to_string(n));
    std::vector<PrimePower> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        PrimePower pp{f, 0, 1};
        while (n % f == 0) {
            n /= f;
            ++pp.a;
            pp.value *= f;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    std::sort(out.begin(), out.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.value < y.value; });
    return out;
}

bool is_prime_power(std::uint64_t n) { return n >= 2 && factorize(n).size() == 1; }

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

std::uint64_t exact_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
        if (c * c == n) return c;
    }
    return 0;
}

}  // namespace mumeb
