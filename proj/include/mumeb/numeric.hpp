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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mumeb {

/// Raised when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One factor p^a of an integer factorization.
struct PrimePower {
    std::uint64_t p = 0;
    unsigned a = 0;
    std::uint64_t value = 0;  // p^a

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

/// Prime-power factors of n >= 2, sorted by ascending value p^a.
std::vector<PrimePower> factorize(std::uint64_t n);

/// True when n = p^a for a prime p and a >= 1.
bool is_prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Exact integer square root, or 0 when n is not a perfect square.
std::uint64_t exact_sqrt(std::uint64_t n);

}  // namespace mumeb
