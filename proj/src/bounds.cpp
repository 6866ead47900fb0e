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

#include "mumeb/bounds.hpp"

#include <algorithm>

namespace mumeb {
namespace {

bool is_power_of_two(std::uint64_t n) { return n >= 2 && (n & (n - 1)) == 0; }

nlohmann::json factors_json(const std::vector<PrimePower>& fs) {
    auto out = nlohmann::json::array();
    for (const auto& f : fs) out.push_back({{"p", f.p}, {"a", f.a}});
    return out;
}

}  // namespace

NmolsBound nmols_lower(std::uint64_t x, const ImportedMolsCounts& imported) {
    if (x < 2) throw PreconditionError("nmols_lower: order must be >= 2");
    const auto fs = factorize(x);
    if (fs.size() == 1) return {x - 1, "exact"};
    NmolsBound best{fs.front().value - 1, "macneish"};
    // Literature values: N(26) >= 4 and N(x) >= 6 for every x >= 76.
    std::uint64_t lit = 0;
    if (x == 26) lit = 4;
    if (x >= 76) lit = 6;
    if (lit > best.value) best = {lit, "literature"};
    if (auto it = imported.find(x); it != imported.end() && it->second > best.value) {
        best = {it->second, "imported"};
    }
    return best;
}

std::uint64_t bound_dd(std::uint64_t d) {
    if (d >= 3 && d % 2 == 1) return 2 * (factorize(d).front().value - 1);
    if (is_power_of_two(d)) return 2 * (d - 1);
    throw PreconditionError("bound_dd: no M(d,d) bound for d=" + std::to_string(d) +
                            " (d must be odd or a power of 2)");
}

BoundBreakdown bound_dkd(std::uint64_t d, std::uint64_t k, const ImportedMolsCounts& imported) {
    if (k < 1) throw PreconditionError("bound_dkd: k must be >= 1");
    BoundBreakdown b;
    b.d = d;
    b.k = k;
    b.m_dd = bound_dd(d);
    b.d_factors = factorize(d);
    b.m_dd_rule = d % 2 == 1 ? "2(q_1 - 1), odd d" : "2(2^m - 1), d = 2^m";
    if (k == 1) {
        b.k_side = b.m_dd;
        b.combined = b.m_dd;
        b.rule = "M(d,d)";
        return b;
    }
    b.k_factors = factorize(k);
    b.pp_bound = b.k_factors.front().value + 1;
    b.k_side = *b.pp_bound;
    b.rule = "prime-power";
    if (const std::uint64_t x = exact_sqrt(k); x >= 2 && x * x == k) {
        const auto n = nmols_lower(x, imported);
        b.mols_bound = n.value + 2;
        b.mols_provenance = n.provenance;
        b.k_side = std::max(*b.mols_bound, *b.pp_bound);
        b.rule = "Corollary(max)";
        b.annotation = "N_MOLS(sqrt k) + 2 >= k^(1/29.6) for all but finitely many k "
                       "(existential, not used as a value)";
    }
    b.combined = std::min(b.k_side, b.m_dd);
    b.capped_by_m_dd = b.m_dd < b.k_side;
    return b;
}

nlohmann::json to_json(const BoundBreakdown& b) {
    nlohmann::json j = {
        {"d", b.d},
        {"k", b.k},
        {"d_factors", factors_json(b.d_factors)},
        {"k_factors", factors_json(b.k_factors)},
        {"m_dd", b.m_dd},
        {"m_dd_rule", b.m_dd_rule},
        {"pp_bound", b.pp_bound ? nlohmann::json(*b.pp_bound) : nlohmann::json(nullptr)},
        {"mols_bound", b.mols_bound ? nlohmann::json(*b.mols_bound) : nlohmann::json(nullptr)},
        {"k_side", b.k_side},
        {"combined", b.combined},
        {"capped_by_m_dd", b.capped_by_m_dd},
        {"rule", b.rule},
    };
    if (b.mols_bound) j["mols_provenance"] = b.mols_provenance;
    if (!b.annotation.empty()) j["annotation"] = b.annotation;
    return j;
}

}  // namespace mumeb
