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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mumeb/numeric.hpp"

namespace mumeb {

/// Imported MOLS counts keyed by order.
using ImportedMolsCounts = std::map<std::uint64_t, std::uint64_t>;

struct NmolsBound {
    std::uint64_t value = 0;
    std::string provenance;  // "exact", "literature", "macneish" or "imported"
};

/// Best known lower bound on the number of MOLS of order x >= 2 from the
/// built-in sources and any imported sets.
NmolsBound nmols_lower(std::uint64_t x, const ImportedMolsCounts& imported = {});

/// Constructive lower bound on M(d, d): 2(q_1 - 1) for odd d, 2(2^m - 1) for d = 2^m.
std::uint64_t bound_dd(std::uint64_t d);

struct BoundBreakdown {
    std::uint64_t d = 0, k = 0;
    std::vector<PrimePower> d_factors, k_factors;
    std::uint64_t m_dd = 0;
    std::string m_dd_rule;
    std::optional<std::uint64_t> pp_bound;    // q'_1 + 1
    std::optional<std::uint64_t> mols_bound;  // N_MOLS(sqrt k) + 2, square k only
    std::string mols_provenance;
    std::uint64_t k_side = 0;  // best k-side bound before the M(d,d) cap
    std::uint64_t combined = 0;
    bool capped_by_m_dd = false;
    std::string rule;
    std::string annotation;
};

BoundBreakdown bound_dkd(std::uint64_t d, std::uint64_t k, const ImportedMolsCounts& imported = {});

nlohmann::json to_json(const BoundBreakdown& b);

}  // namespace mumeb
