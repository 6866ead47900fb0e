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
#include <string>
#include <vector>

#include <json.hpp>

#include "mumeb/construct.hpp"
#include "mumeb/finite_field.hpp"
#include "mumeb/linalg.hpp"
#include "mumeb/product_ring.hpp"

namespace mumeb {

struct VerifyOptions {
    double overlap_tolerance = 1e-8;   // on overlap magnitudes and criterion sums
    double basis_tolerance = 1e-9;     // orthonormality, entanglement, unitarity
    double agreement_tolerance = 1e-8;  // criterion vs brute force
    bool pairs_only = false;
};

struct CriterionResult {
    double max_deviation = 0.0;  // max over (xi, eta, j, l) of ||S| - 1/sqrt(k)|
    double min_magnitude = 0.0;
    double max_magnitude = 0.0;
};

/// Evaluates S = sum_r lambda(r xi) w_{(r,j),(r+eta,l)} with w = U^dagger V for
/// every xi, eta in R and j, l < k.
CriterionResult criterion_check(const ComplexMatrix& u, const ComplexMatrix& v,
                                const ProductRing& ring, std::size_t k);

struct OverlapRange {
    double min = 0.0;
    double max = 0.0;
};

/// Extremal |<phi|psi>| over all pairs of vectors (rows) of two bases.
OverlapRange bruteforce_unbiased(const ComplexMatrix& a, const ComplexMatrix& b);
OverlapRange bruteforce_unbiased(const ExpandedBasis& a, const ExpandedBasis& b);

struct GaussCheck {
    double max_deviation = 0.0;  // max over units c of ||sum_r lambda(c r^2)| - sqrt(d)|
    std::size_t units_checked = 0;
};

/// Exhaustive over R^*; requires every factor of R to have odd characteristic.
GaussCheck gauss_sum_check(const ProductRing& ring);

/// G(c, chi^power) = sum_{r != 0} zeta_p^{T(c r)} chi^power(r), with chi the
/// order-`order` character sending the least primitive element to
/// exp(2 pi i / order).
Complex multiplicative_gauss_sum(const FiniteField& field, FieldElement c, std::uint32_t order,
                                 std::uint32_t power);

/// sum_r zeta_p^{T(c r^order)} computed term by term.
Complex power_character_sum(const FiniteField& field, FieldElement c, std::uint32_t order);

/// g(c, order) through the identity g = sum_{j=1}^{order-1} G(c, chi^j).
/// q must be an odd prime power, c a nonzero canonical index, order | q - 1.
Complex gauss_sum_reference(std::uint32_t q, std::uint32_t c, std::uint32_t order);

struct BasisResult {
    std::string label;
    double unitarity_deviation = 0.0;
    double orthonormality_deviation = 0.0;
    double entanglement_deviation = 0.0;
    bool pass = false;
};

struct PairResult {
    std::size_t first = 0, second = 0;
    std::string first_label, second_label;
    double min_overlap = 0.0, max_overlap = 0.0, target = 0.0;
    double overlap_deviation = 0.0;
    double criterion_deviation = 0.0;
    double agreement_deviation = 0.0;
    bool overlap_pass = false;
    bool criterion_pass = false;
    bool pass = false;
};

struct VerificationReport {
    std::string family_id;
    std::uint32_t d = 0, k = 0;
    std::size_t dimension = 0;
    VerifyOptions options;
    std::vector<BasisResult> bases;
    std::vector<PairResult> pairs;
    double max_agreement_deviation = 0.0;
    bool criterion_agrees = true;  // pass/fail of both routes coincide on every pair
    std::vector<std::string> failures;
    bool pass = false;
    double wall_time_seconds = 0.0;
};

/// Expands every generator and runs the per-basis and all pairwise checks.
/// Broken generators are reported as failures; no pair is skipped.
VerificationReport certify_family(const MEBFamily& family, const VerifyOptions& options = {});

/// Report as JSON; wall time sits under "header" so the rest is reproducible.
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace mumeb
