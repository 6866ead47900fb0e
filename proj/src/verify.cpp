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

#include "mumeb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "mumeb/numeric.hpp"

namespace mumeb {

CriterionResult criterion_check(const ComplexMatrix& u, const ComplexMatrix& v,
                                const ProductRing& ring, std::size_t k) {
    const std::size_t d = ring.size();
    const std::size_t kd = k * d;
    if (k == 0 || u.rows() != kd || u.cols() != kd || v.rows() != kd || v.cols() != kd) {
        throw PreconditionError("criterion_check: generators must be " + std::to_string(kd) + "x" +
                                std::to_string(kd) + " for d=" + std::to_string(d) +
                                ", k=" + std::to_string(k));
    }
    const ComplexMatrix w = adjoint_product(u, v);
    std::vector<std::uint32_t> add(d * d);
    std::vector<Complex> chars(d * d);
    for (std::uint32_t x = 0; x < d; ++x) {
        for (std::uint32_t r = 0; r < d; ++r) {
            add[x * d + r] = ring.add_index(r, x);
            chars[x * d + r] = ring.character_index(ring.mul_index(r, x));
        }
    }
    const double target = 1.0 / std::sqrt(static_cast<double>(k));
    CriterionResult res;
    res.min_magnitude = std::numeric_limits<double>::infinity();
    for (std::size_t xi = 0; xi < d; ++xi) {
        for (std::size_t eta = 0; eta < d; ++eta) {
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t l = 0; l < k; ++l) {
                    Complex s{};
                    for (std::size_t r = 0; r < d; ++r) {
                        s += chars[xi * d + r] * w(j * d + r, l * d + add[eta * d + r]);
                    }
                    const double mag = std::abs(s);
                    res.min_magnitude = std::min(res.min_magnitude, mag);
                    res.max_magnitude = std::max(res.max_magnitude, mag);
                    res.max_deviation = std::max(res.max_deviation, std::abs(mag - target));
                }
            }
        }
    }
    return res;
}

OverlapRange bruteforce_unbiased(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw PreconditionError("bruteforce_unbiased: basis dimension mismatch");
    }
    const ComplexMatrix g = row_inner_products(a, b);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& z : g.entries()) {
        const double m = std::norm(z);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return {std::sqrt(lo), std::sqrt(hi)};
}

OverlapRange bruteforce_unbiased(const ExpandedBasis& a, const ExpandedBasis& b) {
    return bruteforce_unbiased(a.vectors(), b.vectors());
}

GaussCheck gauss_sum_check(const ProductRing& ring) {
    if (!ring.all_odd()) {
        throw PreconditionError("gauss_sum_check: d must be odd so that 2 is a unit");
    }
    const std::uint32_t d = ring.size();
    std::vector<std::uint32_t> squares(d);
    for (std::uint32_t r = 0; r < d; ++r) squares[r] = ring.mul_index(r, r);
    const double root = std::sqrt(static_cast<double>(d));
    GaussCheck out;
    for (const auto& c : units(ring)) {
        const std::uint32_t ci = ring.index_of(c);
        Complex s{};
        for (std::uint32_t r = 0; r < d; ++r) s += ring.character_index(ring.mul_index(ci, squares[r]));
        out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(s) - root));
        ++out.units_checked;
    }
    return out;
}

Complex multiplicative_gauss_sum(const FiniteField& field, FieldElement c, std::uint32_t order,
                                 std::uint32_t power) {
    if (order == 0 || (field.size() - 1) % order != 0) {
        throw PreconditionError("multiplicative_gauss_sum: order must divide q - 1");
    }
    const long long p = field.characteristic();
    Complex s{};
    for (std::uint32_t r = 1; r < field.size(); ++r) {
        const auto t = field.trace(field.mul(c, {r}));
        const long long chi = (static_cast<long long>(field.log({r})) * power) % order;
        s += root_of_unity(t, p) * root_of_unity(chi, order);
    }
    return s;
}

Complex power_character_sum(const FiniteField& field, FieldElement c, std::uint32_t order) {
    const long long p = field.characteristic();
    Complex s{};
    for (std::uint32_t r = 0; r < field.size(); ++r) {
        s += root_of_unity(field.trace(field.mul(c, field.pow({r}, order))), p);
    }
    return s;
}

Complex gauss_sum_reference(std::uint32_t q, std::uint32_t c, std::uint32_t order) {
    if (q < 3 || q % 2 == 0 || !is_prime_power(q)) {
        throw PreconditionError("gauss_sum_reference: q must be an odd prime power");
    }
    if (c == 0 || c >= q) throw PreconditionError("gauss_sum_reference: c must be nonzero in F_q");
    if (order < 2 || (q - 1) % order != 0) {
        throw PreconditionError("gauss_sum_reference: character order must be >= 2 and divide q - 1");
    }
    const auto pp = factorize(q).front();
    const FiniteField field(static_cast<std::uint32_t>(pp.p), pp.a);
    Complex g{};
    for (std::uint32_t j = 1; j < order; ++j) g += multiplicative_gauss_sum(field, {c}, order, j);
    return g;
}

VerificationReport certify_family(const MEBFamily& family, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const ProductRing& ring = family.ring;
    VerificationReport rep;
    rep.d = family.d;
    rep.k = family.k;
    rep.options = options;
    rep.family_id = "d=" + std::to_string(family.d) + ",k=" + std::to_string(family.k) +
                    ",bases=" + std::to_string(family.generators.size());
    if (family.metadata.contains("construction")) {
        rep.family_id += ",construction=" + family.metadata.at("construction").get<std::string>();
    }
    if (ring.size() != family.d) throw PreconditionError("certify_family: ring size differs from d");
    const std::size_t d = family.d;
    const std::size_t k = family.k;
    const std::size_t kd = k * d;
    rep.dimension = kd * d;

    std::vector<ExpandedBasis> bases;
    std::vector<bool> unitary(family.generators.size(), false);
    for (std::size_t g = 0; g < family.generators.size(); ++g) {
        const auto& gen = family.generators[g];
        if (gen.matrix.rows() != kd || gen.matrix.cols() != kd) {
            throw PreconditionError("certify_family: generator " + gen.label + " is not " +
                                    std::to_string(kd) + "x" + std::to_string(kd));
        }
        BasisResult br;
        br.label = gen.label;
        br.unitarity_deviation = is_unitary(gen.matrix, options.basis_tolerance).max_deviation;
        unitary[g] = br.unitarity_deviation <= options.basis_tolerance;
        if (!unitary[g]) {
            rep.failures.push_back("generator " + gen.label + " is not unitary (deviation " +
                                   std::to_string(br.unitarity_deviation) + ")");
        }
        bases.push_back(expand_basis_unchecked(ring, gen.matrix, k));
        const ComplexMatrix& vecs = bases.back().vectors();
        if (!options.pairs_only) {
            br.orthonormality_deviation =
                max_abs_diff(row_inner_products(vecs, vecs), ComplexMatrix::identity(vecs.rows()));
            for (std::size_t i = 0; i < vecs.rows(); ++i) {
                br.entanglement_deviation =
                    std::max(br.entanglement_deviation, reduced_density_check(vecs.row(i), d, kd));
            }
        }
        br.pass = unitary[g] && br.orthonormality_deviation <= options.basis_tolerance &&
                  br.entanglement_deviation <= options.basis_tolerance;
        if (unitary[g] && !br.pass) {
            rep.failures.push_back("basis " + gen.label + " is not an orthonormal maximally entangled basis");
        }
        rep.bases.push_back(std::move(br));
    }

    const double target = 1.0 / std::sqrt(static_cast<double>(rep.dimension));
    for (std::size_t a = 0; a < bases.size(); ++a) {
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            PairResult pr;
            pr.first = a;
            pr.second = b;
            pr.first_label = family.generators[a].label;
            pr.second_label = family.generators[b].label;
            pr.target = target;
            const auto range = bruteforce_unbiased(bases[a], bases[b]);
            pr.min_overlap = range.min;
            pr.max_overlap = range.max;
            pr.overlap_deviation = std::max(std::abs(range.max - target), std::abs(range.min - target));
            const auto crit = criterion_check(family.generators[a].matrix,
                                              family.generators[b].matrix, ring, k);
            pr.criterion_deviation = crit.max_deviation;
            // Each overlap equals |S| / d for one criterion sum S, and every
            // sum is realised by some overlap.
            const double dd = static_cast<double>(d);
            pr.agreement_deviation = std::max(std::abs(crit.max_magnitude - dd * range.max),
                                              std::abs(crit.min_magnitude - dd * range.min));
            pr.overlap_pass = pr.overlap_deviation <= options.overlap_tolerance;
            pr.criterion_pass = pr.criterion_deviation <= options.overlap_tolerance;
            pr.pass = pr.overlap_pass && pr.criterion_pass && unitary[a] && unitary[b];
            rep.max_agreement_deviation = std::max(rep.max_agreement_deviation, pr.agreement_deviation);
            if (pr.overlap_pass != pr.criterion_pass) rep.criterion_agrees = false;
            if (!pr.pass) {
                rep.failures.push_back("pair (" + pr.first_label + ", " + pr.second_label +
                                       ") is not mutually unbiased (overlap deviation " +
                                       std::to_string(pr.overlap_deviation) + ")");
            }
            rep.pairs.push_back(std::move(pr));
        }
    }
    if (rep.max_agreement_deviation > options.agreement_tolerance) {
        rep.failures.push_back("criterion and brute-force overlaps disagree by " +
                               std::to_string(rep.max_agreement_deviation));
    }
    if (!rep.criterion_agrees) rep.failures.push_back("criterion and brute force disagree on pass/fail");
    rep.pass = rep.failures.empty();
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json bases = nlohmann::json::array();
    for (const auto& b : rep.bases) {
        bases.push_back({{"label", b.label},
                         {"unitarity_deviation", b.unitarity_deviation},
                         {"orthonormality_deviation", b.orthonormality_deviation},
                         {"entanglement_deviation", b.entanglement_deviation},
                         {"pass", b.pass}});
    }
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : rep.pairs) {
        pairs.push_back({{"first", p.first_label},
                         {"second", p.second_label},
                         {"min_overlap", p.min_overlap},
                         {"max_overlap", p.max_overlap},
                         {"target", p.target},
                         {"overlap_deviation", p.overlap_deviation},
                         {"criterion_deviation", p.criterion_deviation},
                         {"agreement_deviation", p.agreement_deviation},
                         {"overlap_pass", p.overlap_pass},
                         {"criterion_pass", p.criterion_pass},
                         {"pass", p.pass}});
    }
    return {
        {"header", {{"wall_time_seconds", rep.wall_time_seconds}}},
        {"family_id", rep.family_id},
        {"d", rep.d},
        {"k", rep.k},
        {"dimension", rep.dimension},
        {"tolerances",
         {{"overlap", rep.options.overlap_tolerance},
          {"basis", rep.options.basis_tolerance},
          {"agreement", rep.options.agreement_tolerance},
          {"pairs_only", rep.options.pairs_only}}},
        {"bases", bases},
        {"pairs", pairs},
        {"max_agreement_deviation", rep.max_agreement_deviation},
        {"criterion_agrees", rep.criterion_agrees},
        {"failures", rep.failures},
        {"pass", rep.pass},
    };
}

}  // namespace mumeb
