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

#include "mumeb/construct.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mumeb/finite_field.hpp"
#include "mumeb/galois_ring.hpp"

namespace mumeb {
namespace {

void require_unitary(const ComplexMatrix& m, const std::string& what) {
    const auto check = is_unitary(m, kConstructionTolerance);
    if (!check.unitary) {
        throw PreconditionError(what + " is not unitary (max deviation " +
                                std::to_string(check.max_deviation) + ")");
    }
}

nlohmann::json ring_summary(const ProductRing& ring) {
    auto out = nlohmann::json::array();
    for (const auto& f : ring.factors()) out.push_back(f.size());
    return out;
}

std::uint32_t unit_count_bound(const ProductRing& ring) {
    return 2 * (ring.factors().front().size() - 1);
}

}  // namespace

ComplexMatrix pauli_matrix(const ProductRing& ring, const PauliOperator& op) {
    const std::uint32_t d = ring.size();
    const std::uint32_t xi = ring.index_of(op.xi);
    const std::uint32_t eta = ring.index_of(op.eta);
    ComplexMatrix h(d, d);
    for (std::uint32_t r = 0; r < d; ++r) {
        h(ring.add_index(r, eta), r) = ring.character_index(ring.mul_index(r, xi));
    }
    return h;
}

ComplexMatrix permutation_unitary(const ProductRing& ring, const ProductRingElement& a) {
    if (!ring.is_unit(a)) {
        throw PreconditionError("permutation_unitary: " + ring.to_string(a) + " is not a unit");
    }
    const std::uint32_t d = ring.size();
    const std::uint32_t ai = ring.index_of(a);
    ComplexMatrix u(d, d);
    for (std::uint32_t r = 0; r < d; ++r) u(r, ring.mul_index(ai, r)) = 1.0;
    return u;
}

ComplexMatrix fourier_unitary(const ProductRing& ring) {
    const std::uint32_t d = ring.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix w(d, d);
    for (std::uint32_t r = 0; r < d; ++r) {
        for (std::uint32_t s = 0; s < d; ++s) {
            w(r, s) = ring.character_index(ring.mul_index(r, s)) * norm;
        }
    }
    return w;
}

ComplexMatrix v_unitary(const ProductRing& ring, const ProductRingElement& a) {
    return matmul(permutation_unitary(ring, a), fourier_unitary(ring));
}

StateVector ExpandedBasis::vector(std::size_t i) const {
    const auto row = vectors_.row(i);
    return StateVector{std::vector<Complex>(row.begin(), row.end())};
}

ExpandedBasis expand_basis_unchecked(const ProductRing& ring, const ComplexMatrix& u, std::size_t k) {
    const std::size_t d = ring.size();
    const std::size_t kd = k * d;
    if (k == 0 || u.rows() != kd || u.cols() != kd) {
        throw PreconditionError("expand_basis: generator must be " + std::to_string(kd) + "x" +
                                std::to_string(kd));
    }
    const std::size_t n = kd * d;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix vecs(n, n);
    std::vector<std::uint32_t> shifted(d);
    for (std::uint32_t xi = 0; xi < d; ++xi) {
        std::vector<Complex> phase(d);
        for (std::uint32_t r = 0; r < d; ++r) {
            phase[r] = ring.character_index(ring.mul_index(r, xi)) * norm;
        }
        for (std::uint32_t eta = 0; eta < d; ++eta) {
            for (std::uint32_t r = 0; r < d; ++r) shifted[r] = ring.add_index(r, eta);
            for (std::size_t j = 0; j < k; ++j) {
                auto out = vecs.row((std::size_t{xi} * d + eta) * k + j);
                for (std::uint32_t r = 0; r < d; ++r) {
                    const std::size_t col = j * d + r;
                    Complex* dst = out.data() + std::size_t{shifted[r]} * kd;
                    for (std::size_t c = 0; c < kd; ++c) dst[c] = phase[r] * u(c, col);
                }
            }
        }
    }
    return ExpandedBasis(d, k, std::move(vecs));
}

ExpandedBasis expand_basis(const ProductRing& ring, const ComplexMatrix& u, std::size_t k) {
    require_unitary(u, "expand_basis: generator");
    return expand_basis_unchecked(ring, u, k);
}

ProductRing odd_ring(std::uint64_t d) {
    if (d < 3 || d % 2 == 0) {
        throw PreconditionError("d must be odd (or 2^m: unsupported for construction); got d=" +
                                std::to_string(d));
    }
    return ProductRing::for_dimension(d);
}

MEBFamily family_cd(const ProductRing& ring) {
    if (!ring.all_odd()) {
        throw PreconditionError("family_cd: 2 is not a unit in a ring with an even factor");
    }
    const auto s = unit_difference_set(ring);
    MEBFamily fam{ring.size(), 1, ring, {}, nlohmann::json::object()};
    auto s_json = nlohmann::json::array();
    for (const auto& a : s) {
        fam.generators.push_back({"U(a=" + ring.to_string(a) + ")", permutation_unitary(ring, a)});
        s_json.push_back(ring.to_string(a));
    }
    const ComplexMatrix w = fourier_unitary(ring);
    for (const auto& a : s) {
        fam.generators.push_back({"V(a=" + ring.to_string(a) + ")",
                                  matmul(permutation_unitary(ring, a), w)});
    }
    for (const auto& g : fam.generators) require_unitary(g.matrix, "family_cd: " + g.label);
    fam.metadata = {
        {"construction", "gauss-pairs"},
        {"rule", "M(d,d) >= 2(q_1 - 1)"},
        {"ring_factors", ring_summary(ring)},
        {"unit_difference_set", s_json},
        {"injection", "index-preserving: i-th nonzero of F_q1 -> i-th nonzero of F_qt"},
        {"basis_order", "(xi, eta, j) lexicographic; e'_{r,j} is column j*d + r"},
        {"tolerance", kConstructionTolerance},
    };
    return fam;
}

MEBFamily family_cd(std::uint64_t d) { return family_cd(odd_ring(d)); }

ComplexMatrix b_block(const PrimePower& factor, std::uint32_t j) {
    if (factor.p < 2 || factor.value != ipow(factor.p, factor.a) || !is_prime(factor.p)) {
        throw PreconditionError("b_block: invalid prime-power factor");
    }
    const auto q = static_cast<std::uint32_t>(factor.value);
    if (j >= q) {
        throw PreconditionError("b_block: label index " + std::to_string(j) + " outside [0, " +
                                std::to_string(q) + ")");
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    ComplexMatrix b(q, q);
    if (factor.p != 2) {
        const FiniteField f(static_cast<std::uint32_t>(factor.p), factor.a);
        const long long p = f.characteristic();
        const FieldElement jj{j};
        for (std::uint32_t m = 0; m < q; ++m) {
            const FieldElement mm{m};
            const FieldElement jm2 = f.mul(jj, f.mul(mm, mm));
            for (std::uint32_t n = 0; n < q; ++n) {
                const auto t = f.trace(f.add(jm2, f.mul(mm, {n})));
                b(m, n) = root_of_unity(t, p) * norm;
            }
        }
        return b;
    }
    const GaloisRing gr(factor.a);
    const auto& teich = gr.teichmuller();
    const GaloisElement jj = teich[j];
    for (std::uint32_t m = 0; m < q; ++m) {
        for (std::uint32_t n = 0; n < q; ++n) {
            const GaloisElement twice_n = gr.add(teich[n], teich[n]);
            const auto t = gr.trace(gr.mul(gr.add(jj, twice_n), teich[m]));
            b(m, n) = root_of_unity(t, 4) * norm;
        }
    }
    return b;
}

ComplexMatrix b_tensor(std::uint64_t k, std::uint32_t j) {
    if (k < 2) throw PreconditionError("b_tensor: k must be >= 2");
    const auto factors = factorize(k);
    if (j > factors.front().value) {
        throw PreconditionError("b_tensor: j=" + std::to_string(j) + " outside [0, " +
                                std::to_string(factors.front().value) + "]");
    }
    if (j == 0) return ComplexMatrix::identity(k);
    ComplexMatrix out = b_block(factors.front(), j - 1);
    for (std::size_t t = 1; t < factors.size(); ++t) out = tensor(out, b_block(factors[t], j - 1));
    return out;
}

MEBFamily family_ckd(const ProductRing& ring, std::uint64_t k) {
    if (k < 2) throw PreconditionError("family_ckd: k must be >= 2");
    const MEBFamily base = family_cd(ring);
    const auto kf = factorize(k);
    const std::uint64_t pp_bound = kf.front().value + 1;
    const std::size_t count = std::min<std::uint64_t>(pp_bound, unit_count_bound(ring));
    MEBFamily fam{ring.size(), static_cast<std::uint32_t>(k), ring, {}, nlohmann::json::object()};
    for (std::size_t t = 0; t < count; ++t) {
        const auto& u = base.generators[t];
        fam.generators.push_back({"B_" + std::to_string(t) + "⊗" + u.label,
                                  tensor(b_tensor(k, static_cast<std::uint32_t>(t)), u.matrix)});
    }
    for (const auto& g : fam.generators) require_unitary(g.matrix, "family_ckd: " + g.label);
    auto kf_json = nlohmann::json::array();
    for (const auto& f : kf) kf_json.push_back(f.value);
    fam.metadata = {
        {"construction", "prime-power-blocks"},
        {"rule", "M(d,kd) >= min(q'_1 + 1, 2(q_1 - 1))"},
        {"ring_factors", ring_summary(ring)},
        {"k_factors", kf_json},
        {"unit_difference_set", base.metadata.at("unit_difference_set")},
        {"injection", "index-preserving for iota_t and nu_t"},
        {"pairing", "B_t pairs with the t-th U(a), V(a) generator in family order"},
        {"basis_order", "(xi, eta, j) lexicographic; e'_{r,j} is column j*d + r"},
        {"tolerance", kConstructionTolerance},
    };
    return fam;
}

MEBFamily family_ckd(std::uint64_t d, std::uint64_t k) { return family_ckd(odd_ring(d), k); }

MEBFamily family_ckd_mols(const ProductRing& ring, std::uint64_t k, const MolsSet& mols,
                          const std::string& mols_source) {
    const std::uint64_t x = exact_sqrt(k);
    if (k < 4 || x * x != k) {
        throw PreconditionError("family_ckd_mols: k=" + std::to_string(k) +
                                " is not a perfect square >= 4");
    }
    if (mols.order != x) {
        throw PreconditionError("family_ckd_mols: MOLS order " + std::to_string(mols.order) +
                                " does not match sqrt(k)=" + std::to_string(x));
    }
    const MEBFamily base = family_cd(ring);
    const Net net = net_from_mols(mols.squares, mols.order);
    const auto mubs = mubs_from_net(net, GeneralizedHadamard::fourier(x));
    const std::size_t count = std::min<std::size_t>(mubs.size(), unit_count_bound(ring));
    MEBFamily fam{ring.size(), static_cast<std::uint32_t>(k), ring, {}, nlohmann::json::object()};
    for (std::size_t t = 0; t < count; ++t) {
        const auto& u = base.generators[t];
        fam.generators.push_back({"L_" + std::to_string(t + 1) + "⊗" + u.label,
                                  tensor(mubs[t], u.matrix)});
    }
    for (const auto& g : fam.generators) require_unitary(g.matrix, "family_ckd_mols: " + g.label);
    fam.metadata = {
        {"construction", "mols-net"},
        {"rule", "M(d,kd) >= min(N_MOLS(sqrt k) + 2, 2(q_1 - 1))"},
        {"ring_factors", ring_summary(ring)},
        {"mols", {{"order", mols.order}, {"count", mols.squares.size()}, {"source", mols_source}}},
        {"net_blocks", net.n},
        {"hadamard", "fourier"},
        {"unit_difference_set", base.metadata.at("unit_difference_set")},
        {"pairing", "L_t pairs with the t-th U(a), V(a) generator in family order"},
        {"basis_order", "(xi, eta, j) lexicographic; e'_{r,j} is column j*d + r"},
        {"tolerance", kConstructionTolerance},
    };
    return fam;
}

MEBFamily family_ckd_mols(std::uint64_t d, std::uint64_t k) {
    const std::uint64_t x = exact_sqrt(k);
    if (k < 4 || x * x != k) {
        throw PreconditionError("family_ckd_mols: k=" + std::to_string(k) +
                                " is not a perfect square >= 4");
    }
    const auto ring = odd_ring(d);
    MolsSet mols{x, mols_for_order(x)};
    const std::string source = is_prime_power(x) ? "prime-power" : "macneish";
    return family_ckd_mols(ring, k, mols, source);
}

void append_identity(MEBFamily& family) {
    for (const auto& g : family.generators) {
        if (g.label == "I") throw PreconditionError("append_identity: family already has I");
    }
    family.generators.push_back({"I", ComplexMatrix::identity(std::size_t{family.k} * family.d)});
    family.metadata["experimental_identity"] = true;
}

}  // namespace mumeb
