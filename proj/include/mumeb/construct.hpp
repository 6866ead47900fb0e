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

#include "mumeb/linalg.hpp"
#include "mumeb/mols.hpp"
#include "mumeb/numeric.hpp"
#include "mumeb/product_ring.hpp"

namespace mumeb {

/// Unitarity tolerance applied when a family is built.
inline constexpr double kConstructionTolerance = 1e-9;

/// H_{xi,eta} = sum_r lambda(r xi) |e_{r+eta}><e_r|.
struct PauliOperator {
    ProductRingElement xi;
    ProductRingElement eta;
};

ComplexMatrix pauli_matrix(const ProductRing& ring, const PauliOperator& op);

/// u(a)_{r,s} = delta_{ar,s}, so U(a)|e_r> = |e_{a^{-1} r}>.
ComplexMatrix permutation_unitary(const ProductRing& ring, const ProductRingElement& a);

/// W_{r,s} = lambda(rs) / sqrt(d).
ComplexMatrix fourier_unitary(const ProductRing& ring);

/// V(a) = U(a) W.
ComplexMatrix v_unitary(const ProductRing& ring, const ProductRingElement& a);

/// The k d^2 vectors (H_{xi,eta} (x) I) |psi_U^j>, one per row, ordered
/// (xi, eta, j) lexicographically. Basis index e'_{r,j} of C^{kd} is the
/// column j*d + r of U, matching the Kronecker layout of B (x) U.
class ExpandedBasis {
public:
    ExpandedBasis(std::size_t d, std::size_t k, ComplexMatrix vectors)
        : d_(d), k_(k), vectors_(std::move(vectors)) {}

    std::size_t d() const noexcept { return d_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return vectors_.rows(); }
    const ComplexMatrix& vectors() const noexcept { return vectors_; }
    StateVector vector(std::size_t i) const;

private:
    std::size_t d_, k_;
    ComplexMatrix vectors_;
};

/// Throws PreconditionError if u is not a kd x kd unitary at kConstructionTolerance.
ExpandedBasis expand_basis(const ProductRing& ring, const ComplexMatrix& u, std::size_t k);

/// Same expansion with no unitarity gate; used to report on broken inputs.
ExpandedBasis expand_basis_unchecked(const ProductRing& ring, const ComplexMatrix& u, std::size_t k);

struct Generator {
    std::string label;
    ComplexMatrix matrix;
};

struct MEBFamily {
    std::uint32_t d = 0;
    std::uint32_t k = 0;
    ProductRing ring;
    std::vector<Generator> generators;
    nlohmann::json metadata = nlohmann::json::object();
};

/// Ring for an odd d; even d is rejected (2 must be a unit).
ProductRing odd_ring(std::uint64_t d);

/// {U(a) : a in S} followed by {V(a) : a in S}: 2(q_1 - 1) generators.
MEBFamily family_cd(const ProductRing& ring);
MEBFamily family_cd(std::uint64_t d);

/// Block for one prime-power factor q' of k. For odd q' the block is
/// (zeta_p^{T(j m^2 + m n)} / sqrt(q')) over F_{q'}; for q' = 2^a it is
/// (zeta_4^{Tr((j + 2n) m)} / sqrt(q')) over the Teichmuller set of GR(4,a).
/// j is the canonical index of the label element.
ComplexMatrix b_block(const PrimePower& factor, std::uint32_t j);

/// B_0 = I_k; for j in [1, q'_1], the tensor product over the factors of k of
/// the blocks with label index j - 1 (index-preserving injections).
ComplexMatrix b_tensor(std::uint64_t k, std::uint32_t j);

/// C_t = B_t (x) U_t with U_t the t-th generator of family_cd;
/// min(q'_1 + 1, 2(q_1 - 1)) generators.
MEBFamily family_ckd(const ProductRing& ring, std::uint64_t k);
MEBFamily family_ckd(std::uint64_t d, std::uint64_t k);

/// C_t = G_t (x) U_t where G_t holds the t-th MUB of C^k from the net built
/// on `mols`; min(w + 2, 2(q_1 - 1)) generators. k must equal order^2.
MEBFamily family_ckd_mols(const ProductRing& ring, std::uint64_t k, const MolsSet& mols,
                          const std::string& mols_source);
MEBFamily family_ckd_mols(std::uint64_t d, std::uint64_t k);

/// Appends the identity generator "I" (experimental; the result must be verified).
void append_identity(MEBFamily& family);

}  // namespace mumeb
