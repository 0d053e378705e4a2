#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermibasis/fock.hpp"
#include "fermibasis/lr.hpp"

namespace fermibasis::basis {

using exactmath::GaussianRational;
using fock::CentralPoly;
using fock::FockVector;
using lr::SubsetIndex;

/// One creation word of the B_J sum: b*'s on every slot n..1 except that
/// c*_{k_p} sits at slot i_p, weighted by C^I_{J,K}.
struct SlotTerm {
    SubsetIndex I, K;
    long long coefficient;
};

struct SlotWord {
    int n = 0;
    SubsetIndex J;
    std::vector<SlotTerm> terms;
};

/// The nonzero (I, K) terms of B_J, before normal ordering.
SlotWord slot_word(int n, const SubsetIndex& J);

/// B_J as a normal-ordered vector, built from the unbarred creators.
FockVector build_BJ(int n, const SubsetIndex& J);

/// The same sum over the barred creators.
FockVector build_BJ_bar(int n, const SubsetIndex& J);

/// Exact equality of the two expressions for every J subset of [1,n].
bool bj_identity_check(int n);

struct FamilyElement {
    SubsetIndex J, M, N;
    FockVector value;  // bbar_M c_N (B_J)
};

/// All 4^n elements, J subset of [1,n], M subset of [1,n-|J|],
/// N subset of [1,|J|], annihilators applied in decreasing-index order.
std::vector<FamilyElement> build_family(int n);

/// Jacobi-Trudi determinant det(h*_{j'_a - b}) over the complement
/// J' = [1,n] \ J, expanded directly in the H variables (h*_0 = 1,
/// h*_{<0} = 0). Independent of the word engine.
CentralPoly schur_det_h(int n, const SubsetIndex& J);

struct ReductionResult {
    FockVector value;      // complementary annihilator string applied to the element
    bool matches = false;  // equals sign * t1^{n-|J|} * schur_det * vacuum
    int sign = 0;          // the +-1 the engine found (0 when matches is false)
};

/// Applies bbar_{[1,n-l] \ M0} c_{[1,l] \ N0} to bbar_{M0} c_{N0} (B_J) and
/// compares against the Schur-determinant normal form.
ReductionResult reduction_check(int n, const SubsetIndex& J, const SubsetIndex& M0,
                                const SubsetIndex& N0);

struct RankCertificate {
    std::size_t rank = 0;            // exact rank of the coordinate matrix
    std::size_t coordinates = 0;     // number of distinct PBW monomials observed
    bool probe_full = false;         // seeded square compression probe reached 4^n
    int probe_attempts = 0;
};

/// Flattens the 4^n family on the full PBW monomial basis and returns the
/// exact rank together with a seeded random-compression certificate.
RankCertificate certify_rank(int n, std::uint64_t seed);

/// Leading-structure check: B_J contains exactly one monomial whose c*
/// indices are exactly {1..l}; its b* part is the complement of J and its
/// coefficient is +-1. Returns that sign, nullopt when violated.
std::optional<int> leading_term_sign(int n, const SubsetIndex& J);

}  // namespace fermibasis::basis
