#include "fermibasis/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermibasis/matrix.hpp"
#include "fermibasis/random_pool.hpp"

namespace fermibasis::basis {

using fock::AlgebraWord;
using fock::CentralMonomial;
using fock::Generator;
using fock::Kind;
using fock::PBWMonomial;

namespace {

void check_J(int n, const SubsetIndex& J) {
    if (n < 1) throw std::invalid_argument("chain length must be >= 1");
    if (J.max() > n) throw std::invalid_argument("J must be a subset of [1,n]");
}

/// The creation word g_n ... g_1 for one (I, K) term, in application order
/// (g_1 applied first).
AlgebraWord creation_word(int n, const SubsetIndex& I, const SubsetIndex& K, bool barred) {
    AlgebraWord w;
    const auto& is = I.elements();
    const auto& ks = K.elements();
    for (int slot = n; slot >= 1; --slot) {
        auto at = std::find(is.begin(), is.end(), slot);
        if (at == is.end()) {
            w.push_back({{barred ? Kind::bbarstar : Kind::bstar, slot}, GaussianRational(1)});
        } else {
            auto p = static_cast<std::size_t>(at - is.begin());
            w.push_back({{barred ? Kind::cbarstar : Kind::cstar, ks[p]}, GaussianRational(1)});
        }
    }
    return w;
}

FockVector build_from_slots(int n, const SubsetIndex& J, bool barred) {
    FockVector acc;
    for (const auto& term : slot_word(n, J).terms) {
        FockVector w = fock::apply_word(creation_word(n, term.I, term.K, barred), FockVector::vacuum());
        acc += GaussianRational(term.coefficient) * w;
    }
    return acc;
}

/// bbar_M c_N as a word in application order (c's first, smallest index
/// innermost), matching x_M = x_{i_1} ... x_{i_l} with i_1 > ... > i_l.
AlgebraWord annihilator_word(const SubsetIndex& M, const SubsetIndex& N) {
    AlgebraWord w;
    for (int m : M.elements()) w.push_back({{Kind::bbar, m}, GaussianRational(1)});
    for (int k : N.elements()) w.push_back({{Kind::c, k}, GaussianRational(1)});
    return w;
}

}  // namespace

SlotWord slot_word(int n, const SubsetIndex& J) {
    check_J(n, J);
    int l = static_cast<int>(J.size());
    SlotWord out{n, J, {}};
    if (l == 0) {
        out.terms.push_back({SubsetIndex{}, SubsetIndex{}, 1});
        return out;
    }
    lr::LRTable table = lr::lr_series(l, n);
    for (const auto& I : lr::all_tuples(l, n)) {
        for (const auto& K : lr::all_tuples(l, n)) {
            long long c = table.value(I, J, K).value();
            if (c != 0) out.terms.push_back({I, K, c});
        }
    }
    return out;
}

FockVector build_BJ(int n, const SubsetIndex& J) { return build_from_slots(n, J, false); }

FockVector build_BJ_bar(int n, const SubsetIndex& J) { return build_from_slots(n, J, true); }

bool bj_identity_check(int n) {
    for (const auto& J : lr::all_subsets(n))
        if (build_BJ(n, J) != build_BJ_bar(n, J)) return false;
    return true;
}

std::vector<FamilyElement> build_family(int n) {
    std::vector<FamilyElement> out;
    for (const auto& J : lr::all_subsets(n)) {
        int l = static_cast<int>(J.size());
        FockVector bj = build_BJ(n, J);
        for (const auto& M : lr::all_subsets(n - l)) {
            for (const auto& N : lr::all_subsets(l)) {
                out.push_back({J, M, N, fock::apply_word(annihilator_word(M, N), bj)});
            }
        }
    }
    return out;
}

CentralPoly schur_det_h(int n, const SubsetIndex& J) {
    check_J(n, J);
    SubsetIndex Jc = SubsetIndex::complement_in(n, J);
    int d = static_cast<int>(Jc.size());
    if (d == 0) return CentralPoly(GaussianRational(1));

    // Leibniz expansion of det(h*_{j'_a - b}), a,b = 1..d
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    CentralPoly det;
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        CentralMonomial m;
        bool zero = false;
        for (int a = 0; a < d && !zero; ++a) {
            int idx = Jc.elements()[static_cast<std::size_t>(a)] - (perm[static_cast<std::size_t>(a)] + 1);
            if (idx < 0)
                zero = true;
            else if (idx > 0)
                m = m.times_h(idx);
        }
        if (!zero) det.add_term(m, GaussianRational(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ReductionResult reduction_check(int n, const SubsetIndex& J, const SubsetIndex& M0,
                                const SubsetIndex& N0) {
    check_J(n, J);
    int l = static_cast<int>(J.size());
    if (M0.max() > n - l || N0.max() > l)
        throw std::invalid_argument("reduction_check: M0 or N0 out of range");

    FockVector element = fock::apply_word(annihilator_word(M0, N0), build_BJ(n, J));
    SubsetIndex Mrest = SubsetIndex::complement_in(n - l, M0);
    SubsetIndex Nrest = SubsetIndex::complement_in(l, N0);
    ReductionResult res;
    res.value = fock::apply_word(annihilator_word(Mrest, Nrest), element);

    FockVector target = FockVector::vacuum()
                            .times_central(CentralPoly::t1(n - l))
                            .times_central(schur_det_h(n, J));
    if (res.value == target) {
        res.matches = true;
        res.sign = 1;
    } else if (res.value == -target) {
        res.matches = true;
        res.sign = -1;
    }
    return res;
}

RankCertificate certify_rank(int n, std::uint64_t seed) {
    auto family = build_family(n);
    fock::CoordinateCaps caps{n, n};
    std::vector<FockVector> vectors;
    vectors.reserve(family.size());
    for (auto& e : family) vectors.push_back(e.value);
    fock::PBWEnumeration enumeration(vectors, caps);

    const std::size_t rows = vectors.size(), cols = enumeration.size();
    exactmath::ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [idx, c] : fock::pbw_coordinates(vectors[r], enumeration)) m(r, idx) = c;

    RankCertificate cert;
    cert.coordinates = cols;
    cert.rank = exactmath::exact_rank(m);

    // Square certificate: compressing the coordinates by a random matrix can
    // only lose rank, so a full-rank probe confirms the exact rank from
    // below. Unlucky draws are retried with fresh values, bounded.
    exactmath::RationalPool pool(seed);
    for (cert.probe_attempts = 1; cert.probe_attempts <= 3; ++cert.probe_attempts) {
        exactmath::ExactMatrix compression(cols, rows);
        for (std::size_t i = 0; i < cols; ++i)
            for (std::size_t j = 0; j < rows; ++j) compression(i, j) = pool.next();
        exactmath::ExactMatrix probe(rows, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t j = 0; j < rows; ++j) {
                GaussianRational acc(0);
                for (const auto& [idx, c] : fock::pbw_coordinates(vectors[r], enumeration))
                    acc += c * compression(idx, j);
                probe(r, j) = acc;
            }
        if (exactmath::exact_rank(probe) == rows) {
            cert.probe_full = true;
            break;
        }
    }
    return cert;
}

std::optional<int> leading_term_sign(int n, const SubsetIndex& J) {
    int l = static_cast<int>(J.size());
    std::vector<int> leading_c;
    for (int k = l; k >= 1; --k) leading_c.push_back(k);
    FockVector bj = build_BJ(n, J);
    std::optional<int> sign;
    for (const auto& [m, c] : bj.terms()) {
        if (m.cstar != leading_c) continue;
        if (sign.has_value()) return std::nullopt;  // more than one such monomial
        if (m.bstar != SubsetIndex::complement_in(n, J).elements()) return std::nullopt;
        if (c == GaussianRational(1))
            sign = 1;
        else if (c == GaussianRational(-1))
            sign = -1;
        else
            return std::nullopt;
    }
    return sign;
}

}  // namespace fermibasis::basis
