#include <doctest.h>

#include "fermibasis/basis.hpp"
#include "fermibasis/fock_text.hpp"

using namespace fermibasis;
using namespace fermibasis::basis;
using fock::CentralPoly;
using fock::FockVector;
using fock::Kind;
using lr::SubsetIndex;

namespace {

FockVector from_word(std::initializer_list<fock::Generator> gens) {
    return fock::apply_word(fock::word(gens), FockVector::vacuum());
}

}  // namespace

TEST_CASE("slot words reproduce the printed l=2 expansions") {
    auto sw = slot_word(4, SubsetIndex{4, 3});
    REQUIRE(sw.terms.size() == 1);
    CHECK(sw.terms[0].I == SubsetIndex{4, 3});
    CHECK(sw.terms[0].K == SubsetIndex{2, 1});
    CHECK(sw.terms[0].coefficient == 1);

    auto sw2 = slot_word(4, SubsetIndex{4, 2});
    CHECK(sw2.terms.size() == 2);

    auto sw3 = slot_word(4, SubsetIndex{3, 1});
    CHECK(sw3.terms.size() == 6);
    for (const auto& t : sw3.terms) CHECK(t.coefficient == 1);
}

TEST_CASE("B_J normal-ordered values") {
    // B_{3,4} = c*_2 c*_1 b*_2 b*_1 -> + b*[2,1] c*[2,1]
    CHECK(build_BJ(4, SubsetIndex{4, 3}) ==
          from_word({{Kind::cstar, 2}, {Kind::cstar, 1}, {Kind::bstar, 2}, {Kind::bstar, 1}}));
    // B_empty = b*_n ... b*_1
    CHECK(build_BJ(2, SubsetIndex{}) == from_word({{Kind::bstar, 2}, {Kind::bstar, 1}}));
    // B_{1} (n=2) = b*_2 c*_1 + c*_2 b*_1
    CHECK(build_BJ(2, SubsetIndex{1}) ==
          from_word({{Kind::bstar, 2}, {Kind::cstar, 1}}) +
              from_word({{Kind::cstar, 2}, {Kind::bstar, 1}}));
    // n=1, J={1}: B = c*_1
    CHECK(build_BJ(1, SubsetIndex{1}) == from_word({{Kind::cstar, 1}}));
    CHECK_THROWS_AS(build_BJ(2, SubsetIndex{3}), std::invalid_argument);
}

TEST_CASE("barred route gives the same family") {
    CHECK(build_BJ_bar(2, SubsetIndex{}) == build_BJ(2, SubsetIndex{}));
    CHECK(build_BJ_bar(1, SubsetIndex{1}) == from_word({{Kind::cstar, 1}}));
    CHECK(build_BJ_bar(4, SubsetIndex{4, 3}) == build_BJ(4, SubsetIndex{4, 3}));
    for (int n = 1; n <= 3; ++n) CHECK(bj_identity_check(n));
}

TEST_CASE("the 4^n family") {
    auto fam1 = build_family(1);
    REQUIRE(fam1.size() == 4);
    // b*_1; +-t*_1; 1; c*_1 up to sign
    std::vector<FockVector> expected{from_word({{Kind::bstar, 1}}), from_word({{Kind::tstar, 1}}),
                                     FockVector::vacuum(), from_word({{Kind::cstar, 1}})};
    std::vector<bool> used(4, false);
    for (const auto& e : fam1) {
        bool hit = false;
        for (std::size_t i = 0; i < expected.size() && !hit; ++i) {
            if (used[i]) continue;
            if (e.value == expected[i] || e.value == -expected[i]) used[i] = hit = true;
        }
        CHECK(hit);
    }

    auto fam2 = build_family(2);
    CHECK(fam2.size() == 16);

    // fermion-count grading: n - |J| - |M| many b*'s, |J| - |N| many c*'s
    for (const auto& e : fam2) {
        std::size_t nb = 2 - e.J.size() - e.M.size();
        std::size_t nc = e.J.size() - e.N.size();
        for (const auto& [m, c] : e.value.terms()) {
            CHECK(m.bstar.size() == nb);
            CHECK(m.cstar.size() == nc);
        }
    }
}

TEST_CASE("Jacobi-Trudi determinant in the H variables") {
    // J = {1,...,n}: empty complement, empty determinant
    CHECK(schur_det_h(2, SubsetIndex{2, 1}) == CentralPoly(fock::FockVector::vacuum().terms().begin()->second));
    // n=2, J={1}: J' = {2}, det = h*_1
    CHECK(schur_det_h(2, SubsetIndex{1}) == CentralPoly::h(1));
    // n=4, J={4,2}: J' = {3,1}, det [[h2, h1],[h0, h_{-1}]] = -h1  (h_{-1} = 0)
    CHECK(schur_det_h(4, SubsetIndex{4, 2}) == -CentralPoly::h(1));
    // n=4, J={4,3}: J' = {2,1}, det [[h1, h0],[h0, h_{-1}]] = -1
    CHECK(schur_det_h(4, SubsetIndex{4, 3}) == -CentralPoly(fermibasis::exactmath::GaussianRational(1)));
}

TEST_CASE("reduction to Schur determinants") {
    auto r = reduction_check(2, SubsetIndex{1}, SubsetIndex{}, SubsetIndex{});
    CHECK(r.matches);
    CHECK(r.sign == 1);
    // t*_2 vac = t*_1 h*_1 vac
    FockVector want = FockVector::vacuum().times_central(CentralPoly::t1() * CentralPoly::h(1));
    CHECK(r.value == want);

    auto rfull = reduction_check(2, SubsetIndex{2, 1}, SubsetIndex{}, SubsetIndex{});
    CHECK(rfull.matches);  // empty determinant: +-vac

    auto r42 = reduction_check(4, SubsetIndex{4, 2}, SubsetIndex{}, SubsetIndex{});
    CHECK(r42.matches);

    // every partial string reduces as well
    for (int n = 1; n <= 3; ++n)
        for (const auto& J : lr::all_subsets(n)) {
            int l = static_cast<int>(J.size());
            for (const auto& M0 : lr::all_subsets(n - l))
                for (const auto& N0 : lr::all_subsets(l))
                    CHECK(reduction_check(n, J, M0, N0).matches);
        }
}

TEST_CASE("leading term of B_J") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& J : lr::all_subsets(n)) {
            auto s = leading_term_sign(n, J);
            REQUIRE(s.has_value());
            CHECK((*s == 1 || *s == -1));
        }
    CHECK(leading_term_sign(4, SubsetIndex{4, 3}).value() == 1);
}

TEST_CASE("completeness rank certificates") {
    auto c1 = certify_rank(1, 7);
    CHECK(c1.rank == 4);
    CHECK(c1.probe_full);
    auto c2 = certify_rank(2, 7);
    CHECK(c2.rank == 16);
    CHECK(c2.coordinates >= 16);
    CHECK(c2.probe_full);
    auto c2b = certify_rank(2, 99);
    CHECK(c2b.rank == 16);
}
