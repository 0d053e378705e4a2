#include <doctest.h>

#include <random>

#include "fermibasis/lattice.hpp"
#include "fermibasis/random_pool.hpp"

using namespace fermibasis;
using namespace fermibasis::lattice;
using exactmath::GaussianRational;
using exactmath::RationalPool;

namespace {

QuasiLocalOp random_op(RationalPool& pool, std::mt19937_64& rng, int left, int width, int spin) {
    std::uniform_int_distribution<std::uint32_t> state(0, (1u << width) - 1);
    QuasiLocalOp::Entries entries;
    for (int tries = 0; tries < 64 && entries.size() < 3; ++tries) {
        std::uint32_t r = state(rng), c = state(rng);
        if (std::popcount(c) - std::popcount(r) != spin) continue;
        entries.emplace(QuasiLocalOp::Key{r, c}, Scalar(pool.next()));
    }
    return QuasiLocalOp::from_entries(spin, left, width, std::move(entries));
}

}  // namespace

TEST_CASE("quasi-local representation") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    CHECK(!vac.support().has_value());
    CHECK(vac.spin() == 0);
    CHECK(vac == vac.embedded(-1, 2).trimmed());
    CHECK(vac.embedded(1, 2).weight_blocks_consistent());
    // translated tails are different operators
    CHECK(!(vac == QuasiLocalOp::pure_tail(5, 0, Scalar(1))));
    CHECK(vac.translated(5) == QuasiLocalOp::pure_tail(5, 0, Scalar(1)));

    RationalPool pool(61);
    std::mt19937_64 rng(62);
    QuasiLocalOp x = random_op(pool, rng, 2, 3, 0);
    CHECK(x == x.embedded(0, 6));
    CHECK((x + (-x)).is_zero());
    CHECK_THROWS_AS(x + Phi(1, 2, x), std::invalid_argument);
}

TEST_CASE("fermion annihilation properties") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    for (int j = 1; j <= 5; ++j)
        for (int e : {1, -1}) CHECK(Psi(e, j, vac).is_zero());
    for (int j = 0; j >= -4; --j)
        for (int e : {1, -1}) CHECK(Phi(e, j, vac).is_zero());
    CHECK(!Phi(1, 1, vac).is_zero());
    CHECK(!Psi(1, 0, vac).is_zero());
    CHECK(Phi(1, 1, vac).spin() == 1);
    CHECK(Phi(-1, 1, vac).spin() == -1);
}

TEST_CASE("canonical anticommutation relations") {
    RationalPool pool(63);
    std::mt19937_64 rng(64);
    QuasiLocalOp x = random_op(pool, rng, 1, 3, 0);

    // spec example: (Psi^+_2 Phi^-_2 + Phi^-_2 Psi^+_2)(X) = X
    CHECK(Psi(1, 2, Phi(-1, 2, x)) + Phi(-1, 2, Psi(1, 2, x)) == x);

    for (int j = 0; j <= 4; ++j)
        for (int k = 0; k <= 4; ++k)
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) {
                    CHECK((Psi(e1, j, Psi(e2, k, x)) + Psi(e2, k, Psi(e1, j, x))).is_zero());
                    CHECK((Phi(e1, j, Phi(e2, k, x)) + Phi(e2, k, Phi(e1, j, x))).is_zero());
                    QuasiLocalOp pair = Psi(e1, j, Phi(e2, k, x)) + Phi(e2, k, Psi(e1, j, x));
                    if (j == k && e1 + e2 == 0)
                        CHECK(pair == x);
                    else
                        CHECK(pair.is_zero());
                }
}

TEST_CASE("truncation guards") {
    RationalPool pool(65);
    std::mt19937_64 rng(66);
    QuasiLocalOp x = random_op(pool, rng, 2, 2, 1).trimmed();
    REQUIRE(!x.is_zero());
    for (int e : {1, -1}) {
        CHECK(Psi(e, x.right() + 1, x).is_zero());
        CHECK(Phi(e, x.left() - 1, x).is_zero());
        CHECK(!Psi(e, x.left() - 1, x).is_zero());  // Psi does not vanish on the left
        CHECK(!Phi(e, x.right() + 1, x).is_zero());  // Phi does not vanish on the right
    }
}

TEST_CASE("free-fermion R matrix adjoint") {
    RationalPool pool(67);
    std::mt19937_64 rng(68);
    QuasiLocalOp x = random_op(pool, rng, 3, 2, 0);  // supported within [3,4]

    auto at = r_adjoint(3, x);
    CHECK(at[0] == x);  // value 1 at z = 0

    // identity when disjoint: i > b or i < a-1
    auto far_right = r_adjoint(6, x);
    CHECK(far_right[1].is_zero());
    CHECK(far_right[2].is_zero());
    auto far_left = r_adjoint(1, x);
    CHECK(far_left[1].is_zero());
    CHECK(far_left[2].is_zero());
    // i = a-1 touches the window
    CHECK(!(r_adjoint(2, x)[1].is_zero() && r_adjoint(2, x)[2].is_zero()));

    // H^2 = 0 <=> C1(C1(X)) = 2 C2(X)
    QuasiLocalOp c1c1 = r_adjoint(3, at[1])[1];
    CHECK(c1c1 == at[2] + at[2]);
}

TEST_CASE("h* series and support") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    QuasiLocalOp x = Phi(1, 1, vac);

    CHECK(hstar_coeff(0, x) == x);
    CHECK(hstar_coeff(0, vac) == vac);

    for (int p = 1; p <= 4; ++p) {
        auto s = hstar_coeff(p, x).support();
        if (s) {
            CHECK(s->first >= x.left() - 1);
            CHECK(s->second <= x.right() + p);
        }
        auto sv = hstar_coeff(p, vac).support();
        if (sv) {
            CHECK(sv->first >= 0);
            CHECK(sv->second <= p);
        }
    }

    // stabilization: one more product site changes nothing
    auto a = hstar_series(x, 3, 0);
    auto b = hstar_series(x, 3, 1);
    for (int q = 0; q <= 3; ++q) CHECK(a[q] == b[q]);

    // h* h*^{-1} = id through the truncation order
    auto inv = hstar_inverse_series(x, 3);
    for (int q = 0; q <= 3; ++q) {
        QuasiLocalOp acc;
        for (int b2 = 0; b2 <= q; ++b2) {
            if (inv[b2].is_zero()) continue;
            acc = acc + hstar_series(inv[b2], q - b2)[q - b2];
        }
        if (q == 0)
            CHECK(acc == x);
        else
            CHECK(acc.is_zero());
    }
}

TEST_CASE("vacuum expectation of h* is 1 - z^2") {
    auto ex = expectation_series(4);
    CHECK(ex[0] == Scalar(1));
    CHECK(ex[1] == Scalar(0));
    CHECK(ex[2] == Scalar(-1));
    CHECK(ex[3] == Scalar(0));
    CHECK(ex[4] == Scalar(0));
}

TEST_CASE("conjugation identities") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    std::vector<QuasiLocalOp> panel{vac, Phi(1, 1, vac)};
    // order 0 reduces to Phi_p on both sides
    CHECK(conjugation_check(1, 0, panel));
    // spec examples
    CHECK(conjugation_check(1, 3, {vac}));
    CHECK(conjugation_check(0, 2, {Phi(1, 1, vac)}));
    CHECK(conjugation_check(2, 2, panel));
}

TEST_CASE("Heisenberg modes") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    for (int nu = 1; nu <= 4; ++nu) CHECK(I_nu(nu, vac).is_zero());
    CHECK(!I_nu(-1, vac).is_zero());

    std::vector<QuasiLocalOp> panel{vac, Phi(1, 1, vac), Psi(1, 0, Phi(-1, 1, vac))};
    for (const auto& x : panel) {
        CHECK(I_nu(1, I_nu(-1, x)) - I_nu(-1, I_nu(1, x)) == x.scaled(Scalar(2)));
        CHECK((I_nu(1, I_nu(2, x)) - I_nu(2, I_nu(1, x))).is_zero());
        CHECK(I_nu(2, I_nu(-2, x)) - I_nu(-2, I_nu(2, x)) == x.scaled(Scalar(4)));
    }
}

TEST_CASE("bosonized form of h*") {
    QuasiLocalOp vac = QuasiLocalOp::vacuum();
    CHECK(bosonization_check(0, {vac}));
    CHECK(bosonization_check(2, {vac, Phi(1, 1, vac), Phi(-1, 1, vac)}));
    CHECK(bosonization_check(3, {Phi(1, 1, vac)}));
}

TEST_CASE("h*-monomial ranks count partitions") {
    GaussianRational y(3, 7ul);
    auto r0 = schur_monomial_rank(0, y);
    CHECK(r0.rank == 1);
    CHECK(r0.monomials == 1);
    auto r2 = schur_monomial_rank(2, y);
    CHECK(r2.rank == 4);
    auto r3 = schur_monomial_rank(3, y);
    CHECK(r3.rank == 7);
    CHECK_THROWS_AS(schur_monomial_rank(1, GaussianRational(1)), std::domain_error);
    CHECK_THROWS_AS(schur_monomial_rank(1, GaussianRational(0)), std::domain_error);
}

TEST_CASE("translation covariance") {
    RationalPool pool(71);
    std::mt19937_64 rng(72);
    QuasiLocalOp x = random_op(pool, rng, 1, 3, 0);
    for (int e : {1, -1}) {
        CHECK(Psi(e, 2, x).translated(1) == Psi(e, 3, x.translated(1)));
        CHECK(Phi(e, 0, x).translated(-2) == Phi(e, -2, x.translated(-2)));
    }
    CHECK(hstar_coeff(1, x).translated(1) == hstar_coeff(1, x.translated(1)));
    CHECK(hstar_coeff(2, x).translated(3) == hstar_coeff(2, x.translated(3)));
}
