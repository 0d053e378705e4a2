#include <doctest.h>

#include "fermibasis/fock.hpp"
#include "fermibasis/fock_text.hpp"
#include "fermibasis/random_pool.hpp"

#include <random>

using namespace fermibasis::fock;
using fermibasis::exactmath::GaussianRational;
using fermibasis::exactmath::RationalPool;

namespace {

FockVector mono(std::vector<int> bs, std::vector<int> cs, int t1 = 0,
                std::vector<std::pair<int, int>> h = {}) {
    PBWMonomial m;
    m.bstar = std::move(bs);
    m.cstar = std::move(cs);
    m.central.t1 = t1;
    m.central.h = std::move(h);
    return FockVector::monomial(m);
}

FockVector random_vector(RationalPool& pool, std::mt19937_64& rng, int max_index) {
    std::uniform_int_distribution<int> coin(0, 1), idx(1, max_index);
    FockVector v;
    for (int t = 0; t < 2; ++t) {
        PBWMonomial m;
        std::vector<int> bs, cs;
        for (int j = max_index; j >= 1; --j) {
            if (coin(rng) && coin(rng)) bs.push_back(j);
            if (coin(rng) && coin(rng)) cs.push_back(j);
        }
        m.bstar = bs;
        m.cstar = cs;
        v.add_term(m, pool.next());
    }
    if (v.is_zero()) v = FockVector::vacuum();
    return v;
}

}  // namespace

TEST_CASE("anticommutator table") {
    // [b*_3, bbar_1]+ = -t*_3 = -T1 H2
    CentralPoly want = -(CentralPoly::t1() * CentralPoly::h(2));
    CHECK(anticommutator({Kind::bstar, 3}, {Kind::bbar, 1}) == want);
    CHECK(anticommutator({Kind::bbar, 1}, {Kind::bstar, 3}) == want);
    // index convention t*_{r<=0} = 0
    CHECK(anticommutator({Kind::bstar, 1}, {Kind::bbar, 2}).is_zero());
    CHECK(anticommutator({Kind::bstar, 2}, {Kind::c, 2}).is_zero());
    CHECK(anticommutator({Kind::bstar, 2}, {Kind::b, 2}) == CentralPoly(GaussianRational(1)));
    CHECK(anticommutator({Kind::bbarstar, 2}, {Kind::bbar, 2}) == -CentralPoly::t1());
    CHECK_THROWS_AS(anticommutator({Kind::tstar, 1}, {Kind::b, 1}), std::invalid_argument);
}

TEST_CASE("apply_word normal ordering") {
    CHECK(apply_word(word({{Kind::b, 1}, {Kind::bstar, 1}}), FockVector::vacuum()) ==
          FockVector::vacuum());

    // bbar_1 (b*_2 b*_1 vac) = t*_1 b*_2 - t*_2 b*_1 (vac)
    FockVector got = apply_generator({Kind::bbar, 1}, mono({2, 1}, {}));
    FockVector want = mono({2}, {}, 1) - mono({1}, {}, 1, {{1, 1}});
    CHECK(got == want);

    // c_1 (c*_2 c*_1 vac) = -c*_2 (vac)
    CHECK(apply_generator({Kind::c, 1}, mono({}, {2, 1})) == -mono({}, {2}));

    // annihilation shadow: x_p kills monomials with star indices < p
    CHECK(apply_generator({Kind::b, 3}, mono({2, 1}, {})).is_zero());
    CHECK(apply_generator({Kind::cbar, 4}, mono({}, {3, 2, 1})).is_zero());
}

TEST_CASE("barred creators expand triangularly") {
    auto e1 = bar_star_expand(Kind::bbarstar, 1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].second == 1);
    CHECK(e1[0].first == CentralPoly(GaussianRational(1)));

    // bbar*_2 = b*_2 - h*_1 b*_1
    auto e2 = bar_star_expand(Kind::bbarstar, 2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].first == -CentralPoly::h(1));
    CHECK(e2[1].first == CentralPoly(GaussianRational(1)));

    // bbar*_3 = b*_3 - h*_1 b*_2 + (h*_1^2 - h*_2) b*_1
    auto e3 = bar_star_expand(Kind::cbarstar, 3);
    CHECK(e3[0].first == CentralPoly::h(1) * CentralPoly::h(1) - CentralPoly::h(2));
    CHECK(e3[1].first == -CentralPoly::h(1));
    CHECK(e3[2].first == CentralPoly(GaussianRational(1)));

    // (bar2) restated: sum_q h*_q xbar*_{p-q} = x*_p on arbitrary vectors
    RationalPool pool(23);
    std::mt19937_64 rng(24);
    FockVector v = random_vector(pool, rng, 5);
    for (int p = 1; p <= 5; ++p) {
        FockVector lhs;
        for (int q = 0; q <= p - 1; ++q)
            lhs += apply_word(word({{Kind::hstar, q}, {Kind::bbarstar, p - q}}), v);
        CHECK(lhs == apply_generator({Kind::bstar, p}, v));
    }
}

TEST_CASE("formal series relations") {
    std::vector<FockVector> samples{FockVector::vacuum(), mono({3, 1}, {}), mono({}, {2})};
    CHECK(series_identity_check(1, samples));
    CHECK(series_identity_check(3, samples));
    RationalPool pool(31);
    std::mt19937_64 rng(32);
    std::vector<FockVector> rand{random_vector(pool, rng, 6), random_vector(pool, rng, 6)};
    CHECK(series_identity_check(2, rand));
}

TEST_CASE("word algebra is linear and multiplicative") {
    RationalPool pool(41);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> idx(1, 5), pick(0, 7);
    const Kind kinds[] = {Kind::b,    Kind::c,    Kind::bstar,    Kind::cstar,
                          Kind::bbar, Kind::cbar, Kind::bbarstar, Kind::tstar};
    for (int trial = 0; trial < 30; ++trial) {
        FockVector v = random_vector(pool, rng, 5);
        FockVector w = random_vector(pool, rng, 5);
        AlgebraWord w1 = word({{kinds[pick(rng)], idx(rng)}, {kinds[pick(rng)], idx(rng)}});
        AlgebraWord w2 = word({{kinds[pick(rng)], idx(rng)}});
        AlgebraWord combined = w1;
        combined.insert(combined.end(), w2.begin(), w2.end());
        CHECK(apply_word(combined, v) == apply_word(w1, apply_word(w2, v)));
        GaussianRational c = pool.next();
        CHECK(apply_word(w1, v + c * w) == apply_word(w1, v) + c * apply_word(w1, w));
    }
}

TEST_CASE("pbw coordinates") {
    std::vector<FockVector> family{FockVector::vacuum(), mono({2}, {}, 1),
                                   mono({1}, {}, 1, {{1, 1}})};
    PBWEnumeration en(family, {4, 4});
    CHECK(en.size() == 3);
    auto coords = pbw_coordinates(FockVector::vacuum(), en);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0].second == GaussianRational(1));

    // t*_1 b*_2 - t*_2 b*_1 in the (b*,c*)-indexed central view
    FockVector v = mono({2}, {}, 1) - mono({1}, {}, 1, {{1, 1}});
    auto central = pbw_coordinates_central(v, {4, 4});
    REQUIRE(central.size() == 2);
    CHECK(central.at({0b10, 0}) == CentralPoly::t1());
    CHECK(central.at({0b01, 0}) == -(CentralPoly::t1() * CentralPoly::h(1)));

    auto spec = pbw_coordinates_specialized(
        v, {4, 4}, {GaussianRational(2), {GaussianRational(3), GaussianRational(5)}});
    CHECK(spec.at({0b10, 0}) == GaussianRational(2));
    CHECK(spec.at({0b01, 0}) == GaussianRational(-6));

    CHECK(pbw_coordinates_central(FockVector(), {1, 1}).empty());
    CHECK_THROWS_AS(pbw_coordinates_central(mono({5}, {}), {4, 4}), std::out_of_range);
}

TEST_CASE("text grammar round-trips bit-exactly") {
    CHECK(render(FockVector()) == "0");
    CHECK(parse("0") == FockVector());

    FockVector v = mono({2}, {}, 1) - mono({1}, {3, 2}, -2, {{1, 2}, {3, 1}});
    v.add_term(PBWMonomial{}, GaussianRational(mpq_class(3, 7), mpq_class(-2, 5)));
    CHECK(parse(render(v)) == v);

    RationalPool pool(51);
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        FockVector r = random_vector(pool, rng, 6);
        CHECK(parse(render(r)) == r);
    }

    CHECK_THROWS_AS(parse("garbage"), std::invalid_argument);
    CHECK_THROWS_AS(parse("(1)+(0)i * b*[1,2] |vac>"), std::invalid_argument);  // not decreasing
}
