#include <doctest.h>

#include <array>
#include <map>
#include <stdexcept>

#include "fermibasis/lr.hpp"

using namespace fermibasis::lr;

namespace {

/// Test-only oracle for l = 2: the literal six-variable truncated expansion
/// of Delta(x)Delta(y)Delta(z) / prod (1-x_i y_j)(1-x_i z_j).
/// Variables ordered (x1,x2,y1,y2,z1,z2), exponents < cap.
using Exp6 = std::array<int, 6>;
using Series6 = std::map<Exp6, long long>;

Series6 mul6(const Series6& a, const Series6& b, int cap) {
    Series6 out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exp6 e;
            bool ok = true;
            for (int i = 0; i < 6; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] >= cap) ok = false;
            }
            if (ok) out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Series6 geometric(int xi, int vj, int cap) {
    Series6 out;
    for (int k = 0; k < cap; ++k) {
        Exp6 e{};
        e[xi] = k;
        e[vj] = k;
        out[e] = 1;
    }
    return out;
}

Series6 brute_force_series(int cap) {
    Series6 acc;
    acc[Exp6{}] = 1;
    // Delta factors
    auto diff = [&](int a, int b) {
        Series6 d;
        Exp6 ea{}, eb{};
        ea[a] = 1;
        eb[b] = 1;
        d[ea] = 1;
        d[eb] = -1;
        return d;
    };
    acc = mul6(acc, diff(0, 1), cap);
    acc = mul6(acc, diff(2, 3), cap);
    acc = mul6(acc, diff(4, 5), cap);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            acc = mul6(acc, geometric(i, 2 + j, cap), cap);
            acc = mul6(acc, geometric(i, 4 + j, cap), cap);
        }
    return acc;
}

}  // namespace

TEST_CASE("subset to partition dictionary") {
    CHECK(subset_to_partition(SubsetIndex{4, 3}) == Partition{2, 2});
    CHECK(subset_to_partition(SubsetIndex{2, 1}) == Partition{});
    CHECK(subset_to_partition(SubsetIndex{3, 1}) == Partition{1});
    CHECK_THROWS_AS(SubsetIndex({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetIndex({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetIndex({2, 0}), std::invalid_argument);
}

TEST_CASE("series values against the literal six-variable expansion") {
    const int cap = 4;
    Series6 brute = brute_force_series(cap);
    LRTable table = lr_series(2, cap);
    for (const auto& I : all_tuples(2, cap))
        for (const auto& J : all_tuples(2, cap))
            for (const auto& K : all_tuples(2, cap)) {
                Exp6 e{I.elements()[0] - 1, I.elements()[1] - 1, J.elements()[0] - 1,
                       J.elements()[1] - 1, K.elements()[0] - 1, K.elements()[1] - 1};
                auto it = brute.find(e);
                long long want = it == brute.end() ? 0 : it->second;
                CHECK(table.value(I, J, K).value() == want);
            }
}

TEST_CASE("tableau rule oracle values") {
    // both single-box Pieri values
    CHECK(lr_tableau(Partition{2}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_tableau(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_tableau(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_tableau(Partition{2, 2}, Partition{2, 1}, Partition{1}) == 1);
    // mu empty
    CHECK(lr_tableau(Partition{3, 1}, Partition{}, Partition{3, 1}) == 1);
    // weight mismatch and non-containment vanish
    CHECK(lr_tableau(Partition{2}, Partition{1}, Partition{2}) == 0);
    CHECK(lr_tableau(Partition{1}, Partition{2}, Partition{1}) == 0);
    // first multiplicity-2 case: c^{(4,2,1)}_{(2,1),(2,1)} = 2
    CHECK(lr_tableau(Partition{4, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("paper example coefficient") {
    LRTable t = lr_series(2, 4);
    CHECK(t.value(SubsetIndex{4, 2}, SubsetIndex{3, 1}, SubsetIndex{3, 2}).value() == 1);
    CHECK(lr_tableau(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
}

TEST_CASE("l = 1 series is the shifted delta") {
    LRTable t = lr_series(1, 6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                CHECK(t.value(SubsetIndex{i}, SubsetIndex{j}, SubsetIndex{k}).value() ==
                      (i == j + k - 1 ? 1 : 0));
}

TEST_CASE("series and tableau rule agree") {
    CHECK(lr_consistency(1, 6));
    CHECK(lr_consistency(2, 6));
    CHECK(lr_consistency(3, 5));
}

TEST_CASE("out-of-cap queries are unknown, never wrong") {
    LRTable t = lr_series(2, 4);
    CHECK(!t.value(SubsetIndex{5, 2}, SubsetIndex{3, 1}, SubsetIndex{3, 2}).has_value());
    CHECK(!t.value(SubsetIndex{3, 2, 1}, SubsetIndex{3, 2, 1}, SubsetIndex{3, 2, 1}).has_value());
}

TEST_CASE("antisymmetrized values and ties") {
    LRTable t = lr_series(2, 4);
    long long base = t.value(SubsetIndex{4, 2}, SubsetIndex{3, 1}, SubsetIndex{3, 2}).value();
    CHECK(t.signed_value({2, 4}, {3, 1}, {3, 2}).value() == -base);
    CHECK(t.signed_value({2, 4}, {1, 3}, {2, 3}).value() == -base);
    CHECK(t.signed_value({2, 2}, {3, 1}, {3, 2}).value() == 0);
}

TEST_CASE("csv dump lists nonzero entries") {
    LRTable t = lr_series(1, 3);
    std::string csv = t.csv();
    CHECK(csv.find("l,I,J,K,value") == 0);
    CHECK(csv.find("1,{3},{2},{2},1") != std::string::npos);
}
