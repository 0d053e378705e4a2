#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fermibasis::lr {

/// Weakly decreasing parts with trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts);  // NOLINT
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& mu) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Strictly decreasing positive indices i_1 > ... > i_l >= 1.
class SubsetIndex {
public:
    SubsetIndex() = default;
    SubsetIndex(std::vector<int> elements);  // NOLINT
    SubsetIndex(std::initializer_list<int> elements) : SubsetIndex(std::vector<int>(elements)) {}

    /// The subset of [1,n] NOT in this index set, as a SubsetIndex.
    static SubsetIndex complement_in(int n, const SubsetIndex& s);

    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(int x) const;
    int max() const { return elements_.empty() ? 0 : elements_.front(); }

    friend auto operator<=>(const SubsetIndex&, const SubsetIndex&) = default;
    std::string str() const;

private:
    std::vector<int> elements_;
};

/// All subsets of [1,n] as SubsetIndex, in a deterministic order.
std::vector<SubsetIndex> all_subsets(int n);
/// All decreasing l-tuples with entries in [1,max_entry].
std::vector<SubsetIndex> all_tuples(int l, int max_entry);

/// lambda(I) = (i_1 - l, ..., i_l - 1).
Partition subset_to_partition(const SubsetIndex& I);

/// Coefficients C^I_{J,K} read off the generating series
///   Delta(x) Delta(y) Delta(z) / prod (1-x_i y_j)(1-x_i z_j),
/// tabulated for all decreasing tuples of a fixed length l with entries up
/// to the degree cap.
class LRTable {
public:
    LRTable(int l, int degree_cap);

    int l() const { return l_; }
    int cap() const { return cap_; }

    /// Value for decreasing tuples within the cap; nullopt ("unknown",
    /// never a wrong value) outside it.
    std::optional<long long> value(const SubsetIndex& I, const SubsetIndex& J,
                                   const SubsetIndex& K) const;

    /// Series coefficient for arbitrary (not necessarily decreasing)
    /// exponent tuples; antisymmetric in each family, zero on ties.
    std::optional<long long> signed_value(std::vector<int> i, std::vector<int> j,
                                          std::vector<int> k) const;

    /// CSV rows "l,I,J,K,value" for the nonzero table entries.
    std::string csv() const;

private:
    friend LRTable lr_series(int l, int degree_cap);
    int l_, cap_;
    std::map<std::tuple<SubsetIndex, SubsetIndex, SubsetIndex>, long long> values_;
};

LRTable lr_series(int l, int degree_cap);

/// Independent oracle: the tableau rule. Number of semistandard skew
/// tableaux of shape lambda/mu and weight nu whose reverse reading word is
/// a lattice word.
long long lr_tableau(const Partition& lambda, const Partition& mu, const Partition& nu);

/// True iff series and tableau computations agree on every triple of
/// decreasing l-tuples with entries <= cap, and the y/z exchange symmetry
/// C^I_{J,K} = C^I_{K,J} holds.
bool lr_consistency(int l, int cap);

}  // namespace fermibasis::lr
