#include "fermibasis/lr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fermibasis::lr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("partition parts must be nonnegative");
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    for (std::size_t i = 0; i < mu.parts_.size(); ++i)
        if (part(i) < mu.parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

SubsetIndex::SubsetIndex(std::vector<int> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
        if (elements_[i] <= elements_[i + 1])
            throw std::invalid_argument("subset index must be strictly decreasing");
    if (!elements_.empty() && elements_.back() < 1)
        throw std::invalid_argument("subset index entries must be >= 1");
}

SubsetIndex SubsetIndex::complement_in(int n, const SubsetIndex& s) {
    std::vector<int> out;
    for (int x = n; x >= 1; --x)
        if (!s.contains(x)) out.push_back(x);
    return SubsetIndex(std::move(out));
}

bool SubsetIndex::contains(int x) const {
    return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

std::string SubsetIndex::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
    os << "}";
    return os.str();
}

std::vector<SubsetIndex> all_subsets(int n) {
    std::vector<SubsetIndex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> el;
        for (int x = n; x >= 1; --x)
            if (mask & (1u << (x - 1))) el.push_back(x);
        out.push_back(SubsetIndex(std::move(el)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubsetIndex> all_tuples(int l, int max_entry) {
    std::vector<SubsetIndex> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next_max) -> void {
        if (static_cast<int>(cur.size()) == l) {
            out.push_back(SubsetIndex(cur));
            return;
        }
        int remaining = l - static_cast<int>(cur.size());
        for (int x = next_max; x >= remaining; --x) {
            cur.push_back(x);
            self(self, x - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_entry);
    return out;
}

Partition subset_to_partition(const SubsetIndex& I) {
    const auto& e = I.elements();
    int l = static_cast<int>(e.size());
    std::vector<int> parts;
    for (int p = 0; p < l; ++p) parts.push_back(e[static_cast<std::size_t>(p)] - (l - p));
    return Partition(std::move(parts));
}

namespace {

/// Polynomials in x_1..x_l with integer coefficients; exponent vectors of
/// fixed length l.
using XPoly = std::map<std::vector<int>, long long>;

/// Complete homogeneous polynomial h_m(x_1..x_l): every monomial of total
/// degree m, coefficient 1.
XPoly complete_homogeneous(int l, int m) {
    XPoly out;
    std::vector<int> exps(static_cast<std::size_t>(l), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == l - 1) {
            exps[static_cast<std::size_t>(pos)] = left;
            out[exps] = 1;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (l == 0) {
        if (m == 0) out[{}] = 1;
        return out;
    }
    rec(rec, 0, m);
    return out;
}

XPoly multiply(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

struct SignedPerm {
    std::vector<int> perm;
    int sign;
};

std::vector<SignedPerm> signed_permutations(int l) {
    std::vector<SignedPerm> out;
    std::vector<int> p(static_cast<std::size_t>(l));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inversions;
        out.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Coefficient of prod_p y_p^{tuple_p - 1} in Delta(y) prod_p G(x, y_p),
/// where G(x,y) = prod_i 1/(1-x_i y) = sum_m h_m(x) y^m. Expanding the
/// Vandermonde determinant column-wise leaves one h-factor per slot.
XPoly kernel_coefficient(int l, const std::vector<int>& tuple, const std::vector<XPoly>& h,
                         const std::vector<SignedPerm>& perms) {
    XPoly acc;
    for (const auto& [perm, sign] : perms) {
        XPoly term;
        term[std::vector<int>(static_cast<std::size_t>(l), 0)] = sign;
        bool dead = false;
        for (int p = 0; p < l && !dead; ++p) {
            int deg = tuple[static_cast<std::size_t>(p)] - 1 - (l - 1 - perm[static_cast<std::size_t>(p)]);
            if (deg < 0) {
                dead = true;
                break;
            }
            term = multiply(term, h[static_cast<std::size_t>(deg)]);
        }
        if (dead) continue;
        for (const auto& [e, c] : term) acc[e] += c;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

/// Exponent vectors and signs of Delta(x) = det(x_p^{l-q}).
std::vector<std::pair<std::vector<int>, int>> vandermonde_terms(int l,
                                                                const std::vector<SignedPerm>& perms) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& [perm, sign] : perms) {
        std::vector<int> e(static_cast<std::size_t>(l));
        for (int p = 0; p < l; ++p) e[static_cast<std::size_t>(p)] = l - 1 - perm[static_cast<std::size_t>(p)];
        out.push_back({e, sign});
    }
    return out;
}

long long coefficient_at(const XPoly& a, const XPoly& b,
                         const std::vector<std::pair<std::vector<int>, int>>& delta,
                         const std::vector<int>& target) {
    long long acc = 0;
    for (const auto& [de, ds] : delta)
        for (const auto& [ea, ca] : a) {
            std::vector<int> need(target.size());
            bool ok = true;
            for (std::size_t i = 0; i < need.size(); ++i) {
                need[i] = target[i] - de[i] - ea[i];
                if (need[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto it = b.find(need);
            if (it != b.end()) acc += ds * ca * it->second;
        }
    return acc;
}

}  // namespace

LRTable::LRTable(int l, int degree_cap) : l_(l), cap_(degree_cap) {
    if (l < 1 || degree_cap < l) throw std::invalid_argument("LRTable: need l >= 1 and cap >= l");
}

std::optional<long long> LRTable::value(const SubsetIndex& I, const SubsetIndex& J,
                                        const SubsetIndex& K) const {
    if (static_cast<int>(I.size()) != l_ || static_cast<int>(J.size()) != l_ ||
        static_cast<int>(K.size()) != l_)
        return std::nullopt;
    if (I.max() > cap_ || J.max() > cap_ || K.max() > cap_) return std::nullopt;
    auto it = values_.find({I, J, K});
    return it == values_.end() ? 0 : it->second;
}

namespace {

/// Sorts a tuple into strictly decreasing order tracking the permutation
/// sign; returns nullopt on ties.
std::optional<std::pair<SubsetIndex, int>> antisymmetrize(std::vector<int> t) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) return std::nullopt;
            if (t[i] < t[j]) {
                std::swap(t[i], t[j]);
                sign = -sign;
            }
        }
    return std::make_pair(SubsetIndex(std::move(t)), sign);
}

}  // namespace

std::optional<long long> LRTable::signed_value(std::vector<int> i, std::vector<int> j,
                                               std::vector<int> k) const {
    auto si = antisymmetrize(std::move(i));
    auto sj = antisymmetrize(std::move(j));
    auto sk = antisymmetrize(std::move(k));
    if (!si || !sj || !sk) return 0;
    auto v = value(si->first, sj->first, sk->first);
    if (!v) return std::nullopt;
    return si->second * sj->second * sk->second * *v;
}

std::string LRTable::csv() const {
    std::ostringstream os;
    os << "l,I,J,K,value\n";
    for (const auto& [key, v] : values_) {
        const auto& [I, J, K] = key;
        os << l_ << "," << I.str() << "," << J.str() << "," << K.str() << "," << v << "\n";
    }
    return os.str();
}

LRTable lr_series(int l, int degree_cap) {
    LRTable table(l, degree_cap);
    auto perms = signed_permutations(l);
    int maxdeg = degree_cap - 1;
    std::vector<XPoly> h;
    for (int m = 0; m <= maxdeg; ++m) h.push_back(complete_homogeneous(l, m));
    auto delta = vandermonde_terms(l, perms);

    auto tuples = all_tuples(l, degree_cap);
    std::map<SubsetIndex, XPoly> kernels;
    for (const auto& t : tuples) kernels.emplace(t, kernel_coefficient(l, t.elements(), h, perms));

    for (const auto& I : tuples) {
        std::vector<int> target;
        for (int e : I.elements()) target.push_back(e - 1);
        for (const auto& J : tuples) {
            // weight conservation prunes most pairs
            int needed = subset_to_partition(I).weight() - subset_to_partition(J).weight();
            if (needed < 0) continue;
            for (const auto& K : tuples) {
                if (subset_to_partition(K).weight() != needed) continue;
                long long v = coefficient_at(kernels.at(J), kernels.at(K), delta, target);
                if (v != 0) table.values_[{I, J, K}] = v;
            }
        }
    }
    return table;
}

long long lr_tableau(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu)) return 0;
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    if (nu.weight() == 0) return 1;

    // cells of lambda/mu in reverse reading order (rows top to bottom,
    // right to left within a row)
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = lambda.part(r) - 1; c >= mu.part(r); --c)
            cells.push_back({static_cast<int>(r), c});

    std::vector<std::vector<int>> grid(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) grid[r].assign(static_cast<std::size_t>(lambda.part(r)), 0);

    int values = static_cast<int>(nu.length());
    std::vector<int> counts(static_cast<std::size_t>(values) + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[pos];
        for (int t = 1; t <= values; ++t) {
            if (counts[static_cast<std::size_t>(t)] >= nu.part(static_cast<std::size_t>(t) - 1)) continue;
            // lattice word condition after placing t
            if (t > 1 && counts[static_cast<std::size_t>(t)] + 1 > counts[static_cast<std::size_t>(t) - 1]) continue;
            // weakly increasing along the row (right neighbour already placed)
            if (c + 1 < lambda.part(static_cast<std::size_t>(r)) && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1] < t)
                continue;
            // strictly increasing down the column
            if (r > 0 && c < lambda.part(static_cast<std::size_t>(r) - 1) && c >= mu.part(static_cast<std::size_t>(r) - 1) &&
                grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] >= t)
                continue;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = t;
            ++counts[static_cast<std::size_t>(t)];
            self(self, pos + 1);
            --counts[static_cast<std::size_t>(t)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

bool lr_consistency(int l, int cap) {
    LRTable table = lr_series(l, cap);
    auto tuples = all_tuples(l, cap);
    for (const auto& I : tuples) {
        Partition li = subset_to_partition(I);
        for (const auto& J : tuples) {
            for (const auto& K : tuples) {
                long long series = table.value(I, J, K).value();
                if (series < 0) return false;
                if (series != table.value(I, K, J).value()) return false;
                if (series != lr_tableau(li, subset_to_partition(J), subset_to_partition(K))) return false;
            }
        }
    }
    return true;
}

}  // namespace fermibasis::lr
