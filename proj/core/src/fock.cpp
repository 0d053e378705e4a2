#include "fermibasis/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fermibasis::fock {

CentralMonomial CentralMonomial::times_t1(int k) const {
    CentralMonomial r = *this;
    r.t1 += k;
    return r;
}

CentralMonomial CentralMonomial::times_h(int p) const {
    if (p < 1) throw std::invalid_argument("H index must be >= 1");
    CentralMonomial r = *this;
    auto it = std::lower_bound(r.h.begin(), r.h.end(), std::pair<int, int>{p, 0});
    if (it != r.h.end() && it->first == p)
        ++it->second;
    else
        r.h.insert(it, {p, 1});
    return r;
}

CentralMonomial CentralMonomial::operator*(const CentralMonomial& o) const {
    CentralMonomial r;
    r.t1 = t1 + o.t1;
    auto ia = h.begin(), ib = o.h.begin();
    while (ia != h.end() || ib != o.h.end()) {
        if (ib == o.h.end() || (ia != h.end() && ia->first < ib->first))
            r.h.push_back(*ia++);
        else if (ia == h.end() || ib->first < ia->first)
            r.h.push_back(*ib++);
        else {
            r.h.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    return r;
}

CentralPoly::CentralPoly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(CentralMonomial{}, std::move(c));
}

CentralPoly CentralPoly::t1(int power) {
    CentralPoly p;
    p.terms_.emplace(CentralMonomial{power, {}}, GaussianRational(1));
    return p;
}

CentralPoly CentralPoly::h(int p) {
    CentralPoly r;
    r.terms_.emplace(CentralMonomial{0, {{p, 1}}}, GaussianRational(1));
    return r;
}

CentralPoly CentralPoly::monomial(CentralMonomial m, GaussianRational c) {
    CentralPoly r;
    if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
    return r;
}

void CentralPoly::add_term(const CentralMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CentralPoly CentralPoly::operator-() const {
    CentralPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CentralPoly operator-(CentralPoly a, const CentralPoly& b) {
    for (const auto& [m, c] : b.terms()) a.add_term(m, -c);
    return a;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
    CentralPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

GaussianRational CentralPoly::eval(const GaussianRational& t1_value,
                                   std::span<const GaussianRational> h_values) const {
    GaussianRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        GaussianRational base = m.t1 < 0 ? t1_value.inv() : t1_value;
        for (int k = 0; k < std::abs(m.t1); ++k) t *= base;
        for (const auto& [p, e] : m.h) {
            if (p < 1 || static_cast<std::size_t>(p) > h_values.size())
                throw std::out_of_range("CentralPoly::eval: no value for H_" + std::to_string(p));
            for (int k = 0; k < e; ++k) t *= h_values[static_cast<std::size_t>(p - 1)];
        }
        acc += t;
    }
    return acc;
}

std::string CentralPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.t1 != 0) os << " * T1^" << m.t1;
        for (const auto& [p, e] : m.h) os << " * H" << p << "^" << e;
    }
    return os.str();
}

FockVector FockVector::monomial(PBWMonomial m, GaussianRational c) {
    FockVector v;
    if (!c.is_zero()) v.terms_.emplace(std::move(m), std::move(c));
    return v;
}

void FockVector::add_term(const PBWMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector FockVector::operator-() const {
    FockVector r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockVector& FockVector::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

FockVector FockVector::times_central(const CentralPoly& p) const {
    FockVector r;
    for (const auto& [m, c] : terms_)
        for (const auto& [cm, cc] : p.terms()) {
            PBWMonomial nm = m;
            nm.central = m.central * cm;
            r.add_term(nm, c * cc);
        }
    return r;
}

int FockVector::max_bstar() const {
    int m = 0;
    for (const auto& [mon, c] : terms_)
        if (!mon.bstar.empty()) m = std::max(m, mon.bstar.front());
    return m;
}

int FockVector::max_cstar() const {
    int m = 0;
    for (const auto& [mon, c] : terms_)
        if (!mon.cstar.empty()) m = std::max(m, mon.cstar.front());
    return m;
}

bool is_odd(Kind k) {
    switch (k) {
        case Kind::tstar:
        case Kind::tstar1_inv:
        case Kind::hstar:
            return false;
        default:
            return true;
    }
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::tstar: return "t*";
        case Kind::tstar1_inv: return "(t*_1)^-1";
        case Kind::hstar: return "h*";
        case Kind::b: return "b";
        case Kind::c: return "c";
        case Kind::bstar: return "b*";
        case Kind::cstar: return "c*";
        case Kind::bbar: return "bbar";
        case Kind::cbar: return "cbar";
        case Kind::bbarstar: return "bbar*";
        case Kind::cbarstar: return "cbar*";
    }
    return "?";
}

AlgebraWord word(std::initializer_list<Generator> gens) {
    AlgebraWord w;
    for (const auto& g : gens) w.push_back({g, GaussianRational(1)});
    return w;
}

namespace {

void check_index(const Generator& g) {
    int min = g.kind == Kind::hstar ? 0 : 1;
    if (g.index < min)
        throw std::invalid_argument("generator " + kind_name(g.kind) + " index out of range");
}

/// t*_p as a central polynomial: t*_1 for p = 1, T1 * H_{p-1} otherwise,
/// and zero for p <= 0 (the index convention the annihilator relation
/// forces; its consistency is covered by tests).
CentralPoly tstar_poly(int p) {
    if (p <= 0) return CentralPoly();
    CentralMonomial m;
    m.t1 = 1;
    if (p >= 2) m = m.times_h(p - 1);
    return CentralPoly::monomial(m);
}

struct Contraction {
    int sign;        // +1/-1, 0 when the generator annihilates the monomial
    PBWMonomial out;
};

/// b*_p inserted into the canonical b*-string (left of everything).
Contraction insert_bstar(const PBWMonomial& m, int p) {
    auto it = m.bstar.begin();
    int crossed = 0;
    while (it != m.bstar.end() && *it > p) ++it, ++crossed;
    if (it != m.bstar.end() && *it == p) return {0, {}};
    PBWMonomial out = m;
    out.bstar.insert(out.bstar.begin() + crossed, p);
    return {crossed % 2 == 0 ? 1 : -1, std::move(out)};
}

/// c*_k crosses the whole b*-string, then inserts into the c*-string.
Contraction insert_cstar(const PBWMonomial& m, int k) {
    auto it = m.cstar.begin();
    int crossed = 0;
    while (it != m.cstar.end() && *it > k) ++it, ++crossed;
    if (it != m.cstar.end() && *it == k) return {0, {}};
    PBWMonomial out = m;
    out.cstar.insert(out.cstar.begin() + crossed, k);
    int sign = (static_cast<int>(m.bstar.size()) + crossed) % 2 == 0 ? 1 : -1;
    return {sign, std::move(out)};
}

/// b_p contracts against a matching b*_p or annihilates.
Contraction contract_b(const PBWMonomial& m, int p) {
    for (std::size_t i = 0; i < m.bstar.size(); ++i) {
        if (m.bstar[i] == p) {
            PBWMonomial out = m;
            out.bstar.erase(out.bstar.begin() + static_cast<std::ptrdiff_t>(i));
            return {i % 2 == 0 ? 1 : -1, std::move(out)};
        }
    }
    return {0, {}};
}

Contraction contract_c(const PBWMonomial& m, int k) {
    for (std::size_t i = 0; i < m.cstar.size(); ++i) {
        if (m.cstar[i] == k) {
            PBWMonomial out = m;
            out.cstar.erase(out.cstar.begin() + static_cast<std::ptrdiff_t>(i));
            int sign = (m.bstar.size() + i) % 2 == 0 ? 1 : -1;
            return {sign, std::move(out)};
        }
    }
    return {0, {}};
}

FockVector apply_elementary(const Generator& g, const FockVector& v) {
    FockVector r;
    for (const auto& [m, c] : v.terms()) {
        switch (g.kind) {
            case Kind::tstar: {
                PBWMonomial nm = m;
                nm.central = nm.central.times_t1(1);
                if (g.index >= 2) nm.central = nm.central.times_h(g.index - 1);
                r.add_term(nm, c);
                break;
            }
            case Kind::tstar1_inv: {
                PBWMonomial nm = m;
                nm.central = nm.central.times_t1(-1);
                r.add_term(nm, c);
                break;
            }
            case Kind::hstar: {
                PBWMonomial nm = m;
                if (g.index >= 1) nm.central = nm.central.times_h(g.index);
                r.add_term(nm, c);
                break;
            }
            case Kind::bstar: {
                auto [sign, out] = insert_bstar(m, g.index);
                if (sign != 0) r.add_term(out, sign > 0 ? c : -c);
                break;
            }
            case Kind::cstar: {
                auto [sign, out] = insert_cstar(m, g.index);
                if (sign != 0) r.add_term(out, sign > 0 ? c : -c);
                break;
            }
            case Kind::b: {
                auto [sign, out] = contract_b(m, g.index);
                if (sign != 0) r.add_term(out, sign > 0 ? c : -c);
                break;
            }
            case Kind::c: {
                auto [sign, out] = contract_c(m, g.index);
                if (sign != 0) r.add_term(out, sign > 0 ? c : -c);
                break;
            }
            default:
                throw std::logic_error("apply_elementary: barred generator not expanded");
        }
    }
    return r;
}

/// xbar_p = -t*_1 sum_{q>=0} h*_q x_{p+q}; the sum is finite because x_j
/// annihilates every monomial whose star indices are all < j.
FockVector apply_bar_annihilator(Kind kind, int p, const FockVector& v) {
    bool is_b = kind == Kind::bbar;
    int cap = (is_b ? v.max_bstar() : v.max_cstar()) - p;
    FockVector acc;
    for (int q = 0; q <= cap; ++q) {
        FockVector t = apply_elementary({is_b ? Kind::b : Kind::c, p + q}, v);
        if (t.is_zero()) continue;
        CentralMonomial cm;
        cm.t1 = 1;
        if (q >= 1) cm = cm.times_h(q);
        acc += t.times_central(CentralPoly::monomial(cm, GaussianRational(-1)));
    }
    return acc;
}

}  // namespace

std::vector<CentralPoly> h_series_inverse(int cap) {
    std::vector<CentralPoly> g(static_cast<std::size_t>(cap) + 1);
    g[0] = CentralPoly(GaussianRational(1));
    for (int k = 1; k <= cap; ++k) {
        CentralPoly acc;
        for (int j = 1; j <= k; ++j) acc += CentralPoly::h(j) * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = -acc;
    }
    return g;
}

std::vector<std::pair<CentralPoly, int>> bar_star_expand(Kind kind, int p) {
    if (kind != Kind::bbarstar && kind != Kind::cbarstar)
        throw std::invalid_argument("bar_star_expand expects a barred creator");
    if (p < 1) throw std::invalid_argument("bar_star_expand: index must be >= 1");
    auto g = h_series_inverse(p - 1);
    std::vector<std::pair<CentralPoly, int>> out;
    for (int pp = 1; pp <= p; ++pp) out.push_back({g[static_cast<std::size_t>(p - pp)], pp});
    return out;
}

FockVector apply_generator(const Generator& g, const FockVector& v) {
    check_index(g);
    switch (g.kind) {
        case Kind::bbar:
        case Kind::cbar:
            return apply_bar_annihilator(g.kind, g.index, v);
        case Kind::bbarstar:
        case Kind::cbarstar: {
            Kind star = g.kind == Kind::bbarstar ? Kind::bstar : Kind::cstar;
            FockVector acc;
            for (const auto& [coeff, pp] : bar_star_expand(g.kind, g.index))
                acc += apply_elementary({star, pp}, v).times_central(coeff);
            return acc;
        }
        default:
            return apply_elementary(g, v);
    }
}

FockVector apply_word(const AlgebraWord& w, const FockVector& v) {
    FockVector acc = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!it->scalar.is_one()) acc *= it->scalar;
        acc = apply_generator(it->gen, acc);
        if (acc.is_zero()) break;
    }
    return acc;
}

CentralPoly anticommutator(const Generator& g1, const Generator& g2) {
    if (!is_odd(g1.kind) || !is_odd(g2.kind))
        throw std::invalid_argument("anticommutator is defined for odd generator pairs");
    check_index(g1);
    check_index(g2);
    auto table = [](const Generator& a, const Generator& b) -> std::pair<bool, CentralPoly> {
        // creator against plain annihilator: delta
        if ((a.kind == Kind::bstar && b.kind == Kind::b) || (a.kind == Kind::cstar && b.kind == Kind::c))
            return {true, a.index == b.index ? CentralPoly(GaussianRational(1)) : CentralPoly()};
        // creator against barred annihilator: -t*_{p-p'+1}
        if ((a.kind == Kind::bstar && b.kind == Kind::bbar) || (a.kind == Kind::cstar && b.kind == Kind::cbar))
            return {true, -tstar_poly(a.index - b.index + 1)};
        // barred creator against barred annihilator, t*_1-cleared form
        if ((a.kind == Kind::bbarstar && b.kind == Kind::bbar) ||
            (a.kind == Kind::cbarstar && b.kind == Kind::cbar))
            return {true, a.index == b.index ? -CentralPoly::t1() : CentralPoly()};
        return {false, CentralPoly()};
    };
    if (auto [hit, val] = table(g1, g2); hit) return val;
    if (auto [hit, val] = table(g2, g1); hit) return val;
    return CentralPoly();
}

bool series_identity_check(int order, std::span<const FockVector> samples) {
    if (order < 1) throw std::invalid_argument("series_identity_check: order must be >= 1");
    for (const auto& v : samples) {
        for (Kind ann : {Kind::bbar, Kind::cbar}) {
            Kind plain = ann == Kind::bbar ? Kind::b : Kind::c;
            int cap = ann == Kind::bbar ? v.max_bstar() : v.max_cstar();
            // principal parts: xbar_p = -t*_1 sum_q h*_q x_{p+q}
            for (int p = 1; p <= order; ++p) {
                FockVector lhs = apply_generator({ann, p}, v);
                FockVector rhs;
                for (int q = 0; p + q <= cap; ++q) {
                    AlgebraWord w = word({{Kind::hstar, q}, {plain, p + q}});
                    rhs += apply_word(w, v);
                }
                rhs = apply_generator({Kind::tstar, 1}, rhs);
                if (lhs != -rhs) return false;
            }
        }
        for (Kind barred : {Kind::bbarstar, Kind::cbarstar}) {
            Kind star = barred == Kind::bbarstar ? Kind::bstar : Kind::cstar;
            // creator relation: sum_q h*_q xbar*_{p-q} = x*_p
            for (int p = 1; p <= order; ++p) {
                FockVector lhs;
                for (int q = 0; q <= p - 1; ++q) {
                    FockVector t = apply_generator({barred, p - q}, v);
                    lhs += apply_word(word({{Kind::hstar, q}}), t);
                }
                if (lhs != apply_generator({star, p}, v)) return false;
            }
        }
    }
    return true;
}

namespace {

void check_caps(const PBWMonomial& m, const CoordinateCaps& caps) {
    if ((!m.bstar.empty() && m.bstar.front() > caps.max_bstar) ||
        (!m.cstar.empty() && m.cstar.front() > caps.max_cstar))
        throw std::out_of_range("PBW monomial outside coordinate caps");
}

std::pair<std::uint64_t, std::uint64_t> masks(const PBWMonomial& m) {
    std::uint64_t bm = 0, cm = 0;
    for (int j : m.bstar) bm |= 1ull << (j - 1);
    for (int k : m.cstar) cm |= 1ull << (k - 1);
    return {bm, cm};
}

}  // namespace

PBWEnumeration::PBWEnumeration(std::span<const FockVector> family, const CoordinateCaps& caps) {
    std::map<PBWMonomial, std::size_t> seen;
    for (const auto& v : family)
        for (const auto& [m, c] : v.terms()) {
            check_caps(m, caps);
            seen.emplace(m, 0);
        }
    for (auto& [m, idx] : seen) {
        idx = monomials_.size();
        monomials_.push_back(m);
    }
    index_ = std::move(seen);
}

std::vector<std::pair<std::size_t, GaussianRational>> pbw_coordinates(const FockVector& v,
                                                                      const PBWEnumeration& enumeration) {
    std::vector<std::pair<std::size_t, GaussianRational>> out;
    for (const auto& [m, c] : v.terms()) out.push_back({enumeration.index_of(m), c});
    return out;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, CentralPoly> pbw_coordinates_central(
    const FockVector& v, const CoordinateCaps& caps) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, CentralPoly> out;
    for (const auto& [m, c] : v.terms()) {
        check_caps(m, caps);
        out[masks(m)] += CentralPoly::monomial(m.central, c);
    }
    return out;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, GaussianRational> pbw_coordinates_specialized(
    const FockVector& v, const CoordinateCaps& caps, const CentralSpecialization& spec) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, GaussianRational> out;
    for (const auto& [m, c] : v.terms()) {
        check_caps(m, caps);
        GaussianRational val = c * CentralPoly::monomial(m.central).eval(spec.t1_value, spec.h_values);
        auto [it, inserted] = out.emplace(masks(m), val);
        if (!inserted) it->second += val;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace fermibasis::fock
