#include "fermibasis/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fermibasis::exactmath {

namespace {

struct VarTable {
    std::vector<std::pair<std::string, bool>> vars;
    std::map<std::string, VarId> by_name;
    std::mutex mu;
};

VarTable& table() {
    static VarTable t;
    return t;
}

}  // namespace

VarId variable(const std::string& name, bool laurent) {
    auto& t = table();
    std::lock_guard lock(t.mu);
    if (auto it = t.by_name.find(name); it != t.by_name.end()) {
        if (t.vars[it->second].second != laurent)
            throw std::invalid_argument("variable '" + name + "' re-registered with different laurent flag");
        return it->second;
    }
    VarId id = static_cast<VarId>(t.vars.size());
    t.vars.push_back({name, laurent});
    t.by_name.emplace(name, id);
    return id;
}

const std::string& variable_name(VarId v) {
    auto& t = table();
    std::lock_guard lock(t.mu);
    return t.vars.at(v).first;
}

bool variable_is_laurent(VarId v) {
    auto& t = table();
    std::lock_guard lock(t.mu);
    return t.vars.at(v).second;
}

std::int32_t Monomial::exponent(VarId v) const {
    for (const auto& [var, e] : exps)
        if (var == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : exps) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto ia = exps.begin(), ib = o.exps.begin();
    while (ia != exps.end() || ib != o.exps.end()) {
        if (ib == o.exps.end() || (ia != exps.end() && ia->first < ib->first)) {
            r.exps.push_back(*ia++);
        } else if (ia == exps.end() || ib->first < ia->first) {
            r.exps.push_back(*ib++);
        } else {
            std::int32_t e = ia->second + ib->second;
            if (e != 0) r.exps.push_back({ia->first, e});
            ++ia, ++ib;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [var, e] : exps)
        if (e > o.exponent(var)) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial inv;
    inv.exps = exps;
    for (auto& [var, e] : inv.exps) e = -e;
    return inv * o;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    auto ia = a.exps.begin(), ib = b.exps.begin();
    while (ia != a.exps.end() || ib != b.exps.end()) {
        VarId va = ia != a.exps.end() ? ia->first : UINT32_MAX;
        VarId vb = ib != b.exps.end() ? ib->first : UINT32_MAX;
        std::int32_t ea = 0, eb = 0;
        if (va <= vb) ea = ia->second;
        if (vb <= va) eb = ib->second;
        VarId v = std::min(va, vb);
        if (va > v) ea = 0;
        if (vb > v) eb = 0;
        if (ea != eb) return ea < eb;
        if (va == v) ++ia;
        if (vb == v) ++ib;
    }
    return false;
}

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial::one(), std::move(c));
}

Polynomial Polynomial::var(VarId v, std::int32_t e) {
    Polynomial p;
    p.add_term(Monomial::var(v, e), GaussianRational(1));
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussianRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw std::logic_error("Polynomial::constant_value on non-constant");
    return terms_.begin()->second;
}

void Polynomial::check_laurent(const Monomial& m) const {
    for (const auto& [var, e] : m.exps)
        if (e < 0 && !variable_is_laurent(var))
            throw std::domain_error("negative exponent on non-laurent variable '" + variable_name(var) + "'");
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    check_laurent(m);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(GaussianRational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

int Polynomial::degree(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exponent(v)));
    return d;
}

int Polynomial::min_degree(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.exponent(v)));
    return d;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m.exps)
            if (std::find(vs.begin(), vs.end(), var) == vs.end()) vs.push_back(var);
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::pair<Monomial, GaussianRational> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (lex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::coefficient_of(VarId v, std::int32_t k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k) continue;
        Monomial rest;
        for (const auto& [var, e] : m.exps)
            if (var != v) rest.exps.push_back({var, e});
        r.add_term(rest, c);
    }
    return r;
}

GaussianRational Polynomial::eval(const std::map<VarId, GaussianRational>& point) const {
    GaussianRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (const auto& [var, e] : m.exps) {
            auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("eval: no value for variable '" + variable_name(var) + "'");
            GaussianRational base = e < 0 ? it->second.inv() : it->second;
            for (int k = 0; k < std::abs(e); ++k) t *= base;
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& value) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        std::int32_t e = m.exponent(v);
        Monomial rest;
        for (const auto& [var, ex] : m.exps)
            if (var != v) rest.exps.push_back({var, ex});
        Polynomial t;
        t.add_term(rest, c);
        if (e < 0) throw std::domain_error("substitute into negative power");
        r += t * value.pow(static_cast<unsigned>(e));
    }
    return r;
}

Polynomial Polynomial::laurent_cleared(std::map<VarId, std::int32_t>* shifts) const {
    Monomial shift;
    for (VarId v : variables()) {
        int d = min_degree(v);
        if (d < 0) {
            shift.exps.push_back({v, -d});
            if (shifts) (*shifts)[v] = -d;
        }
    }
    std::sort(shift.exps.begin(), shift.exps.end());
    if (shift.exps.empty()) return *this;
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * shift, c);
    return r;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this, quot;
    auto [dlm, dlc] = d.leading_term();
    while (!rem.is_zero()) {
        auto [rlm, rlc] = rem.leading_term();
        if (!dlm.divides(rlm)) return std::nullopt;
        Polynomial t;
        t.add_term(dlm.divided_into(rlm), rlc / dlc);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const auto& [var, e] : m.exps) os << " * " << variable_name(var) << "^" << e;
    }
    return os.str();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, VarId v) {
    int db = b.degree(v);
    if (db < 1) throw std::invalid_argument("pseudo_remainder: divisor has degree 0 in v");
    Polynomial lb = b.coefficient_of(v, db);
    Polynomial rem = a;
    while (!rem.is_zero() && rem.degree(v) >= db) {
        int dr = rem.degree(v);
        Polynomial lr = rem.coefficient_of(v, dr);
        Polynomial shift = Polynomial::var(v, dr - db);
        rem = rem * lb - b * shift * lr;
    }
    return rem;
}

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial r = p;
    r *= p.leading_term().second.inv();
    return r;
}

/// Content of p w.r.t. v: gcd of the coefficients of powers of v.
Polynomial content(const Polynomial& p, VarId v) {
    Polynomial g;
    for (int k = p.min_degree(v); k <= p.degree(v); ++k) {
        Polynomial c = p.coefficient_of(v, k);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a_in, const Polynomial& b_in) {
    Polynomial a = a_in.laurent_cleared();
    Polynomial b = b_in.laurent_cleared();
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(GaussianRational(1));

    auto va = a.variables();
    VarId v = va.front();
    if (b.degree(v) == 0 && b.min_degree(v) == 0) {
        // b does not involve the chosen main variable; gcd divides content(a, v)
        return poly_gcd(content(a, v), b);
    }

    Polynomial ca = content(a, v), cb = content(b, v);
    Polynomial pa = *a.divided_by(ca), pb = *b.divided_by(cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

    // primitive PRS
    while (!pb.is_zero() && pb.degree(v) > 0) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Polynomial();
        } else {
            Polynomial cr = content(r, v);
            pb = *r.divided_by(cr);
        }
    }
    if (!pb.is_zero()) {
        // nonzero remainder free of v: the primitive chain has trivial gcd
        return monic(poly_gcd(ca, cb));
    }
    Polynomial cp = content(pa, v);
    return monic(poly_gcd(ca, cb) * *pa.divided_by(cp));
}

}  // namespace fermibasis::exactmath
