#include "fermibasis/ratfun.hpp"

#include <stdexcept>

namespace fermibasis::exactmath {

RatFun::RatFun(Polynomial num) : num_(std::move(num)), den_(GaussianRational(1)) {}

RatFun::RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    // Shift laurent powers out of the denominator into the numerator.
    std::map<VarId, std::int32_t> shifts;
    den_ = den_.laurent_cleared(&shifts);
    for (const auto& [v, s] : shifts) num_ *= Polynomial::var(v, s);

    if (!den_.is_one()) {
        // gcd works on laurent-free inputs; track the unit monomial split off
        // the numerator so the quotient stays exact.
        std::map<VarId, std::int32_t> nshifts;
        Polynomial ncleared = num_.laurent_cleared(&nshifts);
        Polynomial g = poly_gcd(ncleared, den_);
        if (!g.is_one()) {
            ncleared = *ncleared.divided_by(g);
            den_ = *den_.divided_by(g);
            Monomial back;
            for (const auto& [v, s] : nshifts) back.exps.push_back({v, -s});
            Polynomial m;
            m.add_term(back, GaussianRational(1));
            num_ = ncleared * m;
        }
    }
    GaussianRational lc = den_.leading_term().second;
    if (!lc.is_one()) {
        GaussianRational ilc = lc.inv();
        num_ *= ilc;
        den_ *= ilc;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(den_, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

GaussianRational RatFun::eval(const std::map<VarId, GaussianRational>& point) const {
    GaussianRational d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("RatFun::eval: denominator vanishes at specialization");
    return num_.eval(point) / d;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace fermibasis::exactmath
