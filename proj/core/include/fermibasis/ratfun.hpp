#pragma once

#include <map>
#include <string>

#include "fermibasis/poly.hpp"

namespace fermibasis::exactmath {

/// Exact multivariate rational function over Q(i). Canonical form:
/// denominator nonzero, laurent-free, lex-monic, and coprime to the
/// numerator.
class RatFun {
public:
    RatFun() : num_(), den_(GaussianRational(1)) {}
    RatFun(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}  // NOLINT
    RatFun(long n) : RatFun(GaussianRational(n)) {}                                // NOLINT
    RatFun(Polynomial num);                                                        // NOLINT
    RatFun(Polynomial num, Polynomial den);

    static RatFun var(VarId v, std::int32_t e = 1) { return RatFun(Polynomial::var(v, e)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun inv() const;

    friend bool operator==(const RatFun&, const RatFun&) = default;

    /// Exact evaluation; throws std::domain_error if the denominator
    /// vanishes at the point.
    GaussianRational eval(const std::map<VarId, GaussianRational>& point) const;

    std::string str() const;

private:
    void reduce();
    Polynomial num_, den_;
};

}  // namespace fermibasis::exactmath
