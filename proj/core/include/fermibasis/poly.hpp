#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermibasis/gaussian.hpp"

namespace fermibasis::exactmath {

using VarId = std::uint32_t;

/// Registers (or looks up) a named variable. A variable registered as
/// laurent admits negative exponents; re-registering must agree on the flag.
VarId variable(const std::string& name, bool laurent = false);
const std::string& variable_name(VarId v);
bool variable_is_laurent(VarId v);

/// Product of variable powers. Exponents are nonzero and sorted by VarId;
/// negative exponents are only valid for laurent variables (checked by
/// Polynomial on construction).
struct Monomial {
    std::vector<std::pair<VarId, std::int32_t>> exps;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, std::int32_t e = 1) {
        Monomial m;
        if (e != 0) m.exps.push_back({v, e});
        return m;
    }

    bool is_one() const { return exps.empty(); }
    std::int32_t exponent(VarId v) const;
    int total_degree() const;

    Monomial operator*(const Monomial& o) const;

    /// Exponentwise divisibility over the ordinary (non-laurent) ring.
    bool divides(const Monomial& o) const;
    Monomial divided_into(const Monomial& o) const;  // o / *this, assumes divides(o)

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Pure lexicographic monomial order by increasing VarId (missing = 0).
/// Unlike the structural ordering above, this one is compatible with
/// multiplication and is what division and gcd use for leading terms.
bool lex_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over GaussianRational with optional
/// Laurent exponents for designated variables.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;
    Polynomial(GaussianRational c);  // NOLINT: implicit constant embedding
    Polynomial(long n) : Polynomial(GaussianRational(n)) {}
    static Polynomial var(VarId v, std::int32_t e = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    GaussianRational constant_value() const;  // requires is_constant()

    void add_term(const Monomial& m, const GaussianRational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const GaussianRational& c);
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    int degree(VarId v) const;      // max exponent of v, 0 if absent
    int min_degree(VarId v) const;  // min exponent (can be negative for laurent vars)
    std::vector<VarId> variables() const;

    /// Leading term w.r.t. lex_less.
    std::pair<Monomial, GaussianRational> leading_term() const;  // requires !is_zero()

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Polynomial coefficient_of(VarId v, std::int32_t k) const;

    GaussianRational eval(const std::map<VarId, GaussianRational>& point) const;
    Polynomial substitute(VarId v, const Polynomial& value) const;

    /// Divides out v^min_degree(v) for every laurent variable so all
    /// exponents become nonneg; returns the shift used per variable.
    Polynomial laurent_cleared(std::map<VarId, std::int32_t>* shifts = nullptr) const;

    /// Exact division; nullopt if *this is not a multiple of d.
    /// Both polynomials must be laurent-free.
    std::optional<Polynomial> divided_by(const Polynomial& d) const;

    std::string str() const;

private:
    void check_laurent(const Monomial& m) const;
    TermMap terms_;
};

/// Monic (leading lex coefficient 1) gcd over Q(i)[vars]; laurent variables
/// are handled up to unit monomial factors. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b w.r.t. variable v (prem of the subresultant
/// theory); deg_v(b) >= 1 is required.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, VarId v);

}  // namespace fermibasis::exactmath
