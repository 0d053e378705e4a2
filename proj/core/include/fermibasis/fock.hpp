#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fermibasis/gaussian.hpp"

namespace fermibasis::fock {

using exactmath::GaussianRational;

/// Monomial in the central generators: T1^t1 * prod_p H_p^{m_p}, where T1
/// stands for t*_1 (a unit, so t1 ranges over Z) and H_p for h*_p = t*_1^{-1} t*_{p+1}.
struct CentralMonomial {
    int t1 = 0;
    std::vector<std::pair<int, int>> h;  // (p >= 1, multiplicity > 0), sorted by p

    bool is_one() const { return t1 == 0 && h.empty(); }
    CentralMonomial times_t1(int k) const;
    CentralMonomial times_h(int p) const;  // multiply by H_p (p >= 1)
    CentralMonomial operator*(const CentralMonomial& o) const;
    friend auto operator<=>(const CentralMonomial&, const CentralMonomial&) = default;
};

/// Polynomial in the central generators over Q(i).
class CentralPoly {
public:
    using TermMap = std::map<CentralMonomial, GaussianRational>;

    CentralPoly() = default;
    CentralPoly(GaussianRational c);  // NOLINT
    CentralPoly(long n) : CentralPoly(GaussianRational(n)) {}
    static CentralPoly t1(int power = 1);
    static CentralPoly h(int p);
    static CentralPoly monomial(CentralMonomial m, GaussianRational c = GaussianRational(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CentralMonomial& m, const GaussianRational& c);
    CentralPoly operator-() const;
    CentralPoly& operator+=(const CentralPoly& o);
    friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
    friend CentralPoly operator-(CentralPoly a, const CentralPoly& b);
    friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);

    GaussianRational eval(const GaussianRational& t1_value,
                          std::span<const GaussianRational> h_values) const;

    friend bool operator==(const CentralPoly&, const CentralPoly&) = default;
    std::string str() const;

private:
    TermMap terms_;
};

/// Canonical basis monomial of the module: the central part followed by
/// strictly decreasing b* and c* strings applied to the vacuum.
struct PBWMonomial {
    CentralMonomial central;
    std::vector<int> bstar;  // strictly decreasing, indices >= 1
    std::vector<int> cstar;  // strictly decreasing, indices >= 1

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Finite linear combination of PBW monomials. The module is free, so
/// equality is coefficient-wise after canonicalization.
class FockVector {
public:
    using TermMap = std::map<PBWMonomial, GaussianRational>;

    FockVector() = default;
    static FockVector vacuum() { return monomial(PBWMonomial{}); }
    static FockVector monomial(PBWMonomial m, GaussianRational c = GaussianRational(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const PBWMonomial& m, const GaussianRational& c);
    FockVector operator-() const;
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector& operator*=(const GaussianRational& c);
    friend FockVector operator*(const GaussianRational& c, FockVector v) { return v *= c; }
    FockVector times_central(const CentralPoly& p) const;

    int max_bstar() const;  // 0 when no b* present
    int max_cstar() const;

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    TermMap terms_;
};

enum class Kind { tstar, tstar1_inv, hstar, b, c, bstar, cstar, bbar, cbar, bbarstar, cbarstar };

bool is_odd(Kind k);
std::string kind_name(Kind k);

/// index >= 1 for everything except hstar, where index >= 0 and hstar_0 is
/// the identity.
struct Generator {
    Kind kind;
    int index;
};

/// Word of generators with optional scalar factors, applied right-to-left.
struct WordFactor {
    Generator gen;
    GaussianRational scalar{1};
};
using AlgebraWord = std::vector<WordFactor>;

AlgebraWord word(std::initializer_list<Generator> gens);

/// Stated relation table of the algebra for odd generator pairs
/// (graded-symmetric). Pairs outside the table give zero; barred-starred
/// against barred is returned in the t*_1-cleared form -delta * t*_1.
CentralPoly anticommutator(const Generator& g1, const Generator& g2);

FockVector apply_generator(const Generator& g, const FockVector& v);
FockVector apply_word(const AlgebraWord& w, const FockVector& v);

/// Triangular inversion of the defining relation of the barred creators:
/// returns the pairs (central coefficient, star index p' <= p) such that
/// xbar*_p = sum coeff * x*_{p'}.
std::vector<std::pair<CentralPoly, int>> bar_star_expand(Kind kind, int p);

/// Coefficients of the inverse of the series 1 + H_1 u + H_2 u^2 + ...
/// through order cap.
std::vector<CentralPoly> h_series_inverse(int cap);

/// Verifies the two formal-series relations between barred and unbarred
/// families on the given sample vectors: the annihilator relation through
/// principal orders 1..order and the creator relation through order-1.
bool series_identity_check(int order, std::span<const FockVector> samples);

struct CoordinateCaps {
    int max_bstar = 0;
    int max_cstar = 0;
};

/// Deterministic enumeration of the full PBW monomials (central part
/// included) appearing across a family of vectors.
class PBWEnumeration {
public:
    PBWEnumeration(std::span<const FockVector> family, const CoordinateCaps& caps);

    std::size_t size() const { return monomials_.size(); }
    std::size_t index_of(const PBWMonomial& m) const { return index_.at(m); }
    const PBWMonomial& monomial(std::size_t i) const { return monomials_.at(i); }

private:
    std::vector<PBWMonomial> monomials_;
    std::map<PBWMonomial, std::size_t> index_;
};

/// Sparse coordinates of v in the enumeration; throws std::out_of_range on
/// a monomial outside the caps or the enumeration.
std::vector<std::pair<std::size_t, GaussianRational>> pbw_coordinates(const FockVector& v,
                                                                      const PBWEnumeration& enumeration);

/// (b*,c*)-bitmask-indexed view with central-polynomial coefficients.
std::map<std::pair<std::uint64_t, std::uint64_t>, CentralPoly> pbw_coordinates_central(
    const FockVector& v, const CoordinateCaps& caps);

/// Same view with T1 and the H_p specialized to exact scalars.
struct CentralSpecialization {
    GaussianRational t1_value;
    std::vector<GaussianRational> h_values;  // h_values[k] is the value of H_{k+1}
};
std::map<std::pair<std::uint64_t, std::uint64_t>, GaussianRational> pbw_coordinates_specialized(
    const FockVector& v, const CoordinateCaps& caps, const CentralSpecialization& spec);

}  // namespace fermibasis::fock
