#include "fermibasis/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermibasis::exactmath {

namespace {

struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt operator*(const GaussInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    /// Exact quotient; the divisions the Bareiss recurrence performs are
    /// exact by construction.
    GaussInt divided_by(const GaussInt& o) const {
        mpz_class n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

/// Clears denominators row by row, returning Gaussian-integer rows.
std::vector<std::vector<GaussInt>> to_integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<GaussInt>> rows(m.rows(), std::vector<GaussInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& e = m(r, c);
            mpz_class lr = lcm(l, e.re().get_den());
            l = lcm(lr, e.im().get_den());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& e = m(r, c);
            rows[r][c] = {mpz_class(e.re().get_num() * (l / e.re().get_den())),
                          mpz_class(e.im().get_num() * (l / e.im().get_den()))};
        }
    }
    return rows;
}

/// Fraction-free elimination; returns (rank, product of pivots, sign).
struct BareissResult {
    std::size_t rank = 0;
    GaussInt last_pivot{1, 0};
    int sign = 1;
};

BareissResult bareiss(std::vector<std::vector<GaussInt>> a) {
    BareissResult res;
    if (a.empty()) return res;
    std::size_t rows = a.size(), cols = a[0].size();
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).divided_by(prev);
            a[i][c] = GaussInt{0, 0};
        }
        prev = a[r][c];
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

}  // namespace

std::size_t exact_rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(to_integer_rows(m)).rank;
}

GaussianRational exact_det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: matrix not square");
    if (m.rows() == 0) return GaussianRational(1);
    // Track the row scalings so the integer determinant can be divided back.
    GaussianRational scale(1);
    auto rows = to_integer_rows(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& e = m(r, c);
            mpz_class lr = lcm(l, e.re().get_den());
            l = lcm(lr, e.im().get_den());
        }
        scale *= GaussianRational(mpq_class(l));
    }
    auto res = bareiss(rows);
    if (res.rank < m.rows()) return GaussianRational(0);
    GaussianRational d(mpq_class(res.last_pivot.re), mpq_class(res.last_pivot.im));
    if (res.sign < 0) d = -d;
    return d / scale;
}

std::size_t exact_rank(const SymbolicMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<RatFun>> a(rows, std::vector<RatFun>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        RatFun inv = a[rank][c].inv();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            RatFun f = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix specialize(const SymbolicMatrix& m, const std::map<VarId, GaussianRational>& point) {
    ExactMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(point);
    return r;
}

bool cauchy_det_check(const std::vector<GaussianRational>& zeta2,
                      const std::vector<GaussianRational>& xi2) {
    const std::size_t l = zeta2.size();
    if (xi2.size() != l || l == 0) throw std::invalid_argument("cauchy_det_check: need l >= 1 points per family");
    std::vector<GaussianRational> all;
    all.insert(all.end(), zeta2.begin(), zeta2.end());
    all.insert(all.end(), xi2.begin(), xi2.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) throw std::invalid_argument("cauchy_det_check: coincident points");
    for (const auto& z : zeta2)
        if (z == GaussianRational(1)) throw std::invalid_argument("cauchy_det_check: zeta^2 = 1 is singular");

    std::vector<GaussianRational> x(l), z(l);
    for (std::size_t p = 0; p < l; ++p) {
        x[p] = xi2[p] - GaussianRational(1);
        z[p] = (zeta2[p] - GaussianRational(1)).inv();
    }

    GaussianRational lhs(1);
    for (std::size_t p = 0; p < l; ++p) lhs *= z[p];
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) lhs *= (x[i] - x[j]) * (z[i] - z[j]);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) lhs /= GaussianRational(1) - x[i] * z[j];

    ExactMatrix kernel(l, l);
    for (std::size_t p = 0; p < l; ++p)
        for (std::size_t q = 0; q < l; ++q) kernel(p, q) = (zeta2[p] - xi2[q]).inv();
    return lhs == exact_det(kernel);
}

bool cauchy_det_check_symbolic_l1() {
    VarId vz = variable("zeta2"), vx = variable("xi2");
    RatFun zeta2 = RatFun::var(vz), xi2 = RatFun::var(vx);
    RatFun z = (zeta2 - RatFun(1)).inv();
    RatFun x = xi2 - RatFun(1);
    RatFun lhs = z / (RatFun(1) - x * z);
    RatFun rhs = (zeta2 - xi2).inv();
    return lhs == rhs;
}

}  // namespace fermibasis::exactmath
