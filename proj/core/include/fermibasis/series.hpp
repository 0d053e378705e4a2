#pragma once

#include <stdexcept>
#include <vector>

#include "fermibasis/gaussian.hpp"

namespace fermibasis::exactmath {

enum class SeriesVar { u, z };

/// Power series in one expansion variable, truncated at a fixed order cap.
/// All operations agree with exact series arithmetic through the cap.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries(SeriesVar var, int cap) : var_(var), coeffs_(static_cast<size_t>(cap) + 1) {
        if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
    }

    static TruncatedSeries constant(SeriesVar var, int cap, T c) {
        TruncatedSeries s(var, cap);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    SeriesVar var() const { return var_; }
    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }

    const T& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    T& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == T())) return false;
        return true;
    }

    TruncatedSeries truncated(int new_cap) const {
        TruncatedSeries r(var_, new_cap);
        for (int k = 0; k <= std::min(new_cap, cap()); ++k) r[k] = coeffs_[static_cast<size_t>(k)];
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = a.like(b);
        for (int k = 0; k <= r.cap(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = a.like(b);
        for (int k = 0; k <= r.cap(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = a.like(b);
        for (int i = 0; i <= r.cap(); ++i)
            for (int j = 0; i + j <= r.cap(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        return r;
    }

    /// Multiplicative inverse; the constant term must be invertible.
    TruncatedSeries inverse() const {
        if (coeffs_[0] == T()) throw std::domain_error("series inverse: constant term is zero");
        TruncatedSeries r(var_, cap());
        T c0inv = inv_of(coeffs_[0]);
        r[0] = c0inv;
        for (int k = 1; k <= cap(); ++k) {
            T acc{};
            for (int j = 1; j <= k; ++j) acc = acc + coeffs_[static_cast<size_t>(j)] * r[k - j];
            r[k] = T() - acc * c0inv;
        }
        return r;
    }

    /// Composition this(g); g must have zero constant term. The result is
    /// expressed in g's variable.
    TruncatedSeries compose(const TruncatedSeries& g) const {
        if (!(g[0] == T())) throw std::domain_error("series compose: inner constant term nonzero");
        int n = std::min(cap(), g.cap());
        TruncatedSeries r = TruncatedSeries::constant(g.var(), n, coeffs_[0]);
        TruncatedSeries gpow = TruncatedSeries::constant(g.var(), n, unit_like(coeffs_[0]));
        for (int k = 1; k <= n; ++k) {
            gpow = gpow * g.truncated(n);
            for (int j = 0; j <= n; ++j) r[j] = r[j] + coeffs_[static_cast<size_t>(k)] * gpow[j];
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    TruncatedSeries like(const TruncatedSeries& other) const {
        if (var_ != other.var_) throw std::invalid_argument("series variable mismatch");
        return TruncatedSeries(var_, std::min(cap(), other.cap()));
    }
    static T inv_of(const T& t) { return t.inv(); }
    static T unit_like(const T&) { return T(1); }

    SeriesVar var_;
    std::vector<T> coeffs_;
};

/// z as a series in u = zeta^2 - 1: z = -u / (2 + u).
TruncatedSeries<GaussianRational> z_of_u(int cap);

/// u as a series in z: u = -2z / (1 + z).
TruncatedSeries<GaussianRational> u_of_z(int cap);

}  // namespace fermibasis::exactmath
