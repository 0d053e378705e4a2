#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace fermibasis::exactmath {

/// Exact element of Q(i), the Gaussian rationals. Components are
/// arbitrary-precision rationals kept in canonical form (reduced,
/// positive denominator) by GMP.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussianRational(long num, unsigned long den) : re_(num, den) { re_.canonicalize(); }
    explicit GaussianRational(mpq_class re, mpq_class im = 0)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    /// i^k for any integer k.
    static GaussianRational i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return GaussianRational(mpq_class(0), mpq_class(-1));
        }
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        c = cmp(a.im_, b.im_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form "(re)+(im)i", e.g. "(3/2)+(-1)i".
    std::string str() const {
        return "(" + re_.get_str() + ")+(" + im_.get_str() + ")i";
    }

    /// Inverse of str(); throws std::invalid_argument on malformed input.
    static GaussianRational parse(const std::string& s);

private:
    mpq_class re_{0}, im_{0};
};

}  // namespace fermibasis::exactmath
