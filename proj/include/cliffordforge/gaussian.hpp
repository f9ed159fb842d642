#pragma once

#include "rational.hpp"

namespace cliffordforge {

// Element of Q(i): a rational real part plus a rational multiple of i.
// Multiplication, conjugation and exact division are supported; dividing by
// zero throws std::domain_error.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long long n) : re_(n), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        return *this * o.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imag;
        Rational a = im_.abs();
        imag = a.is_one() ? "i" : a.str() + "*i";
        if (re_.is_zero()) return im_.is_negative() ? "-" + imag : imag;
        return re_.str() + (im_.is_negative() ? "-" : "+") + imag;
    }

private:
    Rational re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

} // namespace cliffordforge
