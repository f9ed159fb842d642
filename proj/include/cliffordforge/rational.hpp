#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cliffordforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. All arithmetic is exact; division by zero throws
// std::domain_error.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = BigRational(num, den);
    }
    explicit Rational(const BigRational& v) : v_(v) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    Rational operator-() const { return Rational(BigRational(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(BigRational(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRational(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRational(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(BigRational(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return den() == 1; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(BigRational(1 / v_));
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Exact value converted to double in a single final step.
    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    BigRational v_;
};

inline Rational factorial(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return Rational(r);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace cliffordforge
