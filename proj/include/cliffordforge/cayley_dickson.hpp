#pragma once

#include "rational.hpp"

#include <sstream>
#include <vector>

namespace cliffordforge {

// Element of the level-l Cayley-Dickson doubling of the rationals, stored
// as 2^l coefficients in the recursive (a, b) layout for x = a + Jb:
//   (a + Jb)(c + Jd) = (ac - d*conj(b)) + J(cb + conj(a)*d)
//   conj(a + Jb) = conj(a) - Jb
// Levels 0..4 are supported.
class CDElement {
public:
    CDElement(int level, std::vector<Rational> coeffs)
        : level_(level), c_(std::move(coeffs)) {
        if (level < 0 || level > 4)
            throw std::domain_error("CDElement: level out of supported range 0..4");
        if (c_.size() != static_cast<std::size_t>(1) << level)
            throw std::domain_error("CDElement: coefficient count must be 2^level");
    }

    static CDElement scalar(int level, const Rational& r) {
        std::vector<Rational> c(std::size_t{1} << level);
        c[0] = r;
        return CDElement(level, std::move(c));
    }

    static CDElement unit(int level, int k) {
        std::vector<Rational> c(std::size_t{1} << level);
        c.at(k) = Rational(1);
        return CDElement(level, std::move(c));
    }

    int level() const { return level_; }
    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int k) const { return c_.at(k); }
    const Rational& scalar_part() const { return c_[0]; }

    CDElement operator+(const CDElement& o) const {
        check_level(o);
        std::vector<Rational> c(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k] + o.c_[k];
        return CDElement(level_, std::move(c));
    }

    CDElement operator-() const {
        std::vector<Rational> c(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
        return CDElement(level_, std::move(c));
    }

    CDElement operator-(const CDElement& o) const { return *this + (-o); }

    CDElement operator*(const CDElement& o) const {
        check_level(o);
        return CDElement(level_, mul_rec(c_, o.c_));
    }

    CDElement conj() const {
        std::vector<Rational> c = c_;
        conj_rec(c, 0, c.size());
        return CDElement(level_, std::move(c));
    }

    bool operator==(const CDElement& o) const {
        return level_ == o.level_ && c_ == o.c_;
    }
    bool operator!=(const CDElement& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    // Scalar part of x * conj(x).
    Rational norm() const { return (*this * conj()).scalar_part(); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) os << ",";
            os << c_[k].str();
        }
        os << ")";
        return os.str();
    }

private:
    void check_level(const CDElement& o) const {
        if (level_ != o.level_)
            throw std::domain_error("CDElement: level mismatch");
    }

    static std::vector<Rational> mul_rec(const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) {
        if (x.size() == 1) return {x[0] * y[0]};
        std::size_t h = x.size() / 2;
        auto half = [&](const std::vector<Rational>& v, bool hi) {
            return std::vector<Rational>(v.begin() + (hi ? h : 0),
                                         v.begin() + (hi ? 2 * h : h));
        };
        auto conj_half = [&](std::vector<Rational> v) {
            conj_rec(v, 0, v.size());
            return v;
        };
        std::vector<Rational> xa = half(x, false), xb = half(x, true);
        std::vector<Rational> ya = half(y, false), yb = half(y, true);
        std::vector<Rational> first = mul_rec(xa, ya);
        std::vector<Rational> t = mul_rec(yb, conj_half(xb));
        for (std::size_t k = 0; k < h; ++k) first[k] -= t[k];
        std::vector<Rational> second = mul_rec(ya, xb);
        t = mul_rec(conj_half(xa), yb);
        for (std::size_t k = 0; k < h; ++k) second[k] += t[k];
        first.insert(first.end(), second.begin(), second.end());
        return first;
    }

    static void conj_rec(std::vector<Rational>& c, std::size_t lo, std::size_t len) {
        if (len == 1) return;
        conj_rec(c, lo, len / 2);
        for (std::size_t k = lo + len / 2; k < lo + len; ++k) c[k] = -c[k];
    }

    int level_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CDElement& x) {
    return os << x.str();
}

} // namespace cliffordforge
