#pragma once

#include "rational.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cliffordforge {

// Truncated power series in two variables r, l with exact rational
// coefficients. All terms of total degree < order are exact; keys at or
// above the truncation order are never stored.
class BiSeries {
public:
    explicit BiSeries(int order) : order_(order) {
        if (order < 1) throw std::domain_error("BiSeries: order must be >= 1");
    }

    int order() const { return order_; }

    Rational coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? Rational(0) : it->second;
    }

    // Terms at or above the truncation order are dropped.
    void set(int i, int j, const Rational& v) {
        if (i < 0 || j < 0) throw std::domain_error("BiSeries: negative exponent");
        if (i + j >= order_) return;
        if (v.is_zero())
            c_.erase({i, j});
        else
            c_[{i, j}] = v;
    }

    void add(int i, int j, const Rational& v) { set(i, j, coeff(i, j) + v); }

    // Sums and differences are exact only up to the smaller order.
    BiSeries operator+(const BiSeries& o) const { return combine(o, 1); }
    BiSeries operator-(const BiSeries& o) const { return combine(o, -1); }

    BiSeries operator-() const {
        BiSeries r(order_);
        for (const auto& [k, v] : c_) r.set(k.first, k.second, -v);
        return r;
    }

    BiSeries scaled(const Rational& s) const {
        BiSeries r(order_);
        for (const auto& [k, v] : c_) r.set(k.first, k.second, v * s);
        return r;
    }

    BiSeries diff(char var) const {
        if (var != 'r' && var != 'l')
            throw std::domain_error("BiSeries: variable must be 'r' or 'l'");
        if (order_ == 1) return BiSeries(1);
        BiSeries r(order_ - 1);
        for (const auto& [k, v] : c_) {
            if (var == 'r' && k.first > 0)
                r.set(k.first - 1, k.second, v * Rational(k.first));
            if (var == 'l' && k.second > 0)
                r.set(k.first, k.second - 1, v * Rational(k.second));
        }
        return r;
    }

    Rational eval(const Rational& r, const Rational& l) const {
        Rational sum(0);
        for (const auto& [k, v] : c_)
            sum += v * r.pow(k.first) * l.pow(k.second);
        return sum;
    }

    // Exact rational evaluation converted once at the end.
    double eval_double(const Rational& r, const Rational& l) const {
        return eval(r, l).to_double();
    }

    bool is_zero() const { return c_.empty(); }

    bool operator==(const BiSeries& o) const {
        return order_ == o.order_ && c_ == o.c_;
    }
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

    const std::map<std::pair<int, int>, Rational>& coeffs() const { return c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v.str();
            if (k.first > 0) os << "*r^" << k.first;
            if (k.second > 0) os << "*l^" << k.second;
        }
        return os.str();
    }

private:
    BiSeries combine(const BiSeries& o, int sign) const {
        BiSeries r(std::min(order_, o.order_));
        for (const auto& [k, v] : c_) r.set(k.first, k.second, v);
        for (const auto& [k, v] : o.c_)
            r.add(k.first, k.second, sign > 0 ? v : -v);
        return r;
    }

    int order_;
    std::map<std::pair<int, int>, Rational> c_;
};

enum class PsiKind { R, L, Zero };

// psi_R = sum (-1)^k r^{k+1}/(k+1)! l^k/k!
// psi_L = sum (-1)^k r^k/k!     l^{k+1}/(k+1)!
// psi_0 = sum (-1)^k r^k/k!     l^k/k!
inline BiSeries series_psi(PsiKind which, int n) {
    BiSeries s(n);
    for (int k = 0;; ++k) {
        Rational base = Rational(k % 2 == 0 ? 1 : -1) /
                        (factorial(k) * factorial(k + (which == PsiKind::Zero ? 0 : 1)));
        int i = k, j = k;
        if (which == PsiKind::R) i = k + 1;
        if (which == PsiKind::L) j = k + 1;
        if (i + j >= n) break;
        s.set(i, j, base);
    }
    return s;
}

// cos(r+l): total degree even, coefficient (-1)^{(i+j)/2} / (i! j!)
inline BiSeries series_cos(int n) {
    BiSeries s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            if ((i + j) % 2 == 0)
                s.set(i, j, Rational(((i + j) / 2) % 2 == 0 ? 1 : -1) /
                                (factorial(i) * factorial(j)));
    return s;
}

// sin(r+l): total degree odd, coefficient (-1)^{(i+j-1)/2} / (i! j!)
inline BiSeries series_sin(int n) {
    BiSeries s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            if ((i + j) % 2 == 1)
                s.set(i, j, Rational(((i + j - 1) / 2) % 2 == 0 ? 1 : -1) /
                                (factorial(i) * factorial(j)));
    return s;
}

struct LightconeSeriesReport {
    int order = 0;
    // d psi_1 / dl - psi_2 and d psi_2 / dr + psi_1 for
    // psi_1 = psi_0 + psi_L, psi_2 = psi_0 - psi_R (unit mass) ...
    BiSeries residual_l, residual_r;
    // ... and the same pair of residuals for psi_1 = sin(r+l),
    // psi_2 = cos(r+l).
    BiSeries trig_residual_l, trig_residual_r;
    bool all_zero = false;
};

// Verifies the coupled light-cone equations d psi_1/dl = psi_2 and
// d psi_2/dr = -psi_1 with unit mass, exactly through total degree N-2.
inline LightconeSeriesReport check_lightcone_series(int n) {
    if (n < 2) throw std::domain_error("check_lightcone_series: order must be >= 2");
    BiSeries psi0 = series_psi(PsiKind::Zero, n);
    BiSeries psi1 = psi0 + series_psi(PsiKind::L, n);
    BiSeries psi2 = psi0 - series_psi(PsiKind::R, n);
    BiSeries trig1 = series_sin(n);
    BiSeries trig2 = series_cos(n);
    LightconeSeriesReport rep{n,
                              psi1.diff('l') - psi2,
                              psi2.diff('r') + psi1,
                              trig1.diff('l') - trig2,
                              trig2.diff('r') + trig1,
                              false};
    rep.all_zero = rep.residual_l.is_zero() && rep.residual_r.is_zero() &&
                   rep.trig_residual_l.is_zero() && rep.trig_residual_r.is_zero();
    return rep;
}

inline BiSeries series_diff(const BiSeries& s, char var) { return s.diff(var); }

inline Rational eval_series(const BiSeries& s, const Rational& r, const Rational& l) {
    return s.eval(r, l);
}

inline double eval_float(const BiSeries& s, const Rational& r, const Rational& l) {
    return s.eval_double(r, l);
}

// C[d]^x_k = x (x-d) (x-2d) ... (x-(k-1)d) / k!, with C[d]^x_0 = 1.
// At d=0 this is x^k/k!; at d=1 and integer x >= k it is binomial(x, k).
inline Rational choice_coeff(const Rational& x, const Rational& d, int k) {
    if (k < 0) throw std::domain_error("choice_coeff: k must be >= 0");
    Rational prod(1);
    for (int j = 0; j < k; ++j) prod *= x - d * Rational(j);
    return prod / factorial(k);
}

// Brute-force count of the monotone staircase paths built from `rights`
// unit right-moves and `lefts` unit left-moves that change direction from
// right to left exactly `corners` times. Ground truth by enumeration.
inline long long path_count_oracle(int rights, int lefts, int corners) {
    if (rights < 1 || lefts < 1)
        throw std::domain_error("path_count_oracle: need at least one move each way");
    if (corners < 0) return 0;
    int total = rights + lefts;
    long long count = 0;
    // Bitmask enumeration: bit k set = step k is a right-move.
    for (unsigned long long mask = 0; mask < (1ULL << total); ++mask) {
        if (std::popcount(mask) != rights) continue;
        int bends = 0;
        for (int k = 0; k + 1 < total; ++k)
            if ((mask >> k & 1ULL) == 1 && (mask >> (k + 1) & 1ULL) == 0) ++bends;
        if (bends == corners) ++count;
    }
    return count;
}

} // namespace cliffordforge
