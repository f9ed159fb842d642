#pragma once

#include "gaussian.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffordforge {

// Finite vector of Gaussian rationals with componentwise ring operations.
// Operations on iterants of different lengths throw std::domain_error.
class Iterant {
public:
    Iterant() = default;
    explicit Iterant(std::vector<GaussianRational> comps) : comps_(std::move(comps)) {}
    Iterant(std::initializer_list<GaussianRational> comps) : comps_(comps) {}

    static Iterant zeros(int n) { return Iterant(std::vector<GaussianRational>(n)); }
    static Iterant ones(int n) {
        return constant(n, GaussianRational(1));
    }
    static Iterant constant(int n, const GaussianRational& c) {
        return Iterant(std::vector<GaussianRational>(n, c));
    }

    int size() const { return static_cast<int>(comps_.size()); }
    const GaussianRational& operator[](int k) const { return comps_.at(k); }
    GaussianRational& operator[](int k) { return comps_.at(k); }
    const std::vector<GaussianRational>& components() const { return comps_; }

    Iterant operator-() const {
        Iterant r = *this;
        for (auto& c : r.comps_) c = -c;
        return r;
    }
    Iterant operator+(const Iterant& o) const {
        check_size(o);
        Iterant r = *this;
        for (int k = 0; k < size(); ++k) r.comps_[k] += o.comps_[k];
        return r;
    }
    Iterant operator-(const Iterant& o) const { return *this + (-o); }
    Iterant operator*(const Iterant& o) const {
        check_size(o);
        Iterant r = *this;
        for (int k = 0; k < size(); ++k) r.comps_[k] *= o.comps_[k];
        return r;
    }
    Iterant& operator+=(const Iterant& o) { *this = *this + o; return *this; }
    Iterant& operator*=(const Iterant& o) { *this = *this * o; return *this; }

    Iterant scaled(const GaussianRational& c) const {
        Iterant r = *this;
        for (auto& x : r.comps_) x *= c;
        return r;
    }

    Iterant conj_components() const {
        Iterant r = *this;
        for (auto& x : r.comps_) x = x.conj();
        return r;
    }

    bool operator==(const Iterant& o) const { return comps_ == o.comps_; }
    bool operator!=(const Iterant& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int k = 0; k < size(); ++k) {
            if (k) os << ",";
            os << comps_[k].str();
        }
        os << "]";
        return os.str();
    }

private:
    void check_size(const Iterant& o) const {
        if (size() != o.size())
            throw std::domain_error("Iterant: size mismatch");
    }

    std::vector<GaussianRational> comps_;
};

inline std::ostream& operator<<(std::ostream& os, const Iterant& v) {
    return os << v.str();
}

// Kronecker pairing of component vectors: entry i*m+j of the result is
// v[i]*w[j], where m is the length of w.
inline Iterant tensor_components(const Iterant& v, const Iterant& w) {
    std::vector<GaussianRational> out;
    out.reserve(v.size() * w.size());
    for (int i = 0; i < v.size(); ++i)
        for (int j = 0; j < w.size(); ++j)
            out.push_back(v[i] * w[j]);
    return Iterant(std::move(out));
}

// Bijection on {0, ..., n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw std::domain_error("Permutation: not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        for (int k = 0; k < n; ++k) im[k] = k;
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_.at(k); }

    // (p.after(q))(k) = p(q(k))
    Permutation after(const Permutation& q) const {
        if (degree() != q.degree())
            throw std::domain_error("Permutation: degree mismatch");
        std::vector<int> im(degree());
        for (int k = 0; k < degree(); ++k) im[k] = images_[q(k)];
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(degree());
        for (int k = 0; k < degree(); ++k) im[images_[k]] = k;
        return Permutation(std::move(im));
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

} // namespace cliffordforge
