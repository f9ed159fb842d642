#pragma once

#include "group_algebra.hpp"

#include <sstream>
#include <vector>

namespace cliffordforge {

// Square matrix of Gaussian rationals with exact arithmetic.
class Matrix {
public:
    explicit Matrix(int n) : n_(n), e_(n * n) {
        if (n <= 0) throw std::domain_error("Matrix: dimension must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
        return m;
    }

    static Matrix diagonal(const Iterant& v) {
        Matrix m(v.size());
        for (int k = 0; k < v.size(); ++k) m.at(k, k) = v[k];
        return m;
    }

    // Cyclic shift: shift(n) * e_k = e_{k+1 mod n}.
    static Matrix shift(int n) {
        Matrix m(n);
        for (int k = 0; k < n; ++k) m.at((k + 1) % n, k) = GaussianRational(1);
        return m;
    }

    int dim() const { return n_; }

    GaussianRational& at(int r, int c) { return e_.at(r * n_ + c); }
    const GaussianRational& at(int r, int c) const { return e_.at(r * n_ + c); }

    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }

    Matrix operator-() const {
        Matrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                GaussianRational s;
                for (int k = 0; k < n_; ++k) s += at(r, k) * o.at(k, c);
                m.at(r, c) = s;
            }
        return m;
    }

    Matrix scaled(const GaussianRational& c) const {
        Matrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * c;
        return m;
    }

    Matrix pow(int e) const {
        Matrix r = identity(n_);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int r = 0; r < n_; ++r) {
            if (r) os << ",";
            os << "[";
            for (int c = 0; c < n_; ++c) {
                if (c) os << ",";
                os << at(r, c).str();
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_) throw std::domain_error("Matrix: dimension mismatch");
    }

    int n_;
    std::vector<GaussianRational> e_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << m.str();
}

inline Iterant mat_vec(const Matrix& m, const Iterant& v) {
    if (m.dim() != v.size())
        throw std::domain_error("mat_vec: dimension mismatch");
    std::vector<GaussianRational> out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out[r] += m.at(r, c) * v[c];
    return Iterant(std::move(out));
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    int n = a.dim(), m = b.dim();
    Matrix out(n * m);
    for (int ra = 0; ra < n; ++ra)
        for (int ca = 0; ca < n; ++ca)
            for (int rb = 0; rb < m; ++rb)
                for (int cb = 0; cb < m; ++cb)
                    out.at(ra * m + rb, ca * m + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

// Sum of diag(v_{S^k}) * shift^k over the terms of x. Requires the cyclic
// group with its shift action, so that conjugating diag(w) by the shift
// matrix realizes act(S, w).
inline Matrix to_matrix(const GroupAlgebraElement& x) {
    const FiniteGroup& g = *x.group();
    auto s = g.shift_generator();
    if (!s || g.degree() != g.order())
        throw std::domain_error("to_matrix: group is not cyclic with shift action");
    int n = g.order();
    Matrix p = Matrix::shift(n);
    Matrix out(n);
    for (const auto& [gk, v] : x.terms()) {
        int k = 0;
        int walk = g.identity();
        while (walk != gk) {
            walk = g.multiply(walk, *s);
            ++k;
        }
        out = out + Matrix::diagonal(v) * p.pow(k);
    }
    return out;
}

// Unique decomposition M = sum_k diag(d_k) shift^k, read off the k-th
// circulant diagonal: d_k[r] = M[r][(r-k) mod n].
inline GroupAlgebraElement from_matrix(const Matrix& m, const GroupPtr& group) {
    const FiniteGroup& g = *group;
    auto s = g.shift_generator();
    if (!s || g.degree() != g.order())
        throw std::domain_error("from_matrix: group is not cyclic with shift action");
    if (m.dim() != g.order())
        throw std::domain_error("from_matrix: dimension does not match group order");
    int n = g.order();
    GroupAlgebraElement out = GroupAlgebraElement::zero(group);
    int gk = g.identity();
    for (int k = 0; k < n; ++k) {
        std::vector<GaussianRational> d(n);
        for (int r = 0; r < n; ++r) d[r] = m.at(r, ((r - k) % n + n) % n);
        out += GroupAlgebraElement::term(group, gk, Iterant(std::move(d)));
        gk = g.multiply(gk, *s);
    }
    return out;
}

// Convenience overload building its own cyclic group of order n; the result
// lives on a fresh group handle.
inline GroupAlgebraElement from_matrix(const Matrix& m, int n) {
    return from_matrix(m, make_cyclic(n));
}

// Matrix image of an element of a two-factor tensor algebra, built from the
// factor images: each term diag(v) * (shift-image of the left part kron
// shift-image of the right part). Agrees with the Kronecker product of
// factor images on embedded elements.
inline Matrix tensor_to_matrix(const GroupAlgebraElement& x, const TensorAlgebra& t) {
    if (x.group() != t.product)
        throw std::domain_error("tensor_to_matrix: element not in the tensor algebra");
    int nb = t.right->order();
    Matrix out(t.left->degree() * t.right->degree());
    for (const auto& [gh, v] : x.terms()) {
        Matrix ma = to_matrix(GroupAlgebraElement::term(
            t.left, gh / nb, Iterant::ones(t.left->degree())));
        Matrix mb = to_matrix(GroupAlgebraElement::term(
            t.right, gh % nb, Iterant::ones(t.right->degree())));
        out = out + Matrix::diagonal(v) * kron(ma, mb);
    }
    return out;
}

} // namespace cliffordforge
