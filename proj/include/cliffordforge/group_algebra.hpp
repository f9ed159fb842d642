#pragma once

#include "group.hpp"

#include <map>
#include <sstream>

namespace cliffordforge {

// Element of the twisted group algebra over a finite group G: a finite sum
// of terms v_g * g with iterant coefficients. Multiplication pulls group
// elements through coefficients via the slot action:
//   (v*g)(w*h) = (v * act(g, w)) * (g*h).
// Elements belonging to different group handles cannot be combined.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {
        if (!group_) throw std::domain_error("GroupAlgebraElement: null group");
    }

    static GroupAlgebraElement term(GroupPtr group, int g, const Iterant& v) {
        GroupAlgebraElement x(std::move(group));
        if (g < 0 || g >= x.group_->order())
            throw std::domain_error("GroupAlgebraElement: group index out of range");
        if (v.size() != x.group_->degree())
            throw std::domain_error("GroupAlgebraElement: coefficient size mismatch");
        if (!v.is_zero()) x.terms_[g] = v;
        return x;
    }

    static GroupAlgebraElement zero(GroupPtr group) {
        return GroupAlgebraElement(std::move(group));
    }

    static GroupAlgebraElement one(GroupPtr group) {
        int e = group->identity();
        int d = group->degree();
        return term(std::move(group), e, Iterant::ones(d));
    }

    static GroupAlgebraElement scalar(GroupPtr group, const GaussianRational& c) {
        int e = group->identity();
        int d = group->degree();
        return term(std::move(group), e, Iterant::constant(d, c));
    }

    const GroupPtr& group() const { return group_; }
    const std::map<int, Iterant>& terms() const { return terms_; }

    Iterant coeff(int g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Iterant::zeros(group_->degree()) : it->second;
    }

    GroupAlgebraElement operator-() const {
        GroupAlgebraElement r(group_);
        for (const auto& [g, v] : terms_) r.terms_[g] = -v;
        return r;
    }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        check_group(o);
        GroupAlgebraElement r = *this;
        for (const auto& [g, v] : o.terms_) {
            auto it = r.terms_.find(g);
            if (it == r.terms_.end()) {
                r.terms_[g] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
        return *this + (-o);
    }

    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        check_group(o);
        GroupAlgebraElement r(group_);
        for (const auto& [g, v] : terms_)
            for (const auto& [h, w] : o.terms_) {
                int gh = group_->multiply(g, h);
                Iterant c = v * act(*group_, g, w);
                auto it = r.terms_.find(gh);
                if (it == r.terms_.end()) {
                    if (!c.is_zero()) r.terms_[gh] = c;
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) { *this = *this + o; return *this; }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) { *this = *this - o; return *this; }
    GroupAlgebraElement& operator*=(const GroupAlgebraElement& o) { *this = *this * o; return *this; }

    GroupAlgebraElement scaled(const GaussianRational& c) const {
        GroupAlgebraElement r(group_);
        if (c.is_zero()) return r;
        for (const auto& [g, v] : terms_) r.terms_[g] = v.scaled(c);
        return r;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return group_ == o.group_ && terms_ == o.terms_;
    }
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }

    // Conjugation anti-automorphism, defined on iterated products of
    // order-2 groups: each term v*g picks up the parity sign of g's word in
    // the factor generators, and v is acted on by the product of all factor
    // generators. On the order-2 case this is (a + b*h)* = a* - b**h with
    // a* the slot swap.
    GroupAlgebraElement star() const {
        if (!group_->is_two_torsion_product())
            throw std::domain_error("star: group is not a product of order-2 groups");
        GroupAlgebraElement r(group_);
        int tau = group_->twist();
        for (const auto& [g, v] : terms_) {
            Iterant w = act(*group_, tau, v);
            if (group_->word_parity(g)) w = -w;
            r.terms_[g] = w;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, v] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << v.str() << "*" << group_->label(g);
        }
        return os.str();
    }

private:
    void check_group(const GroupAlgebraElement& o) const {
        if (group_ != o.group_)
            throw std::domain_error("GroupAlgebraElement: mismatched group handles");
    }

    GroupPtr group_;
    std::map<int, Iterant> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& x) {
    return os << x.str();
}

// Module action on iterants: (sum v_g * g).w = sum v_g * act(g, w).
inline Iterant ga_action(const GroupAlgebraElement& x, const Iterant& w) {
    Iterant out = Iterant::zeros(x.group()->degree());
    for (const auto& [g, v] : x.terms()) out += v * act(*x.group(), g, w);
    return out;
}

// Commuting embeddings of two group algebras into the algebra of their
// direct product. Coefficients are paired with the Kronecker slot layout,
// so embed_left(x) * embed_right(y) carries the tensor of the coefficients.
struct TensorAlgebra {
    GroupPtr left;
    GroupPtr right;
    GroupPtr product;

    GroupAlgebraElement embed_left(const GroupAlgebraElement& x) const {
        if (x.group() != left)
            throw std::domain_error("TensorAlgebra: element not in left factor");
        GroupAlgebraElement r = GroupAlgebraElement::zero(product);
        Iterant ones = Iterant::ones(right->degree());
        for (const auto& [g, v] : x.terms())
            r += GroupAlgebraElement::term(
                product, g * right->order() + right->identity(),
                tensor_components(v, ones));
        return r;
    }

    GroupAlgebraElement embed_right(const GroupAlgebraElement& y) const {
        if (y.group() != right)
            throw std::domain_error("TensorAlgebra: element not in right factor");
        GroupAlgebraElement r = GroupAlgebraElement::zero(product);
        Iterant ones = Iterant::ones(left->degree());
        for (const auto& [h, w] : y.terms())
            r += GroupAlgebraElement::term(
                product, left->identity() * right->order() + h,
                tensor_components(ones, w));
        return r;
    }
};

inline TensorAlgebra ga_tensor(GroupPtr left, GroupPtr right) {
    TensorAlgebra t;
    t.left = std::move(left);
    t.right = std::move(right);
    t.product = direct_product(t.left, t.right);
    return t;
}

} // namespace cliffordforge
