#pragma once

#include "hat.hpp"

#include <map>
#include <vector>

namespace cliffordforge {

// Element of the n-fold iterated hat construction A^[n] in normal form:
// a map from strictly increasing generator-index tuples (1-based) to base
// coefficients. Generators satisfy eta_k^2 = 1 and eta_i eta_j = -eta_j eta_i;
// moving a coefficient past eta_k applies the base star once.
template <class A>
    requires InvolutiveAlgebra<A>
class CliffordElement {
public:
    using Base = typename A::Element;
    using Key = std::vector<int>;

    CliffordElement() = default;

    static CliffordElement scalar(const Base& c) {
        CliffordElement x;
        x.set(Key{}, c);
        return x;
    }

    static CliffordElement one() { return scalar(A::one()); }
    static CliffordElement zero() { return CliffordElement(); }

    static CliffordElement generator(int k) {
        if (k < 1) throw std::domain_error("CliffordElement: generator index must be >= 1");
        CliffordElement x;
        x.set(Key{k}, A::one());
        return x;
    }

    const std::map<Key, Base>& terms() const { return terms_; }

    Base coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? A::zero() : it->second;
    }

    CliffordElement operator+(const CliffordElement& o) const {
        CliffordElement r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    CliffordElement operator-() const {
        CliffordElement r;
        for (const auto& [k, c] : terms_) r.set(k, A::neg(c));
        return r;
    }
    CliffordElement operator-(const CliffordElement& o) const { return *this + (-o); }

    // Blade product: each generator of the right key walks left past the
    // larger generators of the left key (one sign per crossing), equal
    // indices cancel pairwise, and the right coefficient passes the whole
    // left key (one base star per left generator).
    CliffordElement operator*(const CliffordElement& o) const {
        CliffordElement r;
        for (const auto& [s, c] : terms_)
            for (const auto& [t, d] : o.terms_) {
                int crossings = 0;
                for (int v : t)
                    for (int u : s)
                        if (u > v) ++crossings;
                Key key = sym_diff(s, t);
                Base coeff = d;
                if (s.size() % 2 == 1) coeff = A::star(coeff);
                coeff = A::mul(c, coeff);
                if (crossings % 2 == 1) coeff = A::neg(coeff);
                r.add_term(key, coeff);
            }
        return r;
    }

    CliffordElement& operator+=(const CliffordElement& o) { *this = *this + o; return *this; }
    CliffordElement& operator*=(const CliffordElement& o) { *this = *this * o; return *this; }

    CliffordElement star() const {
        CliffordElement r;
        for (const auto& [k, c] : terms_) {
            Base v = A::star(c);
            if (k.size() % 2 == 1) v = A::neg(v);
            r.set(k, v);
        }
        return r;
    }

    bool operator==(const CliffordElement& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [k, c] : terms_) {
            if (k != it->first || !A::eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const CliffordElement& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }

    int max_index() const {
        int m = 0;
        for (const auto& [k, c] : terms_)
            if (!k.empty()) m = std::max(m, k.back());
        return m;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += A::str(c);
            if (!k.empty()) {
                out += "*";
                for (int v : k) out += "h" + std::to_string(v);
            }
        }
        return out;
    }

private:
    void set(const Key& k, const Base& c) {
        if (!A::eq(c, A::zero())) terms_[k] = c;
    }

    void add_term(const Key& k, const Base& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            set(k, c);
        } else {
            it->second = A::add(it->second, c);
            if (A::eq(it->second, A::zero())) terms_.erase(it);
        }
    }

    static Key sym_diff(const Key& s, const Key& t) {
        Key out;
        std::size_t i = 0, j = 0;
        while (i < s.size() && j < t.size()) {
            if (s[i] < t[j]) out.push_back(s[i++]);
            else if (s[i] > t[j]) out.push_back(t[j++]);
            else { ++i; ++j; }
        }
        while (i < s.size()) out.push_back(s[i++]);
        while (j < t.size()) out.push_back(t[j++]);
        return out;
    }

    std::map<Key, Base> terms_;
};

// Runtime handle for A^[n]: bounds-checks generator indices and builds
// normal forms of free words.
template <class A>
    requires InvolutiveAlgebra<A>
struct CliffordAlgebra {
    using Element = CliffordElement<A>;

    int n;

    explicit CliffordAlgebra(int n_) : n(n_) {
        if (n < 0) throw std::domain_error("CliffordAlgebra: negative level");
    }

    Element generator(int k) const {
        if (k < 1 || k > n)
            throw std::domain_error("CliffordAlgebra: generator index out of range");
        return Element::generator(k);
    }

    Element scalar(const typename A::Element& c) const { return Element::scalar(c); }

    // coeff * eta_{w1} * eta_{w2} * ... reduced to normal form.
    Element normal_form(const std::vector<int>& word,
                        const typename A::Element& coeff) const {
        Element r = Element::scalar(coeff);
        for (int k : word) r = r * generator(k);
        return r;
    }
};

template <class A>
    requires InvolutiveAlgebra<A>
CliffordAlgebra<A> iterate_clifford(int n) {
    return CliffordAlgebra<A>(n);
}

} // namespace cliffordforge
