#pragma once

#include "gaussian.hpp"
#include "iterant.hpp"

#include <concepts>
#include <string>

namespace cliffordforge {

// Contract for an associative unital algebra carrying a homomorphic
// involution: star(ab) = star(a)star(b), star(star(a)) = a, star(1) = 1.
template <class A>
concept InvolutiveAlgebra = requires(const typename A::Element& x,
                                     const typename A::Element& y) {
    { A::add(x, y) } -> std::same_as<typename A::Element>;
    { A::mul(x, y) } -> std::same_as<typename A::Element>;
    { A::neg(x) } -> std::same_as<typename A::Element>;
    { A::star(x) } -> std::same_as<typename A::Element>;
    { A::zero() } -> std::same_as<typename A::Element>;
    { A::one() } -> std::same_as<typename A::Element>;
    { A::eq(x, y) } -> std::same_as<bool>;
    { A::str(x) } -> std::same_as<std::string>;
};

// Rationals with the identity involution.
struct RationalField {
    using Element = Rational;
    static Element add(const Element& x, const Element& y) { return x + y; }
    static Element mul(const Element& x, const Element& y) { return x * y; }
    static Element neg(const Element& x) { return -x; }
    static Element star(const Element& x) { return x; }
    static Element zero() { return Rational(0); }
    static Element one() { return Rational(1); }
    static bool eq(const Element& x, const Element& y) { return x == y; }
    static std::string str(const Element& x) { return x.str(); }
};

// Gaussian rationals with complex conjugation as the involution.
struct GaussianConjField {
    using Element = GaussianRational;
    static Element add(const Element& x, const Element& y) { return x + y; }
    static Element mul(const Element& x, const Element& y) { return x * y; }
    static Element neg(const Element& x) { return -x; }
    static Element star(const Element& x) { return x.conj(); }
    static Element zero() { return GaussianRational(0); }
    static Element one() { return GaussianRational(1); }
    static bool eq(const Element& x, const Element& y) { return x == y; }
    static std::string str(const Element& x) { return x.str(); }
};

// Gaussian rationals with the identity involution: the scalar extension
// that keeps i central and untouched, used for quaternions over R^[2].
struct GaussianPlainField {
    using Element = GaussianRational;
    static Element add(const Element& x, const Element& y) { return x + y; }
    static Element mul(const Element& x, const Element& y) { return x * y; }
    static Element neg(const Element& x) { return -x; }
    static Element star(const Element& x) { return x; }
    static Element zero() { return GaussianRational(0); }
    static Element one() { return GaussianRational(1); }
    static bool eq(const Element& x, const Element& y) { return x == y; }
    static std::string str(const Element& x) { return x.str(); }
};

// Pairs with componentwise operations and the swap involution.
struct PairRing {
    using Element = Iterant;
    static Element add(const Element& x, const Element& y) { return x + y; }
    static Element mul(const Element& x, const Element& y) { return x * y; }
    static Element neg(const Element& x) { return -x; }
    static Element star(const Element& x) { return Iterant{x[1], x[0]}; }
    static Element zero() { return Iterant::zeros(2); }
    static Element one() { return Iterant::ones(2); }
    static bool eq(const Element& x, const Element& y) { return x == y; }
    static std::string str(const Element& x) { return x.str(); }
};

// a + b*eta over an involutive algebra A, with eta^2 = 1 and eta*a = star(a)*eta:
//   (a + b eta)(c + d eta) = (ac + b star(d)) + (ad + b star(c)) eta
//   star(a + b eta) = star(a) - star(b) eta
template <class A>
    requires InvolutiveAlgebra<A>
struct HatElement {
    using Base = typename A::Element;

    Base a = A::zero();
    Base b = A::zero();

    HatElement() = default;
    HatElement(Base a_, Base b_) : a(std::move(a_)), b(std::move(b_)) {}

    static HatElement embed(const Base& x) { return {x, A::zero()}; }
    static HatElement eta() { return {A::zero(), A::one()}; }
    static HatElement one() { return {A::one(), A::zero()}; }
    static HatElement zero() { return {A::zero(), A::zero()}; }

    HatElement operator+(const HatElement& o) const {
        return {A::add(a, o.a), A::add(b, o.b)};
    }
    HatElement operator-() const { return {A::neg(a), A::neg(b)}; }
    HatElement operator-(const HatElement& o) const { return *this + (-o); }
    HatElement operator*(const HatElement& o) const {
        return {A::add(A::mul(a, o.a), A::mul(b, A::star(o.b))),
                A::add(A::mul(a, o.b), A::mul(b, A::star(o.a)))};
    }

    HatElement star() const { return {A::star(a), A::neg(A::star(b))}; }

    bool operator==(const HatElement& o) const {
        return A::eq(a, o.a) && A::eq(b, o.b);
    }
    bool operator!=(const HatElement& o) const { return !(*this == o); }

    bool is_zero() const { return A::eq(a, A::zero()) && A::eq(b, A::zero()); }

    std::string str() const {
        return "(" + A::str(a) + ")+(" + A::str(b) + ")n";
    }
};

// The hat extension of A packaged as an involutive algebra itself, so the
// construction can be iterated at the type level.
template <class A>
    requires InvolutiveAlgebra<A>
struct HatAlgebra {
    using Element = HatElement<A>;
    static Element add(const Element& x, const Element& y) { return x + y; }
    static Element mul(const Element& x, const Element& y) { return x * y; }
    static Element neg(const Element& x) { return -x; }
    static Element star(const Element& x) { return x.star(); }
    static Element zero() { return Element::zero(); }
    static Element one() { return Element::one(); }
    static bool eq(const Element& x, const Element& y) { return x == y; }
    static std::string str(const Element& x) { return x.str(); }
};

// Sum x + {y} in the precursor algebra: {u}{v} = u star(v), u{v} = {uv},
// {u}v = {u star(v)}.
template <class A>
    requires InvolutiveAlgebra<A>
struct BraceElement {
    using Base = typename A::Element;

    Base plain = A::zero();
    Base braced = A::zero();

    BraceElement() = default;
    BraceElement(Base p, Base q) : plain(std::move(p)), braced(std::move(q)) {}

    static BraceElement embed(const Base& x) { return {x, A::zero()}; }
    static BraceElement brace(const Base& x) { return {A::zero(), x}; }
    static BraceElement eta() { return brace(A::one()); }

    BraceElement operator+(const BraceElement& o) const {
        return {A::add(plain, o.plain), A::add(braced, o.braced)};
    }
    BraceElement operator-() const { return {A::neg(plain), A::neg(braced)}; }
    BraceElement operator*(const BraceElement& o) const {
        return {A::add(A::mul(plain, o.plain), A::mul(braced, A::star(o.braced))),
                A::add(A::mul(plain, o.braced), A::mul(braced, A::star(o.plain)))};
    }

    bool operator==(const BraceElement& o) const {
        return A::eq(plain, o.plain) && A::eq(braced, o.braced);
    }
    bool operator!=(const BraceElement& o) const { return !(*this == o); }
};

// x + {y} maps to x + y*eta; a ring isomorphism (checked by tests).
template <class A>
    requires InvolutiveAlgebra<A>
HatElement<A> brace_to_hat(const BraceElement<A>& u) {
    return {u.plain, u.braced};
}

// (A + B eta).C = A*C + B*star(C) over the pair ring: the 2-vector action.
inline Iterant hat_vector_action(const HatElement<PairRing>& m, const Iterant& c) {
    if (c.size() != 2)
        throw std::domain_error("hat_vector_action: vector must have length 2");
    return m.a * c + m.b * PairRing::star(c);
}

} // namespace cliffordforge
