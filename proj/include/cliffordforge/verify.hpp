#pragma once

#include "cayley_dickson.hpp"
#include "checkerboard.hpp"
#include "clifford_group.hpp"
#include "dirac.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "rng.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cliffordforge {

namespace detail {

inline Iterant random_iterant(Rng& rng, int n) {
    return Iterant(rng.gaussians(n));
}

inline Iterant random_real_iterant(Rng& rng, int n) {
    std::vector<GaussianRational> v;
    for (int k = 0; k < n; ++k) v.emplace_back(rng.rational());
    return Iterant(std::move(v));
}

inline GroupAlgebraElement random_ga(Rng& rng, const GroupPtr& g, int max_terms = 2) {
    GroupAlgebraElement x = GroupAlgebraElement::zero(g);
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        int idx = static_cast<int>(rng.range(0, g->order() - 1));
        x += GroupAlgebraElement::term(g, idx, random_iterant(rng, g->degree()));
    }
    return x;
}

inline Matrix random_matrix(Rng& rng, int n) {
    Matrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = rng.gaussian();
    return m;
}

template <class A, class Mk>
bool hat_assoc_sweep(Mk mk, int n) {
    for (int t = 0; t < n; ++t) {
        HatElement<A> p{mk(), mk()}, q{mk(), mk()}, r{mk(), mk()};
        if ((p * q) * r != p * (q * r)) return false;
    }
    return true;
}

template <class A, class Mk>
bool hat_star_sweep(Mk mk, int n, bool& product_law, bool& involutive) {
    for (int t = 0; t < n; ++t) {
        HatElement<A> p{mk(), mk()}, q{mk(), mk()};
        if ((p * q).star() != p.star() * q.star()) product_law = false;
        if (p.star().star() != p) involutive = false;
    }
    return product_law && involutive;
}

template <class A, class Mk>
bool eta_sandwich_sweep(Mk mk, int n) {
    HatElement<A> eta = HatElement<A>::eta();
    for (int t = 0; t < n; ++t) {
        typename A::Element a = mk();
        HatElement<A> x = HatElement<A>::embed(a);
        if (eta * x * eta != HatElement<A>::embed(A::star(a))) return false;
    }
    return true;
}

inline CliffordElement<RationalField> random_clifford(Rng& rng, int n) {
    CliffordElement<RationalField> x;
    int terms = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> key;
        for (int k = 1; k <= n; ++k)
            if (rng.range(0, 1)) key.push_back(k);
        CliffordElement<RationalField> blade =
            CliffordElement<RationalField>::scalar(rng.rational());
        for (int k : key) blade *= CliffordElement<RationalField>::generator(k);
        x += blade;
    }
    return x;
}

// Untwisted convolution computed directly from the group table, for
// cross-checking group_ring products.
inline GroupAlgebraElement convolution(const GroupAlgebraElement& x,
                                       const GroupAlgebraElement& y) {
    GroupAlgebraElement r = GroupAlgebraElement::zero(x.group());
    const FiniteGroup& g = *x.group();
    for (const auto& [a, v] : x.terms())
        for (const auto& [b, w] : y.terms())
            r += GroupAlgebraElement::term(x.group(), g.multiply(a, b), v * w);
    return r;
}

inline std::vector<std::array<long long, 3>> pythagorean_triples(int count) {
    std::vector<std::array<long long, 3>> out;
    for (long long u = 2; static_cast<int>(out.size()) < count; ++u)
        for (long long v = 1; v < u && static_cast<int>(out.size()) < count; ++v)
            out.push_back({u * u - v * v, 2 * u * v, u * u + v * v});
    return out;
}

// c0 + i * sum c_u theta_u: the element by which a plane wave
// cos(theta) + i sin(theta) is multiplied when the operator is applied.
inline GroupAlgebraElement operator_symbol(const DiracOperator& op,
                                           const std::map<std::string, Rational>& phase) {
    GroupAlgebraElement r = GroupAlgebraElement::zero(op.terms.at(0).coeff.group());
    for (const auto& t : op.terms) {
        if (t.deriv.empty())
            r += t.coeff;
        else
            r += t.coeff.scaled(GaussianRational(Rational(0), phase.at(t.deriv)));
    }
    return r;
}

inline bool ga_real(const GroupAlgebraElement& x) {
    for (const auto& [g, v] : x.terms())
        for (const auto& c : v.components())
            if (!c.im().is_zero()) return false;
    return true;
}

inline bool wave_real(const AlgebraWave& w) {
    return ga_real(w.cos_part) && ga_real(w.sin_part);
}

} // namespace detail

struct PlaneWaveCheck {
    bool pass = false;
    std::string residual;
};

// Applies the right-composed operator to U * e^{i(p.r - Et)} and reports
// whether the result is the exact zero wave.
inline PlaneWaveCheck verify_plane_wave(const DiracAlgebra& d, const EnergyMomentum& pm) {
    AlgebraWave psi = plane_wave(d, pm);
    GroupAlgebraElement u = build_U(d, pm);
    AlgebraWave res = apply_operator(modified_dirac_operator(d, pm),
                                     wave_left_mul(u, psi));
    PlaneWaveCheck c;
    c.pass = res.is_zero();
    if (!c.pass)
        c.residual = "cos: " + res.cos_part.str() + "  sin: " + res.sin_part.str();
    return c;
}

// ---------------------------------------------------------------------------
// hat suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_hat(std::uint64_t seed, int samples) {
    using detail::hat_assoc_sweep;
    using detail::hat_star_sweep;
    using detail::eta_sandwich_sweep;
    VerificationReport rep{"hat", {}};
    Rng rng(seed);
    int pairs = std::max(1, samples / 2);

    auto mk_rat = [&] { return rng.rational(); };
    auto mk_cpx = [&] { return rng.gaussian(); };
    auto mk_pair = [&] {
        return Iterant{GaussianRational(rng.rational()), GaussianRational(rng.rational())};
    };

    rep.add("assoc-rational", hat_assoc_sweep<RationalField>(mk_rat, samples),
            std::to_string(samples) + " random triples over the rational base, exact");
    rep.add("assoc-complex", hat_assoc_sweep<GaussianConjField>(mk_cpx, samples),
            std::to_string(samples) + " random triples over the conjugation base, exact");
    rep.add("assoc-pair", hat_assoc_sweep<PairRing>(mk_pair, samples),
            std::to_string(samples) + " random triples over the swap-pair base, exact");

    bool prod = true, invol = true;
    hat_star_sweep<RationalField>(mk_rat, samples, prod, invol);
    hat_star_sweep<GaussianConjField>(mk_cpx, samples, prod, invol);
    hat_star_sweep<PairRing>(mk_pair, samples, prod, invol);
    rep.add("star-multiplicative", prod,
            "(pq)* = p*q* on " + std::to_string(samples) + " pairs per base");
    rep.add("star-involutive", invol,
            "(p*)* = p on " + std::to_string(samples) + " pairs per base");

    {
        bool ok = HatElement<RationalField>::eta() * HatElement<RationalField>::eta() ==
                      HatElement<RationalField>::one() &&
                  HatElement<GaussianConjField>::eta() * HatElement<GaussianConjField>::eta() ==
                      HatElement<GaussianConjField>::one() &&
                  HatElement<PairRing>::eta() * HatElement<PairRing>::eta() ==
                      HatElement<PairRing>::one();
        rep.add("eta-square", ok, "the adjoined generator squares to one in every base");
    }

    {
        bool ok = eta_sandwich_sweep<RationalField>(mk_rat, pairs) &&
                  eta_sandwich_sweep<GaussianConjField>(mk_cpx, pairs) &&
                  eta_sandwich_sweep<PairRing>(mk_pair, pairs);
        rep.add("eta-sandwich", ok, "conjugating a base element by the generator applies star");
    }

    {
        using H = HatElement<RationalField>;
        H p{Rational(1), Rational(2)}, q{Rational(3), Rational(4)};
        H expect{Rational(11), Rational(10)};
        rep.add("product-frozen", p * q == expect, "(1+2n)(3+4n) = 11+10n over the rationals");
    }

    {
        using H = HatElement<PairRing>;
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            Iterant ab = mk_pair();
            H left = H::eta() * H::embed(ab);
            H right = H::embed(PairRing::star(ab)) * H::eta();
            ok = left == right && left == H{Iterant::zeros(2), PairRing::star(ab)};
        }
        rep.add("pair-swap", ok, "the generator moves past [a,b] as [b,a]");
    }

    {
        using H = HatElement<GaussianConjField>;
        H i_emb = H::embed(GaussianRational::i());
        H i_eta{GaussianRational(0), GaussianRational::i()};
        bool ok = H::eta() * i_emb == -(i_emb * H::eta()) && i_eta * i_eta == H::one();
        rep.add("complex-model", ok,
                "over the conjugation base the generator anticommutes with i and i*n squares to one");
    }

    {
        using B = BraceElement<PairRing>;
        bool assoc = true;
        auto mkb = [&] { return B{mk_pair(), mk_pair()}; };
        for (int t = 0; t < samples && assoc; ++t) {
            B u = mkb(), v = mkb(), w = mkb();
            assoc = (u * v) * w == u * (v * w);
        }
        rep.add("brace-assoc", assoc,
                std::to_string(samples) + " random triples in the brace precursor, exact");

        bool iso = brace_to_hat(B::eta()) == HatElement<PairRing>::eta();
        for (int t = 0; t < pairs && iso; ++t) {
            B u = mkb(), v = mkb();
            iso = brace_to_hat(u * v) == brace_to_hat(u) * brace_to_hat(v) &&
                  brace_to_hat(B{u.plain, u.braced} + B{v.plain, v.braced}) ==
                      brace_to_hat(u) + brace_to_hat(v);
        }
        rep.add("brace-iso", iso,
                "x + {y} maps to x + y*n multiplicatively, with {1} the generator");
    }

    {
        using H = HatElement<PairRing>;
        Iterant e{GaussianRational(-1), GaussianRational(1)};
        H e_eta{Iterant::zeros(2), e};
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            Iterant c = mk_pair();
            Iterant rot = hat_vector_action(e_eta, c);
            ok = rot == Iterant{-c[1], c[0]} &&
                 hat_vector_action(H::one(), c) == c &&
                 hat_vector_action(e_eta * e_eta, c) == -c &&
                 hat_vector_action(e_eta, rot) == -c;
        }
        rep.add("vector-action", ok,
                "[-1,1]*n acts as a quarter turn on 2-vectors; composing actions matches products");
    }

    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 5 && ok; ++n) {
            CliffordAlgebra<RationalField> alg(n);
            auto one = CliffordElement<RationalField>::one();
            for (int i = 1; i <= n && ok; ++i) {
                auto gi = alg.generator(i);
                if (gi * gi != one) { ok = false; witness = "square at " + std::to_string(i); }
                if (gi.star() != -gi) { ok = false; witness = "star sign at " + std::to_string(i); }
                for (int j = i + 1; j <= n && ok; ++j) {
                    auto gj = alg.generator(j);
                    if (!(gi * gj + gj * gi).is_zero()) {
                        ok = false;
                        witness = "pair " + std::to_string(i) + "," + std::to_string(j);
                    }
                }
            }
        }
        rep.add("clifford-relations", ok,
                ok ? "squares one, distinct generators anticommute, star negates generators; depth <= 5 exhaustive"
                   : witness);
    }

    {
        using CE = CliffordElement<RationalField>;
        CliffordAlgebra<RationalField> alg(3);
        CE I = alg.generator(2) * alg.generator(1);
        CE J = alg.generator(3) * alg.generator(2);
        CE K = alg.generator(1) * alg.generator(3);
        CE minus_one = -CE::one();
        bool ok = I * I == minus_one && J * J == minus_one && K * K == minus_one &&
                  I * J * K == minus_one && I * J == K && J * K == I && K * I == J;
        rep.add("quaternions-depth3", ok,
                "I=h2h1, J=h3h2, K=h1h3 satisfy the quaternion relations at depth three");
    }

    {
        using GE = CliffordElement<GaussianPlainField>;
        GE i = GE::scalar(GaussianRational::i());
        GE I = i * GE::generator(1);
        GE J = i * GE::generator(2);
        GE K = GE::generator(2) * GE::generator(1);
        GE minus_one = -GE::one();
        bool ok = I * I == minus_one && J * J == minus_one && K * K == minus_one &&
                  I * J * K == minus_one && I * J == K;
        rep.add("quaternions-gaussian", ok,
                "I=ih1, J=ih2, K=h2h1 satisfy the quaternion relations at depth two over Q(i)");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// group suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_group(std::uint64_t seed, int samples) {
    using detail::random_ga;
    using detail::random_iterant;
    VerificationReport rep{"group", {}};
    Rng rng(seed);

    std::vector<GroupPtr> small = {
        make_cyclic(2), make_cyclic(3), make_cyclic(4),
        make_two_torsion(2), direct_product(make_cyclic(2), make_cyclic(3)),
        make_two_torsion(3)};

    {
        bool contract = true, aut = true;
        for (const auto& g : small) {
            for (int a = 0; a < g->order() && contract; ++a)
                for (int b = 0; b < g->order() && contract; ++b) {
                    Iterant v = random_iterant(rng, g->degree());
                    contract = act(*g, a, act(*g, b, v)) == act(*g, g->multiply(a, b), v);
                }
            for (int a = 0; a < g->order() && aut; ++a) {
                Iterant v = random_iterant(rng, g->degree());
                Iterant w = random_iterant(rng, g->degree());
                aut = act(*g, a, v * w) == act(*g, a, v) * act(*g, a, w) &&
                      act(*g, a, v + w) == act(*g, a, v) + act(*g, a, w);
            }
        }
        rep.add("action-contract", contract,
                "act(g, act(h, v)) = act(gh, v), exhaustive over groups of order <= 8");
        rep.add("action-automorphism", aut,
                "slot actions preserve products and sums of iterants");
    }

    {
        bool ok = true;
        for (const auto& g : small)
            ok = ok && FiniteGroup::deserialize(g->serialize()).same_structure(*g);
        rep.add("serialization-roundtrip", ok,
                "serialize then deserialize reproduces labels, table and action");
    }

    std::array<std::pair<const char*, GroupPtr>, 3> configs = {
        std::make_pair("assoc-order2", make_cyclic(2)),
        std::make_pair("assoc-order3", make_cyclic(3)),
        std::make_pair("assoc-klein", make_two_torsion(2))};
    for (const auto& [label, g] : configs) {
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            auto x = random_ga(rng, g), y = random_ga(rng, g), z = random_ga(rng, g);
            ok = (x * y) * z == x * (y * z);
        }
        rep.add(label, ok, std::to_string(samples) + " random triples, exact");
    }

    {
        bool ok = true;
        const auto& g = configs[2].second;
        for (int t = 0; t < std::max(1, samples / 4) && ok; ++t) {
            auto x = random_ga(rng, g), y = random_ga(rng, g), z = random_ga(rng, g);
            ok = x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z;
        }
        rep.add("bilinear", ok, "products distribute over sums on random samples");
    }

    {
        bool compose = true, unit = true;
        int n = std::max(1, samples / 2);
        for (int t = 0; t < n && (compose || unit); ++t) {
            const auto& g = small[t % 3];
            auto x = random_ga(rng, g), y = random_ga(rng, g);
            Iterant w = random_iterant(rng, g->degree());
            if (ga_action(x * y, w) != ga_action(x, ga_action(y, w))) compose = false;
            if (ga_action(GroupAlgebraElement::one(g), w) != w) unit = false;
        }
        rep.add("module-action", compose,
                "(xy).w = x.(y.w) on " + std::to_string(n) + " samples");
        rep.add("module-identity", unit, "1.w = w on the same samples");
    }

    {
        auto c2 = make_cyclic(2);
        auto eta = GroupAlgebraElement::term(c2, 1, Iterant::ones(2));
        bool swap_ok = true;
        for (int t = 0; t < 50 && swap_ok; ++t) {
            Iterant ab = random_iterant(rng, 2);
            auto left = eta * GroupAlgebraElement::term(c2, 0, ab);
            auto right = GroupAlgebraElement::term(c2, 0, Iterant{ab[1], ab[0]}) * eta;
            swap_ok = left == right &&
                      left == GroupAlgebraElement::term(c2, 1, Iterant{ab[1], ab[0]});
        }
        rep.add("eta-coefficient-swap", swap_ok,
                "moving the order-2 shift past [a,b] swaps the slots");

        auto i_elem = GroupAlgebraElement::term(
            c2, 1, Iterant{GaussianRational(-1), GaussianRational(1)});
        rep.add("unit-square",
                i_elem * i_elem == GroupAlgebraElement::scalar(c2, GaussianRational(-1)),
                "[-1,1]*h squares to minus one");
    }

    {
        bool ok = true;
        for (int order = 2; order <= 6 && ok; ++order) {
            auto ring = group_ring(make_cyclic(order));
            for (int t = 0; t < 30 && ok; ++t) {
                auto x = random_ga(rng, ring), y = random_ga(rng, ring);
                ok = x * y == detail::convolution(x, y);
            }
        }
        {
            auto ring = group_ring(make_two_torsion(2));
            for (int t = 0; t < 30 && ok; ++t) {
                auto x = random_ga(rng, ring), y = random_ga(rng, ring);
                ok = x * y == detail::convolution(x, y);
            }
        }
        rep.add("group-ring-convolution", ok,
                "trivial-action products equal untwisted convolution, orders <= 6");

        auto r3 = group_ring(make_cyclic(3));
        GroupAlgebraElement all = GroupAlgebraElement::zero(r3);
        for (int g = 0; g < 3; ++g)
            all += GroupAlgebraElement::term(r3, g, Iterant::ones(1));
        auto s = GroupAlgebraElement::term(r3, 1, Iterant::ones(1));
        rep.add("group-ring-example", all * s == all,
                "(1 + S + S^2) S = 1 + S + S^2 in the order-3 group ring");
    }

    {
        TensorAlgebra t = ga_tensor(make_cyclic(2), make_cyclic(3));
        bool commute = true, structure = t.product->order() == 6 && t.product->degree() == 6;
        for (int k = 0; k < 50 && commute; ++k) {
            auto x = random_ga(rng, t.left), y = random_ga(rng, t.right);
            commute = t.embed_left(x) * t.embed_right(y) ==
                      t.embed_right(y) * t.embed_left(x);
        }
        rep.add("tensor-commute", commute,
                "left and right embeddings commute elementwise");
        rep.add("tensor-structure", structure,
                "product group order and slot count are the products of the factors");
    }

    {
        auto g2 = make_two_torsion(2);
        auto g3 = make_two_torsion(3);
        bool hom = true, invol = true;
        for (int t = 0; t < 50; ++t) {
            const auto& g = t % 2 ? g2 : g3;
            auto x = random_ga(rng, g), y = random_ga(rng, g);
            if ((x * y).star() != x.star() * y.star()) hom = false;
            if (x.star().star() != x) invol = false;
        }
        rep.add("star-homomorphic", hom, "star(xy) = star(x)star(y) on order-2 products");
        rep.add("star-involutive", invol, "star applied twice is the identity");

        auto c2 = make_cyclic(2);
        auto to_hat = [&](const GroupAlgebraElement& x) {
            return HatElement<PairRing>{x.coeff(0), x.coeff(1)};
        };
        bool agree = true;
        for (int t = 0; t < 50 && agree; ++t) {
            auto x = random_ga(rng, c2), y = random_ga(rng, c2);
            agree = to_hat(x * y) == to_hat(x) * to_hat(y) &&
                    to_hat(x.star()) == to_hat(x).star() &&
                    to_hat(x + y) == to_hat(x) + to_hat(y);
        }
        rep.add("hat-agreement", agree,
                "the order-2 twisted algebra is the pair-ring hat extension");
    }

    {
        bool relations = true, hom = true, frozen = true;
        for (int n = 1; n <= 4; ++n) {
            auto model = clifford_as_group_algebra(n);
            auto one = GroupAlgebraElement::one(model.group);
            for (int i = 0; i < n; ++i) {
                if (model.generators[i] * model.generators[i] != one) relations = false;
                for (int j = i + 1; j < n; ++j)
                    if (!(model.generators[i] * model.generators[j] +
                          model.generators[j] * model.generators[i])
                             .is_zero())
                        relations = false;
            }
            for (int t = 0; t < 25; ++t) {
                auto x = detail::random_clifford(rng, n);
                auto y = detail::random_clifford(rng, n);
                if (model.map_element(x * y) !=
                    model.map_element(x) * model.map_element(y))
                    hom = false;
            }
        }
        {
            auto model = clifford_as_group_algebra(2);
            auto h1 = GroupAlgebraElement::term(model.group, 2, Iterant::ones(4));
            auto h2 = GroupAlgebraElement::term(
                model.group, 1,
                Iterant{GaussianRational(1), GaussianRational(1), GaussianRational(-1),
                        GaussianRational(-1)});
            auto prod = GroupAlgebraElement::term(
                model.group, 3,
                Iterant{GaussianRational(-1), GaussianRational(-1), GaussianRational(1),
                        GaussianRational(1)});
            frozen = model.generators[0] == h1 && model.generators[1] == h2 &&
                     model.generators[0] * model.generators[1] == prod;
        }
        rep.add("clifford-model-relations", relations,
                "mapped generators square to one and anticommute, n <= 4");
        rep.add("clifford-model-hom", hom,
                "the blade-to-term map preserves products on random pairs");
        rep.add("clifford-model-frozen", frozen,
                "n=2 images and their product match hand-computed values");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// matrix suite
// ---------------------------------------------------------------------------

inline VerificationReport iso_check(int n, int samples, std::uint64_t seed) {
    using detail::random_ga;
    VerificationReport rep{"matrix", {}};
    Rng rng(seed + n);
    auto g = make_cyclic(n);
    std::string pre = "n" + std::to_string(n) + "-";

    {
        bool ok = true;
        for (int g1 = 0; g1 < n && ok; ++g1)
            for (int r1 = 0; r1 < n && ok; ++r1)
                for (int g2 = 0; g2 < n && ok; ++g2)
                    for (int r2 = 0; r2 < n && ok; ++r2) {
                        Iterant v1 = Iterant::zeros(n);
                        v1[r1] = GaussianRational(1);
                        Iterant v2 = Iterant::zeros(n);
                        v2[r2] = GaussianRational(1);
                        auto x = GroupAlgebraElement::term(g, g1, v1);
                        auto y = GroupAlgebraElement::term(g, g2, v2);
                        ok = to_matrix(x * y) == to_matrix(x) * to_matrix(y);
                    }
        rep.add(pre + "hom-basis", ok, "products of all basis terms map to matrix products");
    }

    {
        bool hom = true, add = true;
        for (int t = 0; t < samples && hom && add; ++t) {
            auto x = random_ga(rng, g), y = random_ga(rng, g);
            hom = to_matrix(x * y) == to_matrix(x) * to_matrix(y);
            add = to_matrix(x + y) == to_matrix(x) + to_matrix(y);
        }
        rep.add(pre + "hom-random", hom && add,
                std::to_string(samples) + " random pairs, products and sums");
    }

    {
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            auto x = random_ga(rng, g);
            ok = from_matrix(to_matrix(x), g) == x;
        }
        rep.add(pre + "roundtrip", ok, "from_matrix(to_matrix(x)) = x on random elements");
    }

    {
        bool ok = true;
        for (int t = 0; t < samples && ok; ++t) {
            Matrix m = detail::random_matrix(rng, n);
            ok = to_matrix(from_matrix(m, g)) == m;
        }
        rep.add(pre + "matrix-roundtrip", ok,
                "to_matrix(from_matrix(M)) = M on random matrices");
    }

    {
        bool ok = true;
        for (int t = 0; t < std::max(1, samples / 2) && ok; ++t) {
            auto x = random_ga(rng, g);
            Iterant w = detail::random_iterant(rng, n);
            ok = mat_vec(to_matrix(x), w) == ga_action(x, w);
        }
        rep.add(pre + "action-compat", ok,
                "matrix-vector products agree with the module action");
    }

    return rep;
}

inline VerificationReport verify_matrix(std::uint64_t seed, int samples) {
    VerificationReport rep{"matrix", {}};
    Rng rng(seed);
    int per_n = std::max(1, samples / 2);

    for (int n = 2; n <= 4; ++n) {
        VerificationReport sub = iso_check(n, per_n, seed);
        for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
    }

    {
        auto c2 = make_cyclic(2);
        auto x = GroupAlgebraElement::term(c2, 0,
                                           Iterant{GaussianRational(1), GaussianRational(2)}) +
                 GroupAlgebraElement::term(c2, 1,
                                           Iterant{GaussianRational(3), GaussianRational(4)});
        Matrix m = to_matrix(x);
        Matrix expect(2);
        expect.at(0, 0) = GaussianRational(1);
        expect.at(0, 1) = GaussianRational(3);
        expect.at(1, 0) = GaussianRational(4);
        expect.at(1, 1) = GaussianRational(2);
        bool ok = m.str() == "[[1,3],[4,2]]" && m == expect && from_matrix(expect, c2) == x;
        rep.add("frozen-image", ok,
                "[1,2] + [3,4]*h maps to [[1,3],[4,2]] byte-exactly and back");
    }

    {
        auto c2 = make_cyclic(2);
        auto e_eta = GroupAlgebraElement::term(
            c2, 1, Iterant{GaussianRational(-1), GaussianRational(1)});
        rep.add("rotation-image", to_matrix(e_eta).str() == "[[0,-1],[1,0]]",
                "[-1,1]*h maps to the quarter-turn matrix");
    }

    {
        Matrix p = Matrix::shift(3);
        bool ok = p.pow(3) == Matrix::identity(3) && p.pow(1) != Matrix::identity(3);
        Iterant e0 = Iterant{GaussianRational(1), GaussianRational(0), GaussianRational(0)};
        ok = ok && mat_vec(p, e0) ==
                       Iterant{GaussianRational(0), GaussianRational(1), GaussianRational(0)};
        rep.add("shift-order", ok, "the order-3 shift matrix cycles basis vectors with period 3");
    }

    {
        TensorAlgebra t = ga_tensor(make_cyclic(2), make_cyclic(2));
        bool kron_ok = true, hom = true;
        for (int k = 0; k < 50 && kron_ok; ++k) {
            auto x = detail::random_ga(rng, t.left);
            auto y = detail::random_ga(rng, t.right);
            kron_ok = tensor_to_matrix(t.embed_left(x) * t.embed_right(y), t) ==
                      kron(to_matrix(x), to_matrix(y));
        }
        for (int k = 0; k < 50 && hom; ++k) {
            auto x = detail::random_ga(rng, t.product);
            auto y = detail::random_ga(rng, t.product);
            hom = tensor_to_matrix(x * y, t) ==
                  tensor_to_matrix(x, t) * tensor_to_matrix(y, t);
        }
        rep.add("tensor-kron", kron_ok,
                "images of embedded pairs equal Kronecker products of factor images");
        rep.add("tensor-hom", hom,
                "the 4-by-4 image preserves products on the full product algebra");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// cayley-dickson suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_cd(std::uint64_t seed, int samples) {
    VerificationReport rep{"cd", {}};
    Rng rng(seed);
    int pairs = std::max(1, samples / 2);

    auto random_cd = [&](int level) {
        std::vector<Rational> c;
        for (int k = 0; k < (1 << level); ++k) c.push_back(rng.rational());
        return CDElement(level, std::move(c));
    };

    {
        bool ok = true;
        for (int t = 0; t < pairs && ok; ++t) {
            int level = static_cast<int>(rng.range(0, 3));
            auto x = random_cd(level), y = random_cd(level);
            ok = (x * y).conj() == y.conj() * x.conj();
        }
        rep.add("conj-antihom", ok,
                "conj(xy) = conj(y)conj(x) on " + std::to_string(pairs) +
                    " pairs across levels 0..3");
    }

    {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            int level = static_cast<int>(rng.range(0, 4));
            auto x = random_cd(level);
            ok = x.conj().conj() == x;
        }
        rep.add("conj-involutive", ok, "conj applied twice is the identity, levels 0..4");
    }

    {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            auto x = random_cd(1);
            auto p = x * x.conj();
            ok = p == CDElement::scalar(1, x.coeff(0) * x.coeff(0) + x.coeff(1) * x.coeff(1));
        }
        rep.add("norm-real", ok, "x conj(x) = a^2 + b^2 at level one");
    }

    {
        bool ok = true;
        for (int t = 0; t < 150 && ok; ++t) {
            int level = static_cast<int>(rng.range(0, 3));
            auto x = random_cd(level), y = random_cd(level);
            ok = (x * y).norm() == x.norm() * y.norm();
        }
        rep.add("norm-multiplicative", ok, "N(xy) = N(x)N(y) at levels 0..3");
    }

    {
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            int level = static_cast<int>(rng.range(0, 2));
            auto x = random_cd(level), y = random_cd(level), z = random_cd(level);
            ok = (x * y) * z == x * (y * z);
        }
        rep.add("assoc-low", ok, "random triples associate at levels 0..2");
    }

    {
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = 0; b < 4 && ok; ++b)
                for (int c = 0; c < 4 && ok; ++c) {
                    auto x = CDElement::unit(2, a);
                    auto y = CDElement::unit(2, b);
                    auto z = CDElement::unit(2, c);
                    ok = (x * y) * z == x * (y * z);
                }
        rep.add("quaternion-assoc-exhaustive", ok,
                "all 64 ordered basis triples associate at level two");
    }

    {
        auto u = [&](int k) { return CDElement::unit(2, k); };
        auto n1 = -CDElement::scalar(2, Rational(1));
        bool ok = u(1) * u(1) == n1 && u(2) * u(2) == n1 && u(3) * u(3) == n1 &&
                  u(1) * u(2) == -u(3) && u(2) * u(1) == u(3) &&
                  u(1) * u(3) == u(2) && u(3) * u(1) == -u(2) &&
                  u(2) * u(3) == -u(1) && u(3) * u(2) == u(1);
        rep.add("quaternion-table", ok, "level-two basis products match the doubled table");

        auto i = u(1), j = u(2);
        auto k = i * j;
        bool units = i * i == n1 && j * j == n1 && k * k == n1 && i * j * k == n1 &&
                     i * j == k && j * i == -k;
        rep.add("quaternion-units", units, "i = e1, j = e2, k = ij behave as quaternions");
        rep.add("noncommutative-witness", u(1) * u(2) != u(2) * u(1),
                "e1 e2 and e2 e1 differ at level two");
    }

    {
        bool found = false;
        std::string witness;
        for (int a = 1; a < 8 && !found; ++a)
            for (int b = 1; b < 8 && !found; ++b)
                for (int c = 1; c < 8 && !found; ++c) {
                    auto x = CDElement::unit(3, a);
                    auto y = CDElement::unit(3, b);
                    auto z = CDElement::unit(3, c);
                    if ((x * y) * z != x * (y * z)) {
                        found = true;
                        witness = "(e" + std::to_string(a) + " e" + std::to_string(b) +
                                  ") e" + std::to_string(c) + " = " +
                                  ((x * y) * z).str() + " but e" + std::to_string(a) +
                                  " (e" + std::to_string(b) + " e" + std::to_string(c) +
                                  ") = " + (x * (y * z)).str();
                    }
                }
        rep.add("octonion-witness", found,
                found ? witness : "no non-associative basis triple found at level three");
    }

    {
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            auto y = random_cd(4);
            auto twice_re = CDElement::scalar(4, y.coeff(0) + y.coeff(0));
            ok = y + y.conj() == twice_re;
        }
        rep.add("conj-trace", ok, "x + conj(x) is twice the scalar part at level four");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// dirac suite (includes the light-cone system)
// ---------------------------------------------------------------------------

inline VerificationReport verify_dirac(std::uint64_t seed, int samples) {
    (void)seed;
    (void)samples;
    VerificationReport rep{"dirac", {}};
    DiracAlgebra d;
    auto scalar = [&](long long v) { return d.scalar(GaussianRational(v)); };
    auto zero = GroupAlgebraElement::zero(d.group());

    {
        std::vector<GroupAlgebraElement> gens = {d.eps(), d.eta(), d.eps_hat(), d.eta_hat()};
        bool ok = true;
        for (const auto& g : gens) ok = ok && g * g == d.one();
        ok = ok && d.eps() * d.eta() == -(d.eta() * d.eps());
        ok = ok && d.eps_hat() * d.eta_hat() == -(d.eta_hat() * d.eps_hat());
        for (const auto& a : {d.eps(), d.eta()})
            for (const auto& b : {d.eps_hat(), d.eta_hat()})
                ok = ok && a * b == b * a;
        rep.add("split-relations", ok,
                "both copies square to one and anticommute internally; the copies commute");
    }

    {
        bool ok = true;
        for (int i = 1; i <= 3; ++i) {
            ok = ok && d.sigma(i) * d.sigma(i) == d.one();
            ok = ok && d.sigma(i) * d.alpha() == d.alpha() * d.sigma(i);
            ok = ok && d.sigma(i) * d.beta() == d.beta() * d.sigma(i);
            for (int j = i + 1; j <= 3; ++j)
                ok = ok && d.sigma(i) * d.sigma(j) == -(d.sigma(j) * d.sigma(i));
        }
        rep.add("sigma-relations", ok,
                "the sigma triple squares to one, anticommutes pairwise, commutes with alpha and beta");
    }

    EnergyMomentum pm1(Rational(5), {Rational(3)}, Rational(4));
    auto u1 = build_U(d, pm1);
    auto udag1 = build_Udag(d, pm1);

    rep.add("nilpotent-1d", u1 * u1 == zero && udag1 * udag1 == zero,
            "U and its time-reversal square to zero at (p,m,E) = (3,4,5)");
    rep.add("anticommutator-1d", u1 * udag1 + udag1 * u1 == scalar(100),
            "U Udag + Udag U = 4E^2 = 100 at (3,4,5)");
    {
        auto diff = u1 - udag1;
        auto sum = u1 + udag1;
        rep.add("squares-1d", diff * diff == scalar(-100) && sum * sum == scalar(100),
                "(U - Udag)^2 = -4E^2 and (U + Udag)^2 = 4E^2 at (3,4,5)");
    }

    {
        bool ok = true;
        for (const auto& t : detail::pythagorean_triples(20)) {
            EnergyMomentum pm(Rational(t[2]), {Rational(t[0])}, Rational(t[1]));
            auto u = build_U(d, pm);
            auto v = build_Udag(d, pm);
            auto four_e2 = d.scalar(GaussianRational(Rational(4) * pm.energy() * pm.energy()));
            ok = ok && u * u == zero && v * v == zero && u * v + v * u == four_e2;
        }
        rep.add("pythagorean-sweep", ok,
                "nilpotency and the anticommutator identity over 20 generated triples");
    }

    EnergyMomentum pm3(Rational(5), {Rational(1), Rational(2), Rational(2)}, Rational(4));
    auto u3 = build_U(d, pm3);
    auto udag3 = build_Udag(d, pm3);
    rep.add("nilpotent-3d",
            u3 * u3 == zero && udag3 * udag3 == zero &&
                u3 * udag3 + udag3 * u3 == scalar(100),
            "the same identities hold with momentum (1,2,2), mass 4, energy 5");

    for (int dim = 0; dim < 2; ++dim) {
        const EnergyMomentum& pm = dim == 0 ? pm1 : pm3;
        const auto& u = dim == 0 ? u1 : u3;
        const auto& udag = dim == 0 ? udag1 : udag3;
        auto [a, b] = majorana_split(d, pm);
        GaussianRational e(pm.energy());
        bool ok = a * a == d.one() && b * b == d.one() &&
                  (a * b + b * a).is_zero() &&
                  (a + b.scaled(GaussianRational::i())).scaled(e) == u &&
                  (a - b.scaled(GaussianRational::i())).scaled(e) == udag;
        rep.add(dim == 0 ? "majorana-split-1d" : "majorana-split-3d", ok,
                "A, B square to one, anticommute, and rebuild U and Udag");
    }

    {
        auto psi = plane_wave(d, pm1);
        auto op = dirac_operator(d, pm1);
        auto expected = scalar(5) - d.alpha().scaled(GaussianRational(3)) -
                        d.beta().scaled(GaussianRational(4));
        bool ok = apply_operator(op, psi) == wave_left_mul(expected, psi) &&
                  detail::operator_symbol(op, psi.phase) == expected;
        rep.add("operator-symbol", ok,
                "the operator multiplies the plane wave by E - alpha p - beta m");
    }

    rep.add("plane-wave-1d", verify_plane_wave(d, pm1).pass,
            "the right-composed operator annihilates U psi at (3,4,5)");
    rep.add("plane-wave-3d", verify_plane_wave(d, pm3).pass,
            "the right-composed operator annihilates U psi at ((1,2,2),4,5)");

    {
        AlgebraWave rev{d.one(), d.i(), reversed_phase(pm1)};
        auto op = modified_dirac_operator(d, pm1);
        bool symbol = apply_operator(op, rev) == wave_left_mul(udag1, rev);
        bool annihilate = apply_operator(op, wave_left_mul(udag1, rev)).is_zero();
        rep.add("time-reversed", symbol && annihilate,
                "on the reversed wave the operator acts as Udag, whose square kills it");
    }

    {
        bool rejected = false;
        try {
            EnergyMomentum bad(Rational(6), {Rational(3)}, Rational(4));
        } catch (const std::domain_error&) {
            rejected = true;
        }
        rep.add("off-shell-rejected", rejected,
                "energy-momentum data violating E^2 = p^2 + m^2 is refused");
    }

    {
        Matrix mu = tensor_to_matrix(u3, d.tensor());
        Matrix mv = tensor_to_matrix(udag3, d.tensor());
        Matrix zero4(4);
        bool ok = mu * mu == zero4 &&
                  mu * mv + mv * mu == Matrix::identity(4).scaled(GaussianRational(100));
        rep.add("matrix-route", ok,
                "the 4-by-4 matrix images satisfy the same nilpotency and anticommutator");
    }

    {
        SplitQuaternions s;
        LightconeData lc = lightcone_system(s, pm1);
        auto sc = [&](long long v) {
            return GroupAlgebraElement::scalar(s.group, GaussianRational(v));
        };

        auto symbol = detail::operator_symbol(lc.op, plane_phase(pm1));
        bool nil = symbol == lc.a + lc.b.scaled(GaussianRational::i()) &&
                   symbol * symbol == GroupAlgebraElement::zero(s.group);
        rep.add("lightcone-nilpotent", nil,
                "the nilpotent operator's symbol is A + iB and squares to zero");

        rep.add("lightcone-a-square", lc.a * lc.a == sc(16),
                "A^2 = E^2 - p^2 = m^2 = 16 at (3,4,5)");

        Rational m = pm1.mass();
        auto lres = [&](const ScalarWave& w1, const ScalarWave& w2) {
            ScalarWave dl = wave_diff(w1, "l");
            return dl.cos_part == w2.cos_part * GaussianRational(m) &&
                   dl.sin_part == w2.sin_part * GaussianRational(m);
        };
        auto rres = [&](const ScalarWave& w1, const ScalarWave& w2) {
            ScalarWave dr = wave_diff(w2, "r");
            return dr.cos_part == -(w1.cos_part * GaussianRational(m)) &&
                   dr.sin_part == -(w1.sin_part * GaussianRational(m));
        };
        bool eqs = lres(lc.m11, lc.m21) && rres(lc.m11, lc.m21);
        rep.add("lightcone-equations", eqs,
                "d psi1/dl = m psi2 and d psi2/dr = -m psi1 for the first column");

        bool cols = lres(lc.m11, lc.m21) && rres(lc.m11, lc.m21) &&
                    lres(lc.m12, lc.m22) && rres(lc.m12, lc.m22);
        rep.add("lightcone-columns", cols,
                "both solution-matrix columns satisfy the coupled light-cone equations");

        {
            Iterant e1{GaussianRational(1), GaussianRational(0)};
            Iterant e2{GaussianRational(0), GaussianRational(1)};
            Iterant cos1 = ga_action(lc.a, e1), sin1 = ga_action(-lc.b, e1);
            Iterant cos2 = ga_action(lc.a, e2), sin2 = ga_action(-lc.b, e2);
            bool ok = cos1 == Iterant{lc.m11.cos_part, lc.m21.cos_part} &&
                      sin1 == Iterant{lc.m11.sin_part, lc.m21.sin_part} &&
                      cos2 == Iterant{lc.m12.cos_part, lc.m22.cos_part} &&
                      sin2 == Iterant{lc.m12.sin_part, lc.m22.sin_part};
            rep.add("lightcone-entries", ok,
                    "the matrix entries are the columns of A cos - B sin");
        }

        {
            AlgebraWave phi{lc.a, -lc.b, plane_phase(pm1)};
            rep.add("lightcone-annihilated", apply_operator(lc.nabla, phi).is_zero(),
                    "the first-order operator annihilates A cos - B sin in (t,x) form");
        }

        {
            auto tx = plane_phase(pm1);
            auto rl = lightcone_phase(pm1);
            bool ok = rl.at("r") == tx.at("t") + tx.at("x") &&
                      rl.at("l") == tx.at("t") - tx.at("x");
            rep.add("lightcone-phase", ok,
                    "light-cone phase coefficients come from r = (t+x)/2, l = (t-x)/2");
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// majorana suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_majorana(std::uint64_t seed, int samples) {
    (void)seed;
    (void)samples;
    VerificationReport rep{"majorana", {}};
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(1), Rational(2), Rational(2)}, Rational(4));
    auto zero = GroupAlgebraElement::zero(d.group());

    {
        std::vector<GroupAlgebraElement> gens = {d.alpha_x(), d.alpha_y(), d.alpha_z(),
                                                 d.beta_m()};
        bool ok = true;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            ok = ok && gens[i] * gens[i] == d.one();
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                ok = ok && gens[i] * gens[j] == -(gens[j] * gens[i]);
        }
        rep.add("generator-relations", ok,
                "alpha_x, alpha_y, alpha_z and the doubled beta square to one and anticommute");
    }

    DiracOperator op = majorana_operator(d, pm.mass());

    {
        bool ok = true;
        for (const auto& t : op.terms) ok = ok && detail::ga_real(t.coeff);
        rep.add("operator-real", ok, "every operator coefficient has zero imaginary part");
    }

    MajoranaData md = majorana_solutions(d, pm);

    rep.add("gamma-nilpotent", md.u * md.u == zero,
            "U built from the symbol squares to zero on shell");

    rep.add("ab-squares",
            md.a * md.a == d.scalar(GaussianRational(-16)) &&
                md.b * md.b == d.scalar(GaussianRational(-16)),
            "A^2 = B^2 = -m^2 = -16 at ((1,2,2),4,5)");

    rep.add("ab-anticommute", (md.a * md.b + md.b * md.a).is_zero(), "AB + BA = 0");

    rep.add("solutions-annihilated",
            apply_operator(md.nabla, md.phi).is_zero() &&
                apply_operator(md.nabla, md.psi).is_zero(),
            "the rotated operator annihilates both real solutions");

    rep.add("solutions-real",
            detail::wave_real(md.phi) && detail::wave_real(md.psi) &&
                detail::ga_real(md.a) && detail::ga_real(md.b),
            "A, B and both solutions have zero imaginary part everywhere");

    {
        AlgebraWave psi = plane_wave(d, pm);
        bool symbol = apply_operator(md.op, psi) == wave_left_mul(md.gamma, psi);
        bool nabla_symbol =
            detail::operator_symbol(md.nabla, psi.phase) == md.u;
        rep.add("operator-symbol", symbol,
                "the real operator multiplies the plane wave by its symbol");
        rep.add("nabla-symbol", nabla_symbol, "the rotated operator's symbol is U");
        rep.add("nilpotent-solution",
                apply_operator(md.nabla, wave_left_mul(md.u, psi)).is_zero(),
                "applying the rotated operator to U psi gives the zero wave");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// checkerboard suite
// ---------------------------------------------------------------------------

inline VerificationReport verify_checkerboard(std::uint64_t seed, int samples) {
    VerificationReport rep{"checkerboard", {}};
    Rng rng(seed);
    int choice_samples = std::max(1, samples / 5);

    {
        BiSeries p0 = series_psi(PsiKind::Zero, 8);
        BiSeries pr = series_psi(PsiKind::R, 8);
        bool ok = p0.coeff(0, 0) == Rational(1) && p0.coeff(1, 1) == Rational(-1) &&
                  pr.coeff(1, 0) == Rational(1) && pr.coeff(0, 0).is_zero();
        rep.add("series-frozen", ok, "leading coefficients match the defining sums");
    }

    {
        BiSeries p0 = series_psi(PsiKind::Zero, 20);
        bool ok = series_diff(p0, 'r') == -series_psi(PsiKind::L, 19);
        BiSeries r2(5);
        r2.set(2, 0, Rational(1));
        BiSeries r1(4);
        r1.set(1, 0, Rational(2));
        ok = ok && series_diff(r2, 'r') == r1 && series_diff(r2, 'l').is_zero();
        rep.add("derivative-shift", ok,
                "term-by-term differentiation shifts the defining series as expected");
    }

    {
        bool ok = true;
        std::string detail = "orders";
        for (int n : {2, 8, 16, 32, 40}) {
            ok = ok && check_lightcone_series(n).all_zero;
            detail += " " + std::to_string(n);
        }
        rep.add("series-residuals", ok,
                "coupled light-cone residuals vanish identically at" + detail);
    }

    {
        Rational partial(0);
        for (int k = 0; k <= 25; ++k) {
            Rational term = Rational(1) / (factorial(k) * factorial(k));
            partial += (k % 2 == 0) ? term : -term;
        }
        Rational value = eval_series(series_psi(PsiKind::Zero, 40), Rational(1), Rational(1));
        Rational err = (value - partial).abs();
        rep.add("bessel-oracle", err <= Rational(BigInt(1), BigInt(1000000000)),
                "series value at (1,1) is within 1e-9 of the alternating-series oracle");
    }

    {
        bool ok = eval_series(series_psi(PsiKind::R, 12), Rational(1), Rational(0)) ==
                      Rational(1) &&
                  eval_series(series_psi(PsiKind::Zero, 12), Rational(0), Rational(0)) ==
                      Rational(1);
        rep.add("edge-evaluation", ok, "only the first term survives on the axes");
    }

    {
        Rational r(1, 2), l(1, 3);
        Rational expect(0);
        for (int k = 0; 2 * k < 10; ++k) {
            Rational term = r.pow(k) * l.pow(k) / (factorial(k) * factorial(k));
            expect += (k % 2 == 0) ? term : -term;
        }
        rep.add("eval-exact",
                eval_series(series_psi(PsiKind::Zero, 10), r, l) == expect,
                "evaluation equals the independently summed partial sum at (1/2, 1/3)");
    }

    {
        bool ok = true;
        for (int t = 0; t < choice_samples && ok; ++t) {
            Rational x = rng.rational();
            Rational dd = rng.rational();
            int k = static_cast<int>(rng.range(1, 10));
            ok = choice_coeff(x, dd, k) - choice_coeff(x - dd, dd, k) ==
                 dd * choice_coeff(x - dd, dd, k - 1);
        }
        rep.add("choice-identity", ok,
                "discrete-derivative identity on " + std::to_string(choice_samples) +
                    " random (x, step, k) samples");
    }

    {
        bool ok = true;
        std::vector<std::vector<Rational>> pascal(13);
        for (int n = 0; n <= 12; ++n) {
            pascal[n].assign(n + 1, Rational(1));
            for (int k = 1; k < n; ++k)
                pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        }
        for (int n = 0; n <= 12 && ok; ++n)
            for (int k = 0; k <= n && ok; ++k)
                ok = choice_coeff(Rational(n), Rational(1), k) == pascal[n][k];
        rep.add("choice-binomial", ok, "unit-step coefficients reproduce Pascal's triangle, n <= 12");
    }

    {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            Rational x = rng.rational();
            int k = static_cast<int>(rng.range(0, 8));
            ok = choice_coeff(x, Rational(0), k) == x.pow(k) / factorial(k);
        }
        rep.add("choice-continuum", ok, "zero-step coefficients equal x^k / k!");
    }

    {
        auto strictly_decreasing = [&](const Rational& x, int k) {
            Rational target = x.pow(k) / factorial(k);
            Rational prev(-1);
            for (int j = 0; j <= 10; ++j) {
                Rational step = Rational(BigInt(1), BigInt(1) << j);
                Rational err = (choice_coeff(x, step, k) - target).abs();
                if (j > 0 && !(err < prev)) return false;
                prev = err;
            }
            return true;
        };
        bool ok = strictly_decreasing(Rational(3), 3) &&
                  strictly_decreasing(Rational(7, 2), 4);
        rep.add("choice-limit", ok,
                "halving the step strictly shrinks the gap to x^k/k! for two fixed points");
    }

    {
        bool ok = path_count_oracle(1, 1, 1) == 1 && path_count_oracle(2, 2, 2) == 1 &&
                  path_count_oracle(2, 2, 0) == 1 && path_count_oracle(2, 2, 1) == 4 &&
                  path_count_oracle(2, 2, 9) == 0;
        rep.add("path-frozen", ok,
                "hand-enumerated corner counts for the 1x1 and 2x2 rectangles");

        auto total = [&](int r, int l) {
            long long sum = 0;
            for (int c = 0; c <= r + l; ++c) sum += path_count_oracle(r, l, c);
            return sum;
        };
        bool totals = total(2, 1) == 3 && total(2, 2) == 6 && total(3, 2) == 10 &&
                      total(4, 3) == 35;
        rep.add("path-totals", totals,
                "summing over corner counts recovers the full interleaving counts");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

inline std::vector<VerificationReport> cmd_verify(const std::string& scope,
                                                  std::uint64_t seed, int samples) {
    std::vector<VerificationReport> out;
    auto want = [&](const char* name) { return scope == "all" || scope == name; };
    bool known = scope == "all";
    if (want("hat")) { out.push_back(verify_hat(seed, samples)); known = true; }
    if (want("group")) { out.push_back(verify_group(seed, samples)); known = true; }
    if (want("matrix")) { out.push_back(verify_matrix(seed, samples)); known = true; }
    if (want("cd")) { out.push_back(verify_cd(seed, samples)); known = true; }
    if (want("dirac")) { out.push_back(verify_dirac(seed, samples)); known = true; }
    if (want("majorana")) { out.push_back(verify_majorana(seed, samples)); known = true; }
    if (want("checkerboard")) { out.push_back(verify_checkerboard(seed, samples)); known = true; }
    if (!known) throw std::domain_error("unknown verify scope: " + scope);
    return out;
}

} // namespace cliffordforge
