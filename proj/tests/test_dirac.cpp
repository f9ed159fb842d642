#include <catch2/catch_amalgamated.hpp>

#include <cliffordforge/dirac.hpp>

using namespace cliffordforge;

namespace {
GaussianRational g(long long v) { return GaussianRational(v); }
GroupAlgebraElement term(const GroupPtr& gr, int idx, std::initializer_list<long long> v) {
    std::vector<GaussianRational> comps;
    for (long long c : v) comps.emplace_back(c);
    return GroupAlgebraElement::term(gr, idx, Iterant(std::move(comps)));
}
} // namespace

TEST_CASE("split generators") {
    SplitQuaternions s;
    CHECK(s.eps * s.eps == s.one);
    CHECK(s.eta * s.eta == s.one);
    CHECK(s.eps * s.eta == -(s.eta * s.eps));
    CHECK(s.eps == term(s.group, 0, {-1, 1}));
    CHECK(s.eta == term(s.group, 1, {1, 1}));
}

TEST_CASE("two commuting split copies") {
    DiracAlgebra d;
    CHECK(d.eps() * d.eta() == -(d.eta() * d.eps()));
    CHECK(d.eps_hat() * d.eta_hat() == -(d.eta_hat() * d.eps_hat()));
    CHECK(d.eps() * d.eps_hat() == d.eps_hat() * d.eps());
    CHECK(d.eta() * d.eta_hat() == d.eta_hat() * d.eta());
    for (int k = 1; k <= 3; ++k) {
        CHECK(d.sigma(k) * d.sigma(k) == d.one());
        CHECK(d.sigma(k) * d.alpha() == d.alpha() * d.sigma(k));
        CHECK(d.sigma(k) * d.beta() == d.beta() * d.sigma(k));
    }
    CHECK(d.sigma(1) * d.sigma(2) == -(d.sigma(2) * d.sigma(1)));
    CHECK_THROWS_AS(d.sigma(4), std::domain_error);
}

TEST_CASE("majorana generator set") {
    DiracAlgebra d;
    std::vector<GroupAlgebraElement> gens = {d.alpha_x(), d.alpha_y(), d.alpha_z(),
                                             d.beta_m()};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(gens[i] * gens[i] == d.one());
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            CHECK(gens[i] * gens[j] == -(gens[j] * gens[i]));
    }
}

TEST_CASE("on-shell data is validated") {
    CHECK_NOTHROW(EnergyMomentum(Rational(5), {Rational(3)}, Rational(4)));
    CHECK_THROWS_AS(EnergyMomentum(Rational(6), {Rational(3)}, Rational(4)),
                    std::domain_error);
    CHECK_THROWS_AS(EnergyMomentum(Rational(5), {Rational(3), Rational(4)}, Rational(0)),
                    std::domain_error);
    EnergyMomentum pm(Rational(5), {Rational(1), Rational(2), Rational(2)}, Rational(4));
    CHECK(pm.dim() == 3);
    CHECK(pm.energy() == Rational(5));
    CHECK(pm.p(2) == Rational(2));
}

TEST_CASE("plane wave phases") {
    EnergyMomentum pm(Rational(5), {Rational(3)}, Rational(4));
    auto phase = plane_phase(pm);
    CHECK(phase.at("t") == Rational(-5));
    CHECK(phase.at("x") == Rational(3));
    auto rev = reversed_phase(pm);
    CHECK(rev.at("t") == Rational(5));
    CHECK(rev.at("x") == Rational(3));
}

TEST_CASE("scalar wave differentiation") {
    std::map<std::string, Rational> phase{{"t", Rational(-5)}, {"x", Rational(3)}};
    ScalarWave w{GaussianRational(1), GaussianRational(0), phase};
    // d/dt cos = -theta_t sin = 5 sin
    ScalarWave dt = wave_diff(w, "t");
    CHECK(dt.cos_part == GaussianRational(0));
    CHECK(dt.sin_part == GaussianRational(5));
    // d/dx sin = theta_x cos = 3 cos
    ScalarWave s{GaussianRational(0), GaussianRational(1), phase};
    ScalarWave dx = wave_diff(s, "x");
    CHECK(dx.cos_part == GaussianRational(3));
    CHECK(dx.sin_part == GaussianRational(0));
    CHECK_THROWS_AS(wave_diff(w, "y"), std::domain_error);
}

TEST_CASE("operator application on algebra waves") {
    SplitQuaternions s;
    std::map<std::string, Rational> phase{{"t", Rational(-5)}};
    AlgebraWave w{s.one, s.eta, phase};
    DiracOperator mass_only;
    mass_only.terms.push_back({s.eps.scaled(g(2)), ""});
    AlgebraWave out = apply_operator(mass_only, w);
    CHECK(out.cos_part == s.eps.scaled(g(2)));
    CHECK(out.sin_part == s.eps * s.eta.scaled(g(2)));

    DiracOperator ddt;
    ddt.terms.push_back({s.one, "t"});
    AlgebraWave dt = apply_operator(ddt, w);
    // d/dt (cos + eta sin) = theta_t eta cos - theta_t sin with theta_t = -5
    CHECK(dt.cos_part == s.eta.scaled(g(-5)));
    CHECK(dt.sin_part == GroupAlgebraElement::scalar(s.group, g(5)));

    DiracOperator bad;
    bad.terms.push_back({s.one, "q"});
    CHECK_THROWS_AS(apply_operator(bad, w), std::domain_error);
}

TEST_CASE("nilpotent construction at the classic triple") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(3)}, Rational(4));
    auto u = build_U(d, pm);
    auto udag = build_Udag(d, pm);
    auto zero = GroupAlgebraElement::zero(d.group());

    CHECK(u == (d.beta() * d.alpha()).scaled(g(5)) + d.beta().scaled(g(3)) -
                   d.alpha().scaled(g(4)));
    CHECK(udag == u - (d.beta() * d.alpha()).scaled(g(10)));
    CHECK(u * u == zero);
    CHECK(udag * udag == zero);
    CHECK(u * udag + udag * u == d.scalar(GaussianRational(100)));
    CHECK((u - udag) * (u - udag) == d.scalar(GaussianRational(-100)));
    CHECK((u + udag) * (u + udag) == d.scalar(GaussianRational(100)));
}

TEST_CASE("rest frame operator") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(1), {Rational(0)}, Rational(1));
    auto u = build_U(d, pm);
    CHECK(u == d.beta() * d.alpha() - d.alpha());
    CHECK(u * u == GroupAlgebraElement::zero(d.group()));
}

TEST_CASE("three-dimensional nilpotents") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(1), Rational(2), Rational(2)}, Rational(4));
    auto u = build_U(d, pm);
    auto udag = build_Udag(d, pm);
    auto zero = GroupAlgebraElement::zero(d.group());
    CHECK(u * u == zero);
    CHECK(udag * udag == zero);
    CHECK(u * udag + udag * u == d.scalar(GaussianRational(100)));
}

TEST_CASE("splitting the nilpotent into commuting real parts") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(3)}, Rational(4));
    auto [a, b] = majorana_split(d, pm);
    auto u = build_U(d, pm);
    auto udag = build_Udag(d, pm);
    CHECK(a * a == d.one());
    CHECK(b * b == d.one());
    CHECK((a * b + b * a).is_zero());
    GaussianRational e(Rational(5));
    CHECK((a + b.scaled(GaussianRational::i())).scaled(e) == u);
    CHECK((a - b.scaled(GaussianRational::i())).scaled(e) == udag);
    EnergyMomentum rest(Rational(1), {Rational(0)}, Rational(1));
    CHECK_NOTHROW(majorana_split(d, rest));
}

TEST_CASE("composed operator annihilates the nilpotent wave") {
    DiracAlgebra d;
    for (auto pm : {EnergyMomentum(Rational(5), {Rational(3)}, Rational(4)),
                    EnergyMomentum(Rational(5), {Rational(1), Rational(2), Rational(2)},
                                   Rational(4))}) {
        AlgebraWave psi = plane_wave(d, pm);
        auto u = build_U(d, pm);
        DiracOperator dd = modified_dirac_operator(d, pm);
        // the operator acts on psi exactly as left multiplication by U
        CHECK(apply_operator(dd, psi) == wave_left_mul(u, psi));
        CHECK(apply_operator(dd, wave_left_mul(u, psi)).is_zero());
    }
}

TEST_CASE("time-reversed wave pairs with the conjugate nilpotent") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(3)}, Rational(4));
    AlgebraWave rev{d.one(), d.i(), reversed_phase(pm)};
    auto udag = build_Udag(d, pm);
    DiracOperator dd = modified_dirac_operator(d, pm);
    CHECK(apply_operator(dd, rev) == wave_left_mul(udag, rev));
    CHECK(apply_operator(dd, wave_left_mul(udag, rev)).is_zero());
}

TEST_CASE("majorana solutions at the three-dimensional triple") {
    DiracAlgebra d;
    EnergyMomentum pm(Rational(5), {Rational(1), Rational(2), Rational(2)}, Rational(4));
    MajoranaData md = majorana_solutions(d, pm);
    auto zero = GroupAlgebraElement::zero(d.group());

    CHECK(md.u == d.eps() * d.eta() * md.gamma);
    CHECK(md.u * md.u == zero);
    CHECK(md.a * md.a == d.scalar(GaussianRational(-16)));
    CHECK(md.b * md.b == d.scalar(GaussianRational(-16)));
    CHECK((md.a * md.b + md.b * md.a).is_zero());
    CHECK(apply_operator(md.nabla, md.phi).is_zero());
    CHECK(apply_operator(md.nabla, md.psi).is_zero());

    // the solutions are the real and imaginary columns of the phase identity
    CHECK(md.phi.cos_part == md.a);
    CHECK(md.phi.sin_part == -md.b);
    CHECK(md.psi.cos_part == md.b);
    CHECK(md.psi.sin_part == md.a);

    EnergyMomentum pm1(Rational(5), {Rational(3)}, Rational(4));
    CHECK_THROWS_AS(majorana_solutions(d, pm1), std::domain_error);
}

TEST_CASE("light-cone system at the classic triple") {
    SplitQuaternions s;
    EnergyMomentum pm(Rational(5), {Rational(3)}, Rational(4));
    LightconeData lc = lightcone_system(s, pm);

    CHECK(lc.a == term(s.group, 1, {2, 8}));
    CHECK(lc.b == term(s.group, 0, {4, -4}));
    CHECK(lc.a * lc.a == GroupAlgebraElement::scalar(s.group, g(16)));
    CHECK(lc.b * lc.b == GroupAlgebraElement::scalar(s.group, g(16)));
    CHECK((lc.a * lc.b + lc.b * lc.a).is_zero());

    auto phase = lightcone_phase(pm);
    CHECK(phase.at("r") == Rational(-2));
    CHECK(phase.at("l") == Rational(-8));

    // matrix entries [[-m sin, (E-p) cos], [(E+p) cos, m sin]]
    CHECK(lc.m11.cos_part == g(0));
    CHECK(lc.m11.sin_part == g(-4));
    CHECK(lc.m12.cos_part == g(2));
    CHECK(lc.m21.cos_part == g(8));
    CHECK(lc.m22.sin_part == g(4));

    // column equations d psi1/dl = m psi2 and d psi2/dr = -m psi1
    for (auto [w1, w2] : {std::pair{lc.m11, lc.m21}, std::pair{lc.m12, lc.m22}}) {
        ScalarWave dl = wave_diff(w1, "l");
        CHECK(dl.cos_part == w2.cos_part * g(4));
        CHECK(dl.sin_part == w2.sin_part * g(4));
        ScalarWave dr = wave_diff(w2, "r");
        CHECK(dr.cos_part == -(w1.cos_part * g(4)));
        CHECK(dr.sin_part == -(w1.sin_part * g(4)));
    }

    // (t, x) form: the first-order operator annihilates A cos - B sin
    AlgebraWave phi{lc.a, -lc.b, plane_phase(pm)};
    CHECK(apply_operator(lc.nabla, phi).is_zero());

    // the composed operator's wave action squares to zero
    AlgebraWave cw{s.one, GroupAlgebraElement::scalar(s.group, GaussianRational::i()),
                   plane_phase(pm)};
    AlgebraWave once = apply_operator(lc.op, cw);
    CHECK(apply_operator(lc.op, once).is_zero());

    CHECK_THROWS_AS(
        lightcone_system(s, EnergyMomentum(Rational(5), {Rational(1), Rational(2),
                                                         Rational(2)},
                                           Rational(4))),
        std::domain_error);
}
