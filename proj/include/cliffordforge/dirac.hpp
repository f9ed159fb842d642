#pragma once

#include "group_algebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cliffordforge {

// One split-quaternion copy inside the order-2 twisted algebra:
// eps = [-1,1] on the identity, eta = the shift, with eps^2 = eta^2 = 1 and
// eps*eta = -eta*eps.
struct SplitQuaternions {
    GroupPtr group;
    GroupAlgebraElement one, eps, eta;

    SplitQuaternions()
        : group(make_cyclic(2)),
          one(GroupAlgebraElement::one(group)),
          eps(GroupAlgebraElement::term(
              group, 0, Iterant{GaussianRational(-1), GaussianRational(1)})),
          eta(GroupAlgebraElement::term(group, 1, Iterant::ones(2))) {}
};

// Two commuting split-quaternion copies over Gaussian scalars, with the
// generator sets used by each configuration:
//   1d/3d:    alpha = eta, beta = eps, sigma = (eta^, i eps^ eta^, eps^)
//   Majorana: alpha_x = eta^ eta, alpha_y = eps, alpha_z = eps^ eta,
//             beta_m = i eps^ eta^ eta
// (eps^, eta^ denote the second, hatted copy.)
class DiracAlgebra {
public:
    using Elem = GroupAlgebraElement;

    DiracAlgebra()
        : left_(),
          right_(),
          t_(ga_tensor(left_.group, right_.group)),
          one_(GroupAlgebraElement::one(t_.product)),
          i_(GroupAlgebraElement::scalar(t_.product, GaussianRational::i())),
          eps_(t_.embed_left(left_.eps)),
          eta_(t_.embed_left(left_.eta)),
          eps_hat_(t_.embed_right(right_.eps)),
          eta_hat_(t_.embed_right(right_.eta)),
          sigma2_(i_ * eps_hat_ * eta_hat_),
          alpha_x_(eta_hat_ * eta_),
          alpha_z_(eps_hat_ * eta_),
          beta_m_(i_ * eps_hat_ * eta_hat_ * eta_) {}

    const TensorAlgebra& tensor() const { return t_; }
    const GroupPtr& group() const { return t_.product; }

    Elem scalar(const GaussianRational& c) const {
        return GroupAlgebraElement::scalar(t_.product, c);
    }
    Elem scalar(const Rational& c) const { return scalar(GaussianRational(c)); }

    const Elem& one() const { return one_; }
    const Elem& i() const { return i_; }
    const Elem& eps() const { return eps_; }
    const Elem& eta() const { return eta_; }
    const Elem& eps_hat() const { return eps_hat_; }
    const Elem& eta_hat() const { return eta_hat_; }

    const Elem& alpha() const { return eta_; }
    const Elem& beta() const { return eps_; }

    Elem sigma(int k) const {
        switch (k) {
            case 1: return eta_hat_;
            case 2: return sigma2_;
            case 3: return eps_hat_;
        }
        throw std::domain_error("DiracAlgebra: sigma index must be 1..3");
    }

    const Elem& alpha_x() const { return alpha_x_; }
    const Elem& alpha_y() const { return eps_; }
    const Elem& alpha_z() const { return alpha_z_; }
    const Elem& beta_m() const { return beta_m_; }

private:
    SplitQuaternions left_, right_;
    TensorAlgebra t_;
    Elem one_, i_, eps_, eta_, eps_hat_, eta_hat_;
    Elem sigma2_, alpha_x_, alpha_z_, beta_m_;
};

// On-shell energy-momentum data: E^2 = |p|^2 + m^2 exactly, p of dimension
// 1 or 3. Violations are rejected at construction.
class EnergyMomentum {
public:
    EnergyMomentum(Rational energy, std::vector<Rational> momentum, Rational mass)
        : e_(std::move(energy)), p_(std::move(momentum)), m_(std::move(mass)) {
        if (p_.size() != 1 && p_.size() != 3)
            throw std::domain_error("EnergyMomentum: momentum must be a 1- or 3-vector");
        Rational sum = m_ * m_;
        for (const auto& v : p_) sum += v * v;
        if (e_ * e_ != sum)
            throw std::domain_error("EnergyMomentum: off-shell data (E^2 != |p|^2 + m^2)");
    }

    int dim() const { return static_cast<int>(p_.size()); }
    const Rational& energy() const { return e_; }
    const Rational& mass() const { return m_; }
    const Rational& p(int k) const { return p_.at(k); }
    const std::vector<Rational>& momentum() const { return p_; }

private:
    Rational e_;
    std::vector<Rational> p_;
    Rational m_;
};

// Coefficient-pair representation of C*cos(theta) + S*sin(theta) with a
// linear phase theta = sum phase[u] * u over named coordinates.
template <class C>
struct Wave {
    C cos_part, sin_part;
    std::map<std::string, Rational> phase;

    bool is_zero() const { return cos_part.is_zero() && sin_part.is_zero(); }

    bool operator==(const Wave& o) const {
        return phase == o.phase && cos_part == o.cos_part && sin_part == o.sin_part;
    }
    bool operator!=(const Wave& o) const { return !(*this == o); }
};

using AlgebraWave = Wave<GroupAlgebraElement>;
using TrigWave = AlgebraWave;
using ScalarWave = Wave<GaussianRational>;

// Linear differential operator: a sum of coefficient * d/du terms plus
// mass terms (empty coordinate).
struct DiracOperator {
    struct Term {
        GroupAlgebraElement coeff;
        std::string deriv;
    };

    std::vector<Term> terms;

    DiracOperator right_mul(const GroupAlgebraElement& x) const {
        DiracOperator r;
        for (const auto& t : terms) r.terms.push_back({t.coeff * x, t.deriv});
        return r;
    }

    DiracOperator left_mul(const GroupAlgebraElement& x) const {
        DiracOperator r;
        for (const auto& t : terms) r.terms.push_back({x * t.coeff, t.deriv});
        return r;
    }

    // Sum of the coefficients attached to the given coordinate ("" = mass).
    GroupAlgebraElement coefficient(const std::string& deriv) const {
        if (terms.empty()) throw std::domain_error("DiracOperator: empty operator");
        GroupAlgebraElement r = GroupAlgebraElement::zero(terms[0].coeff.group());
        for (const auto& t : terms)
            if (t.deriv == deriv) r += t.coeff;
        return r;
    }
};

// d/du (C cos + S sin) = theta_u S cos - theta_u C sin; operator
// coefficients multiply from the left; the phase is unchanged.
inline AlgebraWave apply_operator(const DiracOperator& op, const AlgebraWave& w) {
    AlgebraWave r{GroupAlgebraElement::zero(w.cos_part.group()),
                  GroupAlgebraElement::zero(w.cos_part.group()), w.phase};
    for (const auto& t : op.terms) {
        if (t.deriv.empty()) {
            r.cos_part += t.coeff * w.cos_part;
            r.sin_part += t.coeff * w.sin_part;
        } else {
            auto it = w.phase.find(t.deriv);
            if (it == w.phase.end())
                throw std::domain_error("apply_operator: unknown coordinate " + t.deriv);
            GaussianRational th(it->second);
            r.cos_part += t.coeff * w.sin_part.scaled(th);
            r.sin_part += t.coeff * (-w.cos_part.scaled(th));
        }
    }
    return r;
}

inline ScalarWave wave_diff(const ScalarWave& w, const std::string& u) {
    auto it = w.phase.find(u);
    if (it == w.phase.end())
        throw std::domain_error("wave_diff: unknown coordinate " + u);
    GaussianRational th(it->second);
    return {th * w.sin_part, -(th * w.cos_part), w.phase};
}

inline AlgebraWave wave_left_mul(const GroupAlgebraElement& x, const AlgebraWave& w) {
    return {x * w.cos_part, x * w.sin_part, w.phase};
}

// theta = p.r - E t
inline std::map<std::string, Rational> plane_phase(const EnergyMomentum& pm) {
    std::map<std::string, Rational> phase{{"t", -pm.energy()}};
    static const char* names[] = {"x", "y", "z"};
    for (int k = 0; k < pm.dim(); ++k) phase[names[k]] = pm.p(k);
    return phase;
}

// theta = p.r + E t, the time-reversed phase
inline std::map<std::string, Rational> reversed_phase(const EnergyMomentum& pm) {
    auto phase = plane_phase(pm);
    phase["t"] = pm.energy();
    return phase;
}

// e^{i theta} as cos(theta) + i sin(theta)
inline AlgebraWave plane_wave(const DiracAlgebra& d, const EnergyMomentum& pm) {
    return {d.one(), d.i(), plane_phase(pm)};
}

// O = i d/dt + i alpha d/dx - beta m, with alpha sigma_k on the space
// derivatives in the 3d configuration.
inline DiracOperator dirac_operator(const DiracAlgebra& d, const EnergyMomentum& pm) {
    DiracOperator op;
    op.terms.push_back({d.i(), "t"});
    if (pm.dim() == 1) {
        op.terms.push_back({d.i() * d.alpha(), "x"});
    } else {
        static const char* names[] = {"x", "y", "z"};
        for (int k = 0; k < 3; ++k)
            op.terms.push_back({d.i() * d.alpha() * d.sigma(k + 1), names[k]});
    }
    op.terms.push_back({-(d.beta().scaled(GaussianRational(pm.mass()))), ""});
    return op;
}

// D = O beta alpha (every coefficient right-multiplied)
inline DiracOperator modified_dirac_operator(const DiracAlgebra& d,
                                             const EnergyMomentum& pm) {
    return dirac_operator(d, pm).right_mul(d.beta() * d.alpha());
}

// U = beta alpha E + beta p - alpha m (p replaced by p.sigma in 3d)
inline GroupAlgebraElement build_U(const DiracAlgebra& d, const EnergyMomentum& pm) {
    GroupAlgebraElement momentum_part = GroupAlgebraElement::zero(d.group());
    if (pm.dim() == 1) {
        momentum_part = d.scalar(pm.p(0));
    } else {
        for (int k = 0; k < 3; ++k)
            momentum_part += d.sigma(k + 1).scaled(GaussianRational(pm.p(k)));
    }
    return (d.beta() * d.alpha()).scaled(GaussianRational(pm.energy())) +
           d.beta() * momentum_part -
           d.alpha().scaled(GaussianRational(pm.mass()));
}

// Udag = -beta alpha E + beta p - alpha m
inline GroupAlgebraElement build_Udag(const DiracAlgebra& d, const EnergyMomentum& pm) {
    return build_U(d, pm) -
           (d.beta() * d.alpha()).scaled(GaussianRational(Rational(2) * pm.energy()));
}

// The Majorana decomposition U = (A + Bi)E, Udag = (A - Bi)E:
// A = (U + Udag)/(2E), B = (U - Udag)/(2iE), concretely A = (beta p - alpha m)/E
// and B = -i beta alpha. Both square to one and anticommute.
inline std::pair<GroupAlgebraElement, GroupAlgebraElement> majorana_split(
    const DiracAlgebra& d, const EnergyMomentum& pm) {
    if (pm.energy().is_zero())
        throw std::domain_error("majorana_split: zero energy");
    GaussianRational inv_e(pm.energy().inverse());
    GroupAlgebraElement a =
        (build_U(d, pm) + build_Udag(d, pm)).scaled(inv_e * GaussianRational(Rational(1, 2)));
    GroupAlgebraElement b = -(d.i() * d.beta() * d.alpha());
    return {a, b};
}

// D = d/dt + alpha_x d/dx + alpha_y d/dy + alpha_z d/dz - eps^ eta^ eta m;
// every coefficient is real.
inline DiracOperator majorana_operator(const DiracAlgebra& d, const Rational& m) {
    DiracOperator op;
    op.terms.push_back({d.one(), "t"});
    op.terms.push_back({d.alpha_x(), "x"});
    op.terms.push_back({d.alpha_y(), "y"});
    op.terms.push_back({d.alpha_z(), "z"});
    op.terms.push_back({(d.i() * d.beta_m()).scaled(GaussianRational(m)), ""});
    return op;
}

// Gamma = -iE + i(alpha_x p_x + alpha_y p_y + alpha_z p_z) - eps^ eta^ eta m,
// the symbol of the Majorana operator on e^{i(p.r - Et)}.
inline GroupAlgebraElement majorana_gamma(const DiracAlgebra& d,
                                          const EnergyMomentum& pm) {
    GroupAlgebraElement r = d.scalar(GaussianRational(Rational(0), -pm.energy()));
    GaussianRational i = GaussianRational::i();
    r += d.alpha_x().scaled(i * GaussianRational(pm.p(0)));
    r += d.alpha_y().scaled(i * GaussianRational(pm.p(1)));
    r += d.alpha_z().scaled(i * GaussianRational(pm.p(2)));
    r += (d.i() * d.beta_m()).scaled(GaussianRational(pm.mass()));
    return r;
}

struct MajoranaData {
    GroupAlgebraElement gamma, u, a, b;
    AlgebraWave phi, psi;
    DiracOperator op;     // the real Majorana operator
    DiracOperator nabla;  // eps eta times the operator
};

// The real solutions Phi = A cos - B sin, Psi = B cos + A sin with
// A = eps eps^ eta^ m, B = -eta eps E - eta^ eps p_x + eta p_y - eps eps^ p_z,
// and U = eps eta Gamma.
inline MajoranaData majorana_solutions(const DiracAlgebra& d, const EnergyMomentum& pm) {
    if (pm.dim() != 3)
        throw std::domain_error("majorana_solutions: needs a 3-vector momentum");
    GroupAlgebraElement gamma = majorana_gamma(d, pm);
    GroupAlgebraElement u = d.eps() * d.eta() * gamma;
    GroupAlgebraElement a =
        (d.eps() * d.eps_hat() * d.eta_hat()).scaled(GaussianRational(pm.mass()));
    GroupAlgebraElement b =
        -((d.eta() * d.eps()).scaled(GaussianRational(pm.energy()))) -
        (d.eta_hat() * d.eps()).scaled(GaussianRational(pm.p(0))) +
        d.eta().scaled(GaussianRational(pm.p(1))) -
        (d.eps() * d.eps_hat()).scaled(GaussianRational(pm.p(2)));
    auto phase = plane_phase(pm);
    DiracOperator op = majorana_operator(d, pm.mass());
    DiracOperator nabla = op.left_mul(d.eps() * d.eta());
    return MajoranaData{gamma,
                        u,
                        a,
                        b,
                        AlgebraWave{a, -b, phase},
                        AlgebraWave{b, a, phase},
                        op,
                        nabla};
}

// Light-cone phase: theta = px - Et = -(E-p) r - (E+p) l under
// r = (t+x)/2, l = (t-x)/2.
inline std::map<std::string, Rational> lightcone_phase(const EnergyMomentum& pm) {
    if (pm.dim() != 1)
        throw std::domain_error("lightcone_phase: needs a scalar momentum");
    return {{"r", -(pm.energy() - pm.p(0))}, {"l", -(pm.energy() + pm.p(0))}};
}

struct LightconeData {
    DiracOperator nabla;  // d/dt + eps d/dx + eps eta m
    DiracOperator op;     // i eta nabla
    GroupAlgebraElement a, b;
    // Solution matrix [[-m sin, (E-p) cos], [(E+p) cos, m sin]] as scalar
    // waves over the light-cone phase.
    ScalarWave m11, m12, m21, m22;
};

inline LightconeData lightcone_system(const SplitQuaternions& s,
                                      const EnergyMomentum& pm) {
    if (pm.dim() != 1)
        throw std::domain_error("lightcone_system: needs a scalar momentum");
    DiracOperator nabla;
    nabla.terms.push_back({s.one, "t"});
    nabla.terms.push_back({s.eps, "x"});
    nabla.terms.push_back({(s.eps * s.eta).scaled(GaussianRational(pm.mass())), ""});
    GroupAlgebraElement i_eta = s.eta.scaled(GaussianRational::i());
    DiracOperator op = nabla.left_mul(i_eta);
    GroupAlgebraElement a = s.eta.scaled(GaussianRational(pm.energy())) +
                            (s.eps * s.eta).scaled(GaussianRational(pm.p(0)));
    GroupAlgebraElement b = -(s.eps.scaled(GaussianRational(pm.mass())));
    auto phase = lightcone_phase(pm);
    GaussianRational zero;
    return LightconeData{
        nabla,
        op,
        a,
        b,
        ScalarWave{zero, GaussianRational(-pm.mass()), phase},
        ScalarWave{GaussianRational(pm.energy() - pm.p(0)), zero, phase},
        ScalarWave{GaussianRational(pm.energy() + pm.p(0)), zero, phase},
        ScalarWave{zero, GaussianRational(pm.mass()), phase}};
}

} // namespace cliffordforge
