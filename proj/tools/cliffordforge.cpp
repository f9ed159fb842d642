#include "CLI11.hpp"

#include <cliffordforge/checkerboard.hpp>
#include <cliffordforge/dirac.hpp>
#include <cliffordforge/parse.hpp>
#include <cliffordforge/verify.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cf = cliffordforge;

namespace {

// Element printer used by eval and the calculators: the multiplicative
// identity prints as "1", zero as "0", and otherwise terms are joined with
// the identity-component iterant shown bare.
std::string eval_str(const cf::GroupAlgebraElement& x) {
    if (x.is_zero()) return "0";
    const cf::FiniteGroup& g = *x.group();
    if (x == cf::GroupAlgebraElement::one(x.group())) return "1";
    std::string out;
    bool first = true;
    for (const auto& [gid, v] : x.terms()) {
        if (!first) out += " + ";
        first = false;
        if (gid == g.identity())
            out += v.str();
        else
            out += v.str() + "*" + g.label(gid);
    }
    return out;
}

// Collapses constant multiples of the identity to a scalar, for relation
// tables such as "UU†+U†U = 100".
std::string pretty_value(const cf::GroupAlgebraElement& x) {
    if (x.is_zero()) return "0";
    if (x.terms().size() == 1) {
        const auto& [gid, v] = *x.terms().begin();
        if (gid == x.group()->identity()) {
            bool constant = true;
            for (int k = 1; k < v.size(); ++k) constant = constant && v[k] == v[0];
            if (constant) return v[0].str();
        }
    }
    return eval_str(x);
}

std::string wave_str(const cf::AlgebraWave& w) {
    if (w.is_zero()) return "0";
    return "cos: " + eval_str(w.cos_part) + "  sin: " + eval_str(w.sin_part);
}

std::optional<cf::Rational> exact_sqrt(const cf::Rational& q) {
    if (q.is_negative()) return std::nullopt;
    cf::BigInt n = q.num(), d = q.den();
    cf::BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return cf::Rational(sn, sd);
}

// Builds on-shell data from momentum components and mass; the energy must
// come out as an exact rational square root.
cf::EnergyMomentum momentum_data(const std::vector<cf::Rational>& p, const cf::Rational& m) {
    cf::Rational e2 = m * m;
    for (const auto& c : p) e2 += c * c;
    auto e = exact_sqrt(e2);
    if (!e)
        throw std::domain_error("E^2 = p^2 + m^2 = " + e2.str() +
                                " is not the square of a rational; pick a Pythagorean set");
    return cf::EnergyMomentum(*e, p, m);
}

std::string cd_unit_str(const cf::CDElement& x) {
    for (int k = 0; k < x.dim(); ++k) {
        if (x.coeff(k).is_zero()) continue;
        std::string label = k == 0 ? "1" : "e" + std::to_string(k);
        if (x.coeff(k) == cf::Rational(1)) return label;
        if (x.coeff(k) == cf::Rational(-1)) return "-" + label;
        return x.str();
    }
    return "0";
}

int run_verify(const std::string& scope, std::uint64_t seed, int samples,
               const std::string& p_str, const std::string& m_str) {
    auto start = std::chrono::steady_clock::now();
    std::vector<cf::VerificationReport> reports = cf::cmd_verify(scope, seed, samples);
    bool all = true;
    for (const auto& rep : reports) {
        std::cout << rep.render();
        all = all && rep.all_pass();
    }
    if (!p_str.empty()) {
        if (m_str.empty()) throw std::domain_error("--p requires --m");
        cf::EnergyMomentum pm = momentum_data(cf::parse_rational_list(p_str),
                                              cf::parse_rational(m_str));
        cf::DiracAlgebra d;
        auto u = cf::build_U(d, pm);
        auto udag = cf::build_Udag(d, pm);
        std::cout << "UU†+U†U = " << pretty_value(u * udag + udag * u) << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "verify " << scope << ": " << ms << " ms\n";
    return all ? 0 : 1;
}

int run_eval(const std::string& expr, int order, bool matrix) {
    auto group = cf::make_cyclic(order);
    cf::GroupAlgebraElement x = cf::parse_ga_expr(expr, group);
    if (matrix)
        std::cout << cf::to_matrix(x).str() << "\n";
    else
        std::cout << eval_str(x) << "\n";
    return 0;
}

int run_matrix(const std::string& expr, int order, const std::string& from) {
    if (!from.empty()) {
        cf::Matrix m = cf::parse_matrix(from);
        std::cout << eval_str(cf::from_matrix(m, m.dim())) << "\n";
        return 0;
    }
    if (expr.empty()) throw std::domain_error("matrix needs an expression or --from");
    auto group = cf::make_cyclic(order);
    std::cout << cf::to_matrix(cf::parse_ga_expr(expr, group)).str() << "\n";
    return 0;
}

int run_dirac(const std::string& p_str, const std::string& m_str) {
    cf::EnergyMomentum pm = momentum_data(cf::parse_rational_list(p_str),
                                          cf::parse_rational(m_str));
    cf::DiracAlgebra d;
    auto u = cf::build_U(d, pm);
    auto udag = cf::build_Udag(d, pm);
    std::cout << "E = " << pm.energy().str() << "\n";
    std::cout << "U = " << eval_str(u) << "\n";
    std::cout << "Udag = " << eval_str(udag) << "\n";
    std::cout << "U^2 = " << pretty_value(u * u) << "\n";
    std::cout << "Udag^2 = " << pretty_value(udag * udag) << "\n";
    std::cout << "U*Udag + Udag*U = " << pretty_value(u * udag + udag * u) << "\n";
    std::cout << "(U - Udag)^2 = " << pretty_value((u - udag) * (u - udag)) << "\n";
    std::cout << "(U + Udag)^2 = " << pretty_value((u + udag) * (u + udag)) << "\n";
    return 0;
}

int run_majorana(const std::string& p_str, const std::string& m_str) {
    std::vector<cf::Rational> p = cf::parse_rational_list(p_str);
    if (p.size() != 3) throw std::domain_error("majorana needs three momentum components");
    cf::EnergyMomentum pm = momentum_data(p, cf::parse_rational(m_str));
    cf::DiracAlgebra d;
    cf::MajoranaData md = cf::majorana_solutions(d, pm);
    std::cout << "E = " << pm.energy().str() << "\n";
    std::cout << "Gamma = " << eval_str(md.gamma) << "\n";
    std::cout << "U = " << eval_str(md.u) << "\n";
    std::cout << "A = " << eval_str(md.a) << "\n";
    std::cout << "B = " << eval_str(md.b) << "\n";
    std::cout << "U^2 = " << pretty_value(md.u * md.u) << "\n";
    std::cout << "A^2 = " << pretty_value(md.a * md.a) << "\n";
    std::cout << "B^2 = " << pretty_value(md.b * md.b) << "\n";
    std::cout << "AB + BA = " << pretty_value(md.a * md.b + md.b * md.a) << "\n";
    std::cout << "nabla Phi = " << wave_str(cf::apply_operator(md.nabla, md.phi)) << "\n";
    std::cout << "nabla Psi = " << wave_str(cf::apply_operator(md.nabla, md.psi)) << "\n";
    return 0;
}

int run_checkerboard(int order, const std::vector<std::string>& point,
                     const std::vector<std::string>& coeff) {
    cf::LightconeSeriesReport rep = cf::check_lightcone_series(order);
    auto series_str = [](const cf::BiSeries& s) {
        return s.is_zero() ? std::string("0") : s.str();
    };
    std::cout << "order = " << order << "\n";
    std::cout << "residual-l = " << series_str(rep.residual_l) << "\n";
    std::cout << "residual-r = " << series_str(rep.residual_r) << "\n";
    std::cout << "trig-residual-l = " << series_str(rep.trig_residual_l) << "\n";
    std::cout << "trig-residual-r = " << series_str(rep.trig_residual_r) << "\n";
    if (!point.empty()) {
        cf::Rational r = cf::parse_rational(point[0]);
        cf::Rational l = cf::parse_rational(point[1]);
        auto at = [&](cf::PsiKind kind) {
            return cf::eval_series(cf::series_psi(kind, order), r, l).str();
        };
        std::cout << "psi0(" << r.str() << ", " << l.str() << ") = "
                  << at(cf::PsiKind::Zero) << "\n";
        std::cout << "psiR(" << r.str() << ", " << l.str() << ") = "
                  << at(cf::PsiKind::R) << "\n";
        std::cout << "psiL(" << r.str() << ", " << l.str() << ") = "
                  << at(cf::PsiKind::L) << "\n";
    }
    if (!coeff.empty()) {
        cf::Rational x = cf::parse_rational(coeff[0]);
        cf::Rational dstep = cf::parse_rational(coeff[1]);
        int k = static_cast<int>(std::stol(coeff[2]));
        if (k < 0) throw std::domain_error("the choice index must be non-negative");
        std::cout << "choice(" << x.str() << ", " << dstep.str() << ", " << k
                  << ") = " << cf::choice_coeff(x, dstep, k).str() << "\n";
    }
    return 0;
}

int run_cd(int level) {
    int dim = 1 << level;
    std::cout << "level = " << level << "\n";
    std::cout << "dim = " << dim << "\n";
    for (int a = 1; a < dim; ++a)
        for (int b = 1; b < dim; ++b)
            std::cout << "e" << a << "*e" << b << " = "
                      << cd_unit_str(cf::CDElement::unit(level, a) *
                                     cf::CDElement::unit(level, b))
                      << "\n";
    if (level >= 3) {
        for (int a = 1; a < dim; ++a)
            for (int b = 1; b < dim; ++b)
                for (int c = 1; c < dim; ++c) {
                    auto x = cf::CDElement::unit(level, a);
                    auto y = cf::CDElement::unit(level, b);
                    auto z = cf::CDElement::unit(level, c);
                    if ((x * y) * z != x * (y * z)) {
                        std::cout << "associator witness: (e" << a << "*e" << b << ")*e"
                                  << c << " = " << cd_unit_str((x * y) * z) << ", e" << a
                                  << "*(e" << b << "*e" << c
                                  << ") = " << cd_unit_str(x * (y * z)) << "\n";
                        return 0;
                    }
                }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and calculator for iterant, Clifford and "
                 "Cayley-Dickson algebras"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string scope = "all";
    std::uint64_t seed = 0;
    int samples = 1000;
    std::string verify_p, verify_m;
    verify->add_option("scope", scope,
                       "all, hat, group, matrix, cd, dirac, majorana or checkerboard")
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for the randomized sweeps")
        ->envname("CLIFFORDFORGE_SEED")
        ->capture_default_str();
    verify->add_option("--samples", samples, "sample count for the randomized sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--p", verify_p, "momentum component(s), comma separated");
    verify->add_option("--m", verify_m, "mass");

    auto* eval = app.add_subcommand("eval", "evaluate an element expression");
    std::string expr;
    int order = 2;
    bool matrix_flag = false;
    eval->add_option("expr", expr, "expression, e.g. \"[1,2]+[3,4]*h\"")->required();
    eval->add_option("--order", order, "cyclic algebra order")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    eval->add_flag("--matrix", matrix_flag, "print the matrix image instead");

    auto* matrix = app.add_subcommand("matrix", "convert between elements and matrices");
    std::string matrix_expr, matrix_from;
    int matrix_order = 2;
    matrix->add_option("expr", matrix_expr, "element expression to convert");
    matrix->add_option("--order", matrix_order, "cyclic algebra order")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    matrix->add_option("--from", matrix_from, "square matrix literal to convert back");

    auto* dirac = app.add_subcommand("dirac", "nilpotent operator relation table");
    std::string dirac_p, dirac_m;
    dirac->add_option("--p", dirac_p, "momentum component(s), comma separated")->required();
    dirac->add_option("--m", dirac_m, "mass")->required();

    auto* majorana = app.add_subcommand("majorana", "real operator and its solutions");
    std::string maj_p, maj_m;
    majorana->add_option("--p", maj_p, "three momentum components, comma separated")
        ->required();
    majorana->add_option("--m", maj_m, "mass")->required();

    auto* checkerboard =
        app.add_subcommand("checkerboard", "light-cone series and path counts");
    int cb_order = 16;
    std::vector<std::string> cb_point, cb_coeff;
    checkerboard->add_option("--order", cb_order, "truncation order")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    checkerboard->add_option("--point", cb_point, "evaluate the series at (r, l)")
        ->expected(2);
    checkerboard->add_option("--coeff", cb_coeff, "choice coefficient (x, step, k)")
        ->expected(3);

    auto* cd = app.add_subcommand("cd", "doubled-algebra basis table");
    int cd_level = 3;
    cd->add_option("--level", cd_level, "doubling level")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(scope, seed, samples, verify_p, verify_m);
        if (eval->parsed()) return run_eval(expr, order, matrix_flag);
        if (matrix->parsed()) return run_matrix(matrix_expr, matrix_order, matrix_from);
        if (dirac->parsed()) return run_dirac(dirac_p, dirac_m);
        if (majorana->parsed()) return run_majorana(maj_p, maj_m);
        if (checkerboard->parsed()) return run_checkerboard(cb_order, cb_point, cb_coeff);
        if (cd->parsed()) return run_cd(cd_level);
    } catch (const cf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
