// End-to-end checks against the built command-line binary.  Invoked as
//   cli_checks <path-to-binary>
// Each check runs the binary through the shell, captures stdout and the exit
// status, and prints one PASS/FAIL line.  Returns nonzero if anything fails.

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

int failures = 0;

void report(const std::string& name, bool ok, const RunResult& r) {
    std::cout << "CLI " << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    if (!ok) {
        ++failures;
        std::cout << "    exit code " << r.code << "\n";
        std::string head = r.out.substr(0, 400);
        std::cout << "    output: " << (head.empty() ? "(none)" : head) << "\n";
    }
}

void expect_exact(const std::string& name, const std::string& cmd,
                  const std::string& expected, int code = 0) {
    RunResult r = run(cmd);
    report(name, r.code == code && r.out == expected, r);
}

void expect_contains(const std::string& name, const std::string& cmd,
                     const std::vector<std::string>& needles, int code = 0) {
    RunResult r = run(cmd);
    bool ok = r.code == code;
    for (const auto& s : needles) ok = ok && r.out.find(s) != std::string::npos;
    report(name, ok, r);
}

void expect_code(const std::string& name, const std::string& cmd, int code) {
    RunResult r = run(cmd);
    report(name, r.code == code, r);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-binary>\n";
        return 2;
    }
    std::string bin = std::string("'") + argv[1] + "'";

    expect_exact("eval-matrix-image", bin + " eval '[1,2]+[3,4]*h' --matrix",
                 "[[1,3],[4,2]]\n");
    expect_exact("eval-generator-square", bin + " eval 'h*h'", "1\n");
    expect_exact("eval-unicode-minus",
                 bin + " eval '([\xE2\x88\x92" "1,1]*h)*([\xE2\x88\x92" "1,1]*h)'",
                 "[-1,-1]\n");
    expect_exact("eval-componentwise", bin + " eval '[2,3]*[5,7]'", "[10,21]\n");
    expect_code("eval-parse-error", bin + " eval '[1,2'", 2);
    expect_code("missing-subcommand", bin, 2);

    expect_contains("verify-hat", bin + " verify hat --samples 20",
                    {"CHECK hat.assoc-rational PASS", "CHECK hat.clifford-relations PASS"});
    expect_contains("verify-anticommutator", bin + " verify dirac --samples 20 --p 3 --m 4",
                    {"UU\xE2\x80\xA0+U\xE2\x80\xA0U = 100"});
    expect_code("verify-unknown-scope", bin + " verify bogus --samples 5", 2);

    {
        std::string cmd = bin + " verify all --samples 10 --seed 3";
        RunResult a = run(cmd), b = run(cmd);
        report("verify-deterministic", a.code == 0 && a.code == b.code && a.out == b.out, a);
    }
    {
        RunResult flag = run(bin + " verify hat --samples 15 --seed 7");
        RunResult env = run("CLIFFORDFORGE_SEED=7 " + bin + " verify hat --samples 15");
        RunResult both = run("CLIFFORDFORGE_SEED=9 " + bin + " verify hat --samples 15 --seed 7");
        report("env-seed-used", flag.code == 0 && env.out == flag.out, env);
        report("flag-overrides-env-seed", both.out == flag.out, both);
    }

    expect_exact("matrix-from", bin + " matrix --from '[[1,3],[4,2]]'",
                 "[1,2] + [3,4]*h\n");
    expect_exact("matrix-forward", bin + " matrix '[0,1]*h'", "[[0,0],[1,0]]\n");
    expect_code("matrix-needs-input", bin + " matrix", 2);

    expect_contains("checkerboard-residuals", bin + " checkerboard --order 8",
                    {"residual-l = 0", "residual-r = 0", "trig-residual-l = 0"});
    expect_contains("checkerboard-point", bin + " checkerboard --order 8 --point 1 1",
                    {"psi0(1, 1) = 2/9", "psiR(1, 1) = 83/144", "psiL(1, 1) = 83/144"});
    expect_contains("checkerboard-choice", bin + " checkerboard --coeff 3 1/2 3",
                    {"choice(3, 1/2, 3) = 5/2"});

    expect_contains("cd-witness", bin + " cd --level 3",
                    {"associator witness: (e1*e2)*e4 = e7, e1*(e2*e4) = -e7"});
    {
        RunResult r = run(bin + " cd --level 2");
        bool ok = r.code == 0 && r.out.find("e1*e2 = -e3") != std::string::npos &&
                  r.out.find("associator witness") == std::string::npos;
        report("cd-quaternions-associative", ok, r);
    }

    expect_contains("majorana-table", bin + " majorana --p 1,2,2 --m 4",
                    {"E = 5", "A^2 = -16", "B^2 = -16", "AB + BA = 0",
                     "nabla Phi = 0", "nabla Psi = 0"});
    expect_contains("dirac-table", bin + " dirac --p 3 --m 4",
                    {"E = 5", "U^2 = 0", "Udag^2 = 0", "U*Udag + Udag*U = 100",
                     "(U - Udag)^2 = -100", "(U + Udag)^2 = 100"});
    expect_code("dirac-irrational-energy", bin + " dirac --p 1,2 --m 1", 2);
    expect_code("dirac-missing-mass", bin + " dirac --p 3", 2);

    std::cout << (failures == 0 ? "CLI CHECKS PASS" : "CLI CHECKS FAIL") << " ("
              << failures << " failures)\n";
    return failures == 0 ? 0 : 1;
}
