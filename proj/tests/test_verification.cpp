#include <doctest.h>

#include <set>

#include "dcqft/verification.hpp"

using namespace dcqft;

TEST_CASE("every registered check passes at the default seed") {
    VerifyOptions opt;
    opt.samples = 30;
    const auto report = run_verification(opt);
    CHECK(report.checks.size() == verification_check_names().size());
    for (const auto& c : report.checks) {
        INFO(c.group << "/" << c.name << " residual " << c.residual << " " << c.error);
        CHECK(c.pass);
        CHECK(c.residual <= c.tolerance);
    }
    CHECK(report.all_pass());
    CHECK(report.failures() == 0);
}

TEST_CASE("names are unique and cover every module") {
    const auto names = verification_check_names();
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    std::set<std::string> groups;
    for (const auto& n : names) groups.insert(n.substr(0, n.find('/')));
    for (const char* g : {"core_numerics", "character_s1", "weyl_algebra", "hadamard_dynamical", "topological_sector",
                          "mode_solver", "splittings", "cohomology_tables", "fock_space"})
        CHECK(groups.count(g) == 1);
}

TEST_CASE("reports are reproducible") {
    VerifyOptions opt;
    opt.seed = 99;
    opt.samples = 10;
    const auto a = format_report(run_verification(opt));
    const auto b = format_report(run_verification(opt));
    CHECK(a == b);
    CHECK(a.find("verify-all seed=99 samples=10") == 0);
    CHECK(report_to_json(run_verification(opt)).dump() == report_to_json(run_verification(opt)).dump());
}

TEST_CASE("an impossible torus tolerance is reported as failures") {
    VerifyOptions opt;
    opt.samples = 10;
    opt.tol.eps_torus = 1e-30;
    const auto report = run_verification(opt);
    CHECK_FALSE(report.all_pass());
    CHECK(report.failures() > 0);
    CHECK(format_report(report).find("checks failed") != std::string::npos);
}
