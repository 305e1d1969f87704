#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>

#include "dcqft/character_s1.hpp"
#include "dcqft/cohomology_tables.hpp"
#include "dcqft/hadamard_dynamical.hpp"
#include "dcqft/json_io.hpp"
#include "dcqft/mode_solver.hpp"
#include "dcqft/splittings.hpp"
#include "dcqft/topological_sector.hpp"
#include "dcqft/verification.hpp"

using namespace dcqft;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string ket_label(const LatticeKet& k) {
    std::string s = "|";
    for (std::size_t i = 0; i < k.v.size(); ++i) s += (i ? "," : "") + std::to_string(k.v[i]);
    s += ";";
    for (std::size_t i = 0; i < k.vt.size(); ++i) s += (i ? "," : "") + std::to_string(k.vt[i]);
    return s + ">";
}

int cmd_sigma(const std::string& fa, const std::string& fb, const Tolerances& tol) {
    const auto a = character_from_json(load_json_file(fa));
    const auto b = character_from_json(load_json_file(fb));
    validate_modes(a.modes);
    validate_modes(b.modes);
    const TorusValue closed = sigma(a, b);
    const auto sa = decompose(a), sb = decompose(b);
    const int kmax = std::max({1, max_mode(a.modes), max_mode(b.modes)});
    const TorusValue quad =
        tau_lr(sa.topological, sb.topological) + sigma_quadrature(sa.dynamical, sb.dynamical, 16 * kmax);
    const double residual = torus_distance(closed, quad);
    std::cout << "sigma = " << num(closed.rep()) << "\n"
              << "quadrature = " << num(quad.rep()) << "\n"
              << "residual = " << sci(residual) << "\n";
    return residual <= tol.eps_quadrature ? kOk : kViolation;
}

int cmd_state(const std::string& kind, const std::string& file, bool faithful) {
    const Json j = load_json_file(file);
    double value = 0.0;
    if (kind == "dynamical") {
        const auto d = datum_from_json(j);
        validate_modes(d.modes);
        value = omega_mu(d);
    } else if (kind == "topological") {
        const auto x = topological_from_json(j);
        value = (faithful ? omega_t0(x) : omega_t(x)).real();
    } else {
        const auto in = spectrum_from_json(j);
        value = omega_mu_general(in.spectrum, in.data);
    }
    std::cout << "omega = " << num(value) << "\n";
    return kOk;
}

int cmd_verify(const VerifyOptions& opt, bool json, bool timings) {
    const RunReport report = run_verification(opt);
    if (json)
        std::cout << report_to_json(report, timings).dump(2) << "\n";
    else
        std::cout << format_report(report, timings);
    return report.all_pass() ? kOk : kViolation;
}

int cmd_gns(const std::string& file, bool json) {
    const GnsScript script = gns_script_from_json(load_json_file(file));
    const TopologicalModel model(script.n, script.n_tilde, script.k, script.m);
    GnsVector psi = script.initial;
    for (const auto& op : script.ops) {
        switch (op.kind) {
            case GnsOp::Kind::duality:
                if (!model.self_dual()) throw InputError("gns op U: needs n = n_tilde and m = 2k");
                psi = duality_U(model, psi);
                break;
            case GnsOp::Kind::momentum: psi = momentum(model, op.index, psi); break;
            case GnsOp::Kind::momentum_tilde: psi = momentum_tilde(model, op.index, psi); break;
            case GnsOp::Kind::rotation: psi = represent(model, rotation_element(model, op.u), psi); break;
            case GnsOp::Kind::rotation_tilde:
                psi = represent(model, rotation_tilde_element(model, op.u), psi);
                break;
            case GnsOp::Kind::translation: psi = represent(model, translation_element(model, op.v), psi); break;
            case GnsOp::Kind::translation_tilde:
                psi = represent(model, translation_tilde_element(model, op.v), psi);
                break;
        }
    }
    if (json) {
        std::cout << gns_to_json(psi).dump(2) << "\n";
        return kOk;
    }
    if (psi.size() == 0) std::cout << "0\n";
    for (const auto& [k, c] : psi.amplitudes())
        std::cout << ket_label(k) << "  " << num(c.real()) << (c.imag() < 0 ? " - " : " + ")
                  << num(std::fabs(c.imag())) << "i\n";
    return kOk;
}

int cmd_spectrum(const std::string& file, double t) {
    const auto in = spectrum_from_json(load_json_file(file));
    const ModeSolution sol = solve_cauchy(in.spectrum, in.data);
    std::cout << "t = " << num(t) << "\n";
    for (std::size_t i = 0; i < sol.slots().size(); ++i)
        std::cout << "slot " << i << " lambda = " << num(sol.slots()[i].lambda) << "  f = " << num(sol.f(i, t))
                  << "  df = " << num(sol.df(i, t)) << "  g = " << num(sol.g(i, t)) << "  dg = " << num(sol.dg(i, t))
                  << "\n";
    const double residual = verify_duality_equation(sol, t);
    std::cout << "energy = " << num(sol.energy(t)) << "\n"
              << "omega = " << num(omega_mu_general(in.spectrum, in.data)) << "\n"
              << "equation_residual = " << sci(residual) << "\n";
    return residual <= 1e-4 ? kOk : kViolation;
}

int cmd_kunneth(const std::string& name, int degree) {
    const Space space = Space::parse(name);
    if (degree >= 0) {
        std::cout << "b_" << degree << "(" << space.name() << ") = " << betti(space, degree) << "\n";
        return kOk;
    }
    std::cout << "betti(" << space.name() << ") =";
    for (long b : space.betti_sequence()) std::cout << " " << b;
    std::cout << "\n";
    return kOk;
}

int cmd_split(const std::string& file, const Tolerances& tol) {
    const SplittingModel model = splitting_from_json(load_json_file(file));
    const CorrectionResult r =
        model.kind == SplittingCase::general ? correct_x_general(model) : correct_x_duality(model, tol);
    std::cout << "u =\n";
    for (Eigen::Index i = 0; i < r.u_components.rows(); ++i) {
        for (Eigen::Index j = 0; j < r.u_components.cols(); ++j) std::cout << (j ? " " : "  ") << num(r.u_components(i, j));
        std::cout << "\n";
    }
    const double residual = corrected_pairing_residual(model, r);
    std::cout << "residual = " << sci(residual) << "\n";
    return residual <= tol.eps_torus ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized abelian gauge fields with duality on R x S^1: checks and calculators"};
    app.require_subcommand(1);

    Tolerances tol;
    auto* sig = app.add_subcommand("sigma", "presymplectic form of two characters, with quadrature oracle");
    std::string fa, fb;
    sig->add_option("a", fa, "first character JSON")->required();
    sig->add_option("b", fb, "second character JSON")->required();

    auto* st = app.add_subcommand("state", "evaluate a state on a Weyl generator");
    std::string kind = "dynamical", state_file;
    bool faithful = false;
    st->add_option("--kind", kind, "dynamical | topological | general")
        ->check(CLI::IsMember({"dynamical", "topological", "general"}));
    st->add_option("file", state_file, "input JSON")->required();
    st->add_flag("--faithful", faithful, "topological: use omega_t0 instead of omega_t");

    auto* va = app.add_subcommand("verify-all", "run every registered invariant check");
    VerifyOptions vopt;
    bool json = false, timings = false;
    va->add_option("--seed", vopt.seed, "random seed")->capture_default_str();
    va->add_option("--samples", vopt.samples, "samples per check")->capture_default_str()->check(CLI::PositiveNumber);
    va->add_option("--tolerance-torus", vopt.tol.eps_torus, "tolerance on R/Z")->capture_default_str();
    va->add_flag("--json", json, "machine-readable report");
    va->add_flag("--timings", timings, "include per-check timings");

    auto* gn = app.add_subcommand("gns", "apply a script of operators to a GNS vector");
    std::string gns_file;
    bool gns_json = false;
    gn->add_option("script", gns_file, "script JSON")->required();
    gn->add_flag("--json", gns_json, "print the result as JSON");

    auto* sp = app.add_subcommand("spectrum-solve", "solve the mode equations for given eigen data");
    std::string spec_file;
    double t = 0.0;
    sp->add_option("file", spec_file, "spectrum JSON")->required();
    sp->add_option("--t", t, "time")->capture_default_str();

    auto* ku = app.add_subcommand("kunneth", "Betti numbers of a product of spheres");
    std::string space;
    int degree = -1;
    ku->add_option("--space", space, "e.g. S1xS2 or T3")->required();
    ku->add_option("--degree", degree, "degree; omit for the whole sequence");

    auto* spl = app.add_subcommand("split", "splitting correction for a pairing matrix");
    std::string split_file;
    spl->add_option("file", split_file, "splitting JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*sig) return cmd_sigma(fa, fb, tol);
        if (*st) return cmd_state(kind, state_file, faithful);
        if (*va) return cmd_verify(vopt, json, timings);
        if (*gn) return cmd_gns(gns_file, gns_json);
        if (*sp) return cmd_spectrum(spec_file, t);
        if (*ku) return cmd_kunneth(space, degree);
        if (*spl) return cmd_split(split_file, tol);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    }
    return kInputError;
}
