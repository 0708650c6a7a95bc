// Command-line front end: spectra, bounds, star sets, enumeration scans,
// harmonic dimension tables, Jacobi polynomials, the tight-code elimination
// table, and the built-in reference checklist.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermspec/bounds.hpp"
#include "hermspec/scan.hpp"

using namespace hermspec;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SpectrumMode parse_mode(const std::string& m) {
    if (m == "exact") return SpectrumMode::Exact;
    if (m == "float") return SpectrumMode::Float;
    throw CLI::ValidationError("--mode must be exact or float");
}

void print_spectrum_table(const Spectrum& sp, std::ostream& o) {
    o << "n = " << sp.n << (sp.exact_mode ? " (exact)" : " (float)") << "\n";
    o << "lambda            mult  main  beta^2        d    p    q\n";
    for (const auto& e : sp.eigs) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-17.10g %4d  %-4s  %-12.6g %4d %4d %4d\n", e.lambda,
                      e.mult, e.is_main ? "yes" : "no", e.main_angle_sq, e.codim, e.p, e.q);
        o << buf;
    }
    if (!sp.charpoly.empty()) {
        o << "charpoly (ascending):";
        for (auto c : sp.charpoly) o << " " << c;
        o << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermspec: spectra and multiplicity bounds for Hermitian adjacency matrices of mixed graphs"};
    app.require_subcommand(1);

    std::string input = "-", omega_str = "i", mode_str = "float", format = "table";
    double lambda_arg = 0;
    uint64_t seed = 12345;

    auto add_common = [&](CLI::App* sc, bool with_mode = true) {
        sc->add_option("--input", input, "digraph edge-list file, - for stdin");
        sc->add_option("--omega", omega_str,
                       "i, -i, sixth, sixth-conj, neg-sixth, neg-sixth-conj, or re,im");
        if (with_mode) sc->add_option("--mode", mode_str, "exact | float");
        sc->add_option("--format", format, "table | json");
    };

    auto* sc_spec = app.add_subcommand("spectrum", "eigenvalues, multiplicities, main angles");
    add_common(sc_spec);
    auto* sc_bounds = app.add_subcommand("bounds", "per-eigenvalue bound report");
    add_common(sc_bounds);
    auto* sc_star = app.add_subcommand("starset", "star set and reconstruction residual");
    add_common(sc_star, false);
    sc_star->add_option("--lambda", lambda_arg, "target eigenvalue")->required();

    auto* sc_scan = app.add_subcommand("scan", "exhaustive bound verification over small digraphs");
    int n_min = 4, n_max = 4, threads = 0;
    bool dedup = false, fail_fast = false, no_constructions = false;
    std::vector<std::string> omegas = {"i"};
    std::string csv_path;
    sc_scan->add_option("--n-min", n_min, "smallest vertex count");
    sc_scan->add_option("--n-max", n_max, "largest vertex count");
    sc_scan->add_option("--omega", omegas, "omega values (repeatable)");
    sc_scan->add_flag("--dedup", dedup, "one representative per isomorphism class");
    sc_scan->add_option("--mode", mode_str, "exact | float");
    sc_scan->add_option("--csv", csv_path, "write per-bound rows to this file");
    sc_scan->add_option("--threads", threads, "worker threads (0 = auto)");
    sc_scan->add_flag("--fail-fast", fail_fast, "stop at the first violation");
    sc_scan->add_flag("--no-constructions", no_constructions, "skip shifted rank/PSD checks");
    sc_scan->add_option("--format", format, "table | json");

    auto* sc_harm = app.add_subcommand("harmonics", "harmonic space dimension tables");
    int hd = 3, hkmax = 2, hp = -1, hq = -1;
    sc_harm->add_option("--d", hd, "ambient dimension");
    sc_harm->add_option("--kmax", hkmax, "table extent in k and l");
    sc_harm->add_option("--p", hp, "positive inertia (with --q: signature table)");
    sc_harm->add_option("--q", hq, "negative inertia");
    sc_harm->add_option("--format", format, "table | json");

    auto* sc_jac = app.add_subcommand("jacobi", "Jacobi polynomial coefficients and evaluation");
    int jd = 3, jk = 1, jl = 1;
    std::string eval_at;
    sc_jac->add_option("--d", jd, "dimension")->required();
    sc_jac->add_option("--k", jk, "holomorphic degree")->required();
    sc_jac->add_option("--l", jl, "antiholomorphic degree")->required();
    sc_jac->add_option("--eval", eval_at, "evaluate at re,im");
    sc_jac->add_option("--seed", seed, "seed for the Gram positivity sample");
    int gram_points = 0;
    sc_jac->add_option("--gram-points", gram_points, "sample a Gram matrix on this many points");

    auto* sc_schm = app.add_subcommand("scheme-eliminate",
                                       "feasibility table for the tight degree-two-mixed code");
    int max_m = 30;
    sc_schm->add_option("--max-m", max_m, "largest m to test");
    sc_schm->add_option("--format", format, "table | json");

    auto* sc_anch = app.add_subcommand("verify-paper", "run the built-in reference checklist");
    (void)sc_anch;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sc_spec->parsed()) {
            Digraph g = parse_digraph(read_input(input));
            OmegaSpec w = OmegaSpec::parse(omega_str);
            HermitianMatrix h = build_hermitian(g, w);
            Spectrum sp = parse_mode(mode_str) == SpectrumMode::Exact ? spectrum_exact(h)
                                                                      : spectrum_float(h);
            if (format == "json") std::cout << spectrum_to_json(sp) << "\n";
            else print_spectrum_table(sp, std::cout);
            return 0;
        }
        if (sc_bounds->parsed()) {
            Digraph g = parse_digraph(read_input(input));
            OmegaSpec w = OmegaSpec::parse(omega_str);
            BoundReport rep = evaluate_all(g, w, parse_mode(mode_str));
            if (format == "json") {
                std::cout << bound_report_to_json(rep) << "\n";
            } else {
                print_spectrum_table(rep.spectrum, std::cout);
                for (const auto& eb : rep.per_eig) {
                    std::cout << "lambda = " << eb.lambda << ":\n";
                    for (const auto& en : eb.entries) {
                        std::cout << "  " << en.name << ": ";
                        if (en.applicable)
                            std::cout << "n <= " << en.value << " (slack " << en.slack
                                      << (en.tight ? ", tight" : "") << ")";
                        else
                            std::cout << "not applicable (" << en.reason << ")";
                        std::cout << "\n";
                    }
                }
            }
            if (!rep.violations.empty()) {
                for (const auto& v : rep.violations) std::cerr << v << "\n";
                return 1;
            }
            return 0;
        }
        if (sc_star->parsed()) {
            Digraph g = parse_digraph(read_input(input));
            OmegaSpec w = OmegaSpec::parse(omega_str);
            HermitianMatrix h = build_hermitian(g, w);
            StarDecomposition dec = find_star_set(h, lambda_arg);
            std::cout << star_to_json(dec) << "\n";
            return 0;
        }
        if (sc_scan->parsed()) {
            ScanConfig cfg;
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            for (const auto& s : omegas) cfg.omegas.push_back(OmegaSpec::parse(s));
            cfg.dedup = dedup;
            cfg.mode = parse_mode(mode_str);
            cfg.csv_path = csv_path;
            cfg.threads = threads;
            cfg.fail_fast = fail_fast;
            cfg.check_constructions = !no_constructions;
            ScanReport rep = run_scan(cfg);
            if (format == "json") {
                std::cout << rep.summary_json() << "\n";
            } else {
                std::cout << "digraphs scanned:     " << rep.digraphs << "\n"
                          << "eigenvalues checked:  " << rep.eigenvalues << "\n"
                          << "bounds evaluated:     " << rep.bounds_evaluated << "\n"
                          << "construction checks:  " << rep.construction_checks << "\n"
                          << "exact rechecks:       " << rep.exact_rechecks << "\n"
                          << "tight instances:      " << rep.tight.size() << "\n"
                          << "violations:           " << rep.violations.size() << "\n";
                for (const auto& t : rep.tight)
                    std::cout << "  tight " << t.bound << " code=" << t.canonical
                              << " omega=" << t.omega << " lambda=" << t.lambda << "\n";
                for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
            }
            return rep.ok() ? 0 : 1;
        }
        if (sc_harm->parsed()) {
            bool signature = hp >= 0 && hq >= 0;
            if (format == "json") {
                std::cout << "[";
                bool first = true;
                for (int k = 0; k <= hkmax; ++k)
                    for (int l = 0; l <= hkmax; ++l) {
                        if (!first) std::cout << ",";
                        first = false;
                        if (signature) {
                            auto dd = dims_cpq(hp, hq, k, l);
                            std::cout << "{\"p\":" << hp << ",\"q\":" << hq << ",\"k\":" << k
                                      << ",\"l\":" << l << ",\"hom\":" << dd.hom
                                      << ",\"harm\":" << dd.harm << ",\"hom_plus\":" << dd.hom_plus
                                      << ",\"hom_minus\":" << dd.hom_minus << ",\"mu\":" << dd.mu
                                      << ",\"nu\":" << dd.nu << "}";
                        } else {
                            std::cout << "{\"d\":" << hd << ",\"k\":" << k << ",\"l\":" << l
                                      << ",\"m\":" << dim_harm(hd, k, l) << "}";
                        }
                    }
                std::cout << "]\n";
            } else if (signature) {
                std::cout << "mu,nu over C^{" << hp << "," << hq << "}\n k\\l";
                for (int l = 0; l <= hkmax; ++l) std::cout << "\t" << l;
                std::cout << "\n";
                for (int k = 0; k <= hkmax; ++k) {
                    std::cout << "  " << k;
                    for (int l = 0; l <= hkmax; ++l) {
                        auto dd = dims_cpq(hp, hq, k, l);
                        std::cout << "\t" << dd.mu << "," << dd.nu;
                    }
                    std::cout << "\n";
                }
            } else {
                std::cout << "m_{k,l}^" << hd << "\n k\\l";
                for (int l = 0; l <= hkmax; ++l) std::cout << "\t" << l;
                std::cout << "\n";
                for (int k = 0; k <= hkmax; ++k) {
                    std::cout << "  " << k;
                    for (int l = 0; l <= hkmax; ++l) std::cout << "\t" << dim_harm(hd, k, l);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (sc_jac->parsed()) {
            JacobiPoly j = jacobi(jd, jk, jl);
            std::cout << "g_{" << jk << "," << jl << "}^" << jd << "(z) =";
            for (size_t r = 0; r < j.coeffs.size(); ++r) {
                std::cout << (r ? " + " : " ") << j.coeffs[r].str() << " z^" << (jk - (int)r)
                          << " zbar^" << (jl - (int)r);
            }
            std::cout << "   [g(1) = " << dim_harm(jd, jk, jl) << "]\n";
            if (!eval_at.empty()) {
                auto comma = eval_at.find(',');
                double re = std::stod(eval_at.substr(0, comma));
                double im = comma == std::string::npos ? 0.0 : std::stod(eval_at.substr(comma + 1));
                auto v = jacobi_eval(j, {re, im});
                std::cout << "g(" << re << (im >= 0 ? "+" : "") << im << "i) = " << v.real()
                          << (v.imag() >= 0 ? "+" : "") << v.imag() << "i\n";
            }
            if (gram_points > 0) {
                auto gc = gram_psd_check(jd, jk, jl, gram_points, seed);
                std::cout << "gram check on " << gc.points << " points: min eig "
                          << gc.min_eigenvalue << ", max entry " << gc.max_abs_entry << "\n";
            }
            return 0;
        }
        if (sc_schm->parsed()) {
            auto surv = integrality_filter(max_m);
            if (format == "json") {
                std::cout << "{\"survivors\":[";
                for (size_t i = 0; i < surv.size(); ++i)
                    std::cout << (i ? "," : "") << surv[i];
                std::cout << "],\"rows\":[";
                for (int m = 3; m <= max_m; ++m) {
                    auto v = tight_S5_feasibility(m);
                    std::cout << (m > 3 ? "," : "") << "{\"m\":" << m << ",\"d\":\"" << v.d.str()
                              << "\",\"k1\":\"" << v.k1.str() << "\",\"p111\":\"" << v.p111.str()
                              << "\",\"p112\":\"" << v.p112.str() << "\",\"feasible\":"
                              << (v.feasible ? "true" : "false") << ",\"reason\":\"" << v.reason
                              << "\"}";
                }
                std::cout << "]}\n";
            } else {
                std::cout << "m\td\tk1\t32*p111\tverdict\treason\n";
                for (int m = 3; m <= max_m; ++m) {
                    auto v = tight_S5_feasibility(m);
                    std::cout << m << "\t" << v.d.str() << "\t" << v.k1.str() << "\t"
                              << (BigRat(32) * v.p111).str() << "\t"
                              << (v.feasible ? "feasible" : "infeasible") << "\t" << v.reason
                              << "\n";
                }
                std::cout << "survivors of the 32*p111 integrality filter:";
                for (int m : surv) std::cout << " " << m;
                std::cout << "\n";
            }
            bool any_feasible = false;
            for (int m = 3; m <= max_m; ++m)
                if (tight_S5_feasibility(m).feasible) any_feasible = true;
            return any_feasible ? 1 : 0;
        }
        if (sc_anch->parsed()) {
            bool ok = verify_anchors(std::cout);
            std::cout << (ok ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n");
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
