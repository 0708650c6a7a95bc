#include "hermspec/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hermspec {

namespace {

struct ChunkResult {
    uint64_t digraphs = 0, eigenvalues = 0, bounds_evaluated = 0;
    std::vector<std::string> violations;
    std::vector<TightInstance> tight;
    std::map<long long, uint64_t> slack_histogram;
    uint64_t construction_checks = 0, construction_failures = 0, exact_rechecks = 0;
    std::string csv;
};

void scan_one(const Digraph& g, const OmegaSpec& w, const ScanConfig& cfg, ChunkResult& res,
              bool want_csv) {
    BoundReport rep;
    bool exact_used = false;
    try {
        rep = evaluate_all(g, w, cfg.mode);
    } catch (const ClusteringAmbiguity&) {
        if (!w.is_preset()) throw;
        rep = evaluate_all(g, w, SpectrumMode::Exact);
        ++res.exact_rechecks;
        exact_used = true;
    }
    if (!rep.violations.empty() && cfg.mode == SpectrumMode::Float && !exact_used &&
        w.is_preset()) {
        // bounds are theorems: a float-mode violation is re-examined exactly
        rep = evaluate_all(g, w, SpectrumMode::Exact);
        ++res.exact_rechecks;
    }
    ++res.digraphs;
    res.eigenvalues += rep.spectrum.s();
    std::string canon;  // computed lazily, only for tight instances / violations
    auto canonical = [&]() {
        if (canon.empty()) canon = canonical_code(g);
        return canon;
    };
    for (const auto& eb : rep.per_eig)
        for (const auto& en : eb.entries) {
            if (!en.applicable) continue;
            ++res.bounds_evaluated;
            ++res.slack_histogram[en.slack];
            if (en.tight)
                res.tight.push_back({canonical(), w.name(), eb.lambda, en.name});
        }
    for (const auto& v : rep.violations)
        res.violations.push_back("CRITICAL code=" + canonical() + " omega=" + w.name() + " " + v);

    if (cfg.check_constructions) {
        HermitianMatrix h = build_hermitian(g, w);
        for (ShiftCase sc : {ShiftCase::BottomNonMain, ShiftCase::TopNonMain,
                             ShiftCase::PenultWithMainBottom, ShiftCase::SecondWithMainTop}) {
            if (!shift_constant(rep.spectrum, sc)) continue;
            ++res.construction_checks;
            ShiftedConstruction con = shifted_construction(rep.spectrum, h, sc);
            if (!con.rank_ok || !con.psd) {
                ++res.construction_failures;
                res.violations.push_back("CONSTRUCTION code=" + canonical() + " omega=" +
                                         w.name() + " case=" + std::to_string((int)con.which) +
                                         " rank=" + std::to_string(con.rank) + "/" +
                                         std::to_string(con.expected_rank) +
                                         " mineig=" + std::to_string(con.min_eig));
            }
        }
    }

    if (want_csv) {
        std::ostringstream o;
        o.precision(15);
        for (const auto& eb : rep.per_eig) {
            const auto& e = rep.spectrum.eigs[eb.index];
            for (const auto& en : eb.entries) {
                if (!en.applicable) continue;
                o << code_of(g) << "," << w.name() << "," << eb.lambda << "," << e.mult << ","
                  << (e.is_main ? 1 : 0) << "," << e.codim << "," << e.p << "," << e.q << ","
                  << en.name << "," << en.value << "," << en.slack << "\n";
            }
        }
        res.csv += o.str();
    }
}

} // namespace

ScanReport run_scan(const ScanConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max > 7 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("scan: n range must lie in [1,7]");
    if (cfg.omegas.empty()) throw std::invalid_argument("scan: at least one omega required");
    ScanReport total;
    std::ofstream csv;
    bool want_csv = !cfg.csv_path.empty();
    if (want_csv) {
        csv.open(cfg.csv_path);
        if (!csv) throw std::runtime_error("scan: cannot open csv output " + cfg.csv_path);
        csv << "code,omega,lambda,mult,main,d,p,q,bound,value,slack\n";
    }
    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = cfg.threads > 0 ? cfg.threads : (hw ? (int)hw : 2);

    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        uint64_t count = labeled_digraph_count(n);
        uint64_t nchunks = std::min<uint64_t>(count, (uint64_t)nthreads * 8);
        std::vector<ChunkResult> results(nchunks);
        std::atomic<uint64_t> next{0};
        std::atomic<bool> stop{false};
        auto worker = [&]() {
            while (true) {
                uint64_t c = next.fetch_add(1);
                if (c >= nchunks || stop.load()) return;
                uint64_t lo = count * c / nchunks, hi = count * (c + 1) / nchunks;
                ChunkResult& res = results[c];
                for (uint64_t ctr = lo; ctr < hi; ++ctr) {
                    Digraph g = digraph_from_counter(n, ctr);
                    if (cfg.dedup && canonical_code(g) != code_of(g)) continue;
                    for (const auto& w : cfg.omegas) {
                        scan_one(g, w, cfg, res, want_csv);
                        if (cfg.fail_fast && !res.violations.empty()) {
                            stop.store(true);
                            return;
                        }
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& r : results) {  // deterministic merge in chunk order
            total.digraphs += r.digraphs;
            total.eigenvalues += r.eigenvalues;
            total.bounds_evaluated += r.bounds_evaluated;
            total.construction_checks += r.construction_checks;
            total.construction_failures += r.construction_failures;
            total.exact_rechecks += r.exact_rechecks;
            for (auto& [k, v] : r.slack_histogram) total.slack_histogram[k] += v;
            total.violations.insert(total.violations.end(), r.violations.begin(),
                                    r.violations.end());
            total.tight.insert(total.tight.end(), r.tight.begin(), r.tight.end());
            if (want_csv) csv << r.csv;
        }
    }
    std::sort(total.tight.begin(), total.tight.end());
    total.tight.erase(std::unique(total.tight.begin(), total.tight.end()), total.tight.end());
    return total;
}

std::string ScanReport::summary_json() const {
    std::ostringstream o;
    o.precision(15);
    o << "{\"digraphs\":" << digraphs << ",\"eigenvalues\":" << eigenvalues
      << ",\"bounds_evaluated\":" << bounds_evaluated << ",\"violations\":" << violations.size()
      << ",\"construction_checks\":" << construction_checks
      << ",\"construction_failures\":" << construction_failures
      << ",\"exact_rechecks\":" << exact_rechecks << ",\"tight\":[";
    for (size_t i = 0; i < tight.size(); ++i) {
        if (i) o << ",";
        o << "{\"code\":\"" << tight[i].canonical << "\",\"omega\":\"" << tight[i].omega
          << "\",\"lambda\":" << tight[i].lambda << ",\"bound\":\"" << tight[i].bound << "\"}";
    }
    o << "],\"slack_histogram\":{";
    bool first = true;
    for (auto& [k, v] : slack_histogram) {
        if (!first) o << ",";
        first = false;
        o << "\"" << k << "\":" << v;
    }
    o << "}}";
    return o.str();
}

namespace {

struct AnchorRunner {
    std::ostream& out;
    bool all_ok = true;
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
        if (!ok) all_ok = false;
    }
};

} // namespace

bool verify_anchors(std::ostream& out) {
    AnchorRunner A{out};
    OmegaSpec wi = OmegaSpec::preset(OmegaKind::PresetI);

    // order-4 fixture: charpoly, spectrum, main flags
    {
        Digraph g = example4();
        HermitianMatrix h = build_hermitian(g, wi);
        auto cp = charpoly_exact(h);
        std::vector<long long> want = {-3, 8, -6, 0, 1};
        A.check("example4 charpoly x^4-6x^2+8x-3", cp == want);
        Spectrum sp = spectrum_exact(h);
        bool spec_ok = sp.s() == 2 && sp.lambda_is(0, 1) && sp.eigs[0].mult == 3 &&
                       sp.eigs[0].is_main && sp.lambda_is(1, -3) && sp.eigs[1].mult == 1 &&
                       !sp.eigs[1].is_main;
        A.check("example4 spectrum {1^3 main, -3^1 non-main}", spec_ok);

        BoundReport rep = evaluate_all(g, wi, SpectrumMode::Exact);
        bool tight4 = false;
        for (const auto& en : rep.per_eig[0].entries)
            if (en.name == "extreme" && en.applicable && en.value == 4 && en.tight) tight4 = true;
        A.check("example4 extreme bound 4 attained at lambda=1 (d=1)", tight4);

        // least eigenvalue: shifted construction with c = -1, rank 2, PSD
        auto con = shifted_construction(sp, h, ShiftCase::BottomNonMain);
        A.check("example4 bottom shift: c=-1, rank 2, PSD",
                std::abs(con.c + 1.0) < 1e-12 && con.rank == 2 && con.rank_ok && con.psd);

        // split identity at lambda=-3 with w = all-ones: <s_u, 1> = -1
        StarDecomposition dec = find_star_set(h, -3.0, 1);
        StarVectors sv = star_vectors(dec);
        Eigen::VectorXcd onesd = Eigen::VectorXcd::Ones(dec.d);
        bool split_ok = true;
        for (int u = 0; u < 4; ++u)
            if (std::abs(sv.inner(sv.S.col(u).eval(), onesd) - std::complex<double>(-1, 0)) >
                1e-9)
                split_ok = false;
        double dev = check_split_identity(dec, h, Eigen::VectorXcd::Ones(4));
        A.check("example4 split identity <s_u,1> = -1 at lambda=-3",
                split_ok && dev <= 1e-9);
    }

    // inner-product table on the fixture, lambda = 1
    {
        Digraph g = example4();
        HermitianMatrix h = build_hermitian(g, wi);
        StarDecomposition dec = find_star_set(h, 1.0, 3);
        StarVectors sv = star_vectors(dec);
        bool ok = verify_reconstruction(dec) <= 1e-10;
        std::complex<double> wv = wi.value;
        for (int u = 0; u < 4 && ok; ++u)
            for (int v = 0; v < 4; ++v) {
                std::complex<double> got = sv.inner_su_sv(u, v);
                std::complex<double> want;
                int ou = dec.perm[u], ov = dec.perm[v];
                if (ou == ov) want = dec.lambda;
                else switch (g.state(ou, ov)) {
                    case PairState::Digon: want = -1; break;
                    case PairState::Forward: want = -wv; break;
                    case PairState::Backward: want = -std::conj(wv); break;
                    default: want = 0;
                }
                if (std::abs(got - want) > 1e-9) { ok = false; break; }
            }
        A.check("example4 star-vector inner-product table at lambda=1", ok);
    }

    // sphere-code dimension sum over the degree-two-mixed lower set
    {
        bool ok = true;
        LowerSet S = LowerSet::degree_two_mixed();
        for (int d = 2; d <= 40; ++d)
            if (scode_bound_sphere(S, d) != (long long)d * (3 * d + 5) / 2) ok = false;
        A.check("sum of harmonic dims over S = d(3d+5)/2; d=3 gives 21",
                ok && scode_bound_sphere(S, 3) == 21);
    }

    // Jacobi closed forms
    {
        bool ok = true;
        for (int d = 2; d <= 8; ++d) {
            JacobiPoly g10 = jacobi(d, 1, 0), g11 = jacobi(d, 1, 1), g20 = jacobi(d, 2, 0);
            for (Rat a : {Rat(1, 3), Rat(-2, 5), Rat(7, 4)}) {
                RatC av{a, Rat(0)};
                RatC v11 = jacobi_eval_exact(g11, av);
                Rat want11 = Rat(d + 1) * (a * a * Rat(d) - Rat(1));
                RatC v20 = jacobi_eval_exact(g20, av);
                Rat want20 = a * a * Rat(d) * Rat(d + 1) / Rat(2);
                RatC v10 = jacobi_eval_exact(g10, av);
                if (!(v11.re == want11 && v11.im.num == 0)) ok = false;
                if (!(v20.re == want20 && v20.im.num == 0)) ok = false;
                if (!(v10.re == Rat(d) * a && v10.im.num == 0)) ok = false;
            }
        }
        A.check("jacobi closed forms g10 = dz, g11(a) = (d+1)(a^2 d - 1), g20(a) = a^2 d(d+1)/2",
                ok);
    }

    // scheme elimination
    {
        auto surv = integrality_filter(30);
        A.check("integrality filter over [3,30] = {3,5,9}",
                surv == std::vector<int>({3, 5, 9}));
        auto v5 = tight_S5_feasibility(5);
        auto v9 = tight_S5_feasibility(9);
        auto v3 = tight_S5_feasibility(3);
        A.check("m=5: p111 = 891/16, infeasible",
                v5.p111 == BigRat(891, 16) && !v5.feasible);
        A.check("m=9: p111 = 20125/32, infeasible",
                v9.p111 == BigRat(20125, 32) && !v9.feasible);
        A.check("m=3: p112 = 25/4, infeasible", v3.p112 == BigRat(25, 4) && !v3.feasible);
        bool none = true;
        for (int m = 3; m <= 30; ++m)
            if (tight_S5_feasibility(m).feasible) none = false;
        A.check("no tight degree-two-mixed code for any m in [3,30]", none);
        // filter polynomial identity 32 p111 = 3m^4+2m^3-11m^2-14m+8/(m-1)
        bool ident = true;
        for (int m = 3; m <= 30; ++m) {
            auto v = tight_S5_feasibility(m);
            BigRat M(m);
            BigRat rhs = 3 * M * M * M * M + 2 * M * M * M - 11 * M * M - 14 * M +
                         BigRat(8, m - 1);
            if (BigRat(32) * v.p111 != rhs) ident = false;
        }
        A.check("32*p111 equals 3m^4+2m^3-11m^2-14m+8/(m-1)", ident);
    }

    // row-sum parameter surds
    {
        auto rs = row_sum_parameters(9);
        // 6d+10 = 64, so sqrt is exactly 8: a = (-2+8)/30 = 1/5, b = (-2-8)/30 = -1/3
        BigRat ap = rs.a_plus.u + rs.a_plus.v * 8;
        BigRat am = rs.a_minus.u + rs.a_minus.v * 8;
        BigRat y2 = rs.y.v * rs.y.v * rs.y.t;
        bool ok = (ap == BigRat(1, 5)) && (am == BigRat(-1, 3)) && (y2 == BigRat(1, 5));
        for (int d = 2; d <= 50 && ok; ++d) row_sum_parameters(d);  // throws on failure
        A.check("row sums: d=9 gives a,b = {1/5,-1/3}, y^2 = 1/5; quadratics hold to d=50", ok);
    }

    // nine-case identity: sigma-sums vs closed forms vs doubled table
    {
        LowerSet S = LowerSet::degree_two_mixed();
        bool ok = true;
        auto table_cell = [](ReClass rc, LambdaClass lc, long long p, long long q) -> long long {
            if (rc == ReClass::LessThanMinusHalf) {
                if (lc == LambdaClass::LessThanMinusOne) return p * p + 4 * p * q + q * q + p + 5 * q;
                if (lc == LambdaClass::BetweenMinusOneAndZero) return 2 * p * p + 2 * q * q + 2 * p * q + 4 * p;
                return p * p + 4 * p * q + q * q + 5 * p + q;
            }
            if (rc == ReClass::EqualMinusHalf) {
                if (lc == LambdaClass::LessThanMinusOne) return p * p + q * q + p + 5 * q;
                if (lc == LambdaClass::BetweenMinusOneAndZero) return 2 * p * q + 4 * p;
                return p * p + q * q + 5 * p + q;
            }
            if (lc == LambdaClass::LessThanMinusOne) return 3 * p * p + 3 * q * q + p + 5 * q;
            if (lc == LambdaClass::BetweenMinusOneAndZero) return 6 * p * q + 4 * p;
            return 3 * p * p + 3 * q * q + 5 * p + q;
        };
        for (ReClass rc : {ReClass::LessThanMinusHalf, ReClass::EqualMinusHalf,
                           ReClass::GreaterThanMinusHalf})
            for (LambdaClass lc : {LambdaClass::LessThanMinusOne,
                                   LambdaClass::BetweenMinusOneAndZero, LambdaClass::Positive})
                for (int p = 1; p <= 20 && ok; ++p)
                    for (int q = 1; q <= 20; ++q) {
                        long long sig = scode_bound_cpq(S, inertia_sign_pattern(rc, lc), p, q);
                        long long closed = bound_inertia(p, q, lc, rc);
                        long long dbl = bound_inertia_doubled(p, q, lc, rc);
                        if (sig != closed || dbl != table_cell(rc, lc, p, q)) { ok = false; break; }
                    }
        A.check("nine cases: sigma-sum == closed form; doubled == table cell (p,q <= 20)", ok);
        A.check("case Re>-1/2, lambda>0, p=q=1 gives 6",
                bound_inertia(1, 1, LambdaClass::Positive, ReClass::GreaterThanMinusHalf) == 6);
        A.check("case Re=-1/2, lambda<-1, p=2,q=1 gives 6",
                bound_inertia(2, 1, LambdaClass::LessThanMinusOne, ReClass::EqualMinusHalf) == 6);
    }

    // annihilator normalizations
    {
        auto F = annihilator_two_pair(Rat(1, 5), Rat(-1, 3), Rat(0), Rat(1, 2), 3);
        Rat want = Rat(2) * (Rat(1) - Rat(1, 5)) * (Rat(1) - Rat(-1, 3)) * Rat(3) * Rat(1, 4);
        RatC at1 = F.eval_exact(RatC{Rat(1), Rat(0)});
        A.check("two-pair annihilator F(1) = 2(1-a)(1-b)d y^2 (exact instance)",
                at1.im.num == 0 && at1.re == want);
        auto G = annihilator_gram_roots(2.0, wi, 3);
        A.check("gram-roots annihilator: F(0)=F(-1/2)=F(+-i/2)=0 and F(1)=1 (omega=i, lambda=2, d=3)",
                G.max_root_residual() <= 1e-12 &&
                    std::abs(G.eval(1.0).real() - 1.0) <= 1e-12);
    }

    // Petersen: generalized multiplicity bound attains equality at lambda=1
    {
        Digraph p = petersen();
        BoundReport rep = evaluate_all(p, wi, SpectrumMode::Exact);
        bool spec_ok = rep.spectrum.s() == 3 && rep.spectrum.lambda_is(0, 3) &&
                       rep.spectrum.eigs[0].mult == 1 && rep.spectrum.lambda_is(1, 1) &&
                       rep.spectrum.eigs[1].mult == 5 && rep.spectrum.lambda_is(2, -2) &&
                       rep.spectrum.eigs[2].mult == 4;
        A.check("petersen spectrum {3^1, 1^5, -2^4}, only 3 main",
                spec_ok && rep.spectrum.eigs[0].is_main && !rep.spectrum.eigs[1].is_main &&
                    !rep.spectrum.eigs[2].is_main);
        Spectrum sp = rep.spectrum;
        NeumaierResult n1 = bound_neumaier_general(p, sp, 1);
        NeumaierResult n2 = bound_neumaier_general(p, sp, 2);
        bool forb_ok = n1.forbidden && std::abs(*n1.forbidden - (-7.0 / 3.0)) < 1e-12;
        A.check("petersen lambda=1: forbidden value -7/3, bound 10 attained",
                n1.applicable && forb_ok && n1.value == 10);
        A.check("petersen lambda=-2: degenerate shift, reported not applicable, value 15",
                !n2.applicable && n2.value == 15);
    }

    // Krein cross-check on the Petersen spectrum
    {
        KreinCheck kc = krein_crosscheck_rational(10, 3, BigRat(1), BigRat(-2));
        A.check("petersen Krein and forbidden-value conditions agree", kc.equivalent);
    }

    // generic rank-alphabet comparison
    {
        bool ok = true;
        for (int d = 2; d <= 50; ++d)
            if (!(bound_nonmain(d, wi) < bound_bukh(d, 4))) ok = false;
        A.check("non-main codimension bound beats C(d+4,4) for d in [2,50]", ok);
    }

    // n=4 exhaustive mini-scan: zero violations, the order-4 fixture is tight
    {
        ScanConfig cfg;
        cfg.n_min = cfg.n_max = 4;
        cfg.omegas = {wi};
        cfg.check_constructions = true;
        ScanReport rep = run_scan(cfg);
        std::string canon = canonical_code(example4());
        bool found = false;
        for (const auto& t : rep.tight)
            if (t.canonical == canon && t.bound == "extreme" && std::abs(t.lambda - 1.0) < 1e-9)
                found = true;
        A.check("n=4 omega=i scan: 4096 digraphs, zero violations",
                rep.digraphs == 4096 && rep.ok());
        A.check("n=4 scan tight list contains the order-4 fixture at lambda=1", found);
    }

    return A.all_ok;
}

} // namespace hermspec
