#pragma once

#include "plab/hciz.hpp"
#include "plab/order.hpp"
#include "plab/preserver.hpp"
#include "plab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace plab::cli {

inline std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ','))
        if (!cell.empty()) out.push_back(std::stod(cell));
    return out;
}

inline IndexTuple parse_index_list(const std::string& s) {
    IndexTuple out;
    for (double v : parse_list(s)) out.push_back(static_cast<int>(std::llround(v)));
    return out;
}

inline Json threshold_report_json(const ThresholdReport& r) {
    Json j;
    j["value"] = r.value;
    j["formula"] = formula_name(r.formula);
    if (!r.extras.empty()) {
        Json e;
        for (auto& [k, v] : r.extras) e[k] = v;
        j["extras"] = e;
    }
    if (r.witness) j["witness"] = json_vec(*r.witness);
    return j;
}

inline Json matrix_json(const SymMatrix& A) {
    Json rows = Json::array();
    for (int i = 0; i < A.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < A.n; ++j) row.push_back(A.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

struct CommandOutput {
    int exit_code = 0;
    Json inputs;
    Json results;
    Json tolerances;
};

// --- individual commands ------------------------------------------------------

inline CommandOutput cmd_schur(const std::string& nlist, const std::string& ulist,
                               const std::string& engine, long cap) {
    CommandOutput out;
    PowerTuple n = PowerTuple::of(parse_list(nlist));
    std::vector<double> ud = parse_list(ulist);
    out.inputs["n"] = json_vec(n.e);
    out.inputs["u"] = json_vec(ud);
    out.inputs["engine"] = engine;

    std::vector<Rational> u;
    for (double x : ud) u.push_back(rational_of(x));

    bool ran_tab = false, ran_bi = false;
    Rational tab, bi;
    if (engine == "tableaux" || engine == "both") {
        tab = schur_tableaux(n, u, cap);
        ran_tab = true;
        out.results["tableaux"] = rational_str(tab);
    }
    if (engine == "bialternant" || engine == "both") {
        bi = schur_bialternant_exact(n, u);
        ran_bi = true;
        out.results["bialternant"] = rational_str(bi);
    }
    if (ran_tab && ran_bi) out.results["equal"] = tab == bi;
    out.results["weyl_dimension"] = rational_str(weyl_dimension_exact(n));
    return out;
}

inline CommandOutput cmd_threshold(const std::string& mode, const std::string& variant,
                                   const std::string& nlist, const std::string& clist,
                                   double M, double rho, const std::string& ulist,
                                   const std::string& matrix_file, const std::string& alphas,
                                   double tail_C, double tail_q, long first_M,
                                   const std::string& atoms, double atom_eps) {
    CommandOutput out;
    PowerTuple n = PowerTuple::of(parse_list(nlist));
    CoefficientTuple c = CoefficientTuple::of(parse_list(clist));
    out.inputs["mode"] = mode;
    out.inputs["n"] = json_vec(n.e);
    out.inputs["c"] = json_vec(c.values);
    if (std::isfinite(M)) out.inputs["M"] = M;
    if (std::isfinite(rho)) out.inputs["rho"] = rho;

    if (mode == "sharp") {
        out.results = threshold_report_json(sharp_C(n, c, M, rho));
    } else if (mode == "qualitative") {
        KVariant v;
        if (variant == "integer")
            v = KVariant::Integer;
        else if (variant == "real_rank1")
            v = KVariant::RealRank1;
        else if (variant == "real_full")
            v = KVariant::RealFull;
        else if (variant == "two_sided")
            v = KVariant::TwoSided;
        else
            fail(ErrKind::InvalidInput, "unknown variant: " + variant);
        out.inputs["variant"] = variant;
        out.results = threshold_report_json(qualitative_K(n, c, M, rho, v));
    } else if (mode == "rank1-at") {
        std::vector<double> u = parse_list(ulist);
        out.inputs["u"] = json_vec(u);
        out.results = threshold_report_json(rank1_threshold_at(u, n, c, M));
    } else if (mode == "rayleigh") {
        SymMatrix A = load_sym_csv_file(matrix_file);
        out.inputs["matrix"] = matrix_file;
        out.results = threshold_report_json(rayleigh_threshold(A, n, c, M));
    } else if (mode == "series") {
        PowerSeriesTail tail;
        tail.first_M = first_M;
        tail.C = tail_C;
        tail.q = tail_q;
        double lrho = rho;
        tail.coeff = [lrho, tail_C, tail_q](long m) {
            return tail_C * std::pow(tail_q, static_cast<double>(m)) /
                   std::pow(lrho, static_cast<double>(m));
        };
        out.inputs["tail_C"] = tail_C;
        out.inputs["tail_q"] = tail_q;
        out.inputs["first_M"] = static_cast<std::int64_t>(first_M);
        out.results = threshold_report_json(series_threshold(n, c, rho, tail));
    } else if (mode == "laplace") {
        AtomicTail tail;
        tail.eps = atom_eps;
        std::stringstream ss(atoms);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            auto pos = cell.find(':');
            require(pos != std::string::npos, ErrKind::InvalidInput,
                    "atoms must be t:w pairs separated by commas");
            tail.atoms.emplace_back(std::stod(cell.substr(0, pos)),
                                    std::stod(cell.substr(pos + 1)));
        }
        out.inputs["atoms"] = atoms;
        out.inputs["eps"] = atom_eps;
        out.results = threshold_report_json(series_threshold(n, c, rho, tail));
    } else if (mode == "cube") {
        std::vector<double> al = parse_list(alphas);
        out.inputs["alphas"] = json_vec(al);
        CubeBounds b = cube_bounds(n, c, rho, al);
        out.results["eta_lower"] = b.eta_lower;
        out.results["eta_upper"] = b.eta_upper;
        out.results["K_alpha"] = json_vec(b.K_alpha);
    } else {
        fail(ErrKind::InvalidInput, "unknown threshold mode: " + mode);
    }
    out.tolerances["pivot_ratio_warn"] = 1e12;
    return out;
}

inline CommandOutput cmd_certify(const std::string& ftext, int N, double rho, long samples,
                                 std::uint64_t seed, double tol, const std::string& ranks,
                                 const std::string& domain) {
    CommandOutput out;
    DomainSpec dom = domain == "unbounded"  ? DomainSpec::unbounded()
                     : domain == "two-sided" ? DomainSpec::two_sided(rho)
                                             : DomainSpec::bounded(rho);
    PowerSum f = powersum_parse(ftext, dom);
    CertifyConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tol = tol;
    if (!ranks.empty())
        for (double r : parse_list(ranks)) cfg.ranks.push_back(static_cast<int>(std::llround(r)));

    out.inputs["f"] = powersum_text(f);
    out.inputs["N"] = N;
    out.inputs["rho"] = rho;
    out.inputs["samples"] = static_cast<std::int64_t>(samples);
    out.inputs["domain"] = dom.name();
    out.tolerances["tol"] = tol;

    CertReport rep = certify_preserver(f, N, rho, cfg);
    out.results["verdict"] = verdict_name(rep.verdict);
    out.results["samples"] = static_cast<std::int64_t>(rep.samples);
    out.results["worst_min_eigenvalue"] = rep.worst_min_eigenvalue;
    if (rep.witness) {
        Json w;
        w["matrix"] = matrix_json(rep.witness->matrix);
        w["min_eigenvalue"] = rep.witness->min_eigenvalue;
        if (rep.witness->exact_det) w["exact_det"] = rational_str(*rep.witness->exact_det);
        out.results["witness"] = w;
    }
    out.exit_code = rep.verdict == Verdict::Falsified ? 1 : 0;
    return out;
}

inline CommandOutput cmd_sign_series(const std::string& base, const std::string& clist,
                                     const std::string& signs, bool unbounded, double rho,
                                     long M_max, long samples, std::uint64_t seed) {
    CommandOutput out;
    PowerTuple n = PowerTuple::of(parse_list(base));
    CoefficientTuple c = CoefficientTuple::of(parse_list(clist));
    std::vector<std::pair<long, int>> tail;
    std::stringstream ss(signs);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        auto pos = cell.find(':');
        require(pos != std::string::npos, ErrKind::InvalidInput,
                "signs must be M:sign pairs separated by commas");
        tail.emplace_back(std::stol(cell.substr(0, pos)),
                          static_cast<int>(std::stol(cell.substr(pos + 1))));
    }
    SignPattern pat = SignPattern::of(n, tail);
    out.inputs["base"] = json_vec(n.e);
    out.inputs["c"] = json_vec(c.values);
    out.inputs["signs"] = signs;
    out.inputs["domain"] = unbounded ? "positive_unbounded" : "positive_bounded";
    if (!unbounded) out.inputs["rho"] = rho;
    out.inputs["M_max"] = static_cast<std::int64_t>(M_max);

    PowerSum f = construct_sign_series(pat, c, unbounded ? std::nullopt : std::optional(rho),
                                       M_max);
    out.results["series"] = powersum_text(f);
    Json terms = Json::array();
    for (auto& t : f.terms) {
        Json tj;
        tj["exponent"] = t.exponent;
        tj["coeff"] = t.coeff;
        terms.push_back(tj);
    }
    out.results["terms"] = terms;

    CertifyConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    double crho = unbounded ? 1.0 : rho;
    CertReport rep = certify_preserver(f, n.size(), crho, cfg);
    out.results["certify_verdict"] = verdict_name(rep.verdict);
    out.results["worst_min_eigenvalue"] = rep.worst_min_eigenvalue;
    out.tolerances["tol"] = cfg.tol;
    out.exit_code = rep.verdict == Verdict::Falsified ? 1 : 0;
    return out;
}

inline CommandOutput cmd_hciz(const std::string& alist, const std::string& xlist, long samples,
                              std::uint64_t seed) {
    CommandOutput out;
    std::vector<double> alpha = parse_list(alist), x = parse_list(xlist);
    out.inputs["alpha"] = json_vec(alpha);
    out.inputs["x"] = json_vec(x);
    out.inputs["samples"] = static_cast<std::int64_t>(samples);

    double exact = hciz_exact(alpha, x);
    MCEstimate mc = hciz_mc(alpha, x, samples, seed);
    out.results["exact"] = exact;
    out.results["mc_mean"] = mc.mean;
    out.results["mc_stderr"] = mc.stderr_;
    out.results["abs_error"] = std::fabs(mc.mean - exact);
    bool within = std::fabs(mc.mean - exact) <= 4.0 * mc.stderr_;
    out.results["within_4_stderr"] = within;
    out.results["sandwich_violations"] = static_cast<std::int64_t>(mc.sandwich_violations);
    out.tolerances["consistency"] = 4.0;
    out.exit_code = (within && mc.sandwich_violations == 0) ? 0 : 1;
    return out;
}

inline CommandOutput cmd_majorize(const std::string& mlist, const std::string& nlist,
                                  const std::string& ulist, long budget, std::uint64_t seed) {
    CommandOutput out;
    std::vector<double> m = parse_list(mlist), n = parse_list(nlist);
    out.inputs["m"] = json_vec(m);
    out.inputs["n"] = json_vec(n);
    MajVerdict v = weak_majorize(m, n);
    out.results["verdict"] = maj_name(v);
    out.tolerances["eq_tol"] = 1e-12;
    out.tolerances["cgs_tol"] = 1e-9;

    if (!ulist.empty()) {
        std::vector<double> u = parse_list(ulist);
        out.inputs["u"] = json_vec(u);
        CgsResult r = cgs_check(m, n, u);
        out.results["cgs_holds"] = r.holds;
        out.results["cgs_lhs"] = r.lhs;
        out.results["cgs_rhs"] = r.rhs;
        out.exit_code = r.holds ? 0 : 1;
    } else if (v == MajVerdict::Neither) {
        CgsSearch s = cgs_find_violation(m, n, budget, seed);
        out.results["violation_found"] = s.found;
        if (s.found) {
            out.results["witness_u"] = json_vec(s.witness);
            out.results["cgs_lhs"] = s.lhs;
            out.results["cgs_rhs"] = s.rhs;
            out.exit_code = 1;
        } else {
            out.results["search_outcome"] = "Inconclusive";
        }
        out.inputs["search_budget"] = static_cast<std::int64_t>(budget);
    }
    return out;
}

inline CommandOutput cmd_tn(const std::string& moments, const std::string& moments_file,
                            double tol) {
    CommandOutput out;
    HankelMoments m = moments_file.empty() ? HankelMoments::of(parse_list(moments))
                                           : load_moments_csv_file(moments_file);
    out.inputs["moments"] = json_vec(m.moments);
    out.tolerances["tol"] = tol;
    SymMatrix A = hankel_build(m);
    out.results["matrix"] = matrix_json(A);
    bool tn = is_tn_hankel(m, tol);
    out.results["totally_nonnegative"] = tn;
    PsdResult pa = is_psd(A, tol);
    out.results["psd_A"] = pa.psd;
    out.results["min_eig_A"] = pa.min_eig;
    if (A.n >= 2) {
        PsdResult p1 = is_psd(pad_zero_row_col(hankel_truncate(A)), tol);
        out.results["psd_A1"] = p1.psd;
        out.results["min_eig_A1"] = p1.min_eig;
    }
    out.exit_code = tn ? 0 : 1;
    return out;
}

inline CommandOutput cmd_logsup(const std::string& matrix_file, const std::string& i1,
                                const std::string& i2, const std::string& j1,
                                const std::string& j2, bool assume_tp) {
    CommandOutput out;
    // strictly totally positive matrices need not be symmetric
    Mat A = load_mat_csv_file(matrix_file);
    IndexTuple I1 = parse_index_list(i1), I2 = parse_index_list(i2);
    IndexTuple J1 = parse_index_list(j1), J2 = parse_index_list(j2);
    out.inputs["matrix"] = matrix_file;
    out.inputs["I1"] = i1;
    out.inputs["I2"] = i2;
    out.inputs["J1"] = j1;
    out.inputs["J2"] = j2;
    double res = logsup_check(A, I1, I2, J1, J2, assume_tp);
    out.results["residual"] = res;
    double scale = 1.0;
    for (double v : A.e) scale = std::max(scale, std::fabs(v));
    out.tolerances["violation"] = 1e-10;
    out.exit_code = res >= -1e-10 * scale ? 0 : 1;
    return out;
}

inline CommandOutput cmd_counterexample(bool complex_mode, const std::string& nlist, double rho,
                                        int k, double t, std::uint64_t seed) {
    CommandOutput out;
    if (complex_mode) {
        PowerTuple n = PowerTuple::of(parse_list(nlist));
        out.inputs["n"] = json_vec(n.e);
        out.inputs["rho"] = rho;
        auto w = complex_counterexample(n, rho, seed);
        if (!w) {
            out.results["exists"] = false;
            out.results["reason"] = "tuple is a shift of (0,...,N-1)";
            out.exit_code = 0;
            return out;
        }
        out.results["exists"] = true;
        out.results["z0_re"] = w->z0.real();
        out.results["z0_im"] = w->z0.imag();
        out.results["M"] = static_cast<std::int64_t>(w->M);
        Json uj = Json::array();
        for (auto& z : w->u) {
            Json zz;
            zz["re"] = z.real();
            zz["im"] = z.imag();
            uj.push_back(zz);
        }
        out.results["u"] = uj;
        out.exit_code = 1;
    } else {
        out.inputs["k"] = k;
        out.inputs["t"] = t;
        out.inputs["rho"] = rho;
        double v = two_sided_witness(k, t, rho);
        out.results["quadratic_form"] = v;
        out.results["expected"] = -4.0 * std::pow(rho / 2.0, 2.0 * k + 1.0);
        out.exit_code = v < 0 ? 1 : 0;
    }
    return out;
}

// --- driver ---------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::string* captured = nullptr) {
    CLI::App app{"entrywise positivity preserver laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    if (const char* env = std::getenv("PRESERVER_LAB_SEED")) seed = std::strtoull(env, nullptr, 10);
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to this path");
    app.add_option("--seed", seed, "PRNG seed (default: PRESERVER_LAB_SEED or 0)");

    // schur
    auto* sc = app.add_subcommand("schur", "evaluate/compare the Schur engines");
    sc->fallthrough();
    std::string sc_n, sc_u, sc_engine = "both";
    long sc_cap = 1000000;
    sc->add_option("-n,--powers", sc_n)->required();
    sc->add_option("-u,--base", sc_u)->required();
    sc->add_option("--engine", sc_engine)->check(CLI::IsMember({"tableaux", "bialternant", "both"}));
    sc->add_option("--cap", sc_cap);

    // threshold
    auto* th = app.add_subcommand("threshold", "threshold formulas");
    th->fallthrough();
    std::string th_variant, th_n, th_c, th_u, th_matrix, th_alphas, th_atoms;
    double th_M = std::numeric_limits<double>::quiet_NaN();
    double th_rho = std::numeric_limits<double>::quiet_NaN();
    double th_tailC = 1.0, th_tailq = 0.5, th_atom_eps = 0.0;
    long th_firstM = 0;
    int th_N = 0;
    bool th_sharp = false, th_cube = false, th_series = false, th_laplace = false,
         th_rank1 = false, th_rayleigh = false;
    th->add_option("-N,--dim", th_N, "dimension (optional, checked against the power tuple)");
    th->add_flag("--sharp", th_sharp);
    th->add_option("--qualitative", th_variant);
    th->add_flag("--rank1-at", th_rank1);
    th->add_flag("--rayleigh", th_rayleigh);
    th->add_flag("--series", th_series);
    th->add_flag("--laplace", th_laplace);
    th->add_flag("--cube", th_cube);
    th->add_option("-n,--powers", th_n)->required();
    th->add_option("-c,--coeffs", th_c)->required();
    th->add_option("-M,--power", th_M);
    th->add_option("--rho", th_rho);
    th->add_option("-u,--base", th_u);
    th->add_option("--matrix", th_matrix);
    th->add_option("--alphas", th_alphas);
    th->add_option("--tail-c", th_tailC);
    th->add_option("--tail-q", th_tailq);
    th->add_option("--first-M", th_firstM);
    th->add_option("--atoms", th_atoms);
    th->add_option("--atom-eps", th_atom_eps);

    // certify
    auto* ce = app.add_subcommand("certify", "preserver certification by sampling");
    ce->fallthrough();
    std::string ce_f, ce_ranks, ce_domain = "bounded";
    int ce_N = 2;
    double ce_rho = 1.0, ce_tol = 1e-9;
    long ce_samples = 10000;
    ce->add_option("-f,--function", ce_f)->required();
    ce->add_option("-N,--dim", ce_N)->required();
    ce->add_option("--rho", ce_rho);
    ce->add_option("--samples", ce_samples);
    ce->add_option("--tol", ce_tol);
    ce->add_option("--ranks", ce_ranks);
    ce->add_option("--domain", ce_domain)->check(CLI::IsMember({"bounded", "unbounded", "two-sided"}));

    // sign-series
    auto* ss = app.add_subcommand("sign-series", "construct and certify a sign-pattern series");
    ss->fallthrough();
    std::string ss_base, ss_c, ss_signs;
    bool ss_unbounded = false;
    double ss_rho = 1.0;
    long ss_Mmax = 64, ss_samples = 2000;
    ss->add_option("--base", ss_base)->required();
    ss->add_option("-c,--coeffs", ss_c)->required();
    ss->add_option("--signs", ss_signs)->required();
    ss->add_flag("--unbounded", ss_unbounded);
    ss->add_option("--rho", ss_rho);
    ss->add_option("--M-max", ss_Mmax);
    ss->add_option("--samples", ss_samples);

    // hciz
    auto* hc = app.add_subcommand("hciz", "Monte Carlo vs exact unitary integral");
    hc->fallthrough();
    std::string hc_alpha, hc_x;
    long hc_samples = 100000;
    hc->add_option("--alpha", hc_alpha)->required();
    hc->add_option("-x,--powers", hc_x)->required();
    hc->add_option("--samples", hc_samples);

    // majorize
    auto* mj = app.add_subcommand("majorize", "weak majorization and the determinant criterion");
    mj->fallthrough();
    std::string mj_m, mj_n, mj_u;
    long mj_budget = 1000;
    mj->add_option("-m,--lhs", mj_m)->required();
    mj->add_option("-n,--rhs", mj_n)->required();
    mj->add_option("-u,--base", mj_u);
    mj->add_option("--search-budget", mj_budget);

    // tn
    auto* tn = app.add_subcommand("tn", "Hankel total non-negativity tests");
    tn->fallthrough();
    std::string tn_moments, tn_file;
    double tn_tol = 1e-9;
    tn->add_option("--moments", tn_moments);
    tn->add_option("--moments-file", tn_file);
    tn->add_option("--tol", tn_tol);

    // logsup
    auto* ls = app.add_subcommand("logsup", "log-supermodularity residual of TP minors");
    ls->fallthrough();
    std::string ls_matrix, ls_i1, ls_i2, ls_j1, ls_j2;
    bool ls_assume = false;
    ls->add_option("--matrix", ls_matrix)->required();
    ls->add_option("--I1", ls_i1)->required();
    ls->add_option("--I2", ls_i2)->required();
    ls->add_option("--J1", ls_j1)->required();
    ls->add_option("--J2", ls_j2)->required();
    ls->add_flag("--assume-tp", ls_assume);

    // counterexample
    auto* cx = app.add_subcommand("counterexample", "complex / two-sided counterexamples");
    cx->fallthrough();
    std::string cx_n;
    bool cx_complex = false, cx_two_sided = false;
    double cx_rho = 1.0, cx_t = 1.0;
    int cx_k = 1;
    cx->add_flag("--complex", cx_complex);
    cx->add_flag("--two-sided-witness", cx_two_sided);
    cx->add_option("-n,--powers", cx_n);
    cx->add_option("--rho", cx_rho);
    cx->add_option("-k,--order", cx_k);
    cx->add_option("-t,--level", cx_t);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream oss;
        int code = app.exit(e, oss, oss);
        std::string msg = oss.str();
        if (captured)
            *captured = msg;
        else
            std::cerr << msg;
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Json report;
    int code = 0;
    try {
        CommandOutput out;
        std::string command;
        if (*sc) {
            command = "schur";
            out = cmd_schur(sc_n, sc_u, sc_engine, sc_cap);
        } else if (*th) {
            command = "threshold";
            std::string mode = th_sharp       ? "sharp"
                               : th_rank1     ? "rank1-at"
                               : th_rayleigh  ? "rayleigh"
                               : th_series    ? "series"
                               : th_laplace   ? "laplace"
                               : th_cube      ? "cube"
                               : !th_variant.empty() ? "qualitative"
                                                     : "";
            require(!mode.empty(), ErrKind::InvalidInput, "pick a threshold mode");
            require(th_N == 0 || th_N == static_cast<int>(parse_list(th_n).size()),
                    ErrKind::InvalidInput, "dimension flag disagrees with the power tuple");
            out = cmd_threshold(mode, th_variant, th_n, th_c, th_M, th_rho, th_u, th_matrix,
                                th_alphas, th_tailC, th_tailq, th_firstM, th_atoms, th_atom_eps);
        } else if (*ce) {
            command = "certify";
            out = cmd_certify(ce_f, ce_N, ce_rho, ce_samples, seed, ce_tol, ce_ranks, ce_domain);
        } else if (*ss) {
            command = "sign-series";
            out = cmd_sign_series(ss_base, ss_c, ss_signs, ss_unbounded, ss_rho, ss_Mmax,
                                  ss_samples, seed);
        } else if (*hc) {
            command = "hciz";
            out = cmd_hciz(hc_alpha, hc_x, hc_samples, seed);
        } else if (*mj) {
            command = "majorize";
            out = cmd_majorize(mj_m, mj_n, mj_u, mj_budget, seed);
        } else if (*tn) {
            command = "tn";
            out = cmd_tn(tn_moments, tn_file, tn_tol);
        } else if (*ls) {
            command = "logsup";
            out = cmd_logsup(ls_matrix, ls_i1, ls_i2, ls_j1, ls_j2, ls_assume);
        } else if (*cx) {
            command = "counterexample";
            require(cx_complex != cx_two_sided, ErrKind::InvalidInput,
                    "pick exactly one of --complex / --two-sided-witness");
            out = cmd_counterexample(cx_complex, cx_n, cx_rho, cx_k, cx_t, seed);
        }
        report["command"] = command;
        report["inputs"] = out.inputs;
        report["seed"] = static_cast<std::int64_t>(seed);
        report["results"] = out.results;
        report["tolerances"] = out.tolerances.is_null() ? Json::object() : out.tolerances;
        code = out.exit_code;
    } catch (const Error& e) {
        report["command"] = "error";
        report["inputs"] = Json::object();
        report["seed"] = static_cast<std::int64_t>(seed);
        report["results"] = Json{{"error", e.what()}};
        report["tolerances"] = Json::object();
        code = 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::string text = dump_report(report);
    if (captured) {
        *captured = text;
    } else if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text;
    } else {
        std::cout << text;
    }
    return code;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace plab::cli
