#include "rmt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rmt/fredholm.hpp"
#include "rmt/spacing.hpp"
#include "rmt/zeros.hpp"

namespace rmt {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ArgumentError("cannot open output file " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ArgumentError("cannot open input file " + path);
    return is;
}

std::vector<double> make_grid(double s_max, double step) {
    if (!(step > 0) || !(s_max >= step)) throw ArgumentError("bad grid");
    std::vector<double> g;
    for (double s = 0.0; s <= s_max + 1e-12; s += step) g.push_back(std::min(s, s_max));
    return g;
}

struct SolveArgs {
    std::string kind = "sigma0";
    double xi = 1.0;
    double s_max = 20.0;
    int degree = 35;
    int boundary_degree = 30;
    double sample_step = 0.1;
    std::string out;
};

TranscendentSolution chain_solve(TranscendentKind kind, ThinningParam xi,
                                 const SolveOptions& opts,
                                 TranscendentSolution* base_out = nullptr) {
    switch (kind) {
        case TranscendentKind::Sigma0: return solve_sigma0(xi, opts);
        case TranscendentKind::U0: return solve_u0(xi, opts);
        case TranscendentKind::Sigma1: {
            TranscendentSolution base = solve_sigma0(xi, opts);
            TranscendentSolution out = solve_linear_correction(kind, base, xi, opts);
            if (base_out) *base_out = std::move(base);
            return out;
        }
        case TranscendentKind::U1: {
            TranscendentSolution base = solve_u0(xi, opts);
            TranscendentSolution out = solve_linear_correction(kind, base, xi, opts);
            if (base_out) *base_out = std::move(base);
            return out;
        }
    }
    throw ArgumentError("unknown transcendent kind");
}

int run_solve(const SolveArgs& a) {
    auto kind = kind_from_name(a.kind);
    if (!kind) throw ArgumentError("unknown transcendent '" + a.kind + "'");
    SolveOptions opts;
    opts.s_max = a.s_max;
    opts.degree = a.degree;
    opts.boundary_degree = a.boundary_degree;
    TranscendentSolution sol = chain_solve(*kind, ThinningParam{a.xi}, opts);

    auto js = open_out(a.out + ".json");
    js << to_json(sol) << "\n";
    auto cs = open_out(a.out + ".csv");
    cs << "# kind " << kind_name(sol.kind) << "\n";
    cs << "# xi " << fmt(sol.xi) << "\n";
    cs << "# smax " << fmt(a.s_max) << "\n";
    cs << "# degree " << a.degree << "\n";
    cs << "# residual_sup " << fmt(sol.residual_sup) << "\n";
    cs << "s,value,derivative\n";
    for (double s : make_grid(a.s_max, a.sample_step))
        cs << fmt(s) << "," << fmt(piecewise_eval(sol.fn, s, 0)) << ","
           << fmt(piecewise_eval(sol.fn, s, 1)) << "\n";
    std::cout << kind_name(sol.kind) << " xi=" << fmt(sol.xi)
              << " segments=" << sol.fn.segments.size()
              << " residual_sup=" << fmt(sol.residual_sup) << "\n";
    return 0;
}

struct SpacingArgs {
    double xi = 1.0;
    double s_max = 6.0;
    double step = 0.02;
    std::string path = "sigma";
    int degree = 35;
    std::string out;
};

int run_spacing(const SpacingArgs& a) {
    if (a.path != "sigma" && a.path != "u" && a.path != "both")
        throw ArgumentError("--path must be sigma, u or both");
    ThinningParam xi{a.xi};
    std::vector<double> grid = make_grid(a.s_max, a.step);
    SolveOptions so;
    so.degree = a.degree;

    std::optional<SpacingCurve> sigma_curve, u_curve;
    if (a.path != "u") {
        so.s_max = kPi * a.s_max + 0.1;
        TranscendentSolution s0 = solve_sigma0(xi, so);
        TranscendentSolution s1 =
            solve_linear_correction(TranscendentKind::Sigma1, s0, xi, so);
        sigma_curve = build_curve_sigma(s0, s1, xi, grid);
    }
    if (a.path != "sigma") {
        so.s_max = 2 * kPi * a.s_max + 0.1;
        TranscendentSolution u0 = solve_u0(xi, so);
        TranscendentSolution u1 =
            solve_linear_correction(TranscendentKind::U1, u0, xi, so);
        u_curve = build_curve_u(u0, u1, xi, grid);
    }

    const SpacingCurve& primary = sigma_curve ? *sigma_curve : *u_curve;
    auto os = open_out(a.out);
    os << "# grid_step " << fmt(a.step) << "\n";
    write_curve_csv(primary, os);

    if (a.path == "both") {
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, std::abs(sigma_curve->leading[i] - u_curve->leading[i]));
            worst = std::max(worst,
                             std::abs(sigma_curve->correction[i] - u_curve->correction[i]));
        }
        std::cout << "cross-path max discrepancy " << fmt(worst) << "\n";
        if (worst > 1e-5)
            throw ValidationError("sigma/u path discrepancy " + fmt(worst) +
                                  " exceeds 1e-5");
    }
    return 0;
}

struct DetArgs {
    std::string kernel = "sine";
    int N = 0;
    double xi = 1.0;
    double s = 1.0;
    int m = 64;
    std::string out;
};

int run_det(const DetArgs& a) {
    ThinningParam xi{a.xi};
    DetResult r;
    if (a.kernel == "sine") {
        r = nystrom_det(KernelSpec::sine(xi), a.s, a.m);
    } else if (a.kernel == "cue") {
        if (a.N < 2) throw ArgumentError("--N is required for the cue kernel");
        r = finite_n_det(a.N, xi, a.s, a.m);
    } else {
        throw ArgumentError("--kernel must be sine or cue");
    }
    std::ostringstream line;
    line << "s,value,est_error,order\n"
         << fmt(a.s) << "," << fmt(r.value) << "," << fmt(r.est_error) << ","
         << r.order_used << "\n";
    if (!a.out.empty()) {
        auto os = open_out(a.out);
        os << "# kernel " << a.kernel << "\n# xi " << fmt(a.xi) << "\n";
        if (a.kernel == "cue") os << "# N " << a.N << "\n";
        os << line.str();
    }
    std::cout << line.str();
    return 0;
}

struct ExtrapArgs {
    int n_from = 100;
    int n_to = 138;
    int count = 20;
    double xi = 1.0;
    double s_min = 0.5;
    double s_max = 3.0;
    double s_step = 0.5;
    int m = 64;
    int degree = 35;
    std::string out;
};

int run_extrapolate(const ExtrapArgs& a) {
    if (a.count < 3) throw ArgumentError("need at least 3 values of N");
    if (a.n_from < 2 || a.n_to <= a.n_from) throw ArgumentError("bad N range");
    ThinningParam xi{a.xi};

    SolveOptions so;
    so.degree = a.degree;
    so.s_max = 2 * kPi * a.s_max + 0.1;
    TranscendentSolution u0 = solve_u0(xi, so);
    TranscendentSolution u1 = solve_linear_correction(TranscendentKind::U1, u0, xi, so);

    auto os = open_out(a.out);
    os << "# xi " << fmt(a.xi) << "\n# n_from " << a.n_from << "\n# n_to " << a.n_to
       << "\n# count " << a.count << "\n# m " << a.m << "\n";
    os << "s,limit,c2,painleve_leading,painleve_correction\n";
    for (double s = a.s_min; s <= a.s_max + 1e-12; s += a.s_step) {
        std::vector<std::pair<int, double>> samples;
        for (int i = 0; i < a.count; ++i) {
            const double Nd = a.n_from + (a.n_to - a.n_from) *
                                             static_cast<double>(i) / (a.count - 1);
            const int N = static_cast<int>(std::lround(Nd));
            samples.emplace_back(N, finite_n_spacing(N, xi, s, a.m));
        }
        ExtrapolationFit fit = extrapolate_in_N(samples);
        const double lead = spacing_leading_u(u0, xi, s);
        const double corr = spacing_correction_u(u0, u1, xi, s);
        os << fmt(s) << "," << fmt(fit.limit) << "," << fmt(fit.c2) << ","
           << fmt(lead) << "," << fmt(corr) << "\n";
    }
    return 0;
}

// ---- zeros subcommands ----

struct ZerosCommon {
    std::string in, out;
};

int run_zeros_unfold(const ZerosCommon& z, const std::string& format) {
    ZerosFormat f;
    if (format == "plain") f = ZerosFormat::PlainHeights;
    else if (format == "baseoffset") f = ZerosFormat::BaseOffset;
    else throw ArgumentError("--format must be plain or baseoffset");
    // loading validates, the dataset and points stream out
    ZerosDataset ds = load_zeros(z.in, f);
    UnfoldedSequence seq = unfold(ds);
    auto os = open_out(z.out);
    write_points_header(os, seq);
    for (double p : seq.points) os << fmt(p) << "\n";
    std::cout << "unfolded " << seq.points.size() << " points, rho_bar "
              << fmt(seq.rho_bar) << "\n";
    return 0;
}

int run_zeros_thin(const ZerosCommon& z, double xi, std::uint64_t seed) {
    ThinningParam tp{xi};
    auto is = open_in(z.in);
    long line_no = 0;
    PointsHeader h = read_points_header(is, line_no);
    UnfoldedSequence meta_seq;
    meta_seq.rho_bar = h.rho_bar;
    meta_seq.first_height = h.e0;
    meta_seq.meta.thinned = true;
    meta_seq.meta.seed = seed;
    meta_seq.meta.xi_effective = h.xi_effective * xi;
    auto os = open_out(z.out);
    write_points_header(os, meta_seq);
    std::uint64_t kept = 0, total = 0;
    total = stream_points(is, line_no, [&](double p, std::uint64_t idx) {
        if (thin_u01(seed, idx) < tp.xi) {
            os << fmt(p) << "\n";
            ++kept;
        }
    });
    std::cout << "kept " << kept << " of " << total << " points\n";
    return 0;
}

void write_curve_file(std::ostream& os, const EmpiricalCurve& c,
                      const PointsHeader& h, const std::string& kind, int window) {
    os << "# curve " << kind << "\n";
    os << "# xi_effective " << fmt(h.xi_effective) << "\n";
    os << "# seed " << h.seed << "\n";
    os << "# rho_bar " << fmt(h.rho_bar) << "\n";
    os << "# e0 " << h.e0_digits << "\n";
    if (window > 0) os << "# window " << window << "\n";
    os << "# bin_width " << fmt(c.bin_width) << "\n";
    os << "# n_ref " << c.n_ref << "\n";
    if (c.coverage_warning) os << "# warning window coverage below s_max\n";
    os << "bin_center,value,count\n";
    for (std::size_t i = 0; i + 1 < c.bin_edges.size(); ++i) {
        const double mid = (c.bin_edges[i] + c.bin_edges[i + 1]) / 2;
        os << fmt(mid) << "," << fmt(c.values[i]) << "," << c.counts[i] << "\n";
    }
}

int run_zeros_hist(const ZerosCommon& z, const std::string& kind, double s_max,
                   double bin, int window, bool rescale) {
    auto is = open_in(z.in);
    long line_no = 0;
    PointsHeader h = read_points_header(is, line_no);
    const double factor = rescale ? h.xi_effective : 1.0;
    double first = 0, last = 0;
    std::uint64_t n = 0;
    EmpiricalCurve curve;
    if (kind == "twopoint") {
        TwoPointAccumulator acc(s_max, bin, window, factor);
        n = stream_points(is, line_no, [&](double p, std::uint64_t idx) {
            if (idx == 0) first = p;
            last = p;
            acc.feed(p);
        });
        const double mean = n > 1 ? (last - first) * factor / static_cast<double>(n - 1) : 1.0;
        curve = acc.finish(mean);
    } else {
        NNSpacingAccumulator acc(s_max, bin, factor);
        n = stream_points(is, line_no, [&](double p, std::uint64_t) { acc.feed(p); });
        curve = acc.finish();
    }
    if (n == 0) throw DataError("no points in input", line_no);
    auto os = open_out(z.out);
    write_curve_file(os, curve, h, kind, kind == "twopoint" ? window : 0);
    return 0;
}

struct CurveFile {
    PointsHeader meta;
    std::string kind;
    int window = 0;
    EmpiricalCurve curve;
};

CurveFile read_curve_file(const std::string& path) {
    auto is = open_in(path);
    CurveFile cf;
    std::string line;
    long line_no = 0;
    std::vector<double> centers;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line);
            std::string hash, key;
            ss >> hash >> key;
            if (key == "curve") ss >> cf.kind;
            else if (key == "xi_effective") ss >> cf.meta.xi_effective;
            else if (key == "seed") ss >> cf.meta.seed;
            else if (key == "rho_bar") ss >> cf.meta.rho_bar;
            else if (key == "e0") {
                ss >> cf.meta.e0_digits;
                cf.meta.e0 = std::strtold(cf.meta.e0_digits.c_str(), nullptr);
            } else if (key == "window") ss >> cf.window;
            else if (key == "bin_width") ss >> cf.curve.bin_width;
            else if (key == "n_ref") ss >> cf.curve.n_ref;
            continue;
        }
        if (line.rfind("bin_center", 0) == 0) continue;
        std::istringstream ss(line);
        double mid, value;
        long long count;
        char comma;
        if (!(ss >> mid >> comma >> value >> comma >> count))
            throw DataError("malformed curve row '" + line + "'", line_no);
        centers.push_back(mid);
        cf.curve.values.push_back(value);
        cf.curve.counts.push_back(count);
    }
    if (centers.empty()) throw DataError("empty curve file", 0);
    cf.curve.bin_edges.resize(centers.size() + 1);
    for (std::size_t i = 0; i < centers.size(); ++i)
        cf.curve.bin_edges[i] = centers[i] - cf.curve.bin_width / 2;
    cf.curve.bin_edges.back() = centers.back() + cf.curve.bin_width / 2;
    return cf;
}

struct CompareArgs {
    std::string curve_path, out, mode = "twopoint-correction";
    double constant = 1.0;
    std::string spacing_csv;
    double neff = 0.0, alpha = 1.0;
};

std::vector<double> spacing_theory_at(const std::string& csv_path, double neff,
                                      double alpha,
                                      const std::vector<double>& centers) {
    auto is = open_in(csv_path);
    std::string line;
    std::vector<double> gs, ls, cs;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("s,", 0) == 0) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',') && row.size() < 3)
            row.push_back(std::strtod(cell.c_str(), nullptr));
        if (row.size() >= 3) {
            gs.push_back(row[0]);
            ls.push_back(row[1]);
            cs.push_back(row[2]);
        }
    }
    if (gs.size() < 2) throw DataError("spacing CSV too short", 0);
    auto interp = [&](const std::vector<double>& ys, double x) {
        if (x <= gs.front()) return ys.front();
        if (x >= gs.back()) return ys.back();
        auto it = std::upper_bound(gs.begin(), gs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - gs.begin());
        const double t = (x - gs[i - 1]) / (gs[i] - gs[i - 1]);
        return ys[i - 1] + t * (ys[i] - ys[i - 1]);
    };
    std::vector<double> th;
    th.reserve(centers.size());
    for (double c : centers) {
        const double x = alpha * c;
        double v = interp(ls, x);
        if (neff > 0) v += interp(cs, x) / (neff * neff);
        th.push_back(v);
    }
    return th;
}

int run_zeros_compare(const CompareArgs& a) {
    CurveFile cf = read_curve_file(a.curve_path);
    std::vector<double> centers;
    for (std::size_t i = 0; i + 1 < cf.curve.bin_edges.size(); ++i)
        centers.push_back((cf.curve.bin_edges[i] + cf.curve.bin_edges[i + 1]) / 2);

    std::vector<double> theory(centers.size(), a.constant);
    TheoryParams params;
    bool have_params = false;
    if (a.mode == "twopoint-correction" || a.mode == "twopoint-full") {
        if (!(cf.meta.e0 > 0)) throw DataError("curve file lacks e0 metadata", 0);
        params = TheoryParams::for_height(cf.meta.e0);
        have_params = true;
        ThinningParam xi{cf.meta.xi_effective};
        for (std::size_t i = 0; i < centers.size(); ++i) {
            TwoPointTheory t = theory_two_point(params, xi, centers[i]);
            theory[i] = (a.mode == "twopoint-full") ? t.full : 1.0 + t.correction_only;
        }
    } else if (a.mode == "spacing-file") {
        if (a.spacing_csv.empty()) throw ArgumentError("--spacing-csv required");
        theory = spacing_theory_at(a.spacing_csv, a.neff, a.alpha, centers);
    } else if (a.mode != "constant") {
        throw ArgumentError("unknown compare mode '" + a.mode + "'");
    }

    ResidualReport rep = compare(cf.curve, theory);
    auto os = open_out(a.out);
    os << "# mode " << a.mode << "\n";
    os << "# xi_effective " << fmt(cf.meta.xi_effective) << "\n";
    os << "# seed " << cf.meta.seed << "\n";
    os << "# rho_bar " << fmt(cf.meta.rho_bar) << "\n";
    if (have_params) {
        os << "# alpha " << fmt(params.alpha) << "\n";
        os << "# N_eff " << fmt(params.N_eff) << "\n";
    }
    if (cf.window > 0) os << "# window " << cf.window << "\n";
    os << "# bin_width " << fmt(cf.curve.bin_width) << "\n";
    os << "# max_abs_over_stderr " << fmt(rep.max_abs_over_stderr) << "\n";
    os << "# rms_residual " << fmt(rep.rms_residual) << "\n";
    os << "bin_center,value,stderr,theory,residual\n";
    for (std::size_t i = 0; i < centers.size(); ++i)
        os << fmt(centers[i]) << "," << fmt(cf.curve.values[i]) << ","
           << fmt(rep.standard_error[i]) << "," << fmt(theory[i]) << ","
           << fmt(rep.residual[i]) << "\n";
    std::cout << "max|residual|/stderr " << fmt(rep.max_abs_over_stderr)
              << " rms " << fmt(rep.rms_residual) << "\n";
    return 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"gap probabilities, spacing distributions and their 1/N^2 "
                 "corrections for random unitary matrices; Riemann-zeros "
                 "statistics pipeline"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key = value file; flags override");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve a transcendent ODE");
    solve->add_option("kind", sa.kind, "sigma0|sigma1|u0|u1")->required();
    solve->add_option("--xi", sa.xi, "thinning parameter");
    solve->add_option("--smax", sa.s_max, "domain end");
    solve->add_option("--degree", sa.degree, "Taylor degree per segment");
    solve->add_option("--boundary-degree", sa.boundary_degree, "origin series degree");
    solve->add_option("--sample-step", sa.sample_step, "CSV sampling step");
    solve->add_option("--out", sa.out, "output prefix (.json/.csv)")->required();

    SpacingArgs pa;
    auto* spacing = app.add_subcommand("spacing", "spacing density and 1/N^2 correction");
    spacing->add_option("--xi", pa.xi, "thinning parameter");
    spacing->add_option("--smax", pa.s_max, "grid end");
    spacing->add_option("--step", pa.step, "grid step");
    spacing->add_option("--path", pa.path, "sigma|u|both");
    spacing->add_option("--degree", pa.degree, "Taylor degree");
    spacing->add_option("--out", pa.out, "output CSV")->required();

    DetArgs da;
    auto* det = app.add_subcommand("det", "Fredholm determinant evaluation");
    det->add_option("--kernel", da.kernel, "sine|cue");
    det->add_option("--N", da.N, "matrix size for the cue kernel");
    det->add_option("--xi", da.xi, "thinning parameter");
    det->add_option("--s", da.s, "interval length")->required();
    det->add_option("--m", da.m, "quadrature order");
    det->add_option("--out", da.out, "optional output CSV");

    ExtrapArgs ea;
    auto* ext = app.add_subcommand("extrapolate",
                                   "finite-N spacing, extrapolated to N -> infinity");
    ext->add_option("--nfrom", ea.n_from, "smallest N");
    ext->add_option("--nto", ea.n_to, "largest N");
    ext->add_option("--count", ea.count, "number of N values");
    ext->add_option("--xi", ea.xi, "thinning parameter");
    ext->add_option("--smin", ea.s_min, "grid start");
    ext->add_option("--smax", ea.s_max, "grid end");
    ext->add_option("--sstep", ea.s_step, "grid step");
    ext->add_option("--m", ea.m, "quadrature order");
    ext->add_option("--degree", ea.degree, "Taylor degree");
    ext->add_option("--out", ea.out, "output CSV")->required();

    auto* zeros = app.add_subcommand("zeros", "point-dataset statistics pipeline");
    zeros->require_subcommand(1);

    ZerosCommon zu;
    std::string zu_format = "plain";
    auto* unf = zeros->add_subcommand("unfold", "rescale heights to unit density");
    unf->add_option("--in", zu.in, "input file")->required();
    unf->add_option("--format", zu_format, "plain|baseoffset");
    unf->add_option("--out", zu.out, "output points file")->required();

    ZerosCommon zt;
    double zt_xi = 1.0;
    std::uint64_t zt_seed = 0;
    auto* thn = zeros->add_subcommand("thin", "Bernoulli thinning");
    thn->add_option("--in", zt.in, "input points file")->required();
    thn->add_option("--xi", zt_xi, "keep probability")->required();
    thn->add_option("--seed", zt_seed, "RNG seed")->required();
    thn->add_option("--out", zt.out, "output points file")->required();

    ZerosCommon z2;
    double z2_smax = 10.0, z2_bin = 0.05;
    int z2_window = 50;
    bool z2_rescale = false;
    auto* two = zeros->add_subcommand("twopoint", "empirical two-point correlation");
    two->add_option("--in", z2.in, "points file")->required();
    two->add_option("--smax", z2_smax, "maximum separation");
    two->add_option("--bin", z2_bin, "bin width");
    two->add_option("--window", z2_window, "right-neighbour window");
    two->add_flag("--rescale", z2_rescale, "rescale gaps to unit density");
    two->add_option("--out", z2.out, "output curve CSV")->required();

    ZerosCommon zn;
    double zn_smax = 6.0, zn_bin = 0.02;
    bool zn_rescale = false;
    auto* nnc = zeros->add_subcommand("nnspacing", "nearest-neighbour spacing histogram");
    nnc->add_option("--in", zn.in, "points file")->required();
    nnc->add_option("--smax", zn_smax, "maximum spacing");
    nnc->add_option("--bin", zn_bin, "bin width");
    nnc->add_flag("--rescale", zn_rescale, "rescale gaps to unit density");
    nnc->add_option("--out", zn.out, "output curve CSV")->required();

    CompareArgs ca;
    auto* cmp = zeros->add_subcommand("compare", "theory-vs-data residuals");
    cmp->add_option("--curve", ca.curve_path, "empirical curve CSV")->required();
    cmp->add_option("--mode", ca.mode,
                    "twopoint-correction|twopoint-full|constant|spacing-file");
    cmp->add_option("--constant", ca.constant, "constant theory value");
    cmp->add_option("--spacing-csv", ca.spacing_csv, "SpacingCurve CSV");
    cmp->add_option("--neff", ca.neff, "effective matrix size");
    cmp->add_option("--alpha", ca.alpha, "scale factor s -> alpha s");
    cmp->add_option("--out", ca.out, "output residual CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(sa);
        if (spacing->parsed()) return run_spacing(pa);
        if (det->parsed()) return run_det(da);
        if (ext->parsed()) return run_extrapolate(ea);
        if (zeros->parsed()) {
            if (unf->parsed()) return run_zeros_unfold(zu, zu_format);
            if (thn->parsed()) return run_zeros_thin(zt, zt_xi, zt_seed);
            if (two->parsed()) return run_zeros_hist(z2, "twopoint", z2_smax, z2_bin,
                                                     z2_window, z2_rescale);
            if (nnc->parsed())
                return run_zeros_hist(zn, "nnspacing", zn_smax, zn_bin, 0, zn_rescale);
            if (cmp->parsed()) return run_zeros_compare(ca);
        }
        throw ArgumentError("no subcommand given");
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace rmt
