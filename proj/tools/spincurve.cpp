#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincurve/bruhat.hpp"
#include "spincurve/curve_io.hpp"
#include "spincurve/decompose.hpp"
#include "spincurve/errors.hpp"
#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/surgery.hpp"
#include "spincurve/verify.hpp"

namespace {

using namespace spincurve;

constexpr double kPi = 3.14159265358979323846;

unsigned resolve_seed(const std::optional<unsigned>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SPINCURVE_SEED")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw PreconditionError("SPINCURVE_SEED is not a number");
        }
    }
    return 12345;
}

std::string quaternion_string(const UnitQuaternion& q) {
    return format_number(q.a) + " " + format_number(q.b) + " " + format_number(q.c) + " " +
           format_number(q.d);
}

std::vector<double> read_numbers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    std::vector<double> out;
    double x;
    while (in >> x) out.push_back(x);
    if (!in.eof()) throw IOError("non-numeric data in " + path);
    return out;
}

void print_signed_permutation(const SignedPermutation& p) {
    std::cout << "signed permutation (column -> signed row):";
    for (int i = 0; i < p.size(); ++i)
        std::cout << " e" << i + 1 << "->" << (p.signs[i] > 0 ? "+" : "-") << "e" << p.perm[i] + 1;
    std::cout << "\n" << p.matrix() << "\n";
    std::cout << "inversions: " << inv_count(p) << "\n";
}

int run_gen(const std::string& family, double c, double turns, int dim,
            std::vector<double> coeffs, std::vector<double> freqs, int n,
            const std::string& out) {
    Grid grid(n);
    CurveFile f;
    if (family == "sigma") {
        f = make_profile_file(sigma_profile(c, turns, grid));
        f.metadata["c"] = format_number(c);
        f.metadata["turns"] = format_number(turns);
    } else if (family == "gamma11") {
        f = make_profile_file(gamma_1_1_profile(grid));
    } else if (family == "gamma12") {
        f = make_profile_file(gamma_1_2_profile(grid));
    } else if (family == "omega3") {
        f = make_samples_file(omega3(grid));
    } else if (family == "xi") {
        if (coeffs.empty()) coeffs = dim == 2 ? std::vector<double>{0.6, 0.8}
                                              : std::vector<double>{0.6, 0.8};
        if (freqs.empty()) freqs = dim == 2 ? std::vector<double>{2 * kPi}
                                            : std::vector<double>{2 * kPi, 4 * kPi};
        f = make_samples_file(xi_curve(dim, coeffs, freqs, grid));
    } else {
        throw PreconditionError("unknown family " + family);
    }
    f.metadata["family"] = family;
    write_curve_file(f, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_decompose(const std::string& in, const std::string& out_l, const std::string& out_r) {
    CurvatureProfile3 p = profile3_from_file(read_curve_file(in));
    CurvePair pair = decompose3(p);
    CurveFile left = make_profile_file(CurvatureProfile2{pair.grid, pair.v, pair.kappa_l});
    CurveFile right = make_profile_file(CurvatureProfile2{pair.grid, pair.v, pair.kappa_r});
    left.metadata["z"] = quaternion_string(pair.z_l);
    right.metadata["z"] = quaternion_string(pair.z_r);
    left.metadata["role"] = "left";
    right.metadata["role"] = "right";
    write_curve_file(left, out_l);
    write_curve_file(right, out_r);
    std::cout << "z_l " << quaternion_string(pair.z_l) << "\n";
    std::cout << "z_r " << quaternion_string(pair.z_r) << "\n";
    return 0;
}

int run_compose(const std::string& in_l, const std::string& in_r, const std::string& out) {
    CurvatureProfile2 left = profile2_from_file(read_curve_file(in_l));
    CurvatureProfile2 right = profile2_from_file(read_curve_file(in_r));
    if (!(left.grid == right.grid))
        throw PreconditionError("compose: the two curves use different grids");
    for (int i = 0; i < left.grid.size(); ++i)
        if (std::abs(left.v[i] - right.v[i]) > 1e-8)
            throw PreconditionError("compose: speeds differ at t = " +
                                    std::to_string(left.grid.t(i)));
    CurvePair pair{left.grid, left.v, left.kappa, right.kappa, {}, {}};
    write_curve_file(make_profile_file(compose3(pair)), out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_classify(const std::string& matrix_path, const std::string& spin_path) {
    if (!matrix_path.empty()) {
        std::vector<double> nums = read_numbers(matrix_path);
        int n = nums.size() == 9 ? 3 : nums.size() == 16 ? 4 : 0;
        if (n == 0) throw PreconditionError("classify: expected 9 or 16 numbers (row-major)");
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = nums[i * n + j];
        print_signed_permutation(classify_so(m).rep);
        return 0;
    }
    std::vector<double> nums = read_numbers(spin_path);
    if (nums.size() == 4) {
        BruhatCellSpin3 cell =
            classify_spin3(UnitQuaternion(Quaternion{nums[0], nums[1], nums[2], nums[3]},
                                          tol().unit_input));
        print_signed_permutation(cell.rep_so);
        std::cout << "lift: " << quaternion_string(cell.lift) << "\n";
        return 0;
    }
    if (nums.size() == 8) {
        Spin4Element z{UnitQuaternion(Quaternion{nums[0], nums[1], nums[2], nums[3]},
                                      tol().unit_input),
                       UnitQuaternion(Quaternion{nums[4], nums[5], nums[6], nums[7]},
                                      tol().unit_input)};
        BruhatCellSpin4 cell = classify_spin4(z);
        print_signed_permutation(cell.rep_so);
        std::cout << "lift: (" << quaternion_string(cell.lift.zl) << ", "
                  << quaternion_string(cell.lift.zr) << ")\n";
        return 0;
    }
    throw PreconditionError("classify: expected 4 (S^3) or 8 (S^3 x S^3) numbers");
}

int run_checks(bool all, std::vector<std::string> names, unsigned seed) {
    if (all) names = check_names();
    if (names.empty()) throw PreconditionError("check: pass --all or suite names");
    bool failed = false;
    for (const auto& name : names) {
        CheckResult r = run_check(name, seed);
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        failed = failed || !r.passed;
    }
    if (failed) throw VerificationError("one or more check suites failed");
    return 0;
}

int run_surgery_add_loop(const std::string& in, double t0, double eps, const std::string& out) {
    CurveFile f = read_curve_file(in);
    SurgerySpec spec{t0, eps};
    if (f.sphere_dim == 2) {
        SpliceResult2 res = add_loops(profile2_from_file(f), spec);
        write_curve_file(make_profile_file(res.profile), out);
    } else {
        SpliceResult3 res = add_loops(profile3_from_file(f), spec);
        write_curve_file(make_profile_file(res.profile), out);
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_surgery_rr(const std::string& in, double eps, double delta, const std::string& out) {
    CurvatureProfile2 g = profile2_from_file(read_curve_file(in));
    CurveFile f = make_profile_file(relax_reflect(g, RRParams{eps, delta}));
    write_curve_file(f, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_surgery_sharp(const std::string& in_l, const std::string& in_r, double t0, double eps,
                      const std::string& out_l, const std::string& out_r) {
    CurvatureProfile2 left = profile2_from_file(read_curve_file(in_l));
    CurvatureProfile2 right = profile2_from_file(read_curve_file(in_r));
    if (!(left.grid == right.grid))
        throw PreconditionError("sharp: the two curves use different grids");
    CurvePair pair{left.grid, left.v, left.kappa, right.kappa, {}, {}};
    int i_center = static_cast<int>(std::lround(t0 * left.grid.n));
    int k = static_cast<int>(std::lround(eps * left.grid.n));
    SharpResult res = sharp(pair, i_center, k);
    CurveFile fl = make_profile_file(CurvatureProfile2{pair.grid, res.pair.v, res.pair.kappa_l});
    CurveFile fr = make_profile_file(CurvatureProfile2{pair.grid, res.pair.v, res.pair.kappa_r});
    fl.metadata["z"] = quaternion_string(res.pair.z_l);
    fr.metadata["z"] = quaternion_string(res.pair.z_r);
    write_curve_file(fl, out_l);
    write_curve_file(fr, out_r);
    std::cout << "K0 " << format_number(res.K0) << " K1 " << format_number(res.K1) << " K2 "
              << format_number(res.K2) << " turns " << format_number(res.turns) << "\n";
    return 0;
}

int run_plot_data(const std::string& in, const std::string& out) {
    CurveFile f = read_curve_file(in);
    std::vector<Eigen::VectorXd> points;
    std::vector<std::vector<double>> profile;  // v, kappa[, tau]
    int dim = f.sphere_dim;
    if (f.kind == "profile") {
        if (dim == 2) {
            CurvatureProfile2 p = profile2_from_file(f);
            points = curve_from_profile(p).first.points;
            profile = {p.v, p.kappa};
        } else {
            CurvatureProfile3 p = profile3_from_file(f);
            points = curve_from_profile(p).first.points;
            profile = {p.v, p.kappa, p.tau};
        }
    } else {
        SampledCurve c = samples_from_file(f);
        points = c.points;
        if (dim == 2) {
            CurvatureProfile2 p = curvature_profile2(c);
            profile = {p.v, p.kappa};
        } else {
            CurvatureProfile3 p = curvature_profile3(c);
            profile = {p.v, p.kappa, p.tau};
        }
    }
    std::ofstream os(out);
    if (!os) throw IOError("cannot open " + out + " for writing");
    os << "t";
    for (int d = 1; d <= dim + 1; ++d) os << ",x" << d;
    os << ",v,kappa";
    if (dim == 3) os << ",tau";
    os << "\n";
    for (int i = 0; i < f.grid.size(); ++i) {
        os << format_number(f.grid.t(i));
        for (int d = 0; d <= dim; ++d) os << "," << format_number(points[i](d));
        for (const auto& col : profile) os << "," << format_number(col[i]);
        os << "\n";
    }
    if (!os) throw IOError("write failed for " + out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally convex spherical curves: spin frames, Bruhat cells, "
                 "decompositions and surgeries"};
    app.require_subcommand(1);
    std::optional<unsigned> seed_flag;
    app.add_option("--seed", seed_flag, "RNG seed (falls back to SPINCURVE_SEED, then 12345)");

    std::string family, out, out_left, out_right, in, in_left, in_right;
    std::string matrix_path, spin_path;
    double c = kPi, turns = 1, t0 = 0.5, eps = 1.0 / 32, delta = 0.1;
    int n = 1024, dim = 3;
    std::vector<double> coeffs, freqs;
    bool all_checks = false;
    std::vector<std::string> suite_names;

    CLI::App* gen = app.add_subcommand("gen", "generate an example curve file");
    gen->add_option("--family", family, "xi|sigma|gamma11|gamma12|omega3")->required();
    gen->add_option("--c", c, "circle length parameter (sigma)");
    gen->add_option("--turns", turns, "number of turns (sigma)");
    gen->add_option("--dim", dim, "sphere dimension (xi)");
    gen->add_option("--coeffs", coeffs, "coordinate-pair coefficients (xi)");
    gen->add_option("--freqs", freqs, "coordinate-pair frequencies (xi)");
    gen->add_option("--n", n, "grid subdivisions");
    gen->add_option("--out", out, "output curve file")->required();

    CLI::App* dec = app.add_subcommand("decompose", "split an S^3 profile into an S^2 pair");
    dec->add_option("input", in, "S^3 profile file")->required();
    dec->add_option("--out-left", out_left)->required();
    dec->add_option("--out-right", out_right)->required();

    CLI::App* comp = app.add_subcommand("compose", "rebuild the S^3 profile from an S^2 pair");
    comp->add_option("left", in_left)->required();
    comp->add_option("right", in_right)->required();
    comp->add_option("--out", out)->required();

    CLI::App* cls = app.add_subcommand("classify", "Bruhat cell of a rotation or spin element");
    auto* mopt = cls->add_option("--matrix", matrix_path, "file with 9 or 16 numbers, row-major");
    auto* sopt = cls->add_option("--spin", spin_path, "file with 4 or 8 quaternion coefficients");
    mopt->excludes(sopt);

    CLI::App* chk = app.add_subcommand("check", "run verification suites");
    chk->add_flag("--all", all_checks, "run every suite");
    chk->add_option("suites", suite_names, "suite names");

    CLI::App* sur = app.add_subcommand("surgery", "curve surgeries");
    sur->require_subcommand(1);
    CLI::App* sal = sur->add_subcommand("add-loop", "insert a closed loop at t0");
    sal->add_option("input", in, "profile file")->required();
    sal->add_option("--t0", t0);
    sal->add_option("--epsilon", eps);
    sal->add_option("--out", out)->required();
    CLI::App* srr = sur->add_subcommand("rr", "relaxation-reflection of an S^2 profile");
    srr->add_option("input", in, "S^2 profile file")->required();
    srr->add_option("--epsilon", eps);
    srr->add_option("--delta", delta);
    srr->add_option("--out", out)->required();
    CLI::App* ssh = sur->add_subcommand("sharp", "the #-operation on a shared-speed pair");
    ssh->add_option("left", in_left)->required();
    ssh->add_option("right", in_right)->required();
    ssh->add_option("--t0", t0);
    ssh->add_option("--epsilon", eps);
    ssh->add_option("--out-left", out_left)->required();
    ssh->add_option("--out-right", out_right)->required();

    CLI::App* plot = app.add_subcommand("plot-data", "emit CSV columns for plotting");
    plot->add_option("input", in, "curve file")->required();
    plot->add_option("--out", out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(family, c, turns, dim, coeffs, freqs, n, out);
        if (dec->parsed()) return run_decompose(in, out_left, out_right);
        if (comp->parsed()) return run_compose(in_left, in_right, out);
        if (cls->parsed()) {
            if (matrix_path.empty() && spin_path.empty())
                throw PreconditionError("classify: pass --matrix or --spin");
            return run_classify(matrix_path, spin_path);
        }
        if (chk->parsed()) return run_checks(all_checks, suite_names, resolve_seed(seed_flag));
        if (sur->parsed()) {
            if (sal->parsed()) return run_surgery_add_loop(in, t0, eps, out);
            if (srr->parsed()) return run_surgery_rr(in, eps, delta, out);
            if (ssh->parsed())
                return run_surgery_sharp(in_left, in_right, t0, eps, out_left, out_right);
        }
        if (plot->parsed()) return run_plot_data(in, out);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const IOError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
