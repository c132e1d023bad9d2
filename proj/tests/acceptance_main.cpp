// Acceptance gate: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exit code is
// the number of failed criteria.

#include "su11/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace su11;

namespace {

constexpr std::uint64_t kSeed = 20240817;

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %02d %s: %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) { return format_double(v); }

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    [[nodiscard]] long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void criterion_suite(int index, const std::string& suite, long samples, double tol,
                     long max_ms = 0) {
    const VerificationReport r = run_suite(suite, samples, kSeed, tol);
    bool pass = r.pass;
    std::ostringstream detail;
    detail << "max_defect=" << fmt(r.max_defect) << " tol=" << fmt(tol) << " samples="
           << samples << " (" << r.wall_time_ms << " ms)";
    if (max_ms > 0) {
        detail << " runtime<" << max_ms << "ms";
        pass = pass && r.wall_time_ms < max_ms;
    }
    report(index, suite, pass, detail.str());
}

QStarPoint sample_cone(Rng& rng, double lambda_lo, double lambda_hi, double s_lo,
                       double s_hi) {
    return rect_of_hyp(HypCoords{rng.uniform(lambda_lo, lambda_hi), rng.angle(),
                                 rng.uniform(s_lo, s_hi)});
}

// --- criterion 5: leafwise exponential, spectral and chart clauses -------

void criterion_fr() {
    const VerificationReport r = run_suite("fr-map", 1000, kSeed, 1e-6);
    double eig_defect = 0.0, gt_defect = 0.0;
    for (long i = 0; i < 1000; ++i) {
        Rng rng = sampling::stream(kSeed, "fr-extra", i);
        const QStarPoint p = sample_cone(rng, 0.1, 2.0, 0.05, 1.5);
        const QPoint q = fr_map(p);
        const double lambda = p.lambda();
        const auto [hi, lo] = eig2(to_matrix(q));
        eig_defect = std::max(eig_defect, std::abs(hi - Complex(std::exp(lambda), 0.0)));
        eig_defect = std::max(eig_defect, std::abs(lo - Complex(std::exp(-lambda), 0.0)));
        const GTStarCoords in = gtstar_of_rect(p);
        const GTQCoords out = gtq_of_qpoint(q);
        gt_defect = std::max({gt_defect, std::abs(out.w - in.z),
                              std::abs(out.lambda - in.lambda),
                              std::abs(out.theta - in.theta)});
    }
    const bool pass = r.pass && eig_defect < 1e-10 && gt_defect < 1e-10;
    std::ostringstream detail;
    detail << "pushforward=" << fmt(r.max_defect) << " (tol 1e-6), eigenvalues="
           << fmt(eig_defect) << " (tol 1e-10), gt-chart=" << fmt(gt_defect)
           << " (tol 1e-10)";
    report(5, "fr-map + spectrum + GT chart", pass, detail.str());
}

// --- criterion 6: connecting flow ----------------------------------------

void criterion_gw() {
    Timer timer;
    const FlowConfig cfg{};
    double max_defect = 0.0, lambda_drift = 0.0, halving = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "gw-flow", i);
        const QStarPoint p = sample_cone(rng, 0.1, 3.0, 0.0, 3.0);
        max_defect = std::max(max_defect, verify_gw(p, cfg));
        const QStarPoint image = gw_flow(p, cfg);
        lambda_drift = std::max(lambda_drift, std::abs(image.lambda() - p.lambda()));
        if (i < 10) {
            const QStarPoint fine = gw_flow(p, FlowConfig{cfg.t_start, 2 * cfg.steps,
                                                          cfg.fd_step});
            halving = std::max(halving, norm_inf(fine.coords() - image.coords()));
        }
    }
    const long ms = timer.ms();
    const bool pass =
        max_defect < 1e-3 && lambda_drift < 1e-6 && halving < 1e-8 && ms < 30000;
    std::ostringstream detail;
    detail << "defect=" << fmt(max_defect) << " (tol 1e-3), |dlambda|="
           << fmt(lambda_drift) << " (tol 1e-6), step-halving=" << fmt(halving)
           << " (tol 1e-8), " << ms << " ms (<30000)";
    report(6, "gw-flow transport", pass, detail.str());
}

void criterion_commutator() {
    double worst = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "commutator", i);
        worst = std::max(worst, commutator_residual(sample_cone(rng, 0.1, 3.0, 0.05, 3.0)));
    }
    report(7, "commutator residual", worst < 1e-5,
           "max=" + fmt(worst) + " (tol 1e-5), 100 points");
}

void criterion_pig() {
    SuiteExtras extras;
    const VerificationReport r = run_suite("pig", 1000, kSeed, 1e-10, &extras);
    double mult = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "pig-mult", i);
        const GElement g = sampling::group_element(rng, 1.5);
        const GElement h = sampling::group_element(rng, 1.5);
        mult = std::max(mult, pig_multiplicativity_defect(g, h));
    }
    const bool pass = r.pass && mult < 1e-8;
    std::ostringstream detail;
    detail << "table-vs-wedge=" << fmt(r.max_defect) << " (tol 1e-10), kappa="
           << fmt(extras.kappa.value_or(0.0)) << ", multiplicativity=" << fmt(mult)
           << " (tol 1e-8)";
    report(8, "group structure", pass, detail.str());
}

void criterion_dressing() {
    double identity_res = 0.0, spectrum_res = 0.0, conj_res = 0.0;
    for (long i = 0; i < 1000; ++i) {
        Rng rng = sampling::stream(kSeed, "dressing-acc", i);
        const double z = rng.log_uniform(0.05, 3.0);
        const GElement g = sampling::group_element(rng, 2.0);
        const DressResult d = dress(z, g);
        const ANPoint diag{z, 0.0, 0.0};
        identity_res = std::max(identity_res,
                                norm_inf(to_matrix(diag) * to_matrix(g) -
                                         to_matrix(d.g_prime) * to_matrix(d.b_prime)));
        spectrum_res = std::max(spectrum_res, std::abs(adm_spectrum_an(d.b_prime) - z));
        const Mat2C gm = to_matrix(g);
        conj_res = std::max(conj_res,
                            norm_inf(to_matrix(sym(d.b_prime)) -
                                     gm.inverse() * to_matrix(sym(diag)) * gm));
    }
    const bool pass = identity_res < 1e-12 && spectrum_res < 1e-11 && conj_res < 1e-11;
    std::ostringstream detail;
    detail << "factorization=" << fmt(identity_res) << " (tol 1e-12), spectrum="
           << fmt(spectrum_res) << " (tol 1e-11), conjugation=" << fmt(conj_res)
           << " (tol 1e-11)";
    report(9, "dressing", pass, detail.str());
}

void criterion_thompson() {
    Timer timer;
    double min_mult = 1e300;
    bool products_ok = true;
    for (long i = 0; i < 100000; ++i) {
        Rng rng = sampling::stream(kSeed, "thompson", i);
        const ANPoint b1 = sampling::admissible_an(rng, 0.05, 3.0, 2.0);
        const ANPoint b2 = sampling::admissible_an(rng, 0.05, 3.0, 2.0);
        try {
            min_mult = std::min(min_mult, thompson_defect(b1, b2));
        } catch (const domain_error&) {
            products_ok = false;
        }
    }
    double diag_eq = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "thompson-diag", i);
        const ANPoint d1{rng.log_uniform(0.05, 3.0), 0, 0};
        const ANPoint d2{rng.log_uniform(0.05, 3.0), 0, 0};
        diag_eq = std::max(diag_eq, std::abs(thompson_defect(d1, d2)));
    }
    // Spectrum/diagonal containment: the admissible spectrum of an element
    // with diagonal parameter z fills (0, z], so gamma <= z pointwise.
    double interval = -1e300;
    for (long i = 0; i < 10000; ++i) {
        Rng rng = sampling::stream(kSeed, "thompson-interval", i);
        const ANPoint b = sampling::admissible_an(rng, 0.05, 3.0, 2.0);
        interval = std::max(interval, adm_spectrum_an(b) - b.z);
    }
    double min_lin = 1e300;
    for (long i = 0; i < 100000; ++i) {
        Rng rng = sampling::stream(kSeed, "linear-thompson", i);
        const QStarPoint m1 = sample_cone(rng, 0.05, 3.0, 0.0, 3.0);
        const QStarPoint m2 = sample_cone(rng, 0.05, 3.0, 0.0, 3.0);
        min_lin = std::min(min_lin, linear_defect(m1, m2));
    }
    const long ms = timer.ms();
    const bool pass = products_ok && min_mult >= -1e-9 && diag_eq < 1e-12 &&
                      interval <= 1e-11 && min_lin >= -1e-12 && ms < 20000;
    std::ostringstream detail;
    detail << "min_defect=" << fmt(min_mult) << " (>= -1e-9), products "
           << (products_ok ? "closed" : "NOT CLOSED") << ", diag_eq=" << fmt(diag_eq)
           << " (tol 1e-12), max(gamma-z)=" << fmt(interval)
           << " (<= 1e-11), min_linear=" << fmt(min_lin) << " (>= -1e-12), " << ms
           << " ms (<20000)";
    report(10, "thompson inequalities", pass, detail.str());
}

void criterion_pit() {
    double fd_res = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "pit-fd", i);
        const QStarPoint p = sample_cone(rng, 0.1, 3.0, 0.0, 3.0);
        const double h = 1e-4;
        const Bivector3 hi = pi_t_tensor(1.0 + h, p);
        const Bivector3 lo = pi_t_tensor(1.0 - h, p);
        const Bivector3 fd{Chart::RectQStar, (hi.p12 - lo.p12) / (2 * h),
                           (hi.p13 - lo.p13) / (2 * h), (hi.p23 - lo.p23) / (2 * h)};
        fd_res = std::max(fd_res, distance_inf(fd, pi_dot_tensor(p)) /
                                      std::max(1.0, norm_inf(fd)));
    }
    // Small-t trend of |pi_t - pi0|: the deviation is (t z + (t lambda)^2/3)
    // times the linear coefficients, so the fitted K in |pi_t - pi0| <= K t
    // is stable across decades (the quadratic-in-t fit K2 is not; both are
    // reported).
    double d2 = 0.0, d3 = 0.0;
    for (long i = 0; i < 100; ++i) {
        Rng rng = sampling::stream(kSeed, "pit-trend", i);
        const QStarPoint p = sample_cone(rng, 0.1, 3.0, 0.0, 3.0);
        const Bivector3 base = tensor_at(StructureId::pi0(), Chart::RectQStar, p.coords());
        d2 = std::max(d2, distance_inf(pi_t_tensor(1e-2, p), base));
        d3 = std::max(d3, distance_inf(pi_t_tensor(1e-3, p), base));
    }
    const double k1_ratio = (d2 / 1e-2) / (d3 / 1e-3);
    const double k2_ratio = (d2 / 1e-4) / (d3 / 1e-6);
    const bool trend_ok = k1_ratio > 0.5 && k1_ratio < 2.0;
    const bool pass = fd_res < 1e-6 && trend_ok;
    std::ostringstream detail;
    detail << "fd-vs-analytic=" << fmt(fd_res) << " (tol 1e-6), K1-ratio="
           << fmt(k1_ratio) << " (in [0.5,2]), K2-ratio=" << fmt(k2_ratio)
           << " (linear rate: reported)";
    report(12, "pi_t / pi_dot consistency", pass, detail.str());
}

// --- criterion 13: command-line interface ---------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    const std::string out_path = "/tmp/su11_acceptance_out.txt";
    const std::string cmd = std::string(SU11_CLI_PATH) + " " + args + " > " + out_path +
                            " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    if (out) *out = slurp(out_path);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string strip_wall_time(std::string text) {
    static const std::regex wall(R"("wall_time_ms":\d+)");
    return std::regex_replace(text, wall, "\"wall_time_ms\":0");
}

void criterion_cli() {
    bool pass = true;
    std::ostringstream detail;

    const auto expect = [&](const std::string& args, int want) {
        const int got = run_cli(args);
        if (got != want) {
            pass = false;
            detail << " [" << args << " -> " << got << ", want " << want << "]";
        }
    };
    expect("verify --suite jacobi --samples 40 --seed 2", 0);
    expect("verify --suite jacobi --samples 40 --seed 2 --tol 1e-300", 1);
    expect("verify --suite nope", 2);
    expect("verify", 2);
    expect("map --which sym --point 0,0,0", 0);
    expect("map --which log --point 0,0,0.5", 1);
    expect("map --which nope --point 0,0,0", 2);
    expect("spectrum --point 1,0,0", 0);
    expect("spectrum --point 0.1,1,1", 1);
    expect("flow --lambdas 1 --s 0,0.5 --out /tmp/su11_acc_flow.csv", 0);
    expect("flow --lambdas 1 --s 0 --out /no-such-dir/f.csv", 1);

    std::string first, second;
    run_cli("verify --suite linear-thompson --samples 200 --seed 5", &first);
    run_cli("verify --suite linear-thompson --samples 200 --seed 5", &second);
    if (strip_wall_time(first) != strip_wall_time(second)) {
        pass = false;
        detail << " [determinism violated]";
    }

    std::string all_out;
    const int all_code = run_cli("verify --suite all --samples 10 --seed 3", &all_out);
    if (all_code != 0) {
        pass = false;
        detail << " [verify all -> " << all_code << "]";
    }
    std::istringstream lines(all_out);
    std::string line;
    std::size_t idx = 0;
    while (std::getline(lines, line)) {
        const auto& registry = suite_registry();
        if (idx >= registry.size()) break;
        std::string solo;
        run_cli("verify --suite " + registry[idx].name + " --samples 10 --seed 3", &solo);
        if (strip_wall_time(line + "\n") != strip_wall_time(solo)) {
            pass = false;
            detail << " [all != " << registry[idx].name << "]";
        }
        ++idx;
    }
    if (idx != suite_registry().size()) {
        pass = false;
        detail << " [verify all emitted " << idx << " reports]";
    }

    report(13, "cli exit codes and determinism",
           pass, pass ? "exit-code matrix, determinism, all-conjunction" : detail.str());
}

} // namespace

int main() {
    Timer total;
    {
        Timer t;
        const VerificationReport r = run_suite("jacobi", 1000, kSeed, 1e-12);
        const bool pass = r.pass && t.ms() < 1000;
        report(1, "jacobi", pass,
               "max_defect=" + fmt(r.max_defect) + " (tol 1e-12), " +
                   std::to_string(t.ms()) + " ms (<1000)");
    }
    criterion_suite(2, "casimir", 1000, 1e-12);
    criterion_suite(3, "sym-pushforward", 1000, 1e-10);
    criterion_suite(4, "logsym-pushforward", 1000, 1e-6);
    criterion_fr();
    criterion_gw();
    criterion_commutator();
    criterion_pig();
    criterion_dressing();
    criterion_thompson();
    criterion_suite(11, "charts", 1000, 1e-8);
    criterion_pit();
    criterion_cli();
    std::printf("%d/13 criteria passed (%ld ms total)\n", 13 - g_failures, total.ms());
    return g_failures;
}
