#include "su11/suites.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace su11 {

namespace sampling {

namespace {
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}
} // namespace

Rng stream(std::uint64_t seed, const std::string& tag, std::uint64_t index) {
    return Rng(seed ^ fnv1a(tag)).derive(index);
}

QStarPoint admissible_qstar(Rng& rng, double lambda_lo, double lambda_hi, double s_lo,
                            double s_hi, double phi_margin) {
    const double lambda = rng.uniform(lambda_lo, lambda_hi);
    const double s = rng.uniform(s_lo, s_hi);
    const double phi = rng.uniform(phi_margin, two_pi - phi_margin);
    return rect_of_hyp(HypCoords{lambda, phi, s});
}

ANPoint admissible_an(Rng& rng, double lambda_lo, double lambda_hi, double boost_range) {
    const double lambda = rng.log_uniform(lambda_lo, lambda_hi);
    return dress(lambda, group_element(rng, boost_range)).b_prime;
}

GElement group_element(Rng& rng, double boost_range) {
    const double alpha = rng.angle();
    const double beta = rng.angle();
    const double r = rng.uniform(0.0, boost_range);
    return GElement::boost(r, alpha, beta);
}

Vec3 box_point(Rng& rng) {
    return {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

} // namespace sampling

namespace {

using sampling::stream;

struct Worst {
    double defect = 0.0;
    std::vector<double> point;

    void offer(double d, const Vec3& p) {
        if (d >= defect) {
            defect = d;
            point = {p[0], p[1], p[2]};
        }
    }
    void offer4(double d, const Vec4& p) {
        if (d >= defect) {
            defect = d;
            point = {p[0], p[1], p[2], p[3]};
        }
    }
};

// --- per-suite sweeps: defect at sample index i --------------------------

void sweep_jacobi(long n, std::uint64_t seed, Worst& w) {
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "jacobi", static_cast<std::uint64_t>(i));
        const Vec3 free_pt = sampling::box_point(rng);
        w.offer(jacobi_defect(StructureId::pi0(), Chart::RectQStar, free_pt), free_pt);
        const Vec3 an_pt = sampling::box_point(rng);
        w.offer(jacobi_defect(StructureId::pi_an(), Chart::RectAN, an_pt), an_pt);
        const QStarPoint p = sampling::admissible_qstar(rng, 0.1, 1.5, 0.0, 1.5);
        w.offer(jacobi_defect(StructureId::pi_adm(), Chart::RectQStar, p.coords()), p.coords());
        const double t = rng.uniform(0.5, 1.5);
        w.offer(jacobi_defect(StructureId::pi_t(t), Chart::RectQStar, p.coords()), p.coords());
        const Vec3 q = exp_q(p).coords();
        w.offer(jacobi_defect(StructureId::pi_q(), Chart::RectQ, q), q);
    }
}

void sweep_casimir(long n, std::uint64_t seed, Worst& w) {
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "casimir", static_cast<std::uint64_t>(i));
        const auto mode = GradientMode::Analytic;
        const Vec3 free_pt = sampling::box_point(rng);
        w.offer(casimir_defect(StructureId::pi0(), free_pt, mode), free_pt);
        const Vec3 an_pt = sampling::box_point(rng);
        w.offer(casimir_defect(StructureId::pi_an(), an_pt, mode), an_pt);
        const QStarPoint p = sampling::admissible_qstar(rng, 0.1, 1.5, 0.0, 1.5);
        w.offer(casimir_defect(StructureId::pi_adm(), p.coords(), mode), p.coords());
        const double t = rng.uniform(0.5, 1.5);
        w.offer(casimir_defect(StructureId::pi_t(t), p.coords(), mode), p.coords());
        const Vec3 q = exp_q(p).coords();
        w.offer(casimir_defect(StructureId::pi_q(), q, mode), q);
    }
}

void sweep_sym(long n, std::uint64_t seed, Worst& w, JacobianMode mode) {
    const char* tag = (mode == JacobianMode::Analytic) ? "sym-pushforward" : "logsym-pushforward";
    const DiffMap map = (mode == JacobianMode::Analytic) ? map_sym() : map_log_sym();
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, tag, static_cast<std::uint64_t>(i));
        const ANPoint b = sampling::admissible_an(rng, 0.05, 3.0, 1.0);
        const Bivector3 pushed = pushforward(map, StructureId::pi_an(), b.coords(), mode);
        const Bivector3 target =
            (mode == JacobianMode::Analytic)
                ? tensor_at(StructureId::pi_q(), Chart::RectQ, sym(b).coords())
                : tensor_at(StructureId::pi_adm(), Chart::RectQStar, log_q(sym(b)).coords());
        w.offer(distance_inf(pushed, target), b.coords());
    }
}

void sweep_fr(long n, std::uint64_t seed, Worst& w) {
    const DiffMap map = map_fr();
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "fr-map", static_cast<std::uint64_t>(i));
        const QStarPoint p = sampling::admissible_qstar(rng, 0.1, 2.0, 0.05, 1.5);
        const Bivector3 pushed =
            pushforward(map, StructureId::pi0(), p.coords(), JacobianMode::FiniteDifference);
        const Bivector3 target = tensor_at(StructureId::pi_q(), Chart::RectQ, fr_map(p).coords());
        w.offer(distance_inf(pushed, target), p.coords());
    }
}

void sweep_gw(long n, std::uint64_t seed, Worst& w) {
    const FlowConfig cfg{};
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "gw-flow", static_cast<std::uint64_t>(i));
        const QStarPoint p = sampling::admissible_qstar(rng, 0.1, 3.0, 0.0, 3.0);
        w.offer(verify_gw(p, cfg), p.coords());
    }
}

void sweep_pig(long n, std::uint64_t seed, Worst& w, double kappa) {
    constexpr PigEntry entries[4] = {PigEntry::U, PigEntry::UBar, PigEntry::V, PigEntry::VBar};
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "pig", static_cast<std::uint64_t>(i));
        const GElement g = sampling::group_element(rng, 2.0);
        const Mat4 tensor = pig_tensor(g);
        double worst = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                const Complex want = pig_bracket(entries[a], entries[b], g);
                const Complex got = kappa * pig_tensor_bracket(tensor, entries[a], entries[b]);
                worst = std::max(worst, std::abs(want - got));
            }
        w.offer4(worst, {g.u.real(), g.u.imag(), g.v.real(), g.v.imag()});
    }
}

void sweep_dressing(long n, std::uint64_t seed, Worst& w) {
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "dressing", static_cast<std::uint64_t>(i));
        const double z = rng.log_uniform(0.05, 3.0);
        const GElement g = sampling::group_element(rng, 2.0);
        const DressResult d = dress(z, g);
        const ANPoint diag{z, 0.0, 0.0};
        const Mat2C lhs = to_matrix(diag) * to_matrix(g);
        const Mat2C rhs = to_matrix(d.g_prime) * to_matrix(d.b_prime);
        const double identity_res = norm_inf(lhs - rhs);
        const double spectrum_res = std::abs(adm_spectrum_an(d.b_prime) - z);
        const Mat2C gm = to_matrix(g);
        const Mat2C conjugated = gm.inverse() * to_matrix(sym(diag)) * gm;
        const double conj_res = norm_inf(to_matrix(sym(d.b_prime)) - conjugated);
        w.offer(std::max({identity_res, spectrum_res, conj_res}),
                {z, g.u.real(), g.v.real()});
    }
}

void sweep_thompson(long n, std::uint64_t seed, Worst& w) {
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "thompson", static_cast<std::uint64_t>(i));
        const ANPoint b1 = sampling::admissible_an(rng, 0.05, 3.0, 2.0);
        const ANPoint b2 = sampling::admissible_an(rng, 0.05, 3.0, 2.0);
        double violation;
        try {
            violation = std::max(0.0, -thompson_defect(b1, b2));
        } catch (const domain_error&) {
            // A non-admissible product would disprove the closure lemma.
            violation = std::numeric_limits<double>::infinity();
        }
        w.offer(violation, b1.coords());
    }
}

void sweep_linear(long n, std::uint64_t seed, Worst& w) {
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "linear-thompson", static_cast<std::uint64_t>(i));
        const QStarPoint m1 = sampling::admissible_qstar(rng, 0.05, 3.0, 0.0, 3.0);
        const QStarPoint m2 = sampling::admissible_qstar(rng, 0.05, 3.0, 0.0, 3.0);
        w.offer(std::max(0.0, -linear_defect(m1, m2)), m1.coords());
    }
}

void sweep_charts(long n, std::uint64_t seed, Worst& w) {
    const DiffMap gtstar = map_gtstar();
    const DiffMap gtq = map_gtq();
    const DiffMap hyp = map_hyp();
    for (long i = 0; i < n; ++i) {
        Rng rng = stream(seed, "charts", static_cast<std::uint64_t>(i));
        // Away from the axis and from the angular cut so finite
        // differences stay inside one branch of theta/phi.
        const QStarPoint p = sampling::admissible_qstar(rng, 0.1, 3.0, 0.2, 3.0, 0.1);
        const Bivector3 gt_pushed =
            pushforward(gtstar, StructureId::pi0(), p.coords(), JacobianMode::FiniteDifference);
        double worst = distance_inf(gt_pushed, Bivector3{Chart::GTStar, 0.0, -1.0, 0.0});

        const QPoint q = exp_q(p);
        const Bivector3 gtq_pushed =
            pushforward(gtq, StructureId::pi_q(), q.coords(), JacobianMode::FiniteDifference);
        worst = std::max(worst,
                         distance_inf(gtq_pushed, Bivector3{Chart::GTQ, 0.0, -1.0, 0.0}));

        const Bivector3 hyp_pushed =
            pushforward(hyp, StructureId::pi_adm(), p.coords(), JacobianMode::FiniteDifference);
        const Bivector3 hyp_target =
            tensor_at(StructureId::pi_adm(), Chart::Hyperbolic, hyp_of_rect(p).coords());
        worst = std::max(worst, distance_inf(hyp_pushed, hyp_target));
        w.offer(worst, p.coords());
    }
}

} // namespace

double pig_fitted_kappa() {
    // One generic group element; the fit uses {u, ubar}, which is pure
    // imaginary and proportional to |v|^2.
    const GElement g0 = GElement::boost(0.8, 0.5, 1.3);
    const Complex table = pig_bracket(PigEntry::U, PigEntry::UBar, g0);
    const Complex built = pig_tensor_bracket(pig_tensor(g0), PigEntry::U, PigEntry::UBar);
    return table.imag() / built.imag();
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = {
        {"jacobi", 1000, 1e-12, "cyclic Jacobi sum, analytic coefficient partials"},
        {"casimir", 1000, 1e-12, "max_i |{C, x_i}| with analytic gradients"},
        {"sym-pushforward", 1000, 1e-10, "|Sym_* piAN - piQ o Sym|_inf, analytic Jacobian"},
        {"logsym-pushforward", 1000, 1e-6, "|(log o Sym)_* piAN - pi|_inf, fd Jacobian"},
        {"fr-map", 1000, 1e-6, "|f_* pi0 - piQ o f|_inf, fd Jacobian"},
        {"gw-flow", 100, 1e-3, "relative |(phi_1)_* pi0 - pi|_inf at the flow image"},
        {"pig", 1000, 1e-10, "bracket table vs kappa * wedge construction, 6 entry pairs"},
        {"dressing", 1000, 1e-11,
         "max of factorization residual, spectrum invariance, conjugation residual"},
        {"thompson", 100000, 1e-9, "violation max(0, gamma1+gamma2-gamma(b1 b2))"},
        {"linear-thompson", 100000, 1e-12, "violation max(0, lambda1+lambda2-lambda(M1+M2))"},
        {"charts", 1000, 1e-8, "pushforward vs constant GT forms and the hyperbolic form"},
    };
    return registry;
}

bool is_known_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& info : suite_registry())
        if (info.name == name) return true;
    return false;
}

VerificationReport run_suite(const std::string& suite, long samples, std::uint64_t seed,
                             double tolerance, SuiteExtras* extras) {
    const auto start = std::chrono::steady_clock::now();
    Worst w;
    if (suite == "jacobi") {
        sweep_jacobi(samples, seed, w);
    } else if (suite == "casimir") {
        sweep_casimir(samples, seed, w);
    } else if (suite == "sym-pushforward") {
        sweep_sym(samples, seed, w, JacobianMode::Analytic);
    } else if (suite == "logsym-pushforward") {
        sweep_sym(samples, seed, w, JacobianMode::FiniteDifference);
    } else if (suite == "fr-map") {
        sweep_fr(samples, seed, w);
    } else if (suite == "gw-flow") {
        sweep_gw(samples, seed, w);
    } else if (suite == "pig") {
        const double kappa = pig_fitted_kappa();
        if (extras) extras->kappa = kappa;
        sweep_pig(samples, seed, w, kappa);
    } else if (suite == "dressing") {
        sweep_dressing(samples, seed, w);
    } else if (suite == "thompson") {
        sweep_thompson(samples, seed, w);
    } else if (suite == "linear-thompson") {
        sweep_linear(samples, seed, w);
    } else if (suite == "charts") {
        sweep_charts(samples, seed, w);
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    const auto stop = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = suite;
    r.samples = samples;
    r.seed = seed;
    r.tolerance = tolerance;
    r.max_defect = w.defect;
    r.worst_point = w.point;
    r.pass = w.defect <= tolerance;
    r.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return r;
}

VerificationReport run_suite_defaults(const std::string& suite, std::uint64_t seed) {
    for (const auto& info : suite_registry())
        if (info.name == suite)
            return run_suite(suite, info.default_samples, seed, info.default_tolerance);
    throw std::invalid_argument("run_suite_defaults: unknown suite '" + suite + "'");
}

std::vector<VerificationReport> run_all(std::optional<long> samples, std::uint64_t seed,
                                        std::optional<double> tolerance) {
    std::vector<VerificationReport> out;
    out.reserve(suite_registry().size());
    for (const auto& info : suite_registry())
        out.push_back(run_suite(info.name, samples.value_or(info.default_samples), seed,
                                tolerance.value_or(info.default_tolerance)));
    return out;
}

} // namespace su11
