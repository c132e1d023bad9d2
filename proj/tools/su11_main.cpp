#include "su11/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace su11;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double parse_number(const std::string& part) {
    try {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size()) throw CLI::ValidationError("bad number '" + part + "'");
        return v;
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad number '" + part + "'");
    }
}

std::array<double, 3> parse_triple(const std::string& text) {
    std::array<double, 3> out{};
    std::stringstream ss(text);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, part, ',')) throw CLI::ValidationError("expected X,Y,Z");
        out[i] = parse_number(part);
    }
    if (std::getline(ss, part, ',')) throw CLI::ValidationError("expected exactly 3 values");
    return out;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_number(part));
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated list");
    return out;
}

int cmd_verify(const std::string& suite, long samples, std::uint64_t seed, double tol,
               bool samples_set, bool tol_set, const std::string& json_path) {
    std::optional<long> samples_opt = samples_set ? std::optional<long>(samples) : std::nullopt;
    std::optional<double> tol_opt = tol_set ? std::optional<double>(tol) : std::nullopt;
    if (samples_opt && *samples_opt < 0) {
        std::cerr << "error: --samples must be nonnegative\n";
        return kExitUsage;
    }
    std::vector<VerificationReport> reports;
    if (suite == "all") {
        reports = run_all(samples_opt, seed, tol_opt);
    } else {
        for (const auto& info : suite_registry()) {
            if (info.name != suite) continue;
            reports.push_back(run_suite(suite, samples_opt.value_or(info.default_samples), seed,
                                        tol_opt.value_or(info.default_tolerance)));
        }
        if (reports.empty()) {
            std::cerr << "error: unknown suite '" << suite << "'\n";
            return kExitUsage;
        }
    }
    std::ostringstream body;
    bool all_pass = true;
    for (const VerificationReport& r : reports) {
        body << to_json(r) << "\n";
        std::cerr << summary_line(r) << "\n";
        if (r.suite == "pig")
            std::cerr << "  fitted kappa = " << format_double(pig_fitted_kappa()) << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << body.str();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return kExitFail;
        }
        out << body.str();
    }
    return all_pass ? kExitPass : kExitFail;
}

int cmd_map(const std::string& which, const std::array<double, 3>& pt) {
    std::ostringstream os;
    if (which == "sym") {
        const QPoint q = sym(ANPoint{pt[0], pt[1], pt[2]});
        os << format_double(q.a) << " " << format_double(q.b) << " " << format_double(q.c);
    } else if (which == "exp") {
        const QPoint q = exp_q(QStarPoint{pt[0], pt[1], pt[2]});
        os << format_double(q.a) << " " << format_double(q.b) << " " << format_double(q.c);
    } else if (which == "log") {
        const QStarPoint p = log_q(QPoint{pt[0], pt[1], pt[2]});
        os << format_double(p.x) << " " << format_double(p.y) << " " << format_double(p.z);
    } else if (which == "fr") {
        const QPoint q = fr_map(QStarPoint{pt[0], pt[1], pt[2]});
        os << format_double(q.a) << " " << format_double(q.b) << " " << format_double(q.c);
    } else {
        const QStarPoint p{pt[0], pt[1], pt[2]};
        const QStarPoint image = gw_flow(p, FlowConfig{});
        os << format_double(image.x) << " " << format_double(image.y) << " "
           << format_double(image.z) << "\n";
        os << "lambda " << format_double(p.lambda()) << " -> "
           << format_double(image.lambda());
    }
    std::cout << os.str() << "\n";
    return kExitPass;
}

int cmd_spectrum(const std::array<double, 3>& pt) {
    const double gamma = adm_spectrum_an(ANPoint{pt[0], pt[1], pt[2]});
    std::cout << format_double(gamma) << "\n";
    return kExitPass;
}

int cmd_flow(const std::vector<double>& lambdas, const std::vector<double>& svals,
             const std::string& out_path) {
    const FlowConfig cfg{};
    std::ostringstream body;
    body << "x,y,z,gw_x,gw_y,gw_z,lambda,defect\n";
    for (double lambda : lambdas)
        for (double s : svals) {
            const QStarPoint p = rect_of_hyp(HypCoords{lambda, 0.0, s});
            const QStarPoint image = gw_flow(p, cfg);
            const double defect = verify_gw(p, cfg);
            body << format_double(p.x) << "," << format_double(p.y) << ","
                 << format_double(p.z) << "," << format_double(image.x) << ","
                 << format_double(image.y) << "," << format_double(image.z) << ","
                 << format_double(lambda) << "," << format_double(defect) << "\n";
        }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitFail;
    }
    out << body.str();
    std::cerr << "wrote " << lambdas.size() * svals.size() << " rows to " << out_path << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson structures on SU(1,1): verification suites, maps, spectra"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    long samples = 0;
    std::uint64_t seed = 42;
    double tol = 0.0;
    std::string json_path;
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    auto* samples_opt = verify->add_option("--samples", samples, "samples per suite");
    verify->add_option("--seed", seed, "RNG seed");
    auto* tol_opt = verify->add_option("--tol", tol, "defect tolerance");
    verify->add_option("--json", json_path, "also write the report(s) to this file");

    auto* map_cmd = app.add_subcommand("map", "apply one map to a point");
    std::string which;
    std::string point_text;
    map_cmd->add_option("--which", which, "sym|exp|log|fr|gw")
        ->required()
        ->check(CLI::IsMember({"sym", "exp", "log", "fr", "gw"}));
    map_cmd->add_option("--point", point_text, "X,Y,Z")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "admissible spectrum of an AN point");
    std::string spectrum_text;
    spectrum_cmd->add_option("--point", spectrum_text, "Z,X,Y")->required();

    auto* flow_cmd = app.add_subcommand("flow", "tabulate the connecting flow on a grid");
    std::string lambdas_text, s_text, out_path;
    flow_cmd->add_option("--lambdas", lambdas_text, "L1,L2,...")->required();
    flow_cmd->add_option("--s", s_text, "S1,S2,...")->required();
    flow_cmd->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (!is_known_suite(suite)) {
                std::cerr << "error: unknown suite '" << suite << "'\n";
                return kExitUsage;
            }
            return cmd_verify(suite, samples, seed, tol, samples_opt->count() > 0,
                              tol_opt->count() > 0, json_path);
        }
        if (map_cmd->parsed()) return cmd_map(which, parse_triple(point_text));
        if (spectrum_cmd->parsed()) return cmd_spectrum(parse_triple(spectrum_text));
        if (flow_cmd->parsed()) return cmd_flow(parse_list(lambdas_text), parse_list(s_text), out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const su11::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
