#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

#ifndef SU11_CLI_PATH
#error "SU11_CLI_PATH must point at the built binary"
#endif

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/su11_test_stdout.txt";
    const std::string err_path = "/tmp/su11_test_stderr.txt";
    const std::string cmd =
        std::string(SU11_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_path), slurp(err_path)};
}

std::string strip_wall_time(std::string text) {
    static const std::regex wall(R"("wall_time_ms":\d+)");
    return std::regex_replace(text, wall, "\"wall_time_ms\":0");
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("verify: pass, fail, and usage exit codes") {
    const RunResult pass = run("verify --suite jacobi --samples 50 --seed 1 --tol 1e-9");
    CHECK(pass.exit_code == 0);
    CHECK(count_lines(pass.out) == 1);
    CHECK(pass.out.find("\"suite\":\"jacobi\"") != std::string::npos);
    CHECK(pass.out.find("\"pass\":true") != std::string::npos);

    // Failure still emits the report.
    const RunResult fail = run("verify --suite jacobi --samples 50 --seed 1 --tol 1e-300");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("\"pass\":false") != std::string::npos);

    const RunResult unknown = run("verify --suite nope --samples 5");
    CHECK(unknown.exit_code == 2);

    const RunResult missing = run("verify");
    CHECK(missing.exit_code == 2);

    const RunResult badflag = run("verify --suite jacobi --wat 3");
    CHECK(badflag.exit_code == 2);

    const RunResult negative = run("verify --suite jacobi --samples -5");
    CHECK(negative.exit_code == 2);
}

TEST_CASE("verify: reports are byte-identical apart from wall time") {
    const std::string args = "verify --suite dressing --samples 60 --seed 9";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));
}

TEST_CASE("verify: --json mirrors standard output") {
    const std::string path = "/tmp/su11_report.json";
    std::remove(path.c_str());
    const RunResult r = run("verify --suite charts --samples 20 --seed 4 --json " + path);
    CHECK(r.exit_code == 0);
    CHECK(slurp(path) == r.out);
}

TEST_CASE("verify all: one report per suite, equal to separate runs") {
    const RunResult all = run("verify --suite all --samples 10 --seed 13");
    CHECK(all.exit_code == 0);
    CHECK(count_lines(all.out) == 11);

    std::istringstream lines(all.out);
    std::string line;
    std::getline(lines, line); // first suite is jacobi
    const RunResult solo = run("verify --suite jacobi --samples 10 --seed 13");
    CHECK(strip_wall_time(line + "\n") == strip_wall_time(solo.out));
}

TEST_CASE("verify all with zero samples trivially passes") {
    const RunResult r = run("verify --suite all --samples 0 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"max_defect\":0") != std::string::npos);
    CHECK(r.out.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("map subcommand") {
    const RunResult sym = run("map --which sym --point 0,0,0");
    CHECK(sym.exit_code == 0);
    CHECK(sym.out == "0 0 1\n");

    const RunResult log = run("map --which log --point 0,0,2.718281828459045");
    CHECK(log.exit_code == 0);
    double x = 1, y = 1, z = 0;
    CHECK(std::sscanf(log.out.c_str(), "%lf %lf %lf", &x, &y, &z) == 3);
    CHECK(std::abs(x) < 1e-12);
    CHECK(std::abs(y) < 1e-12);
    CHECK(std::abs(z - 1.0) < 1e-12);

    const RunResult fr = run("map --which fr --point 0,0,1");
    CHECK(fr.exit_code == 0);
    CHECK(std::sscanf(fr.out.c_str(), "%lf %lf %lf", &x, &y, &z) == 3);
    CHECK(std::abs(z - 2.718281828459045) < 1e-12);

    const RunResult gw = run("map --which gw --point 0.3,0.1,1.2");
    CHECK(gw.exit_code == 0);
    CHECK(gw.out.find("lambda ") != std::string::npos);

    // Non-admissible input: domain failure.
    const RunResult bad = run("map --which log --point 0,0,0.5");
    CHECK(bad.exit_code == 1);
    // Unknown map name and malformed point: usage errors.
    CHECK(run("map --which nope --point 0,0,1").exit_code == 2);
    CHECK(run("map --which sym --point 1,2").exit_code == 2);
    CHECK(run("map --which sym --point a,b,c").exit_code == 2);
}

TEST_CASE("spectrum subcommand") {
    const RunResult diag = run("spectrum --point 1,0,0");
    CHECK(diag.exit_code == 0);
    CHECK(std::abs(std::stod(diag.out) - 1.0) < 1e-14);

    const RunResult off = run("spectrum --point 1,0.5,0");
    CHECK(off.exit_code == 0);
    CHECK(std::abs(std::stod(off.out) - 0.885230133126649) < 1e-11);

    const RunResult bad = run("spectrum --point 0.1,1,1");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("Delta") != std::string::npos);
}

TEST_CASE("flow subcommand") {
    const std::string path = "/tmp/su11_flow.csv";
    std::remove(path.c_str());
    const RunResult single = run("flow --lambdas 1 --s 0 --out " + path);
    CHECK(single.exit_code == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("x,y,z,gw_x,gw_y,gw_z,lambda,defect\n", 0) == 0);
    CHECK(count_lines(csv) == 2);
    // Axis point: image equals input, defect below the flow tolerance.
    double vals[8];
    CHECK(std::sscanf(csv.c_str() + csv.find('\n') + 1,
                      "%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf", &vals[0], &vals[1], &vals[2],
                      &vals[3], &vals[4], &vals[5], &vals[6], &vals[7]) == 8);
    CHECK(vals[0] == 0.0);
    CHECK(vals[2] == 1.0);
    CHECK(vals[3] == 0.0);
    CHECK(vals[5] == 1.0);
    CHECK(vals[7] < 1e-3);

    const RunResult grid = run("flow --lambdas 0.5,1,2 --s 0.2,0.7,1.4 --out " + path);
    CHECK(grid.exit_code == 0);
    CHECK(count_lines(slurp(path)) == 10);

    const std::string first = slurp(path);
    CHECK(run("flow --lambdas 0.5,1,2 --s 0.2,0.7,1.4 --out " + path).exit_code == 0);
    CHECK(slurp(path) == first);

    CHECK(run("flow --lambdas 1 --s 0 --out /nonexistent-dir/x.csv").exit_code == 1);
    CHECK(run("flow --lambdas 1 --out /tmp/x.csv").exit_code == 2);
}

TEST_CASE("no subcommand is a usage error") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
