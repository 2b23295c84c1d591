// Behavior checks for the command-line tool. Usage: test_cli <path-to-binary>

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cout << "FAIL: " << what << '\n';
    }
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// second CSV line, split on commas
std::vector<std::string> csv_row(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    return fields;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "FAIL: missing path to binary\n";
        return 1;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const fs::path tmp = fs::temp_directory_path() /
                         ("trichi_cli_test_" + std::to_string(getpid()));
    fs::create_directories(tmp);

    // --- chi ---
    {
        auto r = run(cli + " chi 9 10 11");
        check(r.exit_code == 0, "chi exits 0");
        check(r.out.find("7.40740740741e-05") != std::string::npos, "chi value printed");
        check(r.out.find("left") != std::string::npos, "chi handedness printed");
        check(r.out.find("scalene") != std::string::npos, "chi symmetry printed");
        check(r.out.find("strict") != std::string::npos, "chi status printed");
    }
    {
        auto r = run(cli + " chi 5 5 5");
        check(r.out.find("achiral") != std::string::npos, "equilateral is achiral");
        check(r.out.find("equilateral") != std::string::npos, "equilateral class");
    }
    {
        auto r = run(cli + " chi 1 2 8");
        check(r.out.find("non_triangle") != std::string::npos, "non-triangle status");
        check(r.out.find("3.15552216379e-02") != std::string::npos, "generalized value");
    }
    check(run(cli + " chi 0 5 5 2>/dev/null").exit_code == 2, "non-positive side exits 2");
    check(run(cli + " chi x 5 5 2>/dev/null").exit_code == 2, "non-numeric side exits 2");
    check(run(cli + " chi 1 2 2>/dev/null").exit_code == 2, "missing side exits 2");
    check(run(cli + " nonsense 2>/dev/null").exit_code == 2, "unknown subcommand exits 2");
    check(run(cli + " --help").exit_code == 0, "--help exits 0");

    // csv and json agree at 12 significant digits
    {
        auto rc = run(cli + " chi 9 10 11");
        auto rj = run(cli + " chi 9 10 11 --format json");
        const auto fields = csv_row(rc.out);
        const auto j = nlohmann::json::parse(rj.out);
        check(fields.size() == 4, "chi csv has 4 fields");
        check(std::stod(fields[0]) == j["chi"].get<double>(), "chi csv == json value");
        check(j["handedness"] == "left", "json handedness");
    }

    // --- phase-grid ---
    {
        auto r = run(cli + " phase-grid --resolution 2");
        check(r.exit_code == 0, "phase-grid exits 0");
        int lines = 0;
        for (char ch : r.out) lines += ch == '\n';
        check(lines == 4, "resolution 2 emits header + 3 cells");
    }
    {
        const auto f1 = tmp / "grid1.csv";
        const auto f2 = tmp / "grid2.csv";
        check(run(cli + " phase-grid --resolution 51 --out " + f1.string()).exit_code == 0,
              "phase-grid --out exits 0");
        run(cli + " phase-grid --resolution 51 --out " + f2.string());
        const auto s1 = read_file(f1);
        check(!s1.empty() && s1 == read_file(f2), "phase-grid is byte-deterministic");
        check(s1.rfind("a_bar,b_bar,c_bar,chi,segment,in_triangle\n", 0) == 0,
              "phase-grid csv header");
    }
    check(run(cli + " phase-grid --resolution 1 2>/dev/null").exit_code == 2,
          "resolution 1 exits 2");
    check(run(cli + " phase-grid --out /nonexistent_dir_zz/x.csv 2>/dev/null").exit_code == 3,
          "unwritable output exits 3");

    // --- simulate ---
    {
        const auto f = tmp / "hist.csv";
        auto r = run(cli + " simulate --base 5 --rel-sigma 0 --n 100 --seed 1 --out " + f.string());
        check(r.exit_code == 0, "simulate exits 0");
        check(r.out.find("mean_abs_chi 0.00000000000e+00") != std::string::npos,
              "zero noise gives zero mean");
        const auto hist = read_file(f);
        check(hist.rfind("bin_lower,bin_upper,count\n", 0) == 0, "histogram csv header");
    }
    {
        const auto f1 = tmp / "h1.csv";
        const auto f2 = tmp / "h2.csv";
        run(cli + " simulate --rel-sigma 0.2 --n 5000 --seed 9 --out " + f1.string());
        run(cli + " simulate --rel-sigma 0.2 --n 5000 --seed 9 --out " + f2.string());
        check(read_file(f1) == read_file(f2), "simulate is byte-deterministic");
        const auto f3 = tmp / "h3.csv";
        run(cli + " simulate --rel-sigma 0.2 --n 5000 --seed 10 --out " + f3.string());
        check(read_file(f1) != read_file(f3), "different seed changes the data");
    }

    // --- table1 ---
    {
        auto r = run(cli + " table1 --errors 0.1 --n 20000 --seed 5");
        check(r.exit_code == 0, "table1 exits 0");
        const auto fields = csv_row(r.out);
        check(fields.size() == 2, "table1 row has 2 fields");
        const double threshold = std::stod(fields[1]);
        check(std::fabs(threshold - 6.40e-5) < 0.1 * 6.40e-5, "single-row threshold near 6.4e-5");
    }
    {
        auto r = run(cli + " table1 --n 2000 --seed 5");
        int lines = 0;
        for (char ch : r.out) lines += ch == '\n';
        check(lines == 12, "default table has 11 rows + header");
    }

    // --- classify ---
    {
        auto r = run(cli + " classify 9 10 11 --rel-error 0.10 --n 50000 --seed 3");
        check(r.exit_code == 0, "classify exits 0");
        const auto fields = csv_row(r.out);
        check(fields.size() == 4, "classify csv has 4 fields");
        check(fields[2] == "true", "9,10,11 at 10% error is significant");
    }
    {
        auto r = run(cli + " classify 5 5 5 --rel-error 0.10 --n 20000 --seed 3");
        check(r.exit_code == 0, "not-significant still exits 0");
        check(csv_row(r.out)[2] == "false", "5,5,5 is never significant");
    }
    {
        auto rj = run(cli + " classify 10 2 8 --rel-error 0.20 --n 50000 --seed 4 --format json");
        const auto j = nlohmann::json::parse(rj.out);
        check(j["significant"] == true, "10,2,8 at 20% error is significant");
        check(j["confidence"] == 0.75, "confidence is 0.75");
    }

    // --- chi-max ---
    {
        auto rc = run(cli + " chi-max");
        check(rc.exit_code == 0, "chi-max exits 0");
        auto rj = run(cli + " chi-max --format json");
        const auto j = nlohmann::json::parse(rj.out);
        const double analytic = j["analytic_chi_max"].get<double>();
        check(std::fabs(analytic - 1.20281306081e-2) < 1e-10, "analytic chi_max value");
        check(j["abs_difference"].get<double>() < 1e-5, "search agrees with analytic");
        check(j["on_boundary"] == true, "maximizer on the degenerate boundary");
        check(std::fabs(analytic - 1.0 / 83.0) < 3e-5, "close to 1/83");
        // csv/json value identity
        const auto fields = csv_row(rc.out);
        check(std::stod(fields[0]) == analytic, "chi-max csv == json value");
    }

    fs::remove_all(tmp);
    if (g_failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cout << g_failures << " cli check(s) failed\n";
    return 1;
}
