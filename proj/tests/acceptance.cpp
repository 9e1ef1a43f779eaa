// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 only if all pass.

#include "hylab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace hylab;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::string suite;
    double time_budget_s; // 0 = none stated
};

bool report(const SuiteReport& rep, const Criterion& c, double seconds) {
    bool pass = rep.pass;
    std::string detail;
    for (const CheckRow& row : rep.rows)
        if (!row.pass) detail += (detail.empty() ? "" : ", ") + row.theorem;
    if (c.time_budget_s > 0.0 && seconds > c.time_budget_s) {
        pass = false;
        detail += (detail.empty() ? "" : ", ") + std::string("time budget exceeded");
    }
    std::printf("[%s] criterion %2d: %-28s (%.1f s%s)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), seconds,
                c.time_budget_s > 0.0
                    ? (" / " + std::to_string(static_cast<int>(c.time_budget_s)) + " s").c_str()
                    : "",
                detail.empty() ? "" : "  failed: ", detail.c_str());
    return pass;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

// criterion 11: byte-identical CSVs from two seeded verify runs, within the
// wall-clock budget
bool determinism_criterion() {
    const char* bin = std::getenv("HYLAB_BIN");
    if (!bin) {
        std::printf("[FAIL] criterion 11: determinism              (HYLAB_BIN not set; cannot "
                    "spawn the CLI)\n");
        return false;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const std::string out1 = "verify_run1.csv", out2 = "verify_run2.csv";
    const std::string cmd1 =
        std::string(bin) + " verify --suite all --seed 42 -o " + out1 + " 2> verify_run1.log";
    const std::string cmd2 =
        std::string(bin) + " verify --suite all --seed 42 -o " + out2 + " 2> verify_run2.log";
    const int rc1 = std::system(cmd1.c_str());
    const int rc2 = std::system(cmd2.c_str());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string c1 = slurp(out1), c2 = slurp(out2);
    const bool identical = !c1.empty() && c1 == c2;
    const bool budget = seconds < 600.0;
    // exit 0 (all green) or 1 (known-red checks) both mean the suite ran to
    // completion; 2/3 mean it crashed, which voids the determinism claim
    const bool ran = WEXITSTATUS(rc1) <= 1 && WEXITSTATUS(rc2) <= 1;
    const bool pass = identical && budget && ran;
    std::printf("[%s] criterion 11: determinism + runtime       (%.1f s / 600 s)%s\n",
                pass ? "PASS" : "FAIL", seconds,
                identical ? "" : "  failed: CSV outputs differ");
    std::remove("verify_run1.log");
    std::remove("verify_run2.log");
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 42;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    const Criterion criteria[] = {
        {1, "eigenvalue integral grid", "acc1", 10.0},
        {2, "exact L2 ray constants", "acc2", 0.0},
        {3, "discretized operator norm", "acc3", 60.0},
        {4, "Mellin Plancherel", "acc4", 0.0},
        {5, "comparison ratios", "acc5", 0.0},
        {6, "p > 2 counterexample", "acc6", 5.0},
        {7, "well-projected certificates", "acc7", 120.0},
        {8, "Poisson/Cauchy bounds", "acc8", 0.0},
        {9, "master theorem ladder", "acc9", 0.0},
        {10, "vertical comb identity", "acc10", 0.0},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteReport rep;
        try {
            rep = run_suite(c.suite, seed);
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.name = c.suite;
            CheckRow row;
            row.theorem = std::string("exception: ") + e.what();
            row.pass = false;
            rep.rows.push_back(row);
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = report(rep, c, seconds) && all;
    }
    all = determinism_criterion() && all;

    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: failures present (see lines above)");
    return all ? 0 : 1;
}
