// End-to-end tests of the lfframes binary: exit codes, report JSON,
// determinism, the report -> config -> report round trip, and the CSV
// transform pipeline. Invoked by ctest with the binary path as argv[1].

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("[ok] %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++failures;
    }
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

RunResult run(const std::string& cmd) {
    const std::string out_path = "/tmp/lfframes_cli_stdout";
    const std::string err_path = "/tmp/lfframes_cli_stderr";
    const int status = std::system((cmd + " > " + out_path + " 2> " + err_path).c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-lfframes>\n");
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";

    const std::string haar_cfg = "/tmp/lfframes_cli_haar.json";
    spit(haar_cfg, R"({"field":{"p":2,"c":1},"grid":{"M":3,"N":3},"seed":7})");
    const std::string doubled_cfg = "/tmp/lfframes_cli_doubled.json";
    spit(doubled_cfg,
         R"({"field":{"p":2},"grid":{"M":3,"N":3},"seed":7,
             "primal":{"kind":"scaled","base":{"kind":"haar"},"factors":{"1":2.0}},
             "dual":{"kind":"scaled","base":{"kind":"haar"},"factors":{"1":2.0}}})");

    // a valid pair passes with exit 0
    const RunResult good = run(bin + " check --config " + haar_cfg);
    expect(good.exit_code == 0, "haar check exits 0");
    expect(good.out.find("overall: pass") != std::string::npos, "haar check reports pass");

    // the doubled pair fails with exit 1 and the derived t_0 deviation
    const std::string report1 = "/tmp/lfframes_cli_report1.json";
    const RunResult bad = run(bin + " check --config " + doubled_cfg + " --json " + report1);
    expect(bad.exit_code == 1, "doubled check exits 1");
    {
        const nlohmann::json rep = nlohmann::json::parse(slurp(report1));
        const double t0_dev = rep["t_check"]["per_k"][0]["max_dev"].get<double>();
        expect(std::abs(t0_dev - 3.0) <= 1e-12, "report t_0 deviation equals 3");
        expect(std::abs(rep["bessel"]["primal"]["D"].get<double>() - 4.0) <= 1e-6,
               "report upper bound equals 4");
        expect(rep["overall"] == "fail", "report overall is fail");
    }

    // config errors exit 2 and name the violated constraint
    const std::string bad_cfg = "/tmp/lfframes_cli_bad.json";
    spit(bad_cfg, R"({"field":{"p":2},"grid":{"M":3,"N":3},"ranges":{"K_max":1000},
                      "primal":{"kind":"sinc"}})");
    const RunResult invalid = run(bin + " check --config " + bad_cfg);
    expect(invalid.exit_code == 2, "invalid config exits 2");
    expect(invalid.err.find("K_max must be <= q^N") != std::string::npos,
           "violation names the K_max constraint");
    expect(invalid.err.find("haar") != std::string::npos, "violation lists the builtins");
    const RunResult missing = run(bin + " check --config /tmp/does_not_exist.json");
    expect(missing.exit_code == 2, "missing config exits 2");

    // identical config + seed => byte-identical reports
    const std::string report2 = "/tmp/lfframes_cli_report2.json";
    run(bin + " check --config " + doubled_cfg + " --json " + report2);
    expect(slurp(report1) == slurp(report2), "reports are byte-identical across runs");

    // a report's embedded config reproduces the report
    {
        const nlohmann::json rep = nlohmann::json::parse(slurp(report1));
        const std::string cfg_path = "/tmp/lfframes_cli_embedded.json";
        spit(cfg_path, rep["config"].dump());
        const std::string report3 = "/tmp/lfframes_cli_report3.json";
        run(bin + " check --config " + cfg_path + " --json " + report3);
        const nlohmann::json rep3 = nlohmann::json::parse(slurp(report3));
        expect(rep == rep3, "embedded config reproduces the report");
    }

    // bounds emits the Gram bounds as JSON
    const RunResult bounds = run(bin + " bounds --config " + doubled_cfg);
    {
        const nlohmann::json b = nlohmann::json::parse(bounds.out);
        expect(std::abs(b["primal"]["D"].get<double>() - 4.0) <= 1e-6, "bounds D equals 4");
        expect(b["ranges"]["K_max"] == 8, "bounds echoes the ranges");
    }

    // u-table in CSV form
    const RunResult table = run(bin + " table u --count 8 --csv");
    expect(table.exit_code == 0, "table u exits 0");
    expect(table.out.find("3,\"p^-2 + p^-1\",4,0") != std::string::npos,
           "table lists u(3) with norm 4 and kappa 0");
    expect(table.out.find("0,\"0\",0,inf") != std::string::npos, "table lists u(0) = 0");

    // transform round trip through CSV tables
    {
        std::string csv = "cell,re,im\n";
        uint64_t state = 5;
        for (int cell = 0; cell < 64; ++cell) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const double re = double(int64_t(state >> 33)) / double(1LL << 30) - 1.0;
            csv += std::to_string(cell) + "," + std::to_string(re) + ",0.125\n";
        }
        const std::string in_path = "/tmp/lfframes_cli_fn.csv";
        spit(in_path, csv);
        const std::string mid_path = "/tmp/lfframes_cli_hat.csv";
        const std::string out_path = "/tmp/lfframes_cli_back.csv";
        const RunResult fwd = run(bin + " transform --config " + haar_cfg + " --in " + in_path +
                                  " --out " + mid_path + " --fast");
        expect(fwd.exit_code == 0, "forward transform exits 0");
        const RunResult inv = run(bin + " transform --config " + haar_cfg + " --in " + mid_path +
                                  " --out " + out_path + " --inverse");
        expect(inv.exit_code == 0, "inverse transform exits 0");

        std::ifstream orig(in_path), back(out_path);
        std::string lo, lb;
        std::getline(orig, lo);
        std::getline(back, lb);
        bool close = true;
        while (std::getline(orig, lo) && std::getline(back, lb)) {
            double re1, im1, re2, im2;
            unsigned long long c1, c2;
            std::sscanf(lo.c_str(), "%llu,%lg,%lg", &c1, &re1, &im1);
            std::sscanf(lb.c_str(), "%llu,%lg,%lg", &c2, &re2, &im2);
            close = close && c1 == c2 && std::abs(re1 - re2) < 1e-12 &&
                    std::abs(im1 - im2) < 1e-12;
        }
        expect(close, "transform round trip restores the input table");
    }

    // selftest is green
    const RunResult selftest = run(bin + " selftest");
    expect(selftest.exit_code == 0, "selftest exits 0");
    expect(selftest.out.find("all suites passed") != std::string::npos,
           "selftest prints the summary");

    if (failures == 0) std::printf("all cli tests passed\n");
    return failures == 0 ? 0 : 1;
}
