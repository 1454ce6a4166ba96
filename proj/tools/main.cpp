#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lf/analysis.hpp"
#include "lf/characterization.hpp"
#include "lf/config.hpp"
#include "lf/report.hpp"
#include "lf/selftest.hpp"

namespace {

struct BuiltModel {
    lf::RunConfig cfg;
    std::unique_ptr<lf::FieldSpec> field;
    std::unique_ptr<lf::Grid> grid;
};

BuiltModel build_model(const std::string& config_path) {
    BuiltModel m;
    m.cfg = lf::load_config(config_path);
    if (m.cfg.c == 1)
        m.field = std::make_unique<lf::FieldSpec>(m.cfg.p);
    else
        m.field = std::make_unique<lf::FieldSpec>(m.cfg.p, m.cfg.c, m.cfg.modulus);
    m.grid = std::make_unique<lf::Grid>(*m.field, m.cfg.M, m.cfg.N);
    return m;
}

int cmd_check(const std::string& config_path, const std::string& json_path) {
    const BuiltModel m = build_model(config_path);
    const lf::GeneratorSet primal =
        lf::build_generators(m.cfg.primal, *m.grid, m.cfg.s, lf::Side::primal);
    const lf::GeneratorSet dual =
        lf::build_generators(m.cfg.dual, *m.grid, m.cfg.s, lf::Side::dual);
    const lf::OmegaSet omega = lf::build_omega(m.cfg.omega, *m.grid);
    const lf::Ranges ranges{m.cfg.j_max, m.cfg.k_max};

    const lf::CheckReport report = lf::check_nwbf(primal, dual, omega, ranges,
                                                  m.cfg.tolerances, m.cfg.seed, m.cfg.trials);
    lf::print_report_summary(std::cout, report);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open " + json_path);
        out << lf::serialize_report(report, lf::canonical_config_json(m.cfg)) << "\n";
    }
    return report.overall_pass ? 0 : 1;
}

int cmd_bounds(const std::string& config_path) {
    const BuiltModel m = build_model(config_path);
    const lf::GeneratorSet primal =
        lf::build_generators(m.cfg.primal, *m.grid, m.cfg.s, lf::Side::primal);
    const lf::GeneratorSet dual =
        lf::build_generators(m.cfg.dual, *m.grid, m.cfg.s, lf::Side::dual);
    const lf::Ranges ranges{m.cfg.j_max, m.cfg.k_max};
    const lf::BesselBounds bp = lf::bessel_bounds(primal, ranges);
    const lf::BesselBounds bd = lf::bessel_bounds(dual, ranges);
    std::cout << "{\"ranges\":{\"J_max\":" << m.cfg.j_max << ",\"K_max\":" << m.cfg.k_max
              << "},\"primal\":{\"C\":" << lf::format_double(bp.lower)
              << ",\"D\":" << lf::format_double(bp.upper) << ",\"atoms\":" << bp.atom_count
              << "},\"dual\":{\"C\":" << lf::format_double(bd.lower)
              << ",\"D\":" << lf::format_double(bd.upper) << ",\"atoms\":" << bd.atom_count
              << "}}\n";
    return 0;
}

int cmd_table_u(uint32_t p, uint32_t c, const std::vector<uint32_t>& modulus, uint64_t count,
                bool csv) {
    std::unique_ptr<lf::FieldSpec> field;
    if (c == 1)
        field = std::make_unique<lf::FieldSpec>(p);
    else
        field = std::make_unique<lf::FieldSpec>(p, c, modulus);
    const uint32_t q = field->order();
    if (csv) {
        std::cout << "n,u,norm,kappa\n";
        for (uint64_t n = 0; n < count; ++n) {
            const lf::KNumber u = lf::u_of_n(*field, n);
            const auto kap = lf::kappa(q, n);
            std::cout << n << ",\"" << u.to_string() << "\"," << lf::format_double(lf::k_norm(u))
                      << "," << (kap ? std::to_string(*kap) : "inf") << "\n";
        }
        return 0;
    }
    std::cout << std::left << std::setw(6) << "n" << std::setw(36) << "u(n)" << std::setw(12)
              << "|u(n)|" << "kappa(n)\n";
    for (uint64_t n = 0; n < count; ++n) {
        const lf::KNumber u = lf::u_of_n(*field, n);
        const auto kap = lf::kappa(q, n);
        std::cout << std::left << std::setw(6) << n << std::setw(36) << u.to_string()
                  << std::setw(12) << lf::k_norm(u) << (kap ? std::to_string(*kap) : "inf")
                  << "\n";
    }
    return 0;
}

int cmd_transform(const std::string& config_path, const std::string& in_path,
                  const std::string& out_path, bool inverse, bool fast) {
    const BuiltModel m = build_model(config_path);
    const lf::Domain in_domain = inverse ? lf::Domain::frequency : lf::Domain::time;
    const lf::SampledFunction f = lf::load_function_csv(in_path, *m.grid, in_domain, false);
    lf::SampledFunction out = inverse ? (fast ? lf::inv_fourier_fast(f) : lf::inv_fourier(f))
                                      : (fast ? lf::fourier_fast(f) : lf::fourier(f));
    lf::save_function_csv(out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier analysis and wavelet bi-frame verification on local fields of prime "
                 "characteristic"};
    app.require_subcommand(1);

    std::string config_path, json_path, in_path, out_path;
    bool inverse = false, fast = false, csv = false;
    uint32_t table_p = 2, table_c = 1;
    std::vector<uint32_t> table_modulus;
    uint64_t table_count = 16;

    CLI::App* check = app.add_subcommand("check", "run the full bi-frame verification");
    check->add_option("--config", config_path, "JSON run configuration")->required();
    check->add_option("--json", json_path, "write the JSON report to this path");

    CLI::App* bounds = app.add_subcommand("bounds", "Bessel/frame bounds from the Gram spectrum");
    bounds->add_option("--config", config_path, "JSON run configuration")->required();

    CLI::App* table = app.add_subcommand("table", "print lookup tables");
    CLI::App* table_u = table->add_subcommand("u", "the coset representative map u(n)");
    table_u->add_option("--count", table_count, "number of rows")->capture_default_str();
    table_u->add_option("--p", table_p, "residue field characteristic")->capture_default_str();
    table_u->add_option("--c", table_c, "extension degree")->capture_default_str();
    table_u->add_option("--modulus", table_modulus,
                        "modulus coefficients (lowest first, c > 1 only)");
    table_u->add_flag("--csv", csv, "emit CSV instead of aligned text");

    CLI::App* transform = app.add_subcommand("transform", "transform a CSV function table");
    transform->add_option("--config", config_path, "JSON run configuration (field/grid)")
        ->required();
    transform->add_option("--in", in_path, "input CSV (cell,re,im)")->required();
    transform->add_option("--out", out_path, "output CSV")->required();
    transform->add_flag("--inverse", inverse, "frequency -> time instead");
    transform->add_flag("--fast", fast, "use the radix-q fast path");

    CLI::App* selftest = app.add_subcommand("selftest", "run all module invariant suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(config_path, json_path);
        if (bounds->parsed()) return cmd_bounds(config_path);
        if (table->parsed() && table_u->parsed())
            return cmd_table_u(table_p, table_c, table_modulus, table_count, csv);
        if (transform->parsed())
            return cmd_transform(config_path, in_path, out_path, inverse, fast);
        if (selftest->parsed()) return lf::run_selftest(std::cout) ? 0 : 1;
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const lf::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
