#include "lf/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lf/analysis.hpp"

namespace lf {

using nlohmann::json;

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

std::string ConfigError::join(const std::vector<std::string>& v) {
    std::string s = "invalid configuration:";
    for (const auto& m : v) s += "\n  - " + m;
    return s;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const std::vector<std::string> kGeneratorKinds = {"haar", "scaled", "file"};
const std::vector<std::string> kOmegaKinds = {"full", "ball"};

GeneratorSpec parse_generator(const json& j, const std::string& where,
                              std::vector<std::string>& errors) {
    GeneratorSpec spec;
    if (!j.is_object()) {
        errors.push_back(where + ": generator spec must be an object");
        return spec;
    }
    spec.kind = j.value("kind", "haar");
    if (spec.kind == "haar") {
        // nothing else
    } else if (spec.kind == "scaled") {
        if (!j.contains("base")) {
            errors.push_back(where + ": scaled generator needs a \"base\"");
        } else {
            spec.base = std::make_shared<GeneratorSpec>(
                parse_generator(j.at("base"), where + ".base", errors));
        }
        if (j.contains("factors")) {
            for (const auto& [key, val] : j.at("factors").items()) {
                try {
                    spec.factors[static_cast<uint32_t>(std::stoul(key))] = val.get<double>();
                } catch (const std::exception&) {
                    errors.push_back(where + ": factor key '" + key +
                                     "' is not a generator index");
                }
            }
        }
    } else if (spec.kind == "file") {
        if (!j.contains("psi0"))
            errors.push_back(where + ": file generator needs \"psi0\"");
        else
            spec.psi0_path = j.at("psi0").get<std::string>();
        if (j.contains("psis"))
            for (const auto& p : j.at("psis")) spec.psi_paths.push_back(p.get<std::string>());
    } else {
        std::string known;
        for (const auto& k : kGeneratorKinds) known += (known.empty() ? "" : ", ") + k;
        errors.push_back(where + ": unknown generator kind '" + spec.kind +
                         "' (builtins: " + known + ")");
    }
    return spec;
}

void serialize_generator(std::string& out, const GeneratorSpec& spec) {
    out += "{\"kind\":\"" + json_escape(spec.kind) + "\"";
    if (spec.kind == "scaled") {
        out += ",\"base\":";
        if (spec.base)
            serialize_generator(out, *spec.base);
        else
            out += "{\"kind\":\"haar\"}";
        out += ",\"factors\":{";
        bool first = true;
        for (const auto& [ell, f] : spec.factors) {
            if (!first) out += ",";
            first = false;
            out += "\"" + std::to_string(ell) + "\":" + format_double(f);
        }
        out += "}";
    } else if (spec.kind == "file") {
        out += ",\"psi0\":\"" + json_escape(spec.psi0_path) + "\",\"psis\":[";
        for (size_t i = 0; i < spec.psi_paths.size(); ++i) {
            if (i) out += ",";
            out += "\"" + json_escape(spec.psi_paths[i]) + "\"";
        }
        out += "]";
    }
    out += "}";
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("JSON parse error: ") + e.what()});
    }

    std::vector<std::string> errors;
    RunConfig cfg;

    const json field = j.value("field", json::object());
    cfg.p = field.value("p", 2u);
    cfg.c = field.value("c", 1u);
    if (field.contains("modulus"))
        for (const auto& m : field.at("modulus")) cfg.modulus.push_back(m.get<uint32_t>());

    const json grid = j.value("grid", json::object());
    cfg.M = grid.value("M", 3u);
    cfg.N = grid.value("N", 3u);

    if (!is_prime(cfg.p)) errors.push_back("field.p must be prime");
    if (cfg.c < 1 || cfg.c > 4) errors.push_back("field.c must be in [1, 4]");
    double qd = 1;
    for (uint32_t i = 0; i < cfg.c; ++i) qd *= cfg.p;
    if (qd > 256) errors.push_back("field order q = p^c must be <= 256");
    if (cfg.c > 1 && cfg.modulus.size() != cfg.c + 1)
        errors.push_back("field.modulus must list c+1 coefficients for c > 1");
    if (cfg.M < 1) errors.push_back("grid.M must be >= 1");
    if (cfg.N < 1) errors.push_back("grid.N must be >= 1");

    const uint64_t q = static_cast<uint64_t>(qd);
    uint64_t qN = 1;
    bool size_ok = cfg.M >= 1 && cfg.N >= 1 && qd <= 256;
    if (size_ok) {
        double cells = 1;
        for (uint32_t i = 0; i < cfg.M + cfg.N; ++i) cells *= qd;
        if (cells > double(uint64_t(1) << 22)) {
            errors.push_back("grid size q^(M+N) exceeds the supported limit");
            size_ok = false;
        }
        for (uint32_t i = 0; size_ok && i < cfg.N; ++i) qN *= q;
    }

    const json ranges = j.value("ranges", json::object());
    cfg.j_max = ranges.value("J_max", size_ok ? std::min(cfg.M, cfg.M + cfg.N - 2) : 1u);
    cfg.k_max = ranges.value("K_max", size_ok ? qN : 1u);
    if (size_ok && cfg.k_max > qN)
        errors.push_back("ranges.K_max must be <= q^N = " + std::to_string(qN));
    if (cfg.k_max < 1) errors.push_back("ranges.K_max must be >= 1");
    if (cfg.M + cfg.N >= 2 && cfg.j_max > cfg.M + cfg.N - 2)
        errors.push_back("ranges.J_max must be <= M + N - 2 = " +
                         std::to_string(cfg.M + cfg.N - 2));

    cfg.s = j.value("s", 0.0);
    if (!std::isfinite(cfg.s)) errors.push_back("s must be finite");

    cfg.primal = parse_generator(j.value("primal", json::object({{"kind", "haar"}})), "primal",
                                 errors);
    cfg.dual = parse_generator(j.value("dual", json::object({{"kind", "haar"}})), "dual", errors);

    const json omega = j.value("omega", json::object());
    cfg.omega.kind = omega.value("kind", "full");
    cfg.omega.radius_exp = omega.value("radius_exp", 0);
    if (cfg.omega.kind != "full" && cfg.omega.kind != "ball") {
        std::string known;
        for (const auto& k : kOmegaKinds) known += (known.empty() ? "" : ", ") + k;
        errors.push_back("omega.kind '" + cfg.omega.kind + "' unknown (builtins: " + known + ")");
    }

    const json tol = j.value("tolerances", json::object());
    cfg.tolerances.unitary = tol.value("unitary", 1e-12);
    cfg.tolerances.identity = tol.value("identity", 1e-10);
    if (!(cfg.tolerances.unitary > 0)) errors.push_back("tolerances.unitary must be > 0");
    if (!(cfg.tolerances.identity > 0)) errors.push_back("tolerances.identity must be > 0");

    cfg.seed = j.value("seed", uint64_t(1));
    cfg.trials = j.value("trials", 20u);
    if (cfg.trials < 1) errors.push_back("trials must be >= 1");

    if (!errors.empty()) throw ConfigError(std::move(errors));
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_config_json(const RunConfig& cfg) {
    std::string out = "{\"field\":{\"p\":" + std::to_string(cfg.p) +
                      ",\"c\":" + std::to_string(cfg.c);
    if (!cfg.modulus.empty()) {
        out += ",\"modulus\":[";
        for (size_t i = 0; i < cfg.modulus.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(cfg.modulus[i]);
        }
        out += "]";
    }
    out += "},\"grid\":{\"M\":" + std::to_string(cfg.M) + ",\"N\":" + std::to_string(cfg.N) +
           "},\"ranges\":{\"J_max\":" + std::to_string(cfg.j_max) +
           ",\"K_max\":" + std::to_string(cfg.k_max) + "},\"s\":" + format_double(cfg.s) +
           ",\"primal\":";
    serialize_generator(out, cfg.primal);
    out += ",\"dual\":";
    serialize_generator(out, cfg.dual);
    out += ",\"omega\":{\"kind\":\"" + json_escape(cfg.omega.kind) + "\"";
    if (cfg.omega.kind == "ball") out += ",\"radius_exp\":" + std::to_string(cfg.omega.radius_exp);
    out += "},\"tolerances\":{\"unitary\":" + format_double(cfg.tolerances.unitary) +
           ",\"identity\":" + format_double(cfg.tolerances.identity) +
           "},\"seed\":" + std::to_string(cfg.seed) + ",\"trials\":" + std::to_string(cfg.trials) +
           "}";
    return out;
}

GeneratorSet build_generators(const GeneratorSpec& spec, const Grid& grid, double s, Side side) {
    const double s_eff = side == Side::dual ? -s : s;
    if (spec.kind == "haar") {
        const uint64_t qM = grid.pow_q(grid.M());
        SampledFunction psi0 = indicator(grid, Domain::frequency,
                                         [&](uint64_t cell) { return cell % qM == 0; });
        std::vector<SampledFunction> psis;
        for (uint64_t ell = 1; ell < grid.field().order(); ++ell) {
            const uint64_t u_cell = grid.frequency_cell_of_u(ell);
            psis.push_back(indicator(grid, Domain::frequency,
                                     [&](uint64_t cell) { return cell % qM == u_cell; }));
        }
        return GeneratorSet::make(grid, std::move(psi0), std::move(psis), s_eff, side);
    }
    if (spec.kind == "scaled") {
        if (!spec.base) throw std::invalid_argument("scaled generator without a base");
        GeneratorSet base = build_generators(*spec.base, grid, s, side);
        for (const auto& [ell, factor] : spec.factors) {
            if (ell > base.L())
                throw std::invalid_argument("scaled generator: no generator with index " +
                                            std::to_string(ell));
            SampledFunction& target = ell == 0 ? base.psi0_hat : base.psis_hat[ell - 1];
            for (uint64_t w = 0; w < target.size(); ++w) target[w] *= factor;
        }
        return base;
    }
    if (spec.kind == "file") {
        SampledFunction psi0 = load_function_csv(spec.psi0_path, grid, Domain::frequency, true);
        std::vector<SampledFunction> psis;
        for (const auto& p : spec.psi_paths)
            psis.push_back(load_function_csv(p, grid, Domain::frequency, true));
        return GeneratorSet::make(grid, std::move(psi0), std::move(psis), s_eff, side);
    }
    throw std::invalid_argument("unknown generator kind '" + spec.kind +
                                "' (builtins: haar, scaled, file)");
}

OmegaSet build_omega(const OmegaSpec& spec, const Grid& grid) {
    if (spec.kind == "full") return OmegaSet::full(grid);
    if (spec.kind == "ball") return OmegaSet::norm_ball(grid, spec.radius_exp);
    throw std::invalid_argument("unknown omega kind '" + spec.kind + "' (builtins: full, ball)");
}

SampledFunction load_function_csv(const std::string& path, const Grid& grid, Domain domain,
                                  bool strict) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open CSV file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument(path + ": empty file (expected header cell,re,im)");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "cell,re,im")
        throw std::invalid_argument(path + ": expected header \"cell,re,im\"");

    SampledFunction out(grid, domain);
    std::vector<uint8_t> seen(grid.num_cells(), 0);
    uint64_t rows = 0;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        unsigned long long cell = 0;
        double re = 0, im = 0;
        char extra;
        if (std::sscanf(line.c_str(), "%llu,%lg,%lg%c", &cell, &re, &im, &extra) != 3)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": malformed row '" + line + "'");
        if (cell >= grid.num_cells())
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": cell index out of range");
        if (seen[cell])
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": duplicate cell index");
        seen[cell] = 1;
        out[cell] = Complex(re, im);
        ++rows;
    }
    if (strict && rows != grid.num_cells())
        throw std::invalid_argument(path + ": expected " + std::to_string(grid.num_cells()) +
                                    " rows, found " + std::to_string(rows));
    return out;
}

void save_function_csv(const std::string& path, const SampledFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output CSV: " + path);
    out << "cell,re,im\n";
    for (uint64_t cell = 0; cell < f.size(); ++cell)
        out << cell << "," << format_double(f[cell].real()) << ","
            << format_double(f[cell].imag()) << "\n";
}

}  // namespace lf
