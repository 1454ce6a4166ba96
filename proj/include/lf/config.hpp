#ifndef LF_CONFIG_HPP
#define LF_CONFIG_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lf/characterization.hpp"
#include "lf/frame.hpp"
#include "lf/grid.hpp"

namespace lf {

struct GeneratorSpec {
    std::string kind = "haar";  // "haar", "scaled" or "file"
    std::shared_ptr<GeneratorSpec> base;   // scaled: spec being rescaled
    std::map<uint32_t, double> factors;    // scaled: per-generator factor
    std::string psi0_path;                 // file: CSV spectrum of psi0
    std::vector<std::string> psi_paths;    // file: CSV spectra of psi_ell
};

struct OmegaSpec {
    std::string kind = "full";  // "full" or "ball"
    int radius_exp = 0;         // ball: cells with |w| <= q^radius_exp
};

/// Everything a run needs; loaded from a JSON file and validated as a
/// whole, reporting every violation at once.
struct RunConfig {
    uint32_t p = 2;
    uint32_t c = 1;
    std::vector<uint32_t> modulus;
    uint32_t M = 3;
    uint32_t N = 3;
    uint32_t j_max = 3;
    uint64_t k_max = 8;
    double s = 0.0;
    GeneratorSpec primal;
    GeneratorSpec dual;
    OmegaSpec omega;
    Tolerances tolerances;
    uint64_t seed = 1;
    uint32_t trials = 20;
};

/// Carries the full list of validation violations.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> violations_;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

/// Fixed-key-order serialization with 17-significant-digit floats; parsing
/// it back yields the identical RunConfig. This is the form embedded in
/// reports.
std::string canonical_config_json(const RunConfig& cfg);

GeneratorSet build_generators(const GeneratorSpec& spec, const Grid& grid, double s, Side side);
OmegaSet build_omega(const OmegaSpec& spec, const Grid& grid);

/// CSV function tables: header "cell,re,im". `strict` requires every cell
/// exactly once (generator spectra); otherwise missing cells default to 0.
SampledFunction load_function_csv(const std::string& path, const Grid& grid, Domain domain,
                                  bool strict);
void save_function_csv(const std::string& path, const SampledFunction& f);

std::string json_escape(const std::string& s);
std::string format_double(double v);

}  // namespace lf

#endif
