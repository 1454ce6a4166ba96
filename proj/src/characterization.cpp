#include "lf/characterization.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lf/analysis.hpp"

namespace lf {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double uniform_pm1(uint64_t& state) {
    return 2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
}

void check_pair(const GeneratorSet& primal, const GeneratorSet& dual) {
    if (primal.grid != dual.grid)
        throw std::invalid_argument("characterization: generator sets on one grid");
    if (primal.L() != dual.L())
        throw std::invalid_argument("characterization: generator counts differ");
    if (std::abs(primal.s + dual.s) > 1e-15)
        throw std::invalid_argument("characterization: dual side must carry exponent -s");
}

uint32_t kappa_capped(uint32_t q, uint64_t k, uint32_t j_max) {
    const auto kap = kappa(q, k);
    if (!kap) return j_max;  // kappa(0) is infinite; truncate to the range
    return std::min(*kap, j_max);
}

}  // namespace

SampledFunction random_spectrum(const Grid& grid, uint64_t& state) {
    SampledFunction out(grid, Domain::frequency);
    for (uint64_t w = 0; w < grid.num_cells(); ++w)
        out[w] = Complex(uniform_pm1(state), uniform_pm1(state));
    double norm2 = 0.0;
    for (uint64_t w = 0; w < grid.num_cells(); ++w) norm2 += std::norm(out[w]);
    norm2 *= grid.cell_measure(Domain::frequency);
    const double scale = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 1.0;
    for (uint64_t w = 0; w < grid.num_cells(); ++w) out[w] *= scale;
    return out;
}

TkResult t_k(const GeneratorSet& primal, const GeneratorSet& dual, uint64_t k, uint32_t j_max) {
    check_pair(primal, dual);
    const Grid& g = *primal.grid;
    TkResult out;
    out.values.assign(g.num_cells(), Complex(0, 0));
    out.checkable.assign(g.num_cells(), 1);

    if (k >= g.frequency_translate_count()) {
        // u(k) cannot be added to any on-grid cell
        out.checkable.assign(g.num_cells(), 0);
        out.uncheckable_count = g.num_cells();
        return out;
    }
    const uint64_t uk = g.frequency_cell_of_u(k);
    const uint32_t j_top = kappa_capped(g.field().order(), k, j_max);
    for (uint64_t w = 0; w < g.num_cells(); ++w) {
        const uint64_t wk = g.add_cells(w, uk);
        Complex acc = primal.psi0_hat[w] * std::conj(dual.psi0_hat[wk]);
        for (uint32_t ell = 1; ell <= primal.L(); ++ell) {
            for (uint32_t j = 0; j <= j_top; ++j) {
                const Complex a = primal.psis_hat[ell - 1][g.dilate_frequency_cell(w, j)];
                if (a == Complex(0, 0)) continue;
                const Complex b = dual.psis_hat[ell - 1][g.dilate_frequency_cell(wk, j)];
                acc += a * std::conj(b);
            }
        }
        out.values[w] = acc;
    }
    return out;
}

double tk_deviation(const TkResult& tk, const OmegaSet& omega, uint64_t k) {
    const Complex target = k == 0 ? Complex(1, 0) : Complex(0, 0);
    double dev = 0.0;
    for (uint64_t w = 0; w < tk.values.size(); ++w) {
        if (!tk.checkable[w] || !omega.contains(w)) continue;
        dev = std::max(dev, std::abs(tk.values[w] - target));
    }
    return dev;
}

Lemma31Result lemma31_check(const GeneratorSet& gen, const SampledFunction& g_hat,
                            const Ranges& ranges) {
    const Grid& g = *gen.grid;
    if (&g_hat.grid() != &g || g_hat.domain() != Domain::frequency)
        throw std::invalid_argument("lemma31_check: expects a spectrum on the generator grid");
    const uint64_t q = g.field().order();
    const double measure = g.cell_measure(Domain::frequency);

    // coefficient side
    double lhs = 0.0;
    for (const AtomIndex& idx : atom_list(gen, ranges, false)) {
        const SampledFunction a = atom_spectrum(gen, idx);
        lhs += std::norm(duality_pairing(g_hat, a));
    }

    // frequency side, diagonal part
    Complex rhs(0, 0);
    for (uint64_t w = 0; w < g.num_cells(); ++w) {
        const double gm = std::norm(g_hat[w]);
        if (gm == 0.0) continue;
        double weight = std::norm(gen.psi0_hat[w]);
        for (uint32_t ell = 1; ell <= gen.L(); ++ell)
            for (uint32_t j = 0; j <= ranges.j_max; ++j)
                weight += std::pow(double(q), -2.0 * j * gen.s) *
                          std::norm(gen.psis_hat[ell - 1][g.dilate_frequency_cell(w, j)]);
        rhs += gm * weight;
    }
    // off-diagonal translates
    for (uint64_t k = 1; k < g.frequency_translate_count(); ++k) {
        const uint64_t uk = g.frequency_cell_of_u(k);
        const uint32_t j_top = kappa_capped(static_cast<uint32_t>(q), k, ranges.j_max);
        for (uint64_t w = 0; w < g.num_cells(); ++w) {
            const uint64_t wk = g.add_cells(w, uk);
            const Complex gg = std::conj(g_hat[w]) * g_hat[wk];
            if (gg == Complex(0, 0)) continue;
            Complex weight = gen.psi0_hat[w] * std::conj(gen.psi0_hat[wk]);
            for (uint32_t ell = 1; ell <= gen.L(); ++ell) {
                for (uint32_t j = 0; j <= j_top; ++j) {
                    const Complex a = gen.psis_hat[ell - 1][g.dilate_frequency_cell(w, j)];
                    if (a == Complex(0, 0)) continue;
                    const Complex b = gen.psis_hat[ell - 1][g.dilate_frequency_cell(wk, j)];
                    weight += std::pow(double(q), -2.0 * j * gen.s) * a * std::conj(b);
                }
            }
            rhs += gg * weight;
        }
    }
    rhs *= measure;

    Lemma31Result out;
    out.lhs = lhs;
    out.rhs = rhs.real();
    out.relative_deviation = std::abs(Complex(lhs, 0) - rhs) / std::max(lhs, 1e-30);
    return out;
}

Lemma32Result lemma32_check(const GeneratorSet& primal, const GeneratorSet& dual,
                            const SampledFunction& f_hat, const SampledFunction& g_hat,
                            const Ranges& ranges) {
    check_pair(primal, dual);
    const Grid& g = *primal.grid;
    const double measure = g.cell_measure(Domain::frequency);

    Lemma32Result out;
    out.lhs = reconstruction_form(f_hat, g_hat, primal, dual, ranges);

    Complex rhs(0, 0);
    for (uint64_t k = 0; k < g.frequency_translate_count(); ++k) {
        const TkResult tk = t_k(primal, dual, k, ranges.j_max);
        const uint64_t uk = g.frequency_cell_of_u(k);
        for (uint64_t w = 0; w < g.num_cells(); ++w) {
            const Complex fg = std::conj(g_hat[w]) * f_hat[g.add_cells(w, uk)];
            if (fg == Complex(0, 0)) continue;
            rhs += fg * tk.values[w];
        }
    }
    out.rhs = rhs * measure;
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

SampledFunction project_reducing(const SampledFunction& f, const OmegaSet& omega) {
    if (&f.grid() != &omega.grid())
        throw std::invalid_argument("project_reducing: omega grid mismatch");
    if (f.domain() == Domain::frequency) {
        SampledFunction out = f;
        for (uint64_t w = 0; w < out.size(); ++w)
            if (!omega.contains(w)) out[w] = Complex(0, 0);
        return out;
    }
    SampledFunction spectrum = fourier(f);
    for (uint64_t w = 0; w < spectrum.size(); ++w)
        if (!omega.contains(w)) spectrum[w] = Complex(0, 0);
    return inv_fourier(spectrum);
}

CheckReport check_nwbf(const GeneratorSet& primal, const GeneratorSet& dual,
                       const OmegaSet& omega, const Ranges& ranges,
                       const Tolerances& tolerances, uint64_t seed, uint32_t trials) {
    check_pair(primal, dual);
    const Grid& g = *primal.grid;
    if (&omega.grid() != &g)
        throw std::invalid_argument("check_nwbf: omega grid mismatch");

    CheckReport r;
    r.p = g.field().p();
    r.c = g.field().ext_degree();
    r.q = g.field().order();
    r.M = g.M();
    r.N = g.N();
    r.j_max = ranges.j_max;
    r.k_max = ranges.k_max;
    r.s = primal.s;
    r.tolerances = tolerances;
    r.seed = seed;
    r.trials = trials;
    r.omega_invariant = omega.dilation_invariant();

    // (i) Bessel bounds on both sides
    r.bessel_primal = bessel_bounds(primal, ranges);
    r.bessel_dual = bessel_bounds(dual, ranges);
    r.bessel_pass = std::isfinite(r.bessel_primal.upper) && std::isfinite(r.bessel_dual.upper) &&
                    std::isfinite(r.bessel_primal.lower) && std::isfinite(r.bessel_dual.lower);

    // (ii) t_k = delta_{0,k} cell-wise on omega
    for (uint64_t k = 0; k < ranges.k_max; ++k) {
        const TkResult tk = t_k(primal, dual, k, ranges.j_max);
        TkStat stat;
        stat.k = k;
        stat.max_deviation = tk_deviation(tk, omega, k);
        stat.uncheckable = tk.uncheckable_count;
        r.tk_stats.push_back(stat);
        r.tk_max_deviation = std::max(r.tk_max_deviation, stat.max_deviation);
        r.tk_uncheckable_total += stat.uncheckable;
    }
    r.tk_pass = r.tk_max_deviation <= tolerances.unitary;
    r.restricted = r.tk_uncheckable_total > 0;

    // (iii) identities on a seeded battery
    uint64_t state = seed;
    for (uint32_t t = 0; t < trials; ++t) {
        const SampledFunction gh = random_spectrum(g, state);
        r.lemma31_primal_max =
            std::max(r.lemma31_primal_max, lemma31_check(primal, gh, ranges).relative_deviation);
        const SampledFunction gh2 = random_spectrum(g, state);
        r.lemma31_dual_max =
            std::max(r.lemma31_dual_max, lemma31_check(dual, gh2, ranges).relative_deviation);

        const SampledFunction fh = random_spectrum(g, state);
        const SampledFunction gh3 = random_spectrum(g, state);
        r.lemma32_max = std::max(r.lemma32_max,
                                 lemma32_check(primal, dual, fh, gh3, ranges).deviation);

        const SampledFunction fo = project_reducing(fh, omega);
        const SampledFunction go = project_reducing(gh3, omega);
        const Complex recon = reconstruction_form(fo, go, primal, dual, ranges);
        const Complex exact = duality_pairing(fo, go);
        r.reconstruction_max = std::max(r.reconstruction_max, std::abs(recon - exact));
    }
    r.lemma31_pass =
        r.lemma31_primal_max <= tolerances.identity && r.lemma31_dual_max <= tolerances.identity;
    r.lemma32_pass = r.lemma32_max <= tolerances.identity;
    r.reconstruction_pass = r.reconstruction_max <= tolerances.identity;

    r.overall_pass = r.bessel_pass && r.tk_pass && r.lemma31_pass && r.lemma32_pass &&
                     r.reconstruction_pass;
    r.verdict = r.overall_pass ? (r.restricted ? "pass (restricted)" : "pass") : "fail";
    return r;
}

namespace {

std::string spectra_json(const GeneratorSet& gen) {
    char buf[64];
    std::string out = "{\"psi0_hat\":[";
    auto append_fn = [&](const SampledFunction& f) {
        std::string s;
        for (uint64_t w = 0; w < f.size(); ++w) {
            if (w) s += ",";
            std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", f[w].real(), f[w].imag());
            s += buf;
        }
        return s;
    };
    out += append_fn(gen.psi0_hat);
    out += "],\"psis_hat\":[";
    for (uint32_t ell = 0; ell < gen.L(); ++ell) {
        if (ell) out += ",";
        out += "[" + append_fn(gen.psis_hat[ell]) + "]";
    }
    out += "]}";
    return out;
}

}  // namespace

HarnessSummary theorem_equivalence_harness(const std::vector<HarnessCase>& cases,
                                           const OmegaSet& omega, const Ranges& ranges,
                                           const Tolerances& tolerances, uint64_t seed,
                                           uint32_t trials) {
    HarnessSummary summary;
    for (const HarnessCase& c : cases) {
        check_pair(c.primal, c.dual);
        const Grid& g = *c.primal.grid;

        // Bessel precondition first
        const BesselBounds bp = bessel_bounds(c.primal, ranges);
        const BesselBounds bd = bessel_bounds(c.dual, ranges);
        if (!std::isfinite(bp.upper) || !std::isfinite(bd.upper))
            throw std::invalid_argument("harness: case '" + c.name + "' is not Bessel");

        HarnessCaseResult res;
        res.name = c.name;

        for (uint64_t k = 0; k < ranges.k_max; ++k) {
            const TkResult tk = t_k(c.primal, c.dual, k, ranges.j_max);
            res.tk_max_deviation = std::max(res.tk_max_deviation, tk_deviation(tk, omega, k));
        }
        res.tk_pass = res.tk_max_deviation <= tolerances.unitary;

        uint64_t state = seed;
        for (uint32_t t = 0; t < trials; ++t) {
            const SampledFunction fo = project_reducing(random_spectrum(g, state), omega);
            const SampledFunction go = project_reducing(random_spectrum(g, state), omega);
            const Complex recon = reconstruction_form(fo, go, c.primal, c.dual, ranges);
            const Complex exact = duality_pairing(fo, go);
            res.reconstruction_max = std::max(res.reconstruction_max, std::abs(recon - exact));
        }
        res.reconstruction_pass = res.reconstruction_max <= tolerances.identity;

        res.agree = res.tk_pass == res.reconstruction_pass;
        if (!res.agree) {
            res.counterexample = "{\"case\":\"" + c.name + "\",\"primal\":" +
                                 spectra_json(c.primal) + ",\"dual\":" + spectra_json(c.dual) +
                                 "}";
            summary.all_agree = false;
        } else {
            ++summary.agreements;
        }
        summary.cases.push_back(std::move(res));
    }
    return summary;
}

}  // namespace lf
