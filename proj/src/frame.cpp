#include "lf/frame.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "lf/analysis.hpp"

namespace lf {

GeneratorSet GeneratorSet::make(const Grid& grid, SampledFunction psi0_hat,
                                std::vector<SampledFunction> psis_hat, double s, Side side) {
    if (psi0_hat.domain() != Domain::frequency)
        throw std::invalid_argument("GeneratorSet: psi0_hat must be frequency-domain");
    if (&psi0_hat.grid() != &grid)
        throw std::invalid_argument("GeneratorSet: psi0_hat grid mismatch");
    for (const auto& f : psis_hat) {
        if (f.domain() != Domain::frequency || &f.grid() != &grid)
            throw std::invalid_argument("GeneratorSet: generator grid mismatch");
    }
    return GeneratorSet{&grid, std::move(psi0_hat), std::move(psis_hat), s, side};
}

uint64_t Ranges::translate_count(const Grid& grid, uint32_t ell, uint32_t j) const {
    if (ell == 0) return k_max;
    const uint64_t representable = grid.pow_q(grid.N() + j);
    uint64_t count = k_max;
    for (uint32_t t = 0; t < j; ++t) {
        count *= grid.field().order();
        if (count >= representable) return representable;
    }
    return std::min(count, representable);
}

SampledFunction atom_spectrum(const GeneratorSet& gen, const AtomIndex& idx) {
    const Grid& g = *gen.grid;
    if (idx.ell > gen.L()) throw std::out_of_range("atom_spectrum: generator index");
    if (idx.ell == 0 && idx.j != 0)
        throw std::invalid_argument("atom_spectrum: translates-only family has j = 0");
    const auto roots = roots_of_unity(g.field().p());
    const SampledFunction& base = idx.ell == 0 ? gen.psi0_hat : gen.psis_hat[idx.ell - 1];
    const uint64_t k_limit = g.pow_q(g.N() + idx.j);
    if (idx.k >= k_limit)
        throw std::out_of_range("atom_spectrum: translation index exceeds the scale window");

    SampledFunction out(g, Domain::frequency);
    const double amp =
        idx.ell == 0
            ? 1.0
            : std::pow(static_cast<double>(g.field().order()),
                       -static_cast<double>(idx.j) * (0.5 + gen.s));
    for (uint64_t w = 0; w < g.num_cells(); ++w) {
        const Complex v = base[g.dilate_frequency_cell(w, idx.j)];
        if (v == Complex(0, 0)) continue;
        const Complex phase = roots[g.chi_u_dilated_exponent(idx.k, idx.j, w)];
        out[w] = amp * v * std::conj(phase);
    }
    return out;
}

std::vector<AtomIndex> atom_list(const GeneratorSet& gen, const Ranges& ranges,
                                 bool drop_zero_spectra) {
    const Grid& g = *gen.grid;
    std::vector<AtomIndex> out;
    auto spectrum_vanishes = [&](uint32_t ell, uint32_t j) {
        const SampledFunction& base = ell == 0 ? gen.psi0_hat : gen.psis_hat[ell - 1];
        for (uint64_t w = 0; w < g.num_cells(); ++w)
            if (base[g.dilate_frequency_cell(w, j)] != Complex(0, 0)) return false;
        return true;
    };
    for (uint64_t k = 0; k < ranges.k_max; ++k) out.push_back({0, 0, k});
    if (drop_zero_spectra && !out.empty() && spectrum_vanishes(0, 0))
        out.clear();
    for (uint32_t ell = 1; ell <= gen.L(); ++ell) {
        for (uint32_t j = 0; j <= ranges.j_max; ++j) {
            if (drop_zero_spectra && spectrum_vanishes(ell, j)) continue;
            const uint64_t count = ranges.translate_count(g, ell, j);
            for (uint64_t k = 0; k < count; ++k) out.push_back({ell, j, k});
        }
    }
    return out;
}

Complex duality_pairing(const SampledFunction& F, const SampledFunction& G) {
    if (&F.grid() != &G.grid() || F.domain() != Domain::frequency ||
        G.domain() != Domain::frequency)
        throw std::invalid_argument("duality_pairing: frequency functions on one grid");
    Complex acc(0, 0);
    for (uint64_t w = 0; w < F.size(); ++w) acc += F[w] * std::conj(G[w]);
    return acc * F.grid().cell_measure(Domain::frequency);
}

std::vector<std::pair<AtomIndex, Complex>> analysis_coeffs(const SampledFunction& f,
                                                           const GeneratorSet& gen,
                                                           const Ranges& ranges) {
    if (&f.grid() != gen.grid)
        throw std::invalid_argument("analysis_coeffs: grid mismatch");
    const SampledFunction f_hat = f.domain() == Domain::frequency ? f : fourier(f);
    std::vector<std::pair<AtomIndex, Complex>> out;
    for (const AtomIndex& idx : atom_list(gen, ranges, false)) {
        const SampledFunction a = atom_spectrum(gen, idx);
        out.emplace_back(idx, duality_pairing(f_hat, a));
    }
    return out;
}

BesselBounds bessel_bounds(const GeneratorSet& gen, const Ranges& ranges) {
    const std::vector<AtomIndex> atoms = atom_list(gen, ranges, true);
    BesselBounds out;
    out.atom_count = atoms.size();
    if (atoms.empty()) return out;
    if (atoms.size() > 4096)
        throw std::invalid_argument("bessel_bounds: truncated system exceeds 4096 atoms");

    const size_t n = atoms.size();
    std::vector<SampledFunction> spectra;
    spectra.reserve(n);
    for (const AtomIndex& idx : atoms) spectra.push_back(atom_spectrum(gen, idx));

    Eigen::MatrixXcd gram(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            const Complex v = duality_pairing(spectra[i], spectra[j]);
            gram(i, j) = v;
            gram(j, i) = std::conj(v);
        }
    }

    // upper bound by power iteration, deterministic start
    Eigen::VectorXcd v(n);
    for (size_t i = 0; i < n; ++i) v(i) = Complex(1.0 + 1e-3 * double(i % 7), 1e-4 * double(i % 5));
    v.normalize();
    double lambda = 0.0;
    for (int iter = 0; iter < 20000; ++iter) {
        Eigen::VectorXcd w = gram * v;
        const double nrm = w.norm();
        if (nrm == 0.0) {
            lambda = 0.0;
            break;
        }
        w /= nrm;
        const double next = std::real(Complex(w.adjoint() * (gram * w)));
        v = w;
        if (iter > 0 && std::abs(next - lambda) <= 1e-8 * std::max(std::abs(next), 1e-300)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    out.upper = lambda;

    // lower bound on the span: smallest eigenvalue above the rank cutoff
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    const auto& eigs = solver.eigenvalues();
    const double cutoff = std::max(eigs.cwiseAbs().maxCoeff(), 0.0) * 1e-10;
    double lower = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        if (eigs(i) > cutoff) {
            lower = eigs(i);
            break;
        }
    }
    out.lower = lower;
    out.upper = std::max(out.upper, out.lower);
    return out;
}

Complex reconstruction_form(const SampledFunction& f, const SampledFunction& g,
                            const GeneratorSet& primal, const GeneratorSet& dual,
                            const Ranges& ranges) {
    if (primal.grid != dual.grid)
        throw std::invalid_argument("reconstruction_form: generator sets on one grid");
    if (std::abs(primal.s + dual.s) > 1e-15)
        throw std::invalid_argument("reconstruction_form: dual side must carry exponent -s");
    if (primal.L() != dual.L())
        throw std::invalid_argument("reconstruction_form: generator counts differ");
    const SampledFunction f_hat = f.domain() == Domain::frequency ? f : fourier(f);
    const SampledFunction g_hat = g.domain() == Domain::frequency ? g : fourier(g);
    Complex acc(0, 0);
    for (const AtomIndex& idx : atom_list(primal, ranges, false)) {
        const SampledFunction a = atom_spectrum(primal, idx);
        const SampledFunction at = atom_spectrum(dual, idx);
        // <f, dual atom> <primal atom, g> = <f, dual atom> conj(<g, primal atom>)
        acc += duality_pairing(f_hat, at) * std::conj(duality_pairing(g_hat, a));
    }
    return acc;
}

}  // namespace lf
