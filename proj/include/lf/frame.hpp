#ifndef LF_FRAME_HPP
#define LF_FRAME_HPP

#include <cstdint>
#include <vector>

#include "lf/grid.hpp"

namespace lf {

enum class Side { primal, dual };

/// Generator spectra (psi0_hat, psi1_hat ... psiL_hat) on one grid plus the
/// Sobolev exponent the atoms are normalized with. Dual-side sets carry the
/// negated exponent by construction.
struct GeneratorSet {
    const Grid* grid;
    SampledFunction psi0_hat;
    std::vector<SampledFunction> psis_hat;
    double s;
    Side side;

    static GeneratorSet make(const Grid& grid, SampledFunction psi0_hat,
                             std::vector<SampledFunction> psis_hat, double s, Side side);

    uint32_t L() const { return static_cast<uint32_t>(psis_hat.size()); }
};

/// ell = 0 indexes the translates-only family (j forced to 0); ell >= 1
/// indexes scale j >= 0 of the ell-th wavelet generator.
struct AtomIndex {
    uint32_t ell = 0;
    uint32_t j = 0;
    uint64_t k = 0;

    bool operator==(const AtomIndex&) const = default;
};

/// Truncation ranges. k_max bounds the scale-0 translation count; the
/// scale-j lattice p^j u(k) refines by a factor q per scale, so scale j
/// enumerates k < k_max * q^j (capped at what the grid supports).
struct Ranges {
    uint32_t j_max = 0;
    uint64_t k_max = 0;

    uint64_t translate_count(const Grid& grid, uint32_t ell, uint32_t j) const;
};

/// Spectrum of one atom:
///   ell = 0:  psi0_hat(xi) conj(chi_{u(k)}(xi))
///   ell >= 1: q^{-j(1/2+s)} psi_ell_hat(p^j xi) conj(chi_{u(k)}(p^j xi)),
/// the transform of q^{j(1/2-s)} psi_ell(p^-j x - u(k)). Scale-j spectra
/// occupy frequency moduli q^j times the base spectrum.
SampledFunction atom_spectrum(const GeneratorSet& gen, const AtomIndex& idx);

/// Deterministic atom enumeration (ell, then j, then k). With
/// `drop_zero_spectra`, atoms vanishing identically on the grid (scales
/// pushed past the window) are omitted.
std::vector<AtomIndex> atom_list(const GeneratorSet& gen, const Ranges& ranges,
                                 bool drop_zero_spectra);

/// All coefficients <f, atom> as the frequency-side duality pairing
/// q^-N sum f_hat conj(atom_hat), in enumeration order. Time-domain inputs
/// are transformed internally.
std::vector<std::pair<AtomIndex, Complex>> analysis_coeffs(const SampledFunction& f,
                                                           const GeneratorSet& gen,
                                                           const Ranges& ranges);

struct BesselBounds {
    double lower = 0.0;  ///< least Gram eigenvalue restricted to the span
    double upper = 0.0;  ///< greatest Gram eigenvalue (power iteration)
    uint64_t atom_count = 0;
};

/// Frame bounds of the truncated system from the Gram spectrum of its
/// atoms. The upper bound runs power iteration to relative 1e-8; the lower
/// bound is the smallest eigenvalue above the numerical rank cutoff.
BesselBounds bessel_bounds(const GeneratorSet& gen, const Ranges& ranges);

/// Truncated mixed sum sum_idx <f, dual atom> <primal atom, g>. For an
/// exact bi-frame pair this reproduces <f, g> on the represented class.
/// Time-domain inputs are transformed internally.
Complex reconstruction_form(const SampledFunction& f, const SampledFunction& g,
                            const GeneratorSet& primal, const GeneratorSet& dual,
                            const Ranges& ranges);

/// Frequency-side duality pairing q^-N sum F conj(G).
Complex duality_pairing(const SampledFunction& F, const SampledFunction& G);

}  // namespace lf

#endif
