#ifndef LF_ANALYSIS_HPP
#define LF_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "lf/grid.hpp"

namespace lf {

/// The canonical character of K: trivial on D, nontrivial on B^-1. The
/// value depends only on the zeta_0-coordinate of the digit at p^-1:
/// chi(x) = exp(2 pi i a / p) with a = coeff0(digit of x at power -1).
Complex chi(const KNumber& x);
/// chi_{u(n)}(x) = chi(u(n) x), evaluated with exact digit arithmetic.
Complex chi_n(const FieldSpec& field, uint64_t n, const KNumber& x);

/// The p-th roots of unity, exact at the half turn.
std::vector<Complex> roots_of_unity(uint32_t p);

/// Haar integral: cell-measure-weighted compensated sum in cell order.
Complex integrate(const SampledFunction& f);

/// f_hat(w) = q^-M sum_x f(x) conj(chi(w x)); exact on the represented
/// class. Naive O(n^2) character sum, the correctness reference.
SampledFunction fourier(const SampledFunction& f);
/// f(x) = q^-N sum_w F(w) chi(w x); inverse of `fourier`.
SampledFunction inv_fourier(const SampledFunction& F);

/// Radix-q fast path. Same contract as the naive transforms; agreement to
/// 1e-12 is part of the acceptance suite.
SampledFunction fourier_fast(const SampledFunction& f);
SampledFunction inv_fourier_fast(const SampledFunction& F);

/// w |-> sum_k F(w + u(k)) over all grid-representable translates, for w in
/// the fundamental domain; indexed by the D-cell number i (cell i * q^M).
std::vector<Complex> periodize(const SampledFunction& F);

/// Sobolev-weighted bracket product over D-cells:
/// [F,G]_s(w) = sum_k F(w+u(k)) conj(G(w+u(k))) (1+|w+u(k)|^2)^s.
std::vector<Complex> bracket(const SampledFunction& F, const SampledFunction& G, double s);

/// ||f||_{H^s}: frequency-weighted L2 norm; transforms internally when
/// given a time-domain function. s = 0 reduces to the L2 norm.
double sobolev_norm(const SampledFunction& f, double s);

/// Indicator of a cell predicate.
SampledFunction indicator(const Grid& grid, Domain domain,
                          const std::function<bool(uint64_t)>& pred);
/// Indicator of the ball B^k = p^k D on either domain.
SampledFunction phi_indicator(const Grid& grid, Domain domain, int k);

}  // namespace lf

#endif
