#ifndef LF_SEQUENCE_HPP
#define LF_SEQUENCE_HPP

#include <cstdint>
#include <map>

#include "lf/grid.hpp"

namespace lf {

/// Finitely supported z: {u(n)} -> C, keyed by the lattice index n. The map
/// is ordered so every iteration is deterministic.
class Sequence {
  public:
    Sequence() = default;

    Complex at(uint64_t n) const;
    void set(uint64_t n, Complex v);
    const std::map<uint64_t, Complex>& entries() const { return vals_; }
    uint64_t max_index() const { return vals_.empty() ? 0 : vals_.rbegin()->first; }

    double norm() const;
    Complex inner(const Sequence& other) const;
    bool approx_equal(const Sequence& other, double tol) const;

  private:
    std::map<uint64_t, Complex> vals_;
};

/// z_hat(w) = sum_n z(u(n)) chi_{u(n)}(w), evaluated on every frequency
/// cell. The result is u(m)-periodic across translates of D, so the
/// restriction to the fundamental domain carries all of it. Support must
/// satisfy n < q^N.
SampledFunction seq_fourier(const Sequence& z, const Grid& grid);

/// Fourier coefficients f_check(u(n)) = <f, chi_{u(n)}> over the
/// fundamental domain, for n < q^N.
Sequence seq_inv_fourier(const SampledFunction& F);

/// (T_{u(m)} z)(u(n)) = z(u(n) - u(m)). A norm-preserving bijection of the
/// lattice: u(n) - u(m) is itself a lattice point.
Sequence seq_translate(const FieldSpec& field, const Sequence& z, uint64_t m);

/// (M_{u(k)} z)(u(n)) = z(u(n)) conj(chi_{u(k)}(u(n))). The phase
/// chi_{u(k)}(u(n)) is identically 1 on the lattice (products of two
/// negative-power expansions have no digit at p^-1), so the operator acts
/// as the identity; it is implemented literally and the triviality is a
/// tested property, not an assumption.
Sequence seq_modulate(const FieldSpec& field, const Sequence& z, uint64_t k);

/// Wave packet atom T_{p^j u(m)} M_{u(k)} v. The translation must be a
/// lattice point: j <= 0 always is, j > 0 requires kappa(m) >= j;
/// otherwise a std::domain_error reports the offending shift.
Sequence wave_packet_atom(const FieldSpec& field, const Sequence& v, int j, uint64_t k,
                          uint64_t m);

}  // namespace lf

#endif
