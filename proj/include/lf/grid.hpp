#ifndef LF_GRID_HPP
#define LF_GRID_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "lf/finite_field.hpp"
#include "lf/local_field.hpp"

namespace lf {

using Complex = std::complex<double>;

enum class Domain { time, frequency };

/// Finite quotient model of K with two dual windows.
///
/// Time cells are the cosets of p^M D inside p^-N D: q^(M+N) points
///   x = sum_{l=-N}^{M-1} c_l p^l, cell measure q^-M.
/// Frequency cells are the cosets of p^N D inside p^-M D:
///   w = sum_{l=-M}^{N-1} d_l p^l, cell measure q^-N.
///
/// A cell is addressed by a mixed-radix index: digit t of the index (base q)
/// is the coefficient of p^(t + lowest_power). Lowest power is -N in time
/// and -M in frequency, so index digit 0 always carries the lowest power.
/// Functions on these grids represent locally constant, compactly supported
/// functions on K exactly; everything the model computes on them is exact
/// up to floating-point rounding.
class Grid {
  public:
    Grid(const FieldSpec& field, uint32_t M, uint32_t N);

    const FieldSpec& field() const { return *field_; }
    uint32_t M() const { return M_; }
    uint32_t N() const { return N_; }
    uint32_t digit_count() const { return M_ + N_; }
    uint64_t num_cells() const { return num_cells_; }
    double cell_measure(Domain d) const;
    int lowest_power(Domain d) const;

    uint16_t cell_digit(uint64_t cell, uint32_t position) const;
    /// Digit at an absolute power of the prime element (0 outside window).
    uint16_t cell_digit_at_power(Domain d, uint64_t cell, int power) const;

    /// Digit-wise GF(q) sum of two cells of the same domain.
    uint64_t add_cells(uint64_t a, uint64_t b) const;
    /// Cell of p^j * w for a frequency cell w, j >= 0. Exact: grid functions
    /// are constant on cells, so evaluating them at the returned cell equals
    /// evaluating at the true field element p^j w.
    uint64_t dilate_frequency_cell(uint64_t cell, uint32_t j) const;

    /// Frequency cell of the lattice point u(k); requires k < q^M.
    uint64_t frequency_cell_of_u(uint64_t k) const;
    /// Largest translate count representable on the frequency window.
    uint64_t frequency_translate_count() const { return pow_q(M_); }

    /// Valuation of the cell representative; INT32_MAX for the zero cell.
    int32_t cell_valuation(Domain d, uint64_t cell) const;
    /// Ultrametric norm of the cell representative (0 for the zero cell).
    double cell_norm(Domain d, uint64_t cell) const;

    /// chi(w x) for a frequency cell w paired with a time cell x, returned
    /// as the exponent t of exp(2 pi i t / p).
    uint32_t chi_exponent(uint64_t freq_cell, uint64_t time_cell) const;
    /// chi(u(k) p^j w) for a frequency cell w; exact for k < q^(N+j).
    uint32_t chi_u_dilated_exponent(uint64_t k, uint32_t j, uint64_t freq_cell) const;

    KNumber knumber_of_cell(Domain d, uint64_t cell) const;
    /// Cell whose canonical representative is x; throws std::out_of_range
    /// if x is not a representative (digits outside the window).
    uint64_t cell_of_knumber(Domain d, const KNumber& x) const;
    /// Cell containing x: digits above the window refine within a cell and
    /// are dropped; digits below the window mean x is off the grid support
    /// and raise std::out_of_range.
    uint64_t cell_containing(Domain d, const KNumber& x) const;

    /// Number of cells inside D (the fundamental domain) for the domain.
    uint64_t fundamental_cell_count(Domain d) const;
    /// The i-th cell of D: frequency D-cells are i * q^M, time D-cells are
    /// i * q^N.
    uint64_t fundamental_cell(Domain d, uint64_t i) const;

    uint64_t pow_q(uint32_t e) const;

  private:
    const FieldSpec* field_;
    uint32_t M_;
    uint32_t N_;
    uint64_t num_cells_;
};

/// Complex-valued function on one grid domain, indexed by cell.
class SampledFunction {
  public:
    SampledFunction(const Grid& grid, Domain domain)
        : grid_(&grid), domain_(domain), values_(grid.num_cells(), Complex(0, 0)) {}
    SampledFunction(const Grid& grid, Domain domain, std::vector<Complex> values);

    const Grid& grid() const { return *grid_; }
    Domain domain() const { return domain_; }
    uint64_t size() const { return values_.size(); }
    Complex& operator[](uint64_t cell) { return values_[cell]; }
    const Complex& operator[](uint64_t cell) const { return values_[cell]; }
    const std::vector<Complex>& values() const { return values_; }

  private:
    const Grid* grid_;
    Domain domain_;
    std::vector<Complex> values_;
};

/// A union of frequency cells standing in for a dilation-invariant
/// frequency support set. As a union of cells, exact invariance under the
/// inverse dilation can only hold where the expanded cells stay on the
/// window, so the constructor enforces the downward half p*Omega within
/// Omega (cell-wise) and reports the upward violations as a diagnostic
/// count; `unchecked` builds plain masks for operations that do not rely
/// on invariance.
class OmegaSet {
  public:
    static OmegaSet checked(const Grid& grid, std::vector<uint8_t> member);
    static OmegaSet unchecked(const Grid& grid, std::vector<uint8_t> member);
    static OmegaSet full(const Grid& grid);
    static OmegaSet empty(const Grid& grid);
    /// Cells with |w| <= q^radius_exp. Downward closed, hence always valid.
    static OmegaSet norm_ball(const Grid& grid, int radius_exp);

    const Grid& grid() const { return *grid_; }
    bool contains(uint64_t cell) const { return member_[cell] != 0; }
    const std::vector<uint8_t>& mask() const { return member_; }
    uint64_t cell_count() const;
    bool dilation_invariant() const { return down_violations_ == 0; }
    uint64_t downward_violations() const { return down_violations_; }

  private:
    OmegaSet(const Grid& grid, std::vector<uint8_t> member, bool enforce);

    const Grid* grid_;
    std::vector<uint8_t> member_;
    uint64_t down_violations_ = 0;
};

}  // namespace lf

#endif
