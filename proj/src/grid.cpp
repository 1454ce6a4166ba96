#include "lf/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lf {

Grid::Grid(const FieldSpec& field, uint32_t M, uint32_t N) : field_(&field), M_(M), N_(N) {
    if (M_ < 1 || N_ < 1) throw std::invalid_argument("Grid: M and N must be >= 1");
    const uint64_t q = field_->order();
    uint64_t cells = 1;
    for (uint32_t i = 0; i < M_ + N_; ++i) {
        if (cells > (uint64_t(1) << 22) / q)
            throw std::invalid_argument("Grid: q^(M+N) exceeds the supported size");
        cells *= q;
    }
    num_cells_ = cells;
}

double Grid::cell_measure(Domain d) const {
    const double q = static_cast<double>(field_->order());
    return d == Domain::time ? std::pow(q, -double(M_)) : std::pow(q, -double(N_));
}

int Grid::lowest_power(Domain d) const {
    return d == Domain::time ? -static_cast<int>(N_) : -static_cast<int>(M_);
}

uint64_t Grid::pow_q(uint32_t e) const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= field_->order();
    return r;
}

uint16_t Grid::cell_digit(uint64_t cell, uint32_t position) const {
    const uint64_t q = field_->order();
    for (uint32_t i = 0; i < position; ++i) cell /= q;
    return static_cast<uint16_t>(cell % q);
}

uint16_t Grid::cell_digit_at_power(Domain d, uint64_t cell, int power) const {
    const int pos = power - lowest_power(d);
    if (pos < 0 || pos >= static_cast<int>(digit_count())) return 0;
    return cell_digit(cell, static_cast<uint32_t>(pos));
}

uint64_t Grid::add_cells(uint64_t a, uint64_t b) const {
    return field_->index_add(a, b);
}

uint64_t Grid::dilate_frequency_cell(uint64_t cell, uint32_t j) const {
    if (j >= digit_count()) return 0;
    // base-q digit shift: digits past the window refine within a cell
    return (cell * pow_q(j)) % num_cells_;
}

uint64_t Grid::frequency_cell_of_u(uint64_t k) const {
    if (k >= pow_q(M_))
        throw std::out_of_range("Grid: u(k) is outside the frequency window");
    // base-q digit t of k sits at power -1-t, i.e. position M-1-t
    const uint64_t q = field_->order();
    uint64_t cell = 0;
    uint64_t w = pow_q(M_ - 1);
    while (k != 0) {
        cell += (k % q) * w;
        k /= q;
        w /= q;
    }
    return cell;
}

int32_t Grid::cell_valuation(Domain d, uint64_t cell) const {
    if (cell == 0) return std::numeric_limits<int32_t>::max();
    const uint64_t q = field_->order();
    uint32_t pos = 0;
    while (cell % q == 0) {
        cell /= q;
        ++pos;
    }
    return static_cast<int32_t>(pos) + lowest_power(d);
}

double Grid::cell_norm(Domain d, uint64_t cell) const {
    if (cell == 0) return 0.0;
    const int32_t v = cell_valuation(d, cell);
    return std::pow(static_cast<double>(field_->order()), -static_cast<double>(v));
}

uint32_t Grid::chi_exponent(uint64_t freq_cell, uint64_t time_cell) const {
    // digit of (w x) at power -1: freq position t pairs with time position
    // D-1-t, since (t - M) + ((D-1-t) - N) = -1
    const uint32_t D = digit_count();
    uint32_t acc = 0;
    for (uint32_t t = 0; t < D; ++t) {
        const uint16_t a = cell_digit(freq_cell, t);
        if (a == 0) continue;
        const uint16_t b = cell_digit(time_cell, D - 1 - t);
        if (b == 0) continue;
        acc += field_->coeff0(field_->mul(field_->scalar(a), field_->scalar(b)));
    }
    return acc % field_->p();
}

uint32_t Grid::chi_u_dilated_exponent(uint64_t k, uint32_t j, uint64_t freq_cell) const {
    // digit of (u(k) p^j w) at power -1: base-q digit t of k (at power
    // -1-t) pairs with the digit of w at power t-j
    const uint64_t q = field_->order();
    uint32_t acc = 0;
    int t = 0;
    while (k != 0) {
        const uint16_t kd = static_cast<uint16_t>(k % q);
        if (kd != 0) {
            const uint16_t wd = cell_digit_at_power(Domain::frequency, freq_cell,
                                                    t - static_cast<int>(j));
            if (wd != 0)
                acc += field_->coeff0(field_->mul(field_->scalar(kd), field_->scalar(wd)));
        }
        k /= q;
        ++t;
    }
    return acc % field_->p();
}

KNumber Grid::knumber_of_cell(Domain d, uint64_t cell) const {
    std::vector<uint16_t> digits(digit_count(), 0);
    const uint64_t q = field_->order();
    for (uint32_t t = 0; t < digit_count(); ++t) {
        digits[t] = static_cast<uint16_t>(cell % q);
        cell /= q;
    }
    return KNumber(*field_, lowest_power(d), std::move(digits));
}

uint64_t Grid::cell_of_knumber(Domain d, const KNumber& x) const {
    if (x.is_zero()) return 0;
    const int lo = lowest_power(d);
    const int hi = lo + static_cast<int>(digit_count());
    if (x.lo() < lo || x.hi() > hi)
        throw std::out_of_range("Grid: element is not a cell representative");
    uint64_t cell = 0;
    for (int p = x.hi() - 1; p >= x.lo(); --p)
        cell = cell * field_->order() + x.digit_at(p).idx;
    for (int p = x.lo() - 1; p >= lo; --p) cell *= field_->order();
    return cell;
}

uint64_t Grid::cell_containing(Domain d, const KNumber& x) const {
    if (x.is_zero()) return 0;
    const int lo = lowest_power(d);
    const int hi = lo + static_cast<int>(digit_count());
    if (x.lo() < lo)
        throw std::out_of_range("Grid: element lies outside the grid support");
    uint64_t cell = 0;
    for (int p = hi - 1; p >= lo; --p) cell = cell * field_->order() + x.digit_at(p).idx;
    return cell;
}

uint64_t Grid::fundamental_cell_count(Domain d) const {
    return d == Domain::frequency ? pow_q(N_) : pow_q(M_);
}

uint64_t Grid::fundamental_cell(Domain d, uint64_t i) const {
    return d == Domain::frequency ? i * pow_q(M_) : i * pow_q(N_);
}

SampledFunction::SampledFunction(const Grid& grid, Domain domain, std::vector<Complex> values)
    : grid_(&grid), domain_(domain), values_(std::move(values)) {
    if (values_.size() != grid.num_cells())
        throw std::invalid_argument("SampledFunction: value count must match the grid");
}

OmegaSet::OmegaSet(const Grid& grid, std::vector<uint8_t> member, bool enforce)
    : grid_(&grid), member_(std::move(member)) {
    if (member_.size() != grid.num_cells())
        throw std::invalid_argument("OmegaSet: mask size must match the grid");
    for (uint64_t cell = 0; cell < member_.size(); ++cell) {
        if (member_[cell] && !member_[grid.dilate_frequency_cell(cell, 1)])
            ++down_violations_;
    }
    if (enforce && down_violations_ > 0)
        throw std::invalid_argument(
            "OmegaSet: not dilation invariant (p*Omega leaves Omega on " +
            std::to_string(down_violations_) + " cells)");
}

OmegaSet OmegaSet::checked(const Grid& grid, std::vector<uint8_t> member) {
    return OmegaSet(grid, std::move(member), true);
}

OmegaSet OmegaSet::unchecked(const Grid& grid, std::vector<uint8_t> member) {
    return OmegaSet(grid, std::move(member), false);
}

OmegaSet OmegaSet::full(const Grid& grid) {
    return OmegaSet(grid, std::vector<uint8_t>(grid.num_cells(), 1), true);
}

OmegaSet OmegaSet::empty(const Grid& grid) {
    return OmegaSet(grid, std::vector<uint8_t>(grid.num_cells(), 0), true);
}

OmegaSet OmegaSet::norm_ball(const Grid& grid, int radius_exp) {
    std::vector<uint8_t> member(grid.num_cells(), 0);
    for (uint64_t cell = 0; cell < grid.num_cells(); ++cell) {
        if (cell == 0 || grid.cell_valuation(Domain::frequency, cell) >= -radius_exp)
            member[cell] = 1;
    }
    return OmegaSet(grid, std::move(member), true);
}

uint64_t OmegaSet::cell_count() const {
    uint64_t n = 0;
    for (uint8_t m : member_) n += m;
    return n;
}

}  // namespace lf
