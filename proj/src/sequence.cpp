#include "lf/sequence.hpp"

#include <cmath>
#include <stdexcept>

#include "lf/analysis.hpp"

namespace lf {

Complex Sequence::at(uint64_t n) const {
    const auto it = vals_.find(n);
    return it == vals_.end() ? Complex(0, 0) : it->second;
}

void Sequence::set(uint64_t n, Complex v) {
    if (v == Complex(0, 0))
        vals_.erase(n);
    else
        vals_[n] = v;
}

double Sequence::norm() const {
    double s = 0.0;
    for (const auto& [n, v] : vals_) s += std::norm(v);
    return std::sqrt(s);
}

Complex Sequence::inner(const Sequence& other) const {
    Complex s(0, 0);
    for (const auto& [n, v] : vals_) s += v * std::conj(other.at(n));
    return s;
}

bool Sequence::approx_equal(const Sequence& other, double tol) const {
    for (const auto& [n, v] : vals_)
        if (std::abs(v - other.at(n)) > tol) return false;
    for (const auto& [n, v] : other.entries())
        if (std::abs(v - at(n)) > tol) return false;
    return true;
}

SampledFunction seq_fourier(const Sequence& z, const Grid& grid) {
    const uint64_t limit = grid.pow_q(grid.N());
    if (!z.entries().empty() && z.max_index() >= limit)
        throw std::out_of_range("seq_fourier: support index must be < q^N");
    const auto roots = roots_of_unity(grid.field().p());
    SampledFunction out(grid, Domain::frequency);
    for (uint64_t w = 0; w < grid.num_cells(); ++w) {
        Complex acc(0, 0);
        for (const auto& [n, v] : z.entries())
            acc += v * roots[grid.chi_u_dilated_exponent(n, 0, w)];
        out[w] = acc;
    }
    return out;
}

Sequence seq_inv_fourier(const SampledFunction& F) {
    if (F.domain() != Domain::frequency)
        throw std::invalid_argument("seq_inv_fourier: expects a frequency-domain function");
    const Grid& g = F.grid();
    const auto roots = roots_of_unity(g.field().p());
    const uint64_t dcells = g.fundamental_cell_count(Domain::frequency);
    const double measure = g.cell_measure(Domain::frequency);
    Sequence out;
    for (uint64_t n = 0; n < g.pow_q(g.N()); ++n) {
        Complex acc(0, 0);
        for (uint64_t i = 0; i < dcells; ++i) {
            const uint64_t w = g.fundamental_cell(Domain::frequency, i);
            acc += F[w] * std::conj(roots[g.chi_u_dilated_exponent(n, 0, w)]);
        }
        const Complex v = acc * measure;
        if (std::abs(v) > 0.0) out.set(n, v);
    }
    return out;
}

Sequence seq_translate(const FieldSpec& field, const Sequence& z, uint64_t m) {
    Sequence out;
    for (const auto& [n, v] : z.entries()) out.set(field.index_add(n, m), v);
    return out;
}

Sequence seq_modulate(const FieldSpec& field, const Sequence& z, uint64_t k) {
    Sequence out;
    for (const auto& [n, v] : z.entries()) {
        const Complex phase = chi(k_mul(u_of_n(field, k), u_of_n(field, n)));
        out.set(n, v * std::conj(phase));
    }
    return out;
}

Sequence wave_packet_atom(const FieldSpec& field, const Sequence& v, int j, uint64_t k,
                          uint64_t m) {
    const Sequence modulated = seq_modulate(field, v, k);
    uint64_t r = m;
    if (j < 0) {
        for (int t = 0; t < -j; ++t) r *= field.order();
    } else if (j > 0) {
        const auto kap = kappa(field.order(), m);
        if (m != 0 && (!kap || *kap < static_cast<uint32_t>(j))) {
            const KNumber shift = p_shift(u_of_n(field, m), j);
            throw std::domain_error("wave_packet_atom: p^" + std::to_string(j) + " u(" +
                                    std::to_string(m) + ") = " + shift.to_string() +
                                    " is not a lattice point");
        }
        for (int t = 0; t < j; ++t) r /= field.order();
    }
    return seq_translate(field, modulated, r);
}

}  // namespace lf
