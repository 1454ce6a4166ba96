#include "lf/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lf {

namespace {

// Neumaier compensated accumulator, one per real component.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct ComplexAccumulator {
    Accumulator re, im;
    void add(Complex v) {
        re.add(v.real());
        im.add(v.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace

std::vector<Complex> roots_of_unity(uint32_t p) {
    std::vector<Complex> roots(p);
    for (uint32_t t = 0; t < p; ++t) {
        if (t == 0)
            roots[t] = Complex(1.0, 0.0);
        else if (2 * t == p)
            roots[t] = Complex(-1.0, 0.0);
        else {
            const double a = 2.0 * std::numbers::pi * t / p;
            roots[t] = Complex(std::cos(a), std::sin(a));
        }
    }
    return roots;
}

Complex chi(const KNumber& x) {
    const FieldSpec& fs = x.field();
    const uint32_t a = fs.coeff0(x.digit_at(-1));
    if (a == 0) return Complex(1.0, 0.0);
    return roots_of_unity(fs.p())[a];
}

Complex chi_n(const FieldSpec& field, uint64_t n, const KNumber& x) {
    return chi(k_mul(u_of_n(field, n), x));
}

Complex integrate(const SampledFunction& f) {
    ComplexAccumulator acc;
    for (uint64_t cell = 0; cell < f.size(); ++cell) acc.add(f[cell]);
    return acc.value() * f.grid().cell_measure(f.domain());
}

SampledFunction fourier(const SampledFunction& f) {
    if (f.domain() != Domain::time)
        throw std::invalid_argument("fourier: expects a time-domain function");
    const Grid& g = f.grid();
    const auto roots = roots_of_unity(g.field().p());
    const double measure = g.cell_measure(Domain::time);
    SampledFunction out(g, Domain::frequency);
    for (uint64_t w = 0; w < g.num_cells(); ++w) {
        ComplexAccumulator acc;
        for (uint64_t x = 0; x < g.num_cells(); ++x) {
            const Complex v = f[x];
            if (v == Complex(0, 0)) continue;
            acc.add(v * std::conj(roots[g.chi_exponent(w, x)]));
        }
        out[w] = acc.value() * measure;
    }
    return out;
}

SampledFunction inv_fourier(const SampledFunction& F) {
    if (F.domain() != Domain::frequency)
        throw std::invalid_argument("inv_fourier: expects a frequency-domain function");
    const Grid& g = F.grid();
    const auto roots = roots_of_unity(g.field().p());
    const double measure = g.cell_measure(Domain::frequency);
    SampledFunction out(g, Domain::time);
    for (uint64_t x = 0; x < g.num_cells(); ++x) {
        ComplexAccumulator acc;
        for (uint64_t w = 0; w < g.num_cells(); ++w) {
            const Complex v = F[w];
            if (v == Complex(0, 0)) continue;
            acc.add(v * roots[g.chi_exponent(w, x)]);
        }
        out[x] = acc.value() * measure;
    }
    return out;
}

namespace {

// Shared radix-q sweep. The transform kernel factorizes over digit
// positions because the pairing chi(w x) only reads products of digit
// pairs (a, b) with a + b = -1; input axis t couples with output axis
// D-1-t. Sweeping every axis with the q x q kernel and then reversing the
// digit order yields the full character sum in O(n q (M+N)).
SampledFunction radix_transform(const SampledFunction& in, Domain out_domain,
                                bool conjugate_kernel, double scale) {
    const Grid& g = in.grid();
    const FieldSpec& fs = g.field();
    const uint64_t q = fs.order();
    const uint32_t D = g.digit_count();
    const uint64_t n = g.num_cells();
    const auto roots = roots_of_unity(fs.p());

    std::vector<std::vector<Complex>> kernel(q, std::vector<Complex>(q));
    for (uint64_t u = 0; u < q; ++u)
        for (uint64_t v = 0; v < q; ++v) {
            const uint32_t e = fs.coeff0(
                fs.mul(fs.scalar(static_cast<uint16_t>(u)), fs.scalar(static_cast<uint16_t>(v))));
            kernel[u][v] = conjugate_kernel ? std::conj(roots[e]) : roots[e];
        }

    std::vector<Complex> data(in.values());
    std::vector<Complex> lane(q);
    uint64_t stride = 1;
    for (uint32_t axis = 0; axis < D; ++axis) {
        const uint64_t block = stride * q;
        for (uint64_t base = 0; base < n; base += block) {
            for (uint64_t off = 0; off < stride; ++off) {
                for (uint64_t r = 0; r < q; ++r) lane[r] = data[base + off + r * stride];
                for (uint64_t u = 0; u < q; ++u) {
                    Complex acc(0, 0);
                    for (uint64_t r = 0; r < q; ++r) acc += kernel[u][r] * lane[r];
                    data[base + off + u * stride] = acc;
                }
            }
        }
        stride *= q;
    }

    // digit-order reversal: input axis t carries output axis D-1-t
    SampledFunction out(g, out_domain);
    for (uint64_t idx = 0; idx < n; ++idx) {
        uint64_t rev = 0;
        uint64_t tmp = idx;
        for (uint32_t t = 0; t < D; ++t) {
            rev = rev * q + tmp % q;
            tmp /= q;
        }
        out[idx] = data[rev] * scale;
    }
    return out;
}

}  // namespace

SampledFunction fourier_fast(const SampledFunction& f) {
    if (f.domain() != Domain::time)
        throw std::invalid_argument("fourier_fast: expects a time-domain function");
    return radix_transform(f, Domain::frequency, true, f.grid().cell_measure(Domain::time));
}

SampledFunction inv_fourier_fast(const SampledFunction& F) {
    if (F.domain() != Domain::frequency)
        throw std::invalid_argument("inv_fourier_fast: expects a frequency-domain function");
    return radix_transform(F, Domain::time, false, F.grid().cell_measure(Domain::frequency));
}

std::vector<Complex> periodize(const SampledFunction& F) {
    if (F.domain() != Domain::frequency)
        throw std::invalid_argument("periodize: expects a frequency-domain function");
    const Grid& g = F.grid();
    const uint64_t translates = g.frequency_translate_count();
    const uint64_t dcells = g.fundamental_cell_count(Domain::frequency);
    std::vector<Complex> out(dcells);
    for (uint64_t i = 0; i < dcells; ++i) {
        const uint64_t base = g.fundamental_cell(Domain::frequency, i);
        ComplexAccumulator acc;
        for (uint64_t k = 0; k < translates; ++k)
            acc.add(F[g.add_cells(base, g.frequency_cell_of_u(k))]);
        out[i] = acc.value();
    }
    return out;
}

std::vector<Complex> bracket(const SampledFunction& F, const SampledFunction& G, double s) {
    if (F.domain() != Domain::frequency || G.domain() != Domain::frequency)
        throw std::invalid_argument("bracket: expects frequency-domain functions");
    if (&F.grid() != &G.grid())
        throw std::invalid_argument("bracket: functions must share a grid");
    const Grid& g = F.grid();
    const uint64_t translates = g.frequency_translate_count();
    const uint64_t dcells = g.fundamental_cell_count(Domain::frequency);
    std::vector<Complex> out(dcells);
    for (uint64_t i = 0; i < dcells; ++i) {
        const uint64_t base = g.fundamental_cell(Domain::frequency, i);
        ComplexAccumulator acc;
        for (uint64_t k = 0; k < translates; ++k) {
            const uint64_t cell = g.add_cells(base, g.frequency_cell_of_u(k));
            const Complex term = F[cell] * std::conj(G[cell]);
            if (term == Complex(0, 0)) continue;
            const double norm = g.cell_norm(Domain::frequency, cell);
            acc.add(term * std::pow(1.0 + norm * norm, s));
        }
        out[i] = acc.value();
    }
    return out;
}

double sobolev_norm(const SampledFunction& f, double s) {
    const SampledFunction* F = &f;
    SampledFunction transformed(f.grid(), Domain::frequency);
    if (f.domain() == Domain::time) {
        transformed = fourier(f);
        F = &transformed;
    }
    const Grid& g = f.grid();
    Accumulator acc;
    for (uint64_t w = 0; w < g.num_cells(); ++w) {
        const double m = std::norm((*F)[w]);
        if (m == 0.0) continue;
        const double norm = g.cell_norm(Domain::frequency, w);
        acc.add(m * std::pow(1.0 + norm * norm, s));
    }
    return std::sqrt(acc.value() * g.cell_measure(Domain::frequency));
}

SampledFunction indicator(const Grid& grid, Domain domain,
                          const std::function<bool(uint64_t)>& pred) {
    SampledFunction out(grid, domain);
    for (uint64_t cell = 0; cell < grid.num_cells(); ++cell)
        if (pred(cell)) out[cell] = Complex(1.0, 0.0);
    return out;
}

SampledFunction phi_indicator(const Grid& grid, Domain domain, int k) {
    return indicator(grid, domain, [&](uint64_t cell) {
        return cell == 0 || grid.cell_valuation(domain, cell) >= k;
    });
}

}  // namespace lf
