#include "doctest.h"
#include "lf/analysis.hpp"

#include <cmath>

using namespace lf;

namespace {

uint64_t rng_state = 0xA11CE;
uint64_t next_rand() {
    uint64_t z = (rng_state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform_pm1() { return 2.0 * (double(next_rand() >> 11) * 0x1.0p-53) - 1.0; }

SampledFunction random_function(const Grid& g, Domain d) {
    SampledFunction f(g, d);
    for (uint64_t i = 0; i < g.num_cells(); ++i) f[i] = Complex(uniform_pm1(), uniform_pm1());
    return f;
}

SampledFunction d_indicator(const Grid& g, Domain d) {
    return indicator(g, d, [&](uint64_t cell) {
        return cell == 0 || g.cell_valuation(d, cell) >= 0;
    });
}

}  // namespace

TEST_CASE("the character chi") {
    const FieldSpec fs(2);
    CHECK(chi(KNumber::zero(fs)) == Complex(1, 0));
    CHECK(chi(KNumber(fs, -1, {1})) == Complex(-1, 0));  // exp(2 pi i / 2)
    CHECK(chi(KNumber(fs, -2, {1})) == Complex(1, 0));   // j != 1 branch
    // additive on the digit at p^-1
    const FieldSpec gf3(3);
    const Complex w3 = roots_of_unity(3)[1];
    CHECK(std::abs(chi(KNumber(gf3, -1, {2})) - w3 * w3) < 1e-15);
    // extension fields: zeta_mu p^-1 with mu >= 1 maps to 1
    const FieldSpec gf4(2, 2, {1, 1, 1});
    CHECK(chi(KNumber(gf4, -1, {2})) == Complex(1, 0));   // zeta_1 p^-1
    CHECK(chi(KNumber(gf4, -1, {3})) == Complex(-1, 0));  // (1 + zeta_1) p^-1
}

TEST_CASE("chi_n") {
    const FieldSpec fs(2);
    for (int trial = 0; trial < 20; ++trial) {
        const KNumber x(fs, -2, {static_cast<uint16_t>(next_rand() % 2),
                                 static_cast<uint16_t>(next_rand() % 2),
                                 static_cast<uint16_t>(next_rand() % 2)});
        CHECK(chi_n(fs, 0, x) == Complex(1, 0));
    }
    CHECK(chi_n(fs, 1, KNumber::one(fs)) == Complex(-1, 0));
    // the lattice is chi-trivial: chi_{u(n)}(u(m)) = 1
    for (uint64_t n = 0; n < 16; ++n)
        for (uint64_t m = 0; m < 16; ++m)
            CHECK(chi_n(fs, n, u_of_n(fs, m)) == Complex(1, 0));
}

TEST_CASE("Haar integral") {
    const FieldSpec fs(2);
    const Grid g(fs, 3, 3);
    CHECK(std::abs(integrate(d_indicator(g, Domain::time)) - Complex(1, 0)) < 1e-15);
    const SampledFunction big = indicator(g, Domain::time, [&](uint64_t cell) {
        return cell == 0 || g.cell_valuation(Domain::time, cell) >= -1;
    });
    CHECK(std::abs(integrate(big) - Complex(2, 0)) < 1e-15);
    CHECK(integrate(SampledFunction(g, Domain::time)) == Complex(0, 0));
}

TEST_CASE("indicator examples") {
    const FieldSpec fs(3);
    const Grid g(fs, 2, 2);
    CHECK(std::abs(integrate(phi_indicator(g, Domain::time, 0)) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(integrate(phi_indicator(g, Domain::time, 1)) - Complex(1.0 / 3, 0)) < 1e-15);
    CHECK(integrate(indicator(g, Domain::time, [](uint64_t) { return false; })) ==
          Complex(0, 0));
}

TEST_CASE("transform of the D indicator is the D indicator") {
    for (uint32_t p : {2u, 3u}) {
        const FieldSpec fs(p);
        const Grid g(fs, 3, 2);
        const SampledFunction F = fourier(d_indicator(g, Domain::time));
        const SampledFunction expected = d_indicator(g, Domain::frequency);
        for (uint64_t w = 0; w < g.num_cells(); ++w)
            CHECK(std::abs(F[w] - expected[w]) < 1e-13);
        const SampledFunction back = inv_fourier(expected);
        const SampledFunction expected_t = d_indicator(g, Domain::time);
        for (uint64_t x = 0; x < g.num_cells(); ++x)
            CHECK(std::abs(back[x] - expected_t[x]) < 1e-13);
    }
}

TEST_CASE("point mass transforms to a constant") {
    const FieldSpec fs(2);
    const Grid g(fs, 3, 3);
    SampledFunction f(g, Domain::time);
    f[0] = Complex(8, 0);  // q^M * indicator of the zero cell
    const SampledFunction F = fourier(f);
    for (uint64_t w = 0; w < g.num_cells(); ++w) CHECK(std::abs(F[w] - Complex(1, 0)) < 1e-14);
    CHECK(fourier(SampledFunction(g, Domain::time)).values() ==
          SampledFunction(g, Domain::frequency).values());
}

TEST_CASE("character orthonormality Gram matrix") {
    for (uint32_t p : {2u, 3u}) {
        const FieldSpec fs(p);
        const Grid g(fs, 3, 2);
        const auto roots = roots_of_unity(p);
        const uint64_t qN = g.pow_q(g.N());
        for (uint64_t m = 0; m < qN; ++m) {
            for (uint64_t n = 0; n < qN; ++n) {
                Complex acc(0, 0);
                for (uint64_t i = 0; i < g.fundamental_cell_count(Domain::frequency); ++i) {
                    const uint64_t w = g.fundamental_cell(Domain::frequency, i);
                    acc += roots[g.chi_u_dilated_exponent(m, 0, w)] *
                           std::conj(roots[g.chi_u_dilated_exponent(n, 0, w)]);
                }
                acc *= g.cell_measure(Domain::frequency);
                CHECK(std::abs(acc - (m == n ? Complex(1, 0) : Complex(0, 0))) <= 1e-12);
            }
        }
    }
}

TEST_CASE("Plancherel and inversion on random functions") {
    const FieldSpec fs(2);
    const Grid g(fs, 4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const SampledFunction f = random_function(g, Domain::time);
        const SampledFunction F = fourier(f);
        double tn = 0, fn = 0;
        for (uint64_t i = 0; i < g.num_cells(); ++i) {
            tn += std::norm(f[i]);
            fn += std::norm(F[i]);
        }
        tn *= g.cell_measure(Domain::time);
        fn *= g.cell_measure(Domain::frequency);
        CHECK(std::abs(tn - fn) <= 1e-12 * std::max(1.0, tn));
        const SampledFunction back = inv_fourier(F);
        for (uint64_t i = 0; i < g.num_cells(); ++i) CHECK(std::abs(back[i] - f[i]) <= 1e-12);
    }
}

TEST_CASE("fast transform agrees with the naive character sum") {
    const FieldSpec gf2(2);
    const FieldSpec gf3(3);
    const FieldSpec gf4(2, 2, {1, 1, 1});
    struct Case {
        const FieldSpec* fs;
        uint32_t M, N;
    };
    for (const Case& c : {Case{&gf2, 4, 4}, Case{&gf3, 2, 2}, Case{&gf4, 2, 1}}) {
        const Grid g(*c.fs, c.M, c.N);
        for (int trial = 0; trial < 3; ++trial) {
            const SampledFunction f = random_function(g, Domain::time);
            const SampledFunction F = fourier(f);
            const SampledFunction Ff = fourier_fast(f);
            for (uint64_t i = 0; i < g.num_cells(); ++i) CHECK(std::abs(F[i] - Ff[i]) <= 1e-12);
            const SampledFunction G = random_function(g, Domain::frequency);
            const SampledFunction b = inv_fourier(G);
            const SampledFunction bf = inv_fourier_fast(G);
            for (uint64_t i = 0; i < g.num_cells(); ++i) CHECK(std::abs(b[i] - bf[i]) <= 1e-12);
        }
    }
}

TEST_CASE("periodization") {
    const FieldSpec fs(2);
    const Grid g(fs, 3, 3);
    // single term survives for the D indicator
    for (const Complex v : periodize(d_indicator(g, Domain::frequency)))
        CHECK(std::abs(v - Complex(1, 0)) < 1e-15);
    // q translates of D tile p^-1 D
    const SampledFunction big = indicator(g, Domain::frequency, [&](uint64_t w) {
        return w == 0 || g.cell_valuation(Domain::frequency, w) >= -1;
    });
    for (const Complex v : periodize(big)) CHECK(std::abs(v - Complex(2, 0)) < 1e-15);
    for (const Complex v : periodize(SampledFunction(g, Domain::frequency)))
        CHECK(v == Complex(0, 0));
}

TEST_CASE("bracket products") {
    const FieldSpec fs(2);
    const Grid g(fs, 3, 3);
    const SampledFunction one_d = d_indicator(g, Domain::frequency);
    for (const Complex v : bracket(one_d, one_d, 0.0))
        CHECK(std::abs(v - Complex(1, 0)) < 1e-15);
    const SampledFunction zero(g, Domain::frequency);
    for (const Complex v : bracket(random_function(g, Domain::frequency), zero, 0.7))
        CHECK(v == Complex(0, 0));
    // coset u(1)+D: single translate of weight (1 + q^2)^s
    const uint64_t u1 = g.frequency_cell_of_u(1);
    const uint64_t qM = g.pow_q(g.M());
    const SampledFunction coset =
        indicator(g, Domain::frequency, [&](uint64_t w) { return w % qM == u1; });
    for (double s : {-1.0, 0.5, 1.0})
        for (const Complex v : bracket(coset, coset, s))
            CHECK(std::abs(v - Complex(std::pow(5.0, s), 0)) < 1e-14);
}

TEST_CASE("Sobolev norms") {
    const FieldSpec fs(2);
    const Grid g(fs, 3, 3);
    CHECK(sobolev_norm(d_indicator(g, Domain::time), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sobolev_norm(SampledFunction(g, Domain::time), -2.5) == 0.0);
    const uint64_t u1 = g.frequency_cell_of_u(1);
    const uint64_t qM = g.pow_q(g.M());
    const SampledFunction coset =
        indicator(g, Domain::frequency, [&](uint64_t w) { return w % qM == u1; });
    CHECK(sobolev_norm(coset, 1.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
    // s = 0 equals the Plancherel L2 norm for time-domain inputs
    const SampledFunction f = random_function(g, Domain::time);
    double l2 = 0;
    for (uint64_t i = 0; i < g.num_cells(); ++i) l2 += std::norm(f[i]);
    l2 = std::sqrt(l2 * g.cell_measure(Domain::time));
    CHECK(sobolev_norm(f, 0.0) == doctest::Approx(l2).epsilon(1e-12));
}

