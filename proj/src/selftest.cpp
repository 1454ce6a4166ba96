#include "lf/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <vector>

#include "lf/analysis.hpp"
#include "lf/characterization.hpp"
#include "lf/config.hpp"
#include "lf/frame.hpp"
#include "lf/report.hpp"
#include "lf/sequence.hpp"

namespace lf {

namespace {

constexpr double kTolUnitary = 1e-12;
constexpr double kTolIdentity = 1e-10;

bool field_axioms() {
    const FieldSpec gf2(2);
    const FieldSpec gf3(3);
    const FieldSpec gf4(2, 2, {1, 1, 1});
    const FieldSpec gf9(3, 2, {1, 0, 1});  // x^2 + 1 over Z/3
    const FieldSpec gf16(2, 4, {1, 1, 0, 0, 1});
    for (const FieldSpec* fs : {&gf2, &gf3, &gf4, &gf9, &gf16}) {
        const auto digits = fs->digit_set();
        const uint32_t q = fs->order();
        if (digits.size() != q) return false;
        for (uint32_t a = 0; a < q; ++a) {
            if (!(fs->mul(digits[a], fs->one()) == digits[a])) return false;
            if (a != 0 && !(fs->mul(digits[a], fs->inv(digits[a])) == fs->one()))
                return false;
            for (uint32_t b = 0; b < q; ++b) {
                if (!(fs->add(digits[a], digits[b]) == fs->add(digits[b], digits[a])))
                    return false;
                for (uint32_t c = 0; c < q; ++c) {
                    const Scalar ab_c = fs->mul(fs->add(digits[a], digits[b]), digits[c]);
                    const Scalar ac_bc =
                        fs->add(fs->mul(digits[a], digits[c]), fs->mul(digits[b], digits[c]));
                    if (!(ab_c == ac_bc)) return false;
                    const Scalar assoc1 = fs->mul(fs->mul(digits[a], digits[b]), digits[c]);
                    const Scalar assoc2 = fs->mul(digits[a], fs->mul(digits[b], digits[c]));
                    if (!(assoc1 == assoc2)) return false;
                }
            }
        }
    }
    return true;
}

bool ultrametric_and_multiplicativity() {
    const FieldSpec fs(2);
    uint64_t state = 42;
    auto random_knumber = [&](bool nonzero) {
        const int lo = static_cast<int>(splitmix64(state) % 9) - 4;
        const int len = 1 + static_cast<int>(splitmix64(state) % 6);
        std::vector<uint16_t> digits(len);
        for (auto& d : digits) d = static_cast<uint16_t>(splitmix64(state) % 2);
        KNumber x(fs, lo, std::move(digits));
        if (nonzero && x.is_zero()) return KNumber::one(fs);
        return x;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        const KNumber x = random_knumber(false);
        const KNumber y = random_knumber(false);
        const double nx = k_norm(x), ny = k_norm(y);
        const double ns = k_norm(k_add(x, y));
        if (ns > std::max(nx, ny) + 1e-300) return false;
        if (nx != ny && ns != std::max(nx, ny)) return false;
        if (k_norm(k_mul(x, y)) != nx * ny) return false;
    }
    return true;
}

bool lattice_and_kappa() {
    const FieldSpec fs(2);
    const uint64_t q = fs.order();
    // u(r q^k + s) = u(r) p^-k + u(s), exhaustively
    for (uint64_t r = 0; r < 16; ++r) {
        for (uint32_t k = 0; k <= 3; ++k) {
            uint64_t qk = 1;
            for (uint32_t i = 0; i < k; ++i) qk *= q;
            for (uint64_t s = 0; s < qk; ++s) {
                const KNumber lhs = u_of_n(fs, r * qk + s);
                const KNumber rhs = k_add(p_shift(u_of_n(fs, r), -static_cast<int>(k)),
                                          u_of_n(fs, s));
                if (lhs != rhs) return false;
            }
        }
    }
    // kappa against its brute-force oracle
    for (uint64_t k = 1; k < 256; ++k) {
        uint32_t best = 0;
        for (uint32_t j = 1; j <= 8; ++j) {
            const KNumber shifted = p_shift(u_of_n(fs, k), static_cast<int>(j));
            bool is_lattice = false;
            for (uint64_t n = 0; n < 256; ++n) {
                if (shifted == u_of_n(fs, n)) {
                    is_lattice = true;
                    break;
                }
            }
            if (is_lattice)
                best = j;
            else
                break;
        }
        if (kappa(static_cast<uint32_t>(q), k).value() != best) return false;
    }
    // injectivity of n -> u(n) on n < q^4
    for (uint64_t a = 0; a < 16; ++a)
        for (uint64_t b = a + 1; b < 16; ++b)
            if (u_of_n(fs, a) == u_of_n(fs, b)) return false;
    return true;
}

bool character_orthonormality() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const auto roots = roots_of_unity(fs.p());
    const uint64_t qN = grid.pow_q(grid.N());
    const double measure = grid.cell_measure(Domain::frequency);
    for (uint64_t m = 0; m < qN; ++m) {
        for (uint64_t n = 0; n < qN; ++n) {
            Complex acc(0, 0);
            for (uint64_t i = 0; i < grid.fundamental_cell_count(Domain::frequency); ++i) {
                const uint64_t w = grid.fundamental_cell(Domain::frequency, i);
                acc += roots[grid.chi_u_dilated_exponent(m, 0, w)] *
                       std::conj(roots[grid.chi_u_dilated_exponent(n, 0, w)]);
            }
            acc *= measure;
            if (std::abs(acc - (m == n ? Complex(1, 0) : Complex(0, 0))) > kTolUnitary)
                return false;
        }
    }
    return true;
}

bool transform_exactness() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    uint64_t state = 7;
    for (int trial = 0; trial < 10; ++trial) {
        SampledFunction f(grid, Domain::time);
        for (uint64_t x = 0; x < grid.num_cells(); ++x)
            f[x] = Complex(2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0,
                           2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0);
        const SampledFunction F = fourier(f);
        // Plancherel
        double tn = 0, fn = 0;
        for (uint64_t i = 0; i < grid.num_cells(); ++i) {
            tn += std::norm(f[i]);
            fn += std::norm(F[i]);
        }
        tn *= grid.cell_measure(Domain::time);
        fn *= grid.cell_measure(Domain::frequency);
        if (std::abs(tn - fn) > kTolUnitary * std::max(1.0, tn)) return false;
        // inversion
        const SampledFunction back = inv_fourier(F);
        for (uint64_t i = 0; i < grid.num_cells(); ++i)
            if (std::abs(back[i] - f[i]) > kTolUnitary) return false;
        // fast path agreement
        const SampledFunction Ff = fourier_fast(f);
        for (uint64_t i = 0; i < grid.num_cells(); ++i)
            if (std::abs(Ff[i] - F[i]) > kTolUnitary) return false;
        const SampledFunction backf = inv_fourier_fast(F);
        for (uint64_t i = 0; i < grid.num_cells(); ++i)
            if (std::abs(backf[i] - back[i]) > kTolUnitary) return false;
    }
    return true;
}

bool periodize_bracket_sobolev() {
    const FieldSpec fs(2);
    const Grid grid(fs, 3, 3);
    // periodize(1_{p^-1 D}) = q on D
    const SampledFunction big = indicator(grid, Domain::frequency, [&](uint64_t w) {
        return w == 0 || grid.cell_valuation(Domain::frequency, w) >= -1;
    });
    for (const Complex v : periodize(big))
        if (std::abs(v - Complex(2, 0)) > kTolUnitary) return false;
    // bracket of the u(1)+D coset indicator: constant (1+q^2)^s
    const uint64_t u1 = grid.frequency_cell_of_u(1);
    const uint64_t qM = grid.pow_q(grid.M());
    const SampledFunction coset = indicator(grid, Domain::frequency,
                                            [&](uint64_t w) { return w % qM == u1; });
    const double s = 0.7;
    for (const Complex v : bracket(coset, coset, s))
        if (std::abs(v - Complex(std::pow(5.0, s), 0)) > kTolUnitary) return false;
    // Sobolev norm of the same spectrum at s = 1: sqrt(5)
    SampledFunction f(grid, Domain::frequency, coset.values());
    if (std::abs(sobolev_norm(f, 1.0) - std::sqrt(5.0)) > kTolUnitary) return false;
    return true;
}

bool sequence_ops() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    uint64_t state = 11;
    for (int trial = 0; trial < 5; ++trial) {
        Sequence z;
        for (uint64_t n = 0; n < grid.pow_q(grid.N()); ++n)
            z.set(n, Complex(2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0,
                             2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0));
        const SampledFunction zh = seq_fourier(z, grid);
        // Plancherel over the fundamental domain
        double fn = 0;
        for (uint64_t i = 0; i < grid.fundamental_cell_count(Domain::frequency); ++i)
            fn += std::norm(zh[grid.fundamental_cell(Domain::frequency, i)]);
        fn *= grid.cell_measure(Domain::frequency);
        if (std::abs(fn - z.norm() * z.norm()) > kTolUnitary * std::max(1.0, fn)) return false;
        // inversion
        if (!seq_inv_fourier(zh).approx_equal(z, kTolUnitary)) return false;
        // modulation is the identity on the lattice
        if (!seq_modulate(fs, z, trial + 1).approx_equal(z, 0.0)) return false;
        // translation intertwines with the character phase
        const uint64_t m = 3;
        const SampledFunction th = seq_fourier(seq_translate(fs, z, m), grid);
        const auto roots = roots_of_unity(fs.p());
        for (uint64_t i = 0; i < grid.fundamental_cell_count(Domain::frequency); ++i) {
            const uint64_t w = grid.fundamental_cell(Domain::frequency, i);
            const Complex expect = roots[grid.chi_u_dilated_exponent(m, 0, w)] * zh[w];
            if (std::abs(th[w] - expect) > kTolUnitary) return false;
        }
    }
    // wave packet specializations
    Sequence delta2;
    delta2.set(2, Complex(1, 0));
    const Sequence atom = wave_packet_atom(fs, delta2, 1, 0, 2);  // p u(2) = u(1)
    Sequence expected;
    expected.set(fs.index_add(2, 1), Complex(1, 0));
    if (!atom.approx_equal(expected, 0.0)) return false;
    try {
        wave_packet_atom(fs, delta2, 1, 0, 1);  // p u(1) = 1 is off-lattice
        return false;
    } catch (const std::domain_error&) {
    }
    return true;
}

bool frame_parseval() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const GeneratorSet haar = build_generators({}, grid, 0.0, Side::primal);
    const Ranges ranges{4, grid.pow_q(grid.N())};
    const BesselBounds b = bessel_bounds(haar, ranges);
    if (std::abs(b.lower - 1.0) > 1e-8 || std::abs(b.upper - 1.0) > 1e-8) return false;
    uint64_t state = 13;
    for (int trial = 0; trial < 3; ++trial) {
        const SampledFunction fh = random_spectrum(grid, state);
        double sum = 0;
        for (const auto& [idx, coeff] : analysis_coeffs(fh, haar, ranges))
            sum += std::norm(coeff);
        double norm2 = 0;
        for (uint64_t w = 0; w < grid.num_cells(); ++w) norm2 += std::norm(fh[w]);
        norm2 *= grid.cell_measure(Domain::frequency);
        if (std::abs(sum - norm2) > kTolIdentity * std::max(1.0, norm2)) return false;
    }
    return true;
}

bool lemma_identities() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const GeneratorSet primal = build_generators({}, grid, 0.25, Side::primal);
    const GeneratorSet dual = build_generators({}, grid, 0.25, Side::dual);
    const Ranges ranges{4, grid.pow_q(grid.N())};
    uint64_t state = 17;
    for (int trial = 0; trial < 5; ++trial) {
        const SampledFunction gh = random_spectrum(grid, state);
        if (lemma31_check(primal, gh, ranges).relative_deviation > kTolIdentity) return false;
        const SampledFunction fh = random_spectrum(grid, state);
        if (lemma32_check(primal, dual, fh, gh, ranges).deviation > kTolIdentity) return false;
    }
    return true;
}

bool tk_characterization() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const GeneratorSet haar_p = build_generators({}, grid, 0.0, Side::primal);
    const GeneratorSet haar_d = build_generators({}, grid, 0.0, Side::dual);
    const OmegaSet full = OmegaSet::full(grid);
    const Ranges ranges{4, grid.pow_q(grid.N())};
    for (uint64_t k = 0; k < ranges.k_max; ++k) {
        const TkResult tk = t_k(haar_p, haar_d, k, ranges.j_max);
        if (tk.uncheckable_count != 0) return false;
        if (tk_deviation(tk, full, k) > kTolUnitary) return false;
    }
    // doubled psi1 on both sides: max |t_0 - 1| = q^2 - 1 = 3
    GeneratorSpec doubled;
    doubled.kind = "scaled";
    doubled.base = std::make_shared<GeneratorSpec>();
    doubled.factors[1] = 2.0;
    const GeneratorSet dbl_p = build_generators(doubled, grid, 0.0, Side::primal);
    const GeneratorSet dbl_d = build_generators(doubled, grid, 0.0, Side::dual);
    const TkResult t0 = t_k(dbl_p, dbl_d, 0, ranges.j_max);
    if (std::abs(tk_deviation(t0, full, 0) - 3.0) > kTolUnitary) return false;
    return true;
}

bool projection_properties() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const OmegaSet ball = OmegaSet::norm_ball(grid, 1);
    uint64_t state = 23;
    const SampledFunction f = random_spectrum(grid, state);
    const SampledFunction pf = project_reducing(f, ball);
    const SampledFunction ppf = project_reducing(pf, ball);
    for (uint64_t w = 0; w < grid.num_cells(); ++w)
        if (std::abs(pf[w] - ppf[w]) > kTolUnitary) return false;
    // self-adjoint for the duality pairing
    const SampledFunction g = random_spectrum(grid, state);
    const Complex a = duality_pairing(pf, g);
    const Complex b = duality_pairing(f, project_reducing(g, ball));
    return std::abs(a - b) <= kTolUnitary;
}

bool nwbf_check_and_equivalence() {
    const FieldSpec fs(2);
    const Grid grid(fs, 4, 4);
    const OmegaSet full = OmegaSet::full(grid);
    const Ranges ranges{4, grid.pow_q(grid.N())};
    const Tolerances tol;

    const GeneratorSet haar_p = build_generators({}, grid, 0.0, Side::primal);
    const GeneratorSet haar_d = build_generators({}, grid, 0.0, Side::dual);
    const CheckReport good = check_nwbf(haar_p, haar_d, full, ranges, tol, 2024, 10);
    if (!good.overall_pass) return false;

    GeneratorSpec doubled;
    doubled.kind = "scaled";
    doubled.base = std::make_shared<GeneratorSpec>();
    doubled.factors[1] = 2.0;
    const GeneratorSet dbl_p = build_generators(doubled, grid, 0.0, Side::primal);
    const GeneratorSet dbl_d = build_generators(doubled, grid, 0.0, Side::dual);
    const CheckReport bad = check_nwbf(dbl_p, dbl_d, full, ranges, tol, 2024, 10);
    if (bad.overall_pass) return false;
    if (std::abs(bad.tk_max_deviation - 3.0) > kTolUnitary) return false;

    std::vector<HarnessCase> cases;
    cases.push_back({"haar", haar_p, haar_d});
    cases.push_back({"haar-doubled", dbl_p, dbl_d});
    const HarnessSummary summary =
        theorem_equivalence_harness(cases, full, ranges, tol, 99, 8);
    return summary.all_agree;
}

bool report_determinism() {
    const FieldSpec fs(2);
    const Grid grid(fs, 3, 3);
    const OmegaSet full = OmegaSet::full(grid);
    const Ranges ranges{3, grid.pow_q(grid.N())};
    const Tolerances tol;
    const GeneratorSet p1 = build_generators({}, grid, 0.0, Side::primal);
    const GeneratorSet d1 = build_generators({}, grid, 0.0, Side::dual);
    const CheckReport a = check_nwbf(p1, d1, full, ranges, tol, 5, 5);
    const CheckReport b = check_nwbf(p1, d1, full, ranges, tol, 5, 5);
    return serialize_report(a, "{}") == serialize_report(b, "{}");
}

}  // namespace

bool run_selftest(std::ostream& os) {
    struct Suite {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Suite> suites = {
        {"finite field axioms (q <= 16)", field_axioms},
        {"ultrametric / norm multiplicativity", ultrametric_and_multiplicativity},
        {"lattice identity / kappa oracle", lattice_and_kappa},
        {"character orthonormality", character_orthonormality},
        {"transform unitarity + fast path", transform_exactness},
        {"periodization / bracket / Sobolev", periodize_bracket_sobolev},
        {"sequence operators", sequence_ops},
        {"Haar frame Parseval + bounds", frame_parseval},
        {"energy + mixed-pair identities", lemma_identities},
        {"t_k characterization", tk_characterization},
        {"reducing projection", projection_properties},
        {"bi-frame check + equivalence", nwbf_check_and_equivalence},
        {"report determinism", report_determinism},
    };

    bool all_pass = true;
    double total_ms = 0.0;
    os << "self-test (p=2, M=N=4 core grid)\n";
    for (const Suite& suite : suites) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = suite.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        total_ms += ms;
        os << "  " << std::left << std::setw(40) << suite.name << (ok ? "pass" : "FAIL")
           << std::right << std::setw(9) << std::fixed << std::setprecision(1) << ms << " ms";
        if (!error.empty()) os << "  (" << error << ")";
        os << "\n";
        os.unsetf(std::ios::fixed);
        all_pass = all_pass && ok;
    }
    os << (all_pass ? "all suites passed" : "FAILURES present") << " in " << std::fixed
       << std::setprecision(1) << total_ms << " ms\n";
    os.unsetf(std::ios::fixed);
    return all_pass;
}

}  // namespace lf
