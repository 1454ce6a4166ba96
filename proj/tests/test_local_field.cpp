#include "doctest.h"
#include "lf/local_field.hpp"

#include <cmath>

using namespace lf;

namespace {

const FieldSpec& gf2() {
    static const FieldSpec fs(2);
    return fs;
}

// independent oracle for kappa: largest j such that p^j u(k) is a lattice
// point, by exhaustive search over u(n)
uint32_t kappa_oracle(const FieldSpec& fs, uint64_t k, uint64_t n_limit, uint32_t j_limit) {
    uint32_t best = 0;
    for (uint32_t j = 1; j <= j_limit; ++j) {
        const KNumber shifted = p_shift(u_of_n(fs, k), static_cast<int>(j));
        bool found = false;
        for (uint64_t n = 0; n < n_limit && !found; ++n) found = shifted == u_of_n(fs, n);
        if (!found) break;
        best = j;
    }
    return best;
}

uint64_t rng_state = 0x1234567;
uint64_t next_rand() {
    uint64_t z = (rng_state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

KNumber random_knumber(const FieldSpec& fs) {
    const int lo = static_cast<int>(next_rand() % 9) - 4;
    const int len = 1 + static_cast<int>(next_rand() % 6);
    std::vector<uint16_t> digits(static_cast<size_t>(len));
    for (auto& d : digits) d = static_cast<uint16_t>(next_rand() % fs.order());
    return KNumber(fs, lo, std::move(digits));
}

}  // namespace

TEST_CASE("digit-wise addition") {
    const FieldSpec& fs = gf2();
    const KNumber x(fs, -1, {1, 1});  // p^-1 + 1
    CHECK(k_add(x, KNumber::zero(fs)) == x);
    const KNumber pinv(fs, -1, {1});
    CHECK(k_add(pinv, pinv) == KNumber::zero(fs));
    CHECK(k_add(x, pinv) == KNumber::one(fs));
}

TEST_CASE("convolution multiplication") {
    const FieldSpec& fs = gf2();
    CHECK(k_mul(KNumber::prime(fs), u_of_n(fs, 1)) == KNumber::one(fs));
    const KNumber one_plus_p(fs, 0, {1, 1});
    const KNumber one_plus_p2(fs, 0, {1, 0, 1});
    CHECK(k_mul(one_plus_p, one_plus_p) == one_plus_p2);
    CHECK(k_mul(random_knumber(fs), KNumber::zero(fs)) == KNumber::zero(fs));
}

TEST_CASE("valuation and norm") {
    const FieldSpec& fs = gf2();
    CHECK(!valuation(KNumber::zero(fs)).has_value());
    CHECK(k_norm(KNumber::zero(fs)) == 0.0);
    CHECK(valuation(KNumber::prime(fs)).value() == 1);
    CHECK(k_norm(KNumber::prime(fs)) == 0.5);
    const KNumber x(fs, -2, {1, 1});  // p^-2 + p^-1
    CHECK(valuation(x).value() == -2);
    CHECK(k_norm(x) == 4.0);
}

TEST_CASE("prime-power shifts") {
    const FieldSpec& fs = gf2();
    CHECK(p_shift(KNumber::one(fs), 3) == KNumber(fs, 3, {1}));
    CHECK(p_shift(u_of_n(fs, 1), 1) == KNumber::one(fs));
    const KNumber x = random_knumber(fs);
    CHECK(p_shift(x, 0) == x);
    CHECK(p_shift(p_shift(x, 5), -5) == x);
}

TEST_CASE("the u(n) map") {
    const FieldSpec& fs = gf2();
    CHECK(u_of_n(fs, 0) == KNumber::zero(fs));
    CHECK(u_of_n(fs, 1) == KNumber(fs, -1, {1}));
    CHECK(u_of_n(fs, 3) == KNumber(fs, -2, {1, 1}));  // p^-1 + p^-2

    // u(n) = 0 iff n = 0, and only negative powers appear
    for (uint64_t n = 1; n < 64; ++n) {
        const KNumber u = u_of_n(fs, n);
        CHECK(!u.is_zero());
        CHECK(u.hi() <= 0);
    }
}

TEST_CASE("digit set indexing is consistent with u(n) below q") {
    const FieldSpec gf4(2, 2, {1, 1, 1});
    const FieldSpec gf3(3);
    for (const FieldSpec* fs : {&gf4, &gf3}) {
        const auto digits = fs->digit_set();
        for (uint16_t n = 1; n < fs->order(); ++n)
            CHECK(u_of_n(*fs, n) == KNumber(*fs, -1, {digits[n].idx}));
    }
}

TEST_CASE("u(n) for q = 4 uses the two-stage digit formula") {
    const FieldSpec gf4(2, 2, {1, 1, 1});
    // n = 2 = a1*p with a1 = 1: u(2) = zeta_1 p^-1, digit index 2
    CHECK(u_of_n(gf4, 2) == KNumber(gf4, -1, {2}));
    // n = 6 = b0 + b1 q with b0 = 2, b1 = 1: u(6) = u(2) + u(1) p^-1
    CHECK(u_of_n(gf4, 6) == KNumber(gf4, -2, {1, 2}));
}

TEST_CASE("lattice identity u(r q^k + s) = u(r) p^-k + u(s)") {
    for (uint32_t p : {2u, 3u}) {
        const FieldSpec fs(p);
        const uint64_t q = fs.order();
        for (uint64_t r = 0; r < 16; ++r) {
            for (uint32_t k = 0; k <= 3; ++k) {
                uint64_t qk = 1;
                for (uint32_t i = 0; i < k; ++i) qk *= q;
                for (uint64_t s = 0; s < qk; ++s) {
                    const KNumber lhs = u_of_n(fs, r * qk + s);
                    const KNumber rhs =
                        k_add(p_shift(u_of_n(fs, r), -static_cast<int>(k)), u_of_n(fs, s));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("kappa") {
    CHECK(!kappa(2, 0).has_value());
    CHECK(kappa(2, 6).value() == 1);
    CHECK(kappa(2, 4).value() == 2);
    CHECK(kappa(3, 9).value() == 2);
    CHECK(kappa(3, 5).value() == 0);
}

TEST_CASE("kappa matches its brute-force oracle") {
    const FieldSpec& fs = gf2();
    for (uint64_t k = 1; k < 256; ++k)
        CHECK(kappa(2, k).value() == kappa_oracle(fs, k, 256, 8));
    const FieldSpec gf3(3);
    for (uint64_t k = 1; k < 81; ++k)
        CHECK(kappa(3, k).value() == kappa_oracle(gf3, k, 81, 4));
}

TEST_CASE("u(n) are pairwise distinct coset representatives") {
    const FieldSpec& fs = gf2();
    const uint64_t limit = 16;  // q^N with N = 4
    for (uint64_t a = 0; a < limit; ++a) {
        const KNumber ua = u_of_n(fs, a);
        CHECK(ua.hi() <= 0);
        CHECK((ua.is_zero() || ua.lo() >= -4));
        for (uint64_t b = a + 1; b < limit; ++b) {
            CHECK(!(ua == u_of_n(fs, b)));
            // distinct mod D: the difference has a digit below power 0
            const KNumber diff = k_sub(ua, u_of_n(fs, b));
            CHECK(valuation(diff).value() < 0);
        }
    }
}

TEST_CASE("ultrametric inequality on random pairs") {
    const FieldSpec& fs = gf2();
    const FieldSpec gf9(3, 2, {1, 0, 1});
    for (const FieldSpec* f : {&fs, &gf9}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const KNumber x = random_knumber(*f);
            const KNumber y = random_knumber(*f);
            const double nx = k_norm(x), ny = k_norm(y);
            const double ns = k_norm(k_add(x, y));
            CHECK(ns <= std::max(nx, ny));
            if (nx != ny) CHECK(ns == std::max(nx, ny));
        }
    }
}

TEST_CASE("norm multiplicativity on exact inputs") {
    const FieldSpec& fs = gf2();
    const FieldSpec gf4(2, 2, {1, 1, 1});
    for (const FieldSpec* f : {&fs, &gf4}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const KNumber x = random_knumber(*f);
            const KNumber y = random_knumber(*f);
            CHECK(k_norm(k_mul(x, y)) == k_norm(x) * k_norm(y));
        }
    }
}

TEST_CASE("canonical form") {
    const FieldSpec& fs = gf2();
    CHECK(KNumber(fs, -3, {0, 0, 1, 0}) == KNumber(fs, -1, {1}));
    CHECK(KNumber(fs, 2, {0, 0, 0}) == KNumber::zero(fs));
    CHECK(KNumber(fs, -1, {1}).to_string() == "p^-1");
    CHECK(u_of_n(fs, 3).to_string() == "p^-2 + p^-1");
    CHECK(KNumber::zero(fs).to_string() == "0");
}
