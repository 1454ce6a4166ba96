#include "doctest.h"
#include "lf/finite_field.hpp"

#include <stdexcept>

using namespace lf;

TEST_CASE("prime field addition") {
    const FieldSpec gf2(2);
    CHECK(gf2.add(gf2.one(), gf2.one()) == gf2.zero());

    const FieldSpec gf3(3);
    CHECK(gf3.add(gf3.scalar(2), gf3.scalar(2)) == gf3.one());
}

TEST_CASE("GF(4) addition is componentwise mod 2") {
    const FieldSpec gf4(2, 2, {1, 1, 1});
    // x has index 2, x+1 has index 3
    CHECK(gf4.add(gf4.scalar(2), gf4.scalar(3)) == gf4.one());
}

TEST_CASE("multiplication") {
    const FieldSpec gf4(2, 2, {1, 1, 1});
    for (uint16_t i = 0; i < 4; ++i)
        CHECK(gf4.mul(gf4.scalar(i), gf4.one()) == gf4.scalar(i));
    // x * x reduces by x^2 + x + 1 to x + 1
    CHECK(gf4.mul(gf4.scalar(2), gf4.scalar(2)) == gf4.scalar(3));

    const FieldSpec gf3(3);
    // oracle: exhaustive multiplication table of Z/3
    for (uint16_t a = 0; a < 3; ++a)
        for (uint16_t b = 0; b < 3; ++b)
            CHECK(gf3.mul(gf3.scalar(a), gf3.scalar(b)).idx == (a * b) % 3);
}

TEST_CASE("inverses by exhaustive search") {
    const FieldSpec gf3(3);
    const FieldSpec gf4(2, 2, {1, 1, 1});
    CHECK(gf3.inv(gf3.one()) == gf3.one());
    for (const FieldSpec* fs : {&gf3, &gf4}) {
        for (uint16_t a = 1; a < fs->order(); ++a) {
            // oracle: the unique b with a*b = 1
            uint16_t expected = 0;
            for (uint16_t b = 1; b < fs->order(); ++b)
                if (fs->mul(fs->scalar(a), fs->scalar(b)) == fs->one()) expected = b;
            CHECK(fs->inv(fs->scalar(a)).idx == expected);
        }
    }
    CHECK(gf3.inv(gf3.scalar(2)) == gf3.scalar(2));
    CHECK(gf4.inv(gf4.scalar(2)) == gf4.scalar(3));
    CHECK_THROWS_AS((void)gf3.inv(gf3.zero()), std::domain_error);
}

TEST_CASE("digit set enumeration") {
    const FieldSpec gf2(2);
    CHECK(gf2.digit_set().size() == 2);
    CHECK(gf2.digit_set()[0] == gf2.zero());
    CHECK(gf2.digit_set()[1] == gf2.one());

    const FieldSpec gf3(3);
    for (uint16_t i = 0; i < 3; ++i) CHECK(gf3.digit_set()[i].idx == i);

    const FieldSpec gf4(2, 2, {1, 1, 1});
    const auto digits = gf4.digit_set();
    REQUIRE(digits.size() == 4);
    CHECK(gf4.coords(digits[0]) == std::vector<uint32_t>{0, 0});
    CHECK(gf4.coords(digits[1]) == std::vector<uint32_t>{1, 0});
    CHECK(gf4.coords(digits[2]) == std::vector<uint32_t>{0, 1});  // x
    CHECK(gf4.coords(digits[3]) == std::vector<uint32_t>{1, 1});  // x+1
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    const FieldSpec gf8(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
    const FieldSpec gf9(3, 2, {1, 0, 1});     // x^2 + 1
    const FieldSpec gf16(2, 4, {1, 1, 0, 0, 1});
    const FieldSpec gf5(5);
    const FieldSpec gf13(13);
    for (const FieldSpec* fs : {&gf8, &gf9, &gf16, &gf5, &gf13}) {
        const uint32_t q = fs->order();
        for (uint16_t a = 0; a < q; ++a) {
            const Scalar sa = fs->scalar(a);
            CHECK(fs->add(sa, fs->zero()) == sa);
            CHECK(fs->mul(sa, fs->one()) == sa);
            CHECK(fs->add(sa, fs->neg(sa)) == fs->zero());
            if (a != 0) CHECK(fs->mul(sa, fs->inv(sa)) == fs->one());
            for (uint16_t b = 0; b < q; ++b) {
                const Scalar sb = fs->scalar(b);
                CHECK(fs->add(sa, sb) == fs->add(sb, sa));
                CHECK(fs->mul(sa, sb) == fs->mul(sb, sa));
                for (uint16_t c = 0; c < q; ++c) {
                    const Scalar sc = fs->scalar(c);
                    CHECK(fs->add(fs->add(sa, sb), sc) == fs->add(sa, fs->add(sb, sc)));
                    CHECK(fs->mul(fs->mul(sa, sb), sc) == fs->mul(sa, fs->mul(sb, sc)));
                    CHECK(fs->mul(fs->add(sa, sb), sc) ==
                          fs->add(fs->mul(sa, sc), fs->mul(sb, sc)));
                }
            }
        }
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);                // not prime
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(FieldSpec(2, 2, {0, 1, 1}), std::invalid_argument);  // x(x+1)
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 1}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(FieldSpec(2, 5, {1, 1, 0, 0, 0, 1}), std::invalid_argument);  // c > 4
    CHECK_THROWS_AS(FieldSpec(3, 4, {1, 0, 0, 0, 2}), std::invalid_argument);     // not monic
    // degree-4 modulus with no roots but a quadratic factor: (x^2+x+1)^2
    CHECK_THROWS_AS(FieldSpec(2, 4, {1, 0, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("operations reject mismatched fields") {
    const FieldSpec a(2);
    const FieldSpec b(2);
    CHECK_THROWS_AS((void)a.add(a.one(), b.one()), std::invalid_argument);
    CHECK_THROWS_AS((void)a.mul(b.one(), a.one()), std::invalid_argument);
}

TEST_CASE("index arithmetic is digit-wise") {
    const FieldSpec gf2(2);
    CHECK(gf2.index_add(3, 1) == 2);
    CHECK(gf2.index_add(5, 3) == 6);
    CHECK(gf2.index_sub(6, 2) == 4);
    const FieldSpec gf3(3);
    CHECK(gf3.index_add(2, 2) == 1);  // 2+2 = 1 mod 3
    CHECK(gf3.index_add(5, 4) == 6);  // digits (2,1)+(1,1) = (0,2)
    CHECK(gf3.index_sub(gf3.index_add(7, 5), 5) == 7);
}
