#include <doctest.h>

#include "supenum/charsum.hpp"
#include "test_util.hpp"

using namespace supenum;
using testutil::Rng;

namespace {

CyclotomicInt random_cyclotomic(Rng& rng, unsigned p) {
    CyclotomicInt z(p);
    for (unsigned j = 0; j < p; ++j) {
        long long c = static_cast<long long>(rng.below(21)) - 10;
        z = z + CyclotomicInt::integer(p, c) * CyclotomicInt::root_power(p, j);
    }
    return z;
}

}  // namespace

TEST_CASE("canonical form golden values") {
    // zeta_2 = -1: coefficients (-1, 0) after pinning the last slot to zero
    CyclotomicInt z2 = CyclotomicInt::root_power(2, 1);
    CHECK(z2.coeffs() == std::vector<long long>{-1, 0});

    CHECK(CyclotomicInt::root_power(3, 0) == CyclotomicInt::integer(3, 1));
    CHECK(CyclotomicInt::root_power(5, 7) == CyclotomicInt::root_power(5, 2));

    // 1 + zeta + zeta^2 = 0 in Z[zeta_3]
    CyclotomicInt sum = CyclotomicInt::integer(3, 1) + CyclotomicInt::root_power(3, 1) +
                        CyclotomicInt::root_power(3, 2);
    CHECK(sum.is_zero());

    long long v = 0;
    CHECK(CyclotomicInt::integer(7, -5).is_integer(v));
    CHECK(v == -5);
    CHECK_FALSE(CyclotomicInt::root_power(7, 1).is_integer(v));
}

TEST_CASE("ring axioms on random elements") {
    Rng rng(5);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 40; ++trial) {
            CyclotomicInt a = random_cyclotomic(rng, p);
            CyclotomicInt b = random_cyclotomic(rng, p);
            CyclotomicInt c = random_cyclotomic(rng, p);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == CyclotomicInt(p));
        }
    }
}

TEST_CASE("character golden values") {
    FieldPtr f2 = Field::make(2, 1);
    CHECK(character(*f2, 1).coeffs() == std::vector<long long>{-1, 0});
    CHECK(character(*f2, 0) == CyclotomicInt::integer(2, 1));

    // zeta_3 * zeta_3^2 = 1
    FieldPtr f3 = Field::make(3, 1);
    CHECK(character(f3->element(1)) * character(f3->element(2)) == CyclotomicInt::integer(3, 1));
}

TEST_CASE("character is multiplicative over field addition") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        FieldPtr f = Field::of_order(q);
        bool ok = true;
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                ok = ok && character(*f, f->add(a, b)) == character(*f, a) * character(*f, b);
        CHECK(ok);
    }
}

TEST_CASE("full field character sum vanishes") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u})
        CHECK(full_field_char_sum(*Field::of_order(q)).is_zero());
}

TEST_CASE("scaled character sum dichotomy") {
    FieldPtr f3 = Field::make(3, 1);
    CHECK(scaled_char_sum(f3->element(0)) == CyclotomicInt::integer(3, 2));   // q - 1
    CHECK(scaled_char_sum(f3->element(1)) == CyclotomicInt::integer(3, -1));

    FieldPtr f4 = Field::make(2, 2);
    CHECK(scaled_char_sum(f4->element(2)) == CyclotomicInt::integer(2, -1));

    // brute force agreement for every element of every small field
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        FieldPtr f = Field::of_order(q);
        for (unsigned c = 0; c < q; ++c) {
            CyclotomicInt brute(f->characteristic());
            for (unsigned lambda = 1; lambda < q; ++lambda)
                brute = brute + character(*f, f->mul(lambda, c));
            CHECK(scaled_char_sum(f->element(c)) == brute);
            long long expected = c == 0 ? static_cast<long long>(q) - 1 : -1;
            CHECK(brute == CyclotomicInt::integer(f->characteristic(), expected));
        }
    }
}

TEST_CASE("codeword character sum dichotomy on the simplex code") {
    FieldPtr f2 = Field::make(2, 1);
    LinearCode simplex = LinearCode::from_generator(
        Matrix::from_rows(f2, {{1, 0, 0, 1, 1, 0, 1},
                               {0, 1, 0, 1, 0, 1, 1},
                               {0, 0, 1, 0, 1, 1, 1}}));

    CHECK(lemma_char_sum(simplex, Vector(f2, 7)) == CyclotomicInt::integer(2, 8));

    // 1101000 dots to zero with every generator row, so it lies in the dual
    Vector in_dual(f2, {1, 1, 0, 1, 0, 0, 0});
    REQUIRE(simplex.dual().contains(in_dual));
    CHECK(lemma_char_sum(simplex, in_dual) == CyclotomicInt::integer(2, 8));

    Vector e1(f2, {1, 0, 0, 0, 0, 0, 0});
    CHECK(lemma_char_sum(simplex, e1).is_zero());
    CHECK(lemma_char_sum(simplex, Vector(f2, {0, 0, 0, 1, 1, 1, 1})).is_zero());
}

TEST_CASE("codeword character sum dichotomy, exhaustive over small spaces") {
    Rng rng(11);
    for (unsigned q : {2u, 3u, 4u}) {
        FieldPtr f = Field::of_order(q);
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t n = 1 + rng.below(q == 2 ? 6 : 4);
            LinearCode c = LinearCode::from_generator(
                testutil::random_matrix(rng, f, rng.below(4), n));
            LinearCode dual = c.dual();
            long long size = 1;
            for (std::size_t i = 0; i < c.dimension(); ++i) size *= q;

            std::uint64_t space = 1;
            for (std::size_t i = 0; i < n; ++i) space *= q;
            bool ok = true;
            Vector u(f, n);
            for (std::uint64_t id = 0; id < space; ++id) {
                std::uint64_t v = id;
                for (std::size_t i = 0; i < n; ++i) {
                    u.set_idx(i, static_cast<std::uint8_t>(v % q));
                    v /= q;
                }
                CyclotomicInt s = lemma_char_sum(c, u);
                if (dual.contains(u))
                    ok = ok && s == CyclotomicInt::integer(f->characteristic(), size);
                else
                    ok = ok && s.is_zero();
            }
            CHECK(ok);
        }
    }
}
