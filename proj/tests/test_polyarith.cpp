#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qborwein/polyarith.hpp"

using namespace qb;

namespace {

DensePoly from_ints(std::initializer_list<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return DensePoly(std::move(c));
}

DensePoly random_poly(std::mt19937_64& rng) {
    std::vector<Int> c(rng() % 6);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    return DensePoly(std::move(c));
}

}  // namespace

TEST_CASE("dense construction is canonical") {
    CHECK(from_ints({1, -1, 0, 0}) == from_ints({1, -1}));
    CHECK(from_ints({0, 0}).is_zero());
    CHECK(from_ints({}).degree() == -1);
    CHECK(from_ints({3, 0, 1}).degree() == 2);
    CHECK(DensePoly::one_minus_q(3) == from_ints({1, 0, 0, -1}));
}

TEST_CASE("poly_mul hand-checked products") {
    const DensePoly a = DensePoly::one_minus_q(1);
    const DensePoly b = DensePoly::one_minus_q(2);
    CHECK(poly_mul(a, b) == from_ints({1, -1, -1, 1}));
    const DensePoly p = from_ints({2, 0, -3, 1});
    CHECK(poly_mul(p, DensePoly::one()) == p);
    // (1-q)^2 (1+q)^2 = 1 - 2q^2 + q^4
    const DensePoly onem = from_ints({1, -1});
    const DensePoly onep = from_ints({1, 1});
    CHECK(poly_mul(poly_mul(onem, onem), poly_mul(onep, onep)) ==
          from_ints({1, 0, -2, 0, 1}));
    CHECK(poly_mul(p, DensePoly()).is_zero());
}

TEST_CASE("mul_one_minus_q matches poly_mul") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        DensePoly p = random_poly(rng);
        const std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 5);
        DensePoly expect = poly_mul(p, DensePoly::one_minus_q(e));
        p.mul_one_minus_q(e);
        CHECK(p == expect);
    }
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const DensePoly a = random_poly(rng);
        const DensePoly b = random_poly(rng);
        const DensePoly c = random_poly(rng);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
    }
}

TEST_CASE("degree of a product adds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const DensePoly a = random_poly(rng);
        const DensePoly b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("eval_at_one") {
    CHECK(eval_at_one(from_ints({1, -1, -1, 1})) == 0);
    CHECK(eval_at_one(DensePoly::one()) == 1);
    CHECK(eval_at_one(DensePoly()) == 0);
}

TEST_CASE("laurent canonical form and accessors") {
    LaurentPoly z(5, {Int(0), Int(0)});
    CHECK(z.is_zero());
    CHECK(z.offset() == 0);
    LaurentPoly a(-2, {Int(0), Int(3), Int(0), Int(1), Int(0)});
    CHECK(a.offset() == -1);
    CHECK(a.high_exponent() == 1);
    CHECK(a.coeff_at(-1) == 3);
    CHECK(a.coeff_at(0) == 0);
    CHECK(a.coeff_at(1) == 1);
    CHECK(a.coeff_at(7) == 0);
}

TEST_CASE("laurent binomial multiplication, negative exponents") {
    // (1 - q^{-1})(1 - q^2) = -q^{-1} + 1 + q - q^2
    LaurentPoly p = LaurentPoly::one();
    p.mul_one_minus_q(-1);
    p.mul_one_minus_q(2);
    CHECK(p.offset() == -1);
    CHECK(p.coeff_at(-1) == -1);
    CHECK(p.coeff_at(0) == 1);
    CHECK(p.coeff_at(1) == 1);
    CHECK(p.coeff_at(2) == -1);
    // same product via laurent_mul
    LaurentPoly f1(-1, {Int(-1), Int(1)});
    LaurentPoly f2(0, {Int(1), Int(0), Int(-1)});
    CHECK(laurent_mul(f1, f2) == p);
}

TEST_CASE("laurent_mul agrees with dense on nonnegative supports") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const DensePoly a = random_poly(rng);
        const DensePoly b = random_poly(rng);
        CHECK(laurent_mul(LaurentPoly(a), LaurentPoly(b)) == LaurentPoly(poly_mul(a, b)));
    }
}

TEST_CASE("cyclic_mul hand-checked products") {
    // d=3: q^2 * q^2 = q^4 = q
    CyclicPoly q2(3, {Int(0), Int(0), Int(1)});
    CHECK(cyclic_mul(q2, q2) == CyclicPoly(3, {Int(0), Int(1), Int(0)}));
    // d=6: (1 - q^5)(1 - q^2) = 1 + q - q^2 - q^5
    CyclicPoly a(6, {Int(1), Int(0), Int(0), Int(0), Int(0), Int(-1)});
    CyclicPoly b(6, {Int(1), Int(0), Int(-1), Int(0), Int(0), Int(0)});
    CHECK(cyclic_mul(a, b) ==
          CyclicPoly(6, {Int(1), Int(1), Int(-1), Int(0), Int(0), Int(-1)}));
    CHECK_THROWS_AS(cyclic_mul(a, q2), std::invalid_argument);
}

TEST_CASE("reduce_cyclic hand-checked values") {
    const DensePoly p = from_ints({1, -1, -1, 1});
    CHECK(reduce_cyclic(p, 6) ==
          CyclicPoly(6, {Int(1), Int(-1), Int(-1), Int(1), Int(0), Int(0)}));
    CHECK(reduce_cyclic(p, 2) == CyclicPoly(2));  // coefficient pairs cancel
    LaurentPoly qinv(-1, {Int(1)});
    CHECK(reduce_cyclic(qinv, 6).coeff(5) == 1);
    CHECK(reduce_cyclic(p, 1).coeff(0) == eval_at_one(p));
}

TEST_CASE("reduce_cyclic pads with zeros above the degree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const DensePoly p = random_poly(rng);
        const std::int64_t d = p.degree() + 1 + static_cast<std::int64_t>(rng() % 4 + 1);
        const CyclicPoly r = reduce_cyclic(p, d);
        for (std::int64_t i = 0; i < d; ++i) CHECK(r.coeff(i) == p.coeff(i));
    }
}

TEST_CASE("reduce_cyclic is a ring homomorphism") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const DensePoly a = random_poly(rng);
        const DensePoly b = random_poly(rng);
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 7);
        CHECK(reduce_cyclic(poly_mul(a, b), d) ==
              cyclic_mul(reduce_cyclic(a, d), reduce_cyclic(b, d)));
    }
}

TEST_CASE("cyclic fold_one_minus_q matches cyclic_mul") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 8);
        std::vector<Int> c(static_cast<std::size_t>(d));
        for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
        CyclicPoly a(d, c);
        const std::int64_t e = static_cast<std::int64_t>(rng() % 20) - 10;
        std::vector<Int> bin(static_cast<std::size_t>(d));
        bin[0] += 1;
        bin[static_cast<std::size_t>(((e % d) + d) % d)] -= 1;
        const CyclicPoly expect = cyclic_mul(a, CyclicPoly(d, bin));
        a.fold_one_minus_q(e);
        CHECK(a == expect);
    }
}

TEST_CASE("values transfer and compare by value") {
    const DensePoly a = from_ints({1, 2, 3});
    DensePoly b = a;
    b.mul_one_minus_q(1);
    CHECK(a == from_ints({1, 2, 3}));  // source untouched by the copy's mutation
    CHECK(b != a);
}
