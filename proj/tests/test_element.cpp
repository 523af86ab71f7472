#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <purering/element.hpp>

using namespace purering;

namespace {

TailedElement make_d() {
    return TailedElement::from_rational_vector(PrimePartition::trivial(), {Rat(2)},
                                               {{2, 1}});
}

TailedElement make_d_inverse() {
    return TailedElement::from_rational_vector(PrimePartition::trivial(), {make_rat(1, 2)},
                                               {{2, 1}});
}

PrimePartition mod4() {
    return PrimePartition::from_parts(4, {{1, 0}, {3, 1}}, {{2, 0}});
}

}  // namespace

TEST_CASE("d has coordinates (1, 2, 2, 2, ...)") {
    TailedElement d = make_d();
    CHECK(d.coordinate(2) == Residue{2, 1});
    for (int64_t p : primes_up_to(100))
        if (p > 2) CHECK(d.coordinate(p) == Residue{p, 2});
}

TEST_CASE("d inverse has coordinates (1, 2, 3, 4, 6, ...)") {
    TailedElement dinv = make_d_inverse();
    CHECK(dinv.coordinate(2) == Residue{2, 1});
    CHECK(dinv.coordinate(3) == Residue{3, 2});
    CHECK(dinv.coordinate(5) == Residue{5, 3});
    CHECK(dinv.coordinate(7) == Residue{7, 4});
    CHECK(dinv.coordinate(11) == Residue{11, 6});
}

TEST_CASE("zero coordinates vanish everywhere") {
    for (int64_t p : primes_up_to(50)) CHECK(TailedElement::zero().coordinate(p).value == 0);
}

TEST_CASE("d times its inverse is one") {
    CHECK(make_d() * make_d_inverse() == TailedElement::one());
}

TEST_CASE("x plus its negation is zero") {
    TailedElement x = TailedElement::from_rational_vector(
        mod4(), {make_rat(1, 3), make_rat(-5, 2)}, {{7, 3}});
    CHECK(x + (-x) == TailedElement::zero());
    CHECK((x - x).is_zero());
}

TEST_CASE("doubling the inverse of d") {
    TailedElement twice = Int(2) * make_d_inverse();
    TailedElement expected = TailedElement::from_rational_vector(
        PrimePartition::trivial(), {Rat(1)}, {{2, 0}});
    CHECK(twice == expected);
    // Brute-force coordinates p <= 100: (0, 1, 1, 1, ...).
    CHECK(twice.coordinate(2).value == 0);
    for (int64_t p : primes_up_to(100))
        if (p > 2) CHECK(twice.coordinate(p).value == 1);
}

TEST_CASE("equality identifies coarsenable representations") {
    TailedElement broad = TailedElement::from_rational_vector(
        mod4(), {Rat(1), Rat(1)}, {{2, 1}});
    CHECK(broad == TailedElement::one());
    CHECK(broad.partition().modulus() == 1);

    CHECK(make_d() == make_d());
    CHECK_FALSE(make_d() == TailedElement::constant(Rat(2)));  // differ at p = 2
}

TEST_CASE("canonical form drops redundant fixes") {
    TailedElement x = TailedElement::from_rational_vector(
        mod4(), {make_rat(1, 3), Rat(0)}, {{3, 0}});
    // reduce(0, 3) = 0 equals the fix, so the fix disappears.
    CHECK(x.fixes().empty());
    CHECK(x.coordinate(3).value == 0);
    // The mandatory dead coordinate at 2 is given by block 0: 1/3 = 1 mod 2.
    CHECK(x.coordinate(2).value == 1);
}

TEST_CASE("torsion orders") {
    TailedElement t2 = TailedElement::from_rational_vector(PrimePartition::trivial(),
                                                           {Rat(0)}, {{2, 1}});
    CHECK(t2.torsion_order() == TorsionOrder::finite(2));

    TailedElement t10 = TailedElement::from_rational_vector(PrimePartition::trivial(),
                                                            {Rat(0)}, {{2, 1}, {5, 3}});
    CHECK(t10.torsion_order() == TorsionOrder::finite(10));

    CHECK(make_d().torsion_order() == TorsionOrder::infinite());
    CHECK(TailedElement::zero().torsion_order() == TorsionOrder::finite(1));
}

TEST_CASE("finite torsion order annihilates and no proper divisor does") {
    TailedElement t = TailedElement::from_rational_vector(
        PrimePartition::trivial(), {Rat(0)}, {{2, 1}, {5, 3}, {7, 2}});
    TorsionOrder ord = t.torsion_order();
    REQUIRE(ord.is_finite());
    CHECK(ord.order == 70);
    CHECK((ord.order * t).is_zero());
    for (int64_t d : prime_divisors(ord.order)) {
        Int proper = ord.order / d;
        CHECK_FALSE((proper * t).is_zero());
    }
}

TEST_CASE("from_rational_vector frozen examples") {
    CHECK(make_d().tails() == std::vector<Rat>{Rat(2)});
    CHECK(make_d().fixes() == std::map<int64_t, int64_t>{{2, 1}});

    TailedElement e = TailedElement::from_rational_vector(mod4(), {Rat(1), Rat(0)});
    CHECK(e.is_idempotent());
    CHECK(e * e == e);

    CHECK(TailedElement::from_rational_vector(PrimePartition::trivial(), {Rat(0)}) ==
          TailedElement::zero());
}

TEST_CASE("idempotent detection") {
    TailedElement e = TailedElement::from_rational_vector(mod4(), {Rat(1), Rat(0)});
    CHECK(e.is_idempotent());
    CHECK_FALSE(make_d().is_idempotent());
    CHECK(TailedElement::one().is_idempotent());
    CHECK(TailedElement::zero().is_idempotent());
}

TEST_CASE("denominator primes default to dead coordinate zero") {
    TailedElement half = TailedElement::constant(make_rat(1, 2));
    CHECK(half.coordinate(2).value == 0);
    CHECK(half.fixes() == std::map<int64_t, int64_t>{{2, 0}});
    CHECK(half.coordinate(7).value == 4);  // inverse of 2 mod 7
}

TEST_CASE("coordinate is a ring homomorphism into each Z_p") {
    TailedElement x = TailedElement::from_rational_vector(
        mod4(), {make_rat(3, 5), Rat(-2)}, {{7, 6}});
    TailedElement y = TailedElement::from_rational_vector(
        PrimePartition::from_parts(3, {{1, 0}, {2, 1}}, {{3, 0}}),
        {make_rat(-1, 4), Rat(9)}, {{11, 5}});
    TailedElement sum = x + y;
    TailedElement prod = x * y;
    for (int64_t p : primes_up_to(1000)) {
        int64_t xv = x.coordinate(p).value;
        int64_t yv = y.coordinate(p).value;
        CHECK(sum.coordinate(p).value == (xv + yv) % p);
        CHECK(prod.coordinate(p).value == mul_mod(xv, yv, p));
    }
}

TEST_CASE("canonicalization is idempotent") {
    TailedElement x = TailedElement::from_rational_vector(
        mod4(), {make_rat(3, 5), Rat(-2)}, {{7, 6}, {2, 1}});
    TailedElement again = canonicalize_element(x.partition(), x.tails(), x.fixes());
    CHECK(again == x);
}
