#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <purering/purity.hpp>
#include <purering/structure.hpp>

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

TEST_CASE("polynomial arithmetic and evaluation") {
    IntPolynomial f({Int(2), Int(-3), Int(1)});  // X^2 - 3X + 2
    CHECK(f.degree() == 2);
    CHECK(f.is_monic());
    CHECK(f.eval(Rat(1)) == 0);
    CHECK(f.eval(Rat(2)) == 0);
    CHECK(f.eval(Int(5)) == 12);
    CHECK(f.eval_mod(1, 7) == 0);
    CHECK(f.eval_mod(5, 7) == 12 % 7);

    IntPolynomial g = IntPolynomial::linear(-1, 2) * IntPolynomial::linear(-1, 1);
    CHECK(g == IntPolynomial({Int(1), Int(-3), Int(2)}));  // 2X^2 - 3X + 1
    CHECK(IntPolynomial({Int(4), Int(-6)}).primitive_part() ==
          IntPolynomial({Int(-2), Int(3)}));
    CHECK(IntPolynomial().is_zero());
    CHECK((IntPolynomial({Int(1)}) + IntPolynomial({Int(-1)})).is_zero());
}

TEST_CASE("quasi-inverse frozen examples") {
    CHECK(quasi_inverse(make_d()) == make_d_inverse());
    CHECK(quasi_inverse(TailedElement::zero()).is_zero());

    TailedElement x = TailedElement::from_rational_vector(
        PrimePartition::trivial(), {make_rat(3, 2)}, {{2, 0}});
    TailedElement y = quasi_inverse(x);
    CHECK(y == TailedElement::from_rational_vector(PrimePartition::trivial(),
                                                   {make_rat(2, 3)}, {{2, 0}, {3, 0}}));
    CHECK(x * y * x == x);
    CHECK(y * x * y == y);
}

TEST_CASE("quasi-inverse satisfies the regularity identities") {
    std::vector<TailedElement> samples = {
        make_d(),
        make_d_inverse(),
        TailedElement::zero(),
        TailedElement::one(),
        TailedElement::from_rational_vector(mod4(), {make_rat(3, 10), Rat(0)}, {{7, 5}}),
        TailedElement::from_rational_vector(mod4(), {Rat(6), make_rat(-5, 4)},
                                            {{2, 1}, {3, 0}, {13, 12}}),
    };
    for (const TailedElement& x : samples) {
        TailedElement y = quasi_inverse(x);
        CHECK(x * y * x == x);
        CHECK(y * x * y == y);
        CHECK((x * y).is_idempotent());
        CHECK((y * x).is_idempotent());
        CHECK(quasi_inverse(y) == x);
    }
}

TEST_CASE("units and unit inverses") {
    CHECK(is_unit(make_d()));
    UnitInverse inv = unit_inverse(make_d());
    REQUIRE(inv.ok());
    CHECK(*inv.inverse == make_d_inverse());
    CHECK(make_d() * *inv.inverse == TailedElement::one());

    CHECK(is_unit(TailedElement::one()));
    UnitInverse one = unit_inverse(TailedElement::one());
    REQUIRE(one.ok());
    CHECK(one.inverse->is_one());

    TailedElement e = TailedElement::from_rational_vector(mod4(), {Rat(1), Rat(0)});
    CHECK_FALSE(is_unit(e));
    UnitInverse none = unit_inverse(e);
    CHECK_FALSE(none.ok());
    CHECK(none.zero_prime == 3);  // smallest prime in the zero block (3 mod 4)

    // Zero coordinate hidden in a tail numerator.
    TailedElement n = TailedElement::constant(Rat(10));
    UnitInverse blocked = unit_inverse(n);
    CHECK_FALSE(blocked.ok());
    CHECK(blocked.zero_prime == 2);
}

TEST_CASE("annihilator frozen examples with the coordinatewise oracle") {
    IntPolynomial fd = annihilator(make_d());
    CHECK(fd == IntPolynomial({Int(2), Int(-3), Int(1)}));  // X^2 - 3X + 2
    IntPolynomial fdinv = annihilator(make_d_inverse());
    CHECK(fdinv == IntPolynomial({Int(1), Int(-3), Int(2)}));  // 2X^2 - 3X + 1
    CHECK(annihilator(TailedElement::one()) == IntPolynomial({Int(-1), Int(1)}));
    CHECK(annihilator(TailedElement::zero()) == IntPolynomial::identity());

    // Independent oracle: evaluate at every coordinate for p <= 10^4.
    for (int64_t p : primes_up_to(10'000)) {
        CHECK(fd.eval_mod(make_d().coordinate(p).value, p) == 0);
        CHECK(fdinv.eval_mod(make_d_inverse().coordinate(p).value, p) == 0);
    }
}

TEST_CASE("annihilator is symbolically verified and minimal") {
    std::vector<TailedElement> samples = {
        make_d(),
        make_d_inverse(),
        TailedElement::from_rational_vector(PrimePartition::trivial(), {Rat(0)},
                                            {{2, 1}, {5, 3}}),
        TailedElement::from_rational_vector(mod4(), {make_rat(5, 3), Rat(-2)},
                                            {{7, 2}, {11, 2}}),
    };
    for (const TailedElement& x : samples) {
        IntPolynomial f = annihilator(x);
        CHECK(annihilates(f, x));
        CHECK(f == f.primitive_part());

        // Evaluate through actual ring operations as well.
        TailedElement value = TailedElement::zero();
        TailedElement power = TailedElement::one();
        for (const Int& c : f.coefficients()) {
            value = value + c * power;
            power = power * x;
        }
        CHECK(value.is_zero());
    }
}

TEST_CASE("a single monic factor can cover several fixes") {
    TailedElement x = TailedElement::from_rational_vector(
        PrimePartition::trivial(), {Rat(0)}, {{2, 1}, {5, 3}});
    // X * (X - 3) kills the tail, the fix at 5, and (1 - 3) = -2 = 0 mod 2.
    CHECK(annihilator(x) == IntPolynomial({Int(0), Int(-3), Int(1)}));
}

TEST_CASE("no proper divisor of the annihilator annihilates") {
    std::vector<TailedElement> samples = {
        make_d(),
        make_d_inverse(),
        TailedElement::from_rational_vector(mod4(), {make_rat(5, 3), Rat(-2)},
                                            {{7, 2}, {11, 4}}),
    };
    for (const TailedElement& x : samples) {
        IntPolynomial f = annihilator(x);
        // Recover the linear factors from rational roots (f is squarefree by
        // construction), then test every proper subset product.
        std::vector<IntPolynomial> factors;
        Int lead = f.coefficients().back();
        Int constant = f.coefficients().front();
        for (Int den = 1; den <= abs(lead); ++den) {
            if (lead % den != 0) continue;
            for (Int num = -abs(constant) - 1; num <= abs(constant) + 1; ++num) {
                IntPolynomial candidate = IntPolynomial::linear(-num, den);
                if (candidate.primitive_part() != candidate) continue;
                if (f.eval(make_rat(num, den)) == 0 &&
                    std::find(factors.begin(), factors.end(), candidate) == factors.end())
                    factors.push_back(candidate);
            }
        }
        REQUIRE(static_cast<int>(factors.size()) == f.degree());
        for (uint32_t mask = 0; mask + 1 < (uint32_t{1} << factors.size()); ++mask) {
            IntPolynomial g({Int(1)});
            for (size_t i = 0; i < factors.size(); ++i)
                if (mask & (uint32_t{1} << i)) g = g * factors[i];
            CHECK_FALSE(annihilates(g, x));
        }
    }
}

TEST_CASE("integrality certificates") {
    IntegralityCertificate d_cert = is_integral(make_d());
    CHECK(d_cert.integral);
    CHECK(d_cert.witness == IntPolynomial({Int(2), Int(-3), Int(1)}));
    CHECK(d_cert.witness.is_monic());

    IntegralityCertificate dinv_cert = is_integral(make_d_inverse());
    CHECK_FALSE(dinv_cert.integral);
    CHECK(dinv_cert.tail_value == make_rat(1, 2));
    CHECK(dinv_cert.obstruction_prime == 2);
    CHECK_FALSE(dinv_cert.argument.empty());

    IntegralityCertificate torsion_cert = is_integral(TailedElement::from_rational_vector(
        PrimePartition::trivial(), {Rat(0)}, {{3, 2}, {7, 5}}));
    CHECK(torsion_cert.integral);
    CHECK(torsion_cert.witness.is_monic());
    CHECK(annihilates(torsion_cert.witness, TailedElement::from_rational_vector(
                                                PrimePartition::trivial(), {Rat(0)},
                                                {{3, 2}, {7, 5}})));
}

TEST_CASE("quotient regularity transfer") {
    std::vector<TailedElement> samples = {
        make_d(),
        TailedElement::from_rational_vector(mod4(), {make_rat(3, 10), Rat(0)}, {{7, 5}}),
        TailedElement::from_rational_vector(mod4(), {Rat(6), make_rat(-5, 4)}, {{2, 1}}),
    };
    for (const TailedElement& x : samples) {
        QuotientElement q = quotient_map(x);
        QuotientElement y = quotient_map(quasi_inverse(x));
        CHECK(q * y * q == q);
        CHECK(y * q * y == y);
    }
}
