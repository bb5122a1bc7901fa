#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specchain/field.hpp"

using namespace specchain;

namespace {

// Field-axiom spot check on random triples: associativity, commutativity,
// distributivity, identities, inverses, and subtraction/division coherence.
void check_axioms(const FieldPtr& f, unsigned seed, int triples) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < triples; ++i) {
        FieldElement a = f->random_element(rng);
        FieldElement b = f->random_element(rng);
        FieldElement c = f->random_element(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + f->zero() == a);
        REQUIRE(a * f->one() == a);
        REQUIRE((a - b) + b == a);
        REQUIRE(a + (-a) == f->zero());
        if (!b.is_zero()) {
            REQUIRE(b * b.inverse() == f->one());
            REQUIRE((a / b) * b == a);
        }
        if (!a.is_zero() && !b.is_zero())
            REQUIRE_FALSE((a * b).is_zero());
    }
}

} // namespace

TEST_CASE("rational arithmetic") {
    FieldPtr q = Field::rationals();
    FieldElement half = q->rational(mpq_class(1, 2));
    FieldElement third = q->rational(mpq_class(1, 3));
    REQUIRE((half + third).str() == "5/6");
    REQUIRE(half + third == q->rational(mpq_class(5, 6)));
    REQUIRE(q->integer(-7).str() == "-7");
    REQUIRE(q->integer(0).is_zero());
    REQUIRE(q->characteristic() == 0);
    REQUIRE_THROWS_WITH(q->zero().inverse(), "zero divisor in field");
}

TEST_CASE("prime field arithmetic") {
    FieldPtr f7 = Field::prime_field(7);
    REQUIRE(f7->integer(3) * f7->integer(5) == f7->one());
    REQUIRE(f7->integer(10) == f7->integer(3));
    REQUIRE(f7->integer(-1) == f7->integer(6));
    REQUIRE(f7->characteristic() == 7);

    FieldPtr f5 = Field::prime_field(5);
    REQUIRE(f5->integer(2).inverse() == f5->integer(3));
    REQUIRE_THROWS_WITH(f5->zero().inverse(), "zero divisor in field");

    REQUIRE_THROWS(Field::prime_field(6));
    REQUIRE_THROWS(Field::prime_field(1));
    REQUIRE_THROWS(Field::prime_field(91));  // 7 * 13
    REQUIRE_NOTHROW(Field::prime_field(2147483647));
}

TEST_CASE("gaussian rationals") {
    FieldPtr q = Field::rationals();
    // QQ[z]/(z^2 + 1)
    FieldPtr qi = Field::extension(q, "z", {q->one(), q->zero(), q->one()});
    FieldElement z = qi->generator();
    REQUIRE(z * z == qi->integer(-1));
    REQUIRE(z.inverse() == -z);
    REQUIRE((qi->one() + z) * (qi->one() - z) == qi->integer(2));
    REQUIRE(z.str() == "z");
    REQUIRE((z * z).str() == "-1");
    REQUIRE(qi->str() == "QQ[z]/(z^2 + 1)");
}

TEST_CASE("extension rejects repeated factors when detectable") {
    FieldPtr q = Field::rationals();
    // (z + 1)^2 = z^2 + 2z + 1 has a repeated factor and nonzero derivative.
    REQUIRE_THROWS_WITH(
        Field::extension(q, "z", {q->one(), q->integer(2), q->one()}),
        "minimal polynomial has a repeated factor");
    // Degree-0 polynomials are not minimal polynomials.
    REQUIRE_THROWS(Field::extension(q, "z", {q->one()}));
}

TEST_CASE("rational function field over GF(2)") {
    FieldPtr k = Field::rational_function(Field::prime_field(2), "t");
    FieldElement t = k->generator();
    REQUIRE(t.inverse() * t == k->one());
    REQUIRE(t.inverse().str() == "1/(t)");
    REQUIRE(t + t == k->zero());  // characteristic 2
    REQUIRE(k->characteristic() == 2);

    // Canonical reduction: (t^2 + 1)/(t + 1) = t + 1 in characteristic 2.
    FieldElement num = t * t + k->one();
    FieldElement den = t + k->one();
    REQUIRE(num / den == t + k->one());
    REQUIRE((num / den).str() == "t + 1");
}

TEST_CASE("rational function field canonical forms over QQ") {
    FieldPtr k = Field::rational_function(Field::rationals(), "t");
    FieldElement t = k->generator();
    FieldElement two = k->integer(2);
    // (2t + 2)/(t + 1) must reduce to the constant 2 (monic denominator).
    FieldElement a = (two * t + two) / (t + k->one());
    REQUIRE(a == two);
    REQUIRE(a.str() == "2");
    // (t^2 - 1)/(t - 1) = t + 1.
    FieldElement b = (t * t - k->one()) / (t - k->one());
    REQUIRE(b == t + k->one());
}

TEST_CASE("inseparable minimal polynomial is accepted") {
    FieldPtr k = Field::rational_function(Field::prime_field(2), "t");
    FieldElement t = k->generator();
    // z^2 - t over GF(2)(t): derivative is zero, irreducible by assertion.
    FieldPtr ext = Field::extension(k, "z", {-t, k->zero(), k->one()});
    FieldElement z = ext->generator();
    REQUIRE(z * z == ext->from_coefficients({t}));
    REQUIRE((z * z + ext->from_coefficients({t})).is_zero());  // char 2
    check_axioms(ext, 11, 60);
}

TEST_CASE("tower: extension of a function field over GF(5)") {
    FieldPtr k = Field::rational_function(Field::prime_field(5), "t");
    FieldElement t = k->generator();
    FieldPtr ext = Field::extension(k, "z", {-t, k->zero(), k->one()});  // z^2 = t
    FieldElement z = ext->generator();
    REQUIRE(z * z == ext->from_coefficients({t}));
    REQUIRE(z.inverse() * z == ext->one());
    // Symbols resolve through the tower.
    auto tz = ext->symbol_element("t");
    REQUIRE(tz.has_value());
    REQUIRE(*tz == z * z);
    REQUIRE_FALSE(ext->symbol_element("w").has_value());
}

TEST_CASE("symbol shadowing is rejected") {
    FieldPtr k = Field::rational_function(Field::rationals(), "t");
    REQUIRE_THROWS(Field::rational_function(k, "t"));
    REQUIRE_THROWS(Field::extension(k, "t", {k->one(), k->one()}));
}

TEST_CASE("structural field equality") {
    FieldPtr a = Field::rational_function(Field::prime_field(3), "t");
    FieldPtr b = Field::rational_function(Field::prime_field(3), "t");
    REQUIRE(a->equals(*b));
    REQUIRE(same_field(a, b));
    FieldPtr c = Field::rational_function(Field::prime_field(5), "t");
    REQUIRE_FALSE(a->equals(*c));
    // Elements built from equal descriptors interoperate.
    REQUIRE(a->generator() + b->generator() == a->generator() * a->integer(2));
}

TEST_CASE("field axioms on random elements") {
    check_axioms(Field::rationals(), 1, 400);
    check_axioms(Field::prime_field(7), 2, 400);
    check_axioms(Field::prime_field(2), 3, 400);
    check_axioms(Field::rational_function(Field::rationals(), "t"), 4, 60);
    check_axioms(Field::rational_function(Field::prime_field(3), "t"), 5, 120);
    FieldPtr q = Field::rationals();
    check_axioms(Field::extension(q, "z", {q->one(), q->zero(), q->one()}), 6, 150);
    check_axioms(Field::extension(q, "s", {q->integer(-2), q->zero(), q->one()}), 7, 150);
}

TEST_CASE("canonical string forms") {
    FieldPtr q = Field::rationals();
    FieldPtr qs = Field::extension(q, "s", {q->integer(-2), q->zero(), q->one()});
    FieldElement s = qs->generator();
    REQUIRE((s + qs->one()).str() == "s + 1");
    REQUIRE((s - qs->one()).str() == "s - 1");
    REQUIRE((-s).str() == "-s");
    REQUIRE((s * qs->rational(mpq_class(1, 2))).str() == "1/2*s");
    REQUIRE(qs->zero().str() == "0");

    FieldPtr k = Field::rational_function(q, "t");
    FieldElement t = k->generator();
    REQUIRE(((t * t + k->one()) / t).str() == "(t^2 + 1)/(t)");
}
