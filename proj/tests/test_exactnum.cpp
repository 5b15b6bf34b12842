#include "znalg/eps.hpp"
#include "znalg/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace znalg;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-5, 5), numd(-9, 9);
    std::uniform_int_distribution<int> dend(1, 7);
    Laurent p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term(expd(rng), make_rational(numd(rng), dend(rng)));
    return p;
}

Eps random_eps(std::mt19937_64& rng) { return Eps(random_laurent(rng), random_laurent(rng)); }

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    Laurent t = Laurent::tau(1), tinv = Laurent::tau(-1);
    CHECK((t + tinv) * (t - tinv) == Laurent::tau(2) - Laurent::tau(-2));
    CHECK(Laurent::tau(3) * Laurent::tau(-3) == Laurent(Rational(1)));
    Laurent t4m1 = Laurent::tau(4) - Laurent(Rational(1));
    Laurent t4p1 = Laurent::tau(4) + Laurent(Rational(1));
    CHECK(t4m1 * t4p1 == Laurent::tau(8) - Laurent(Rational(1)));
}

TEST_CASE("laurent evaluation") {
    Laurent p = Laurent::tau(2) + Laurent::tau(-2);
    CHECK(p.eval(Rational(1)) == Rational(2));
    Laurent q = Laurent::tau(4) - Laurent(Rational(1));
    CHECK(q.eval(Rational(1)) == Rational(0));
    CHECK(Laurent::tau(3).eval(Rational(3, 5)) == Rational(27, 125));
    CHECK_THROWS_AS(p.eval(Rational(0)), std::domain_error);
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        Rational t0(3, 2);
        CHECK((a * b).eval(t0) == a.eval(t0) * b.eval(t0));
        CHECK((a + b).eval(t0) == a.eval(t0) + b.eval(t0));
    }
}

TEST_CASE("laurent exact division") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        if (b.is_zero()) continue;
        Laurent prod = a * b;
        auto q = prod.divided_by(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    Laurent p = Laurent::tau(2) + Laurent(Rational(1));
    Laurent d = Laurent::tau(1) + Laurent(Rational(1));
    CHECK_FALSE(p.divided_by(d).has_value());
}

TEST_CASE("eps multiplication and zero divisors") {
    Eps one(Laurent(Rational(1)));
    Eps e = Eps::eps();
    CHECK((one + e) * (one - e) == Eps());   // eps^2 = 1 makes this vanish
    CHECK(e * e == one);
    Eps a = Eps::eps_tau(3), b = Eps::eps_tau(-1);
    CHECK(a * b == Eps(Laurent::tau(2)));
}

TEST_CASE("eps ring axioms on random triples") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 200; ++trial) {
        Eps a = random_eps(rng), b = random_eps(rng), c = random_eps(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("eps specialization and conjugation") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        Eps a = random_eps(rng), b = random_eps(rng);
        for (int s : {+1, -1})
            CHECK((a * b).at_eps(s) == a.at_eps(s) * b.at_eps(s));
        CHECK((a * b).conj_tau_eps() == a.conj_tau_eps() * b.conj_tau_eps());
        CHECK(a.conj_tau_eps().conj_tau_eps() == a);
    }
}

TEST_CASE("unit inverse") {
    Eps u = Eps::eps_tau(5, Rational(-3));
    Eps inv = u.unit_inverse();
    CHECK(u * inv == Eps(Laurent(Rational(1))));
    Eps v(Laurent(Rational(2), -7));
    CHECK(v * v.unit_inverse() == Eps(Laurent(Rational(1))));
    Eps notunit(Laurent(Rational(1)) + Laurent::tau(1));
    CHECK_THROWS_AS(notunit.unit_inverse(), std::logic_error);
}

TEST_CASE("rational string form") {
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_string("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(rational_from_string("zz"), std::invalid_argument);
}
