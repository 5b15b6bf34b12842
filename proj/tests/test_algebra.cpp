#include "znalg/an_element.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace znalg;

namespace {

AnElement random_an(int n, std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms), ad(0, 2), bd(0, 1), ed(0, 1);
    std::uniform_int_distribution<uint32_t> td(0, (1u << n) - 1u);
    std::uniform_int_distribution<int> numd(-6, 6);
    AnElement x(n);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        AnMono m{ad(rng), bd(rng), td(rng), ed(rng)};
        x.add_term(m, Laurent(Rational(numd(rng)), numd(rng) % 3));
    }
    return x;
}

}  // namespace

TEST_CASE("normalization of the free presentation") {
    int n = 3;
    // delta_1^2 - delta_2^2 -> 0
    RawTerm t1{Laurent(Rational(1)), 0, {2, 0, 0}, 0};
    RawTerm t2{Laurent(Rational(-1)), 0, {0, 2, 0}, 0};
    CHECK(an_normalize(n, {t1, t2}).is_zero());
    // delta_1^3 -> q delta_1
    RawTerm t3{Laurent(Rational(1)), 0, {3, 0, 0}, 0};
    AnElement lhs = an_normalize(n, {t3});
    CHECK(lhs == AnElement::q(n) * AnElement::delta(n, 1));
    // eps^2 alpha -> alpha
    RawTerm t4{Laurent(Rational(1)), 1, {0, 0, 0}, 2};
    CHECK(an_normalize(n, {t4}) == AnElement::alpha(n));
}

TEST_CASE("normalization is idempotent and multiplicative") {
    std::mt19937_64 rng(31337);
    int n = 5;
    for (int trial = 0; trial < 50; ++trial) {
        AnElement x = random_an(n, rng), y = random_an(n, rng);
        // Convert a normalized element back to a raw presentation and renormalize.
        std::vector<RawTerm> raw;
        for (const auto& [m, c] : x.terms()) {
            RawTerm t;
            t.coeff = c;
            t.alpha_exp = m.a;
            t.eps_exp = m.e;
            t.delta_exps.assign(n, 0);
            t.delta_exps[0] += 2 * m.b;  // q^b = delta_1^{2b}
            for (int i = 0; i < n; ++i)
                if (m.tset & (1u << i)) t.delta_exps[i] += 1;
            raw.push_back(t);
        }
        CHECK(an_normalize(n, raw) == x);
        CHECK((x * y) * y == x * (y * y));
        CHECK(x * y == y * x);
    }
}

TEST_CASE("project_bar and sign_map") {
    int n = 3;
    AnElement d12 = AnElement::delta(n, 1) + AnElement::delta(n, 2);
    CHECK(project_bar(d12) == Abar::delta() * Rational(2));
    CHECK(project_bar(AnElement::q(n)) == Abar::delta() * Abar::delta());

    SignVector nu({1, -1, 1});
    AnElement d123 = d12 + AnElement::delta(n, 3);
    CHECK(sign_map(d123, nu) == Abar::delta());
    CHECK(sign_map(AnElement::q(n), nu) == Abar::delta() * Abar::delta());

    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        AnElement x = random_an(n, rng), y = random_an(n, rng);
        CHECK(project_bar(x * y) == project_bar(x) * project_bar(y));
        CHECK(sign_map(x * y, nu) == sign_map(x, nu) * sign_map(y, nu));
        CHECK(sign_map(x, SignVector::all_plus(n)) == project_bar(x));
    }
}

TEST_CASE("finger move basics") {
    int n = 5;
    AnElement x = AnElement::delta(n, 4) + AnElement::delta(n, 5);
    CHECK(finger_move(x, 3).is_zero());
    AnElement y = AnElement::delta(n, 4) * AnElement::delta(n, 5);
    CHECK(finger_move(y, 3) == -AnElement::q(3));
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        AnElement z = random_an(n, rng);
        CHECK(finger_move(z, 5) == z);  // f = 0 is the identity
    }
    CHECK_THROWS_AS(finger_move(x, 4), std::invalid_argument);
    CHECK_THROWS_AS(finger_move(x, 7), std::invalid_argument);
}

TEST_CASE("finger move composes after relabeling the merged points") {
    // Merging 7 -> 5 -> 3 equals the direct merge 7 -> 3 once the merged
    // points are renumbered by the transposition (5 7).
    std::mt19937_64 rng(2718);
    std::vector<int> swap57{1, 2, 3, 4, 7, 6, 5};
    for (int trial = 0; trial < 60; ++trial) {
        AnElement x = random_an(7, rng);
        AnElement via = finger_move(finger_move(x, 5), 3);
        AnElement direct = finger_move(x.permute_indices(swap57), 3);
        CHECK(via == direct);
    }
    // On elements symmetric in the merged indices the relabeling is invisible.
    AnElement sym(7);
    for (int i = 4; i <= 7; ++i) sym += AnElement::delta(7, i);
    CHECK(finger_move(finger_move(sym, 5), 3) == finger_move(sym, 3));
}

TEST_CASE("finger move is a homomorphism") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        AnElement x = random_an(7, rng), y = random_an(7, rng);
        CHECK(finger_move(x * y, 3) == finger_move(x, 3) * finger_move(y, 3));
        CHECK(finger_move(x + y, 3) == finger_move(x, 3) + finger_move(y, 3));
    }
}

TEST_CASE("scale_alpha") {
    Abar x = Abar::alpha() + Abar::delta();
    CHECK(x.scale_alpha(3) == Abar::alpha() * Rational(3) + Abar::delta());
    CHECK(x.scale_alpha(1) == x);
    Abar a2 = Abar::alpha() * Abar::alpha();
    CHECK(a2.scale_alpha(2) == a2 * Rational(4));
    std::mt19937_64 rng(1112);
    for (int trial = 0; trial < 30; ++trial) {
        AnElement u = random_an(3, rng), v = random_an(3, rng);
        Abar ub = project_bar(u), vb = project_bar(v);
        CHECK((ub * vb).scale_alpha(3) == ub.scale_alpha(3) * vb.scale_alpha(3));
    }
}

TEST_CASE("graded parts") {
    int n = 3;
    AnElement a2 = AnElement::alpha(n) * AnElement::alpha(n);
    AnElement mix = a2 + AnElement::eps(n) * AnElement::delta(n, 1) + AnElement(n, Laurent(Rational(1)));
    CHECK(graded_part(mix, 2) == a2);
    AnElement two = AnElement::q(n) + AnElement::alpha(n) * AnElement::delta(n, 1);
    CHECK(graded_part(two, 2) == two);
    AnElement e3 = AnElement::eps(n) * Laurent::tau(3);
    CHECK(graded_part(e3, 0) == e3);
}

TEST_CASE("homomorphisms respect the filtration") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        AnElement x = random_an(5, rng);
        int d = x.degree();
        CHECK(project_bar(x).degree() <= d);
        CHECK(finger_move(x, 3).degree() <= d);
        SignVector nu({1, 1, -1, 1, 1});
        CHECK(sign_map(x, nu).degree() <= d);
    }
}

TEST_CASE("sign vector validation") {
    CHECK_THROWS_AS(SignVector({1, -1}), std::invalid_argument);   // even sum
    CHECK_THROWS_AS(SignVector({1, 0, 1}), std::invalid_argument); // not ±1
    CHECK(SignVector({-1, -1, 1}).n_prime() == -1);
}
