#include "znalg/syzygy.hpp"

#include "znalg/mumford.hpp"

#include <doctest.h>

#include <random>

using namespace znalg;

namespace {

Abar ad_lin(const Rational& ca, const Rational& cd) {
    return Abar::alpha() * ca + Abar::delta() * cd;
}

Abar random_abar(std::mt19937_64& rng, int dmax = 4) {
    std::uniform_int_distribution<int> deg(0, dmax), numd(-5, 5), expd(-3, 3), ed(0, 1);
    Abar x;
    for (int t = 0; t < 4; ++t) {
        int a = deg(rng), d = deg(rng);
        if (a + d > dmax) continue;
        Laurent c(Rational(numd(rng)), expd(rng));
        x += Abar::mono(a, d, ed(rng) ? Eps(Laurent(), c) : Eps(c));
    }
    return x;
}

}  // namespace

TEST_CASE("linear forms and products") {
    CHECK(linear_L(0) == Abar::alpha());
    CHECK(linear_L(1) == ad_lin(1, Rational(1, 2)));
    CHECK(linear_L(-3) == ad_lin(1, Rational(-3, 2)));
    CHECK(prod_P(5, 1) == Abar(Rational(1)));
    CHECK(prod_P(1, 5) == linear_L(1) * linear_L(5));
    CHECK(prod_P(-7, 1) == linear_L(-7) * linear_L(-3) * linear_L(1));
    CHECK_THROWS_AS(prod_P(1, 4), std::invalid_argument);
}

TEST_CASE("leading and subleading generators") {
    // n = 3
    auto g0 = leading_gens(3);
    REQUIRE(g0.size() == 2);
    CHECK(g0[0] == ad_lin(1, Rational(-3, 2)));
    CHECK(g0[1] == ad_lin(1, Rational(1, 2)));
    auto g1 = subleading_gens(3);
    CHECK(g1[0] == Abar::scalar(Eps::eps_tau(3)));
    CHECK(g1[1] == Abar::scalar(Eps::eps_tau(-1)));
    // n = 7, h = 2 entries
    auto g0_7 = leading_gens(7);
    CHECK(g0_7[1] == prod_P(-7, 1));
    auto g1_7 = subleading_gens(7);
    CHECK(g1_7[1] == prod_P(1, 5) * Eps::eps_tau(3, Rational(3)));
    // every subleading term is eps-odd
    for (int n : {3, 5, 7, 9}) {
        for (const Abar& g : subleading_gens(n))
            for (const auto& [m, c] : g.terms()) CHECK(c.even.is_zero());
    }
}

TEST_CASE("leading generators span the degree-m forms up to n = 13") {
    for (int n = 3; n <= 13; n += 2) {
        int m = (n - 1) / 2;
        auto g0 = leading_gens(n);
        QMatrix b(m + 1, QVector(m + 1, Rational(0)));
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j) b[i][j] = g0[i].coeff(m - j, j).even.coeff(0);
        CHECK(qmatrix_inverse(b).has_value());
    }
}

TEST_CASE("golden n=11 syzygy matrices") {
    SyzygyMatrix s = s1_matrix_closed(11);
    REQUIRE(s.rows == std::vector<int>({0, 2, 4, 6, 8}));
    REQUIRE(s.cols == std::vector<int>({0, 2, 4, 6, 8, 10}));

    // S0 rows: -alpha - (2h'+1)/2 delta on the diagonal band and
    // alpha + (2h'-19)/2 delta on the next band.
    int diag_coeffs[5] = {1, 5, 9, 13, 17};
    int upper_coeffs[5] = {-19, -15, -11, -7, -3};
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 6; ++c) {
            Abar expect;
            if (c == r) expect = -ad_lin(1, Rational(diag_coeffs[r], 2));
            else if (c == r + 1) expect = ad_lin(1, Rational(upper_coeffs[r], 2));
            CHECK(s.s0[r][c] == expect);
        }
    }

    // S1 = diag(tau^7, tau^3, tau^-1, tau^-5, tau^-9) * a fixed integer matrix,
    // with the overall eps factor.
    auto ent = [](int pref, long c0, long c4) {  // eps tau^pref (c0 + c4 tau^4)
        return Abar::scalar(Eps::eps_tau(pref, Rational(c0)) + Eps::eps_tau(pref + 4, Rational(c4)));
    };
    Abar z;
    std::vector<std::vector<Abar>> expect1 = {
        {z, z, z, z, ent(7, -9, 0), ent(7, 4, 5)},
        {z, z, z, ent(3, -7, 0), ent(3, 2, 3), ent(3, 0, 2)},
        {z, z, ent(-1, -5, 0), ent(-1, 0, 1), ent(-1, 0, 4), z},
        {z, ent(-5, -3, 0), ent(-5, -2, -1), ent(-5, 0, 6), z, z},
        {ent(-9, -1, 0), ent(-9, -4, -3), ent(-9, 0, 8), z, z, z}};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 6; ++c) CHECK(s.s1[r][c] == expect1[r][c]);
}

TEST_CASE("closed-form S1 entries for n = 3") {
    SyzygyMatrix s = s1_matrix_closed(3);
    REQUIRE(s.rows == std::vector<int>({0}));
    REQUIRE(s.cols == std::vector<int>({0, 2}));
    CHECK(s.s1[0][0] == Abar::scalar(Eps::eps_tau(-1, Rational(-1))));
    CHECK(s.s1[0][1] == Abar::scalar(Eps::eps_tau(3)));
    CHECK(s.s0[0][0] == -linear_L(1));
    CHECK(s.s0[0][1] == linear_L(-3));
}

TEST_CASE("solved S1 equals the closed form up to n = 13") {
    for (int n = 3; n <= 13; n += 2) {
        SyzygyMatrix closed = s1_matrix_closed(n);
        SyzygyMatrix solved = s1_matrix_solve(n);
        for (size_t r = 0; r < closed.rows.size(); ++r)
            for (size_t c = 0; c < closed.cols.size(); ++c)
                CHECK(solved.s1[r][c] == closed.s1[r][c]);
    }
}

TEST_CASE("syzygy residual and annihilation identities up to n = 13") {
    for (int n = 3; n <= 13; n += 2) {
        SyzygyMatrix s = s1_matrix_closed(n);
        auto g0 = leading_gens(n);
        auto g1 = subleading_gens(n);
        auto mins = minors(s);
        for (size_t r = 0; r < s.rows.size(); ++r) {
            Abar resid, ann;
            for (size_t c = 0; c < s.cols.size(); ++c) {
                resid += s.s1[r][c] * g0[c];
                resid += s.s0[r][c] * g1[c];
                ann += s.entry(r, c) * mins[c];
            }
            CHECK(resid.is_zero());
            CHECK(ann.is_zero());
        }
        // leading-term law: the minor at h has leading part g(0)_h
        for (size_t c = 0; c < s.cols.size(); ++c)
            CHECK(mins[c].graded_part(s.m) == g0[c]);
    }
}

TEST_CASE("golden n=3 generators") {
    DnIdeal ideal = DnIdeal::build(3);
    REQUIRE(ideal.hs() == std::vector<int>({0, 2}));
    Abar w0 = ad_lin(1, Rational(-3, 2)) + Abar::scalar(Eps::eps_tau(3));
    Abar w2 = ad_lin(1, Rational(1, 2)) + Abar::scalar(Eps::eps_tau(-1));
    CHECK(ideal.gens()[0] == w0);
    CHECK(ideal.gens()[1] == w2);
    // The flipped convention negates delta in the same pair.
    Abar flipped0 = ad_lin(1, Rational(3, 2)) + Abar::scalar(Eps::eps_tau(3));
    Abar flipped2 = ad_lin(1, Rational(-1, 2)) + Abar::scalar(Eps::eps_tau(-1));
    CHECK(ideal.gens()[0].flip_delta() == flipped0);
    CHECK(ideal.gens()[1].flip_delta() == flipped2);
}

TEST_CASE("golden n=7 two generators match the reference polynomials") {
    DnIdeal ideal = DnIdeal::build(7);
    REQUIRE(ideal.hs() == std::vector<int>({0, 2, 4, 6}));
    auto term = [](long num, int a, int d, int texp, bool odd) {
        Laurent c(Rational(num), texp);
        return Abar::mono(a, d, odd ? Eps(Laurent(), c) : Eps(c));
    };
    // 48 * Gen1, reference form
    Abar p1 = term(8, 3, 0, 0, false) + term(36, 2, 1, 0, false) + term(22, 1, 2, 0, false) +
              term(-21, 0, 3, 0, false) + term(24, 2, 0, 3, true) + term(-72, 1, 1, 3, true) +
              term(30, 0, 2, 3, true) + term(-88, 1, 0, 2, false) + term(-16, 1, 0, -2, false) +
              term(-52, 0, 1, 2, false) + term(-56, 0, 1, -2, false) + term(-24, 0, 0, 5, true) +
              term(-96, 0, 0, 1, true);
    // 48 * Gen2, reference form
    Abar p2 = term(8, 3, 0, 0, false) + term(-12, 2, 1, 0, false) + term(-26, 1, 2, 0, false) +
              term(15, 0, 3, 0, false) + term(24, 2, 0, -1, true) + term(24, 1, 1, -1, true) +
              term(-18, 0, 2, -1, true) + term(-40, 1, 0, 2, false) + term(-64, 1, 0, -2, false) +
              term(68, 0, 1, 2, false) + term(-32, 0, 1, -2, false) + term(-72, 0, 0, 1, true) +
              term(-48, 0, 0, -3, true);

    // Gen1 = det S[m-1], Gen2 = det S[m+1]; normalized by m! and written with a
    // common denominator of 48 in print. Same single delta-sign flag as n=3.
    Abar gen1 = ideal.gens()[1];  // h = m-1 = 2
    Abar gen2 = ideal.gens()[2];  // h = m+1 = 4
    CHECK(gen1.flip_delta() * Rational(48) == p1);
    CHECK(gen2.flip_delta() * Rational(48) == p2);
}

TEST_CASE("normal form engine properties") {
    std::mt19937_64 rng(20240);
    for (int n : {3, 5, 7}) {
        DnIdeal ideal = DnIdeal::build(n);
        for (const Abar& g : ideal.gens_raw()) CHECK(ideal.normal_form(g).is_zero());
        for (const Abar& g : ideal.gens()) CHECK(ideal.normal_form(g).is_zero());
        CHECK(ideal.normal_form(Abar(Rational(1))) == Abar(Rational(1)));
        for (int trial = 0; trial < 20; ++trial) {
            Abar x = random_abar(rng, ideal.m() + 2), y = random_abar(rng, ideal.m() + 1);
            Abar nf = ideal.normal_form(x);
            CHECK(nf.degree() <= ideal.m() - 1);
            CHECK(ideal.normal_form(nf) == nf);                       // idempotent
            CHECK(ideal.normal_form(x - nf).is_zero());               // difference in the ideal
            CHECK(ideal.normal_form(x * y) ==
                  ideal.normal_form(ideal.normal_form(x) * ideal.normal_form(y)));
            // R-linearity over the eps scalars
            Eps c = Eps::eps_tau(2, Rational(3));
            CHECK(ideal.normal_form(x * c) == nf * c);
        }
    }
}

TEST_CASE("rank certification") {
    for (int n : {1, 3, 5, 7}) {
        DnIdeal ideal = DnIdeal::build(n);
        CHECK(ideal.rank() == (n * n - 1) / 4);
        CHECK(ideal.certify());
    }
}

TEST_CASE("multiplication matrices") {
    DnIdeal ideal = DnIdeal::build(7);
    auto me = ideal.mult_matrix(DnIdeal::Gen::eps);
    size_t nn = me.size();
    CHECK(nn == static_cast<size_t>(ideal.rank()));
    // eps matrix squares to the identity
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) {
            Laurent acc;
            for (size_t k = 0; k < nn; ++k) acc += me[i][k] * me[k][j];
            CHECK(acc == (i == j ? Laurent(Rational(1)) : Laurent()));
        }
    // alpha and delta matrices commute (checked over the doubled basis too)
    auto ma = ideal.mult_matrix(DnIdeal::Gen::alpha);
    auto md = ideal.mult_matrix(DnIdeal::Gen::delta);
    for (size_t i = 0; i < nn; ++i)
        for (size_t j = 0; j < nn; ++j) {
            Laurent ab, ba;
            for (size_t k = 0; k < nn; ++k) {
                ab += ma[i][k] * md[k][j];
                ba += md[i][k] * ma[k][j];
            }
            CHECK(ab == ba);
        }
}

TEST_CASE("two-generator certificates") {
    for (int n : {3, 5, 7, 9}) {
        DnIdeal ideal = DnIdeal::build(n);
        auto cert = two_generator_certificate(ideal);
        INFO(cert.detail);
        CHECK(cert.ok);
    }
}

TEST_CASE("conjugation symmetry of the generators") {
    for (int n : {3, 5, 7, 9, 11}) {
        DnIdeal ideal = DnIdeal::build(n);
        for (const Abar& g : ideal.gens_raw()) CHECK(g.conj_tau_eps() == g);
    }
}
