#include "znalg/mumford.hpp"

namespace znalg {

namespace {

Rational factorial(int k) {
    Rational r(1);
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

Rational rational_binomial(const Rational& r, int j) {
    Rational acc(1);
    for (int i = 0; i < j; ++i) acc *= (r - i);
    return acc / factorial(j);
}

}  // namespace

EtaSubset::EtaSubset(int n_, uint32_t bits_) : n(n_), bits(bits_) {
    if (n < 1 || n % 2 == 0 || n > 31) throw std::invalid_argument("EtaSubset: bad n");
    if (bits & ~((1u << n) - 1u)) throw std::invalid_argument("EtaSubset: bits out of range");
}

EtaSubset EtaSubset::first_h(int n, int h) {
    if (h < 0 || h > n) throw std::invalid_argument("EtaSubset: bad h");
    return EtaSubset(n, h == 0 ? 0u : ((1u << h) - 1u));
}

std::vector<int> EtaSubset::indices() const {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
        if (contains(i)) v.push_back(i);
    return v;
}

bool eta_parity_ok(int n, int h, int k) {
    (void)n;
    return ((h - (k + 1)) % 2) == 0;
}

AnElement b_eta(const EtaSubset& eta) {
    AnElement r = AnElement::alpha(eta.n);
    Rational half(1, 2);
    for (int i = 1; i <= eta.n; ++i) {
        AnElement d = AnElement::delta(eta.n, i) * (eta.contains(i) ? half : -half);
        r += d;
    }
    return r;
}

AnElement mumford_w(const EtaSubset& eta, int k, int delta_ref) {
    if (k < 0) throw std::invalid_argument("mumford_w: k must be >= 0");
    AnElement b = b_eta(eta);
    AnElement dref = AnElement::delta(eta.n, delta_ref);
    AnElement prod(eta.n, Laurent(Rational(1)));
    for (int j = -k + 1; j <= k - 1; j += 2)
        prod *= b + dref * Rational(j);
    return prod * (Rational(1) / factorial(k));
}

Abar mumford_w_bar(int n, int k, int h) {
    if (k < 0) throw std::invalid_argument("mumford_w_bar: k must be >= 0");
    if (h < 0 || h > n || !eta_parity_ok(n, h, k))
        throw std::invalid_argument("mumford_w_bar: parity violation");
    Abar prod(Rational(1));
    for (int j = -k + 1; j <= k - 1; j += 2) {
        // image of B_eta + j delta_1 is alpha + (2h - n + 2j) delta / 2
        Abar lin = Abar::alpha() + Abar::delta() * make_rational(2 * h - n + 2 * j, 2);
        prod *= lin;
    }
    return prod * (Rational(1) / factorial(k));
}

TruncatedSeries chern_character_series(const EtaSubset& eta, const Rational& lambda, int order) {
    if (lambda.get_den() != 4 || lambda.get_num() % 2 == 0)
        throw std::invalid_argument("chern_character_series: lambda must be an odd multiple of 1/4");
    // parity constraint: h = (n - 4 lambda)/2 (mod 2)
    mpz_class p4 = lambda.get_num();  // 4*lambda
    mpz_class target = (eta.n - p4) / 2;
    if ((eta.h() - target) % 2 != 0)
        throw std::invalid_argument("chern_character_series: parity violation for |eta|");
    Rational a_lambda = Rational(eta.n, 2) - 2 * lambda - 2;

    int n = eta.n;
    AnElement b = b_eta(eta);
    AnElement qgen = AnElement::q(n);
    TruncatedSeries s;
    s.coefficients.assign(order + 1, AnElement(n));
    AnElement qpow(n, Laurent(Rational(1)));
    for (int j = 0; 2 * j <= order; ++j) {
        // degree 2j: A_lambda q^j / (2j)!   (cosh term)
        s.coefficients[2 * j] = qpow * (a_lambda / factorial(2 * j));
        // degree 2j+1: q^j B_eta / (2j+1)!  (sinh term)
        if (2 * j + 1 <= order)
            s.coefficients[2 * j + 1] = qpow * b * (Rational(1) / factorial(2 * j + 1));
        qpow *= qgen;
    }
    return s;
}

AnElement chern_class_from_character(const TruncatedSeries& ch, int k) {
    if (static_cast<int>(ch.coefficients.size()) <= k)
        throw std::invalid_argument("chern_class_from_character: series too short");
    int n = ch.coefficients.empty() ? 1 : ch.coefficients[0].n();
    // Newton identities with power sums p_i = i! ch_i:
    //   k c_k = sum_{i=1}^{k} (-1)^{i-1} p_i c_{k-i}
    std::vector<AnElement> c(k + 1, AnElement(n));
    c[0] = AnElement(n, Laurent(Rational(1)));
    for (int kk = 1; kk <= k; ++kk) {
        AnElement acc(n);
        for (int i = 1; i <= kk; ++i) {
            AnElement p_i = ch.coefficients[i] * factorial(i);
            AnElement term = p_i * c[kk - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        c[kk] = acc * (Rational(1) / Rational(kk));
    }
    return c[k];
}

AnElement total_chern_series(const EtaSubset& eta, int k) {
    if (k < 0) throw std::invalid_argument("total_chern_series: k must be >= 0");
    int n = eta.n;
    using Series = std::vector<AnElement>;  // coefficient of t^i at index i
    auto zero_series = [&](int len) { return Series(len, AnElement(n)); };
    auto mul_series = [&](const Series& x, const Series& y) {
        Series r = zero_series(k + 1);
        for (int i = 0; i <= k; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; i + j <= k; ++j) {
                if (y[j].is_zero()) continue;
                r[i + j] += x[i] * y[j];
            }
        }
        return r;
    };

    // (1 + t^2 beta)^{(k-1)/2} with beta = -q, generalized binomial series.
    Series f1 = zero_series(k + 1);
    Rational expo = make_rational(k - 1, 2);
    AnElement beta = -AnElement::q(n);
    AnElement bpow(n, Laurent(Rational(1)));
    for (int j = 0; 2 * j <= k; ++j) {
        f1[2 * j] = bpow * rational_binomial(expo, j);
        bpow *= beta;
    }

    // ((1+t delta)/(1-t delta))^{B/(2 delta)} = exp(B g(t)),
    // g(t) = sum_j t^{2j+1} q^j / (2j+1); no division by delta is performed.
    Series bg = zero_series(k + 1);
    AnElement b = b_eta(eta);
    AnElement qpow(n, Laurent(Rational(1)));
    for (int j = 0; 2 * j + 1 <= k; ++j) {
        bg[2 * j + 1] = b * qpow * Rational(1, 2 * j + 1);
        qpow *= AnElement::q(n);
    }
    Series f2 = zero_series(k + 1);
    f2[0] = AnElement(n, Laurent(Rational(1)));
    Series power = f2;  // (B g)^r / r!
    for (int r = 1; r <= k; ++r) {
        power = mul_series(power, bg);
        for (int i = 0; i <= k; ++i) power[i] = power[i] * Rational(1, r);
        for (int i = 0; i <= k; ++i) f2[i] += power[i];
    }

    Series total = mul_series(f1, f2);
    return total[k];
}

bool independence_check(int n) {
    if (n < 3 || n % 2 == 0 || n > 15) throw std::invalid_argument("independence_check: bad n");
    int m = (n - 1) / 2;
    // Columns of the beta=0, alpha=1 specialization matrix are indexed by the
    // subsets zeta with |zeta| <= m; rows by the parity-valid eta. Entries are
    // (1/(m-|zeta|)!) prod_{p in zeta} eta_p, so the dot product of columns
    // zeta1 != zeta2 is a positive factor times
    //   sum_eta (-1)^{|D|} (-1)^{|D cap eta|},  D = zeta1 xor zeta2,
    // which must vanish, while the norms are positive sums of squares.
    uint32_t full = (1u << n) - 1u;
    std::vector<uint32_t> etas;
    for (uint32_t s = 0; s <= full; ++s)
        if ((__builtin_popcount(s) - (m + 1)) % 2 == 0) etas.push_back(s);
    if (static_cast<int>(etas.size()) != (1 << (n - 1))) return false;
    // Every nonempty D arising as a symmetric difference of two column sets is a
    // proper subset; verify the signed sum vanishes for all those D.
    for (uint32_t d = 1; d < full; ++d) {
        if (__builtin_popcount(d) > 2 * m) continue;
        long long acc = 0;
        for (uint32_t eta : etas)
            acc += (__builtin_popcount(d & eta) % 2 == 0) ? 1 : -1;
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace znalg
