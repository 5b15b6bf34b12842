#include "znalg/an_element.hpp"

#include <numeric>
#include <sstream>

namespace znalg {

SignVector::SignVector(std::vector<int> v) : nu(std::move(v)) {
    for (int s : nu)
        if (s != 1 && s != -1) throw std::invalid_argument("SignVector entries must be ±1");
    if (n_prime() % 2 == 0) throw std::invalid_argument("SignVector: n'(nu) must be odd");
}

SignVector SignVector::all_plus(int n) { return SignVector(std::vector<int>(n, 1)); }

int SignVector::n_prime() const { return std::accumulate(nu.begin(), nu.end(), 0); }

AnElement::AnElement(int n) : n_(n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("AnElement: n must be odd and positive");
}

AnElement::AnElement(int n, const Laurent& c) : AnElement(n) {
    if (!c.is_zero()) terms_[AnMono{}] = c;
}

AnElement AnElement::alpha(int n) {
    AnElement r(n);
    r.terms_[AnMono{1, 0, 0, 0}] = Laurent(Rational(1));
    return r;
}

AnElement AnElement::q(int n) {
    AnElement r(n);
    r.terms_[AnMono{0, 1, 0, 0}] = Laurent(Rational(1));
    return r;
}

AnElement AnElement::delta(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("delta index out of range");
    AnElement r(n);
    r.terms_[AnMono{0, 0, 1u << (i - 1), 0}] = Laurent(Rational(1));
    return r;
}

AnElement AnElement::eps(int n) {
    AnElement r(n);
    r.terms_[AnMono{0, 0, 0, 1}] = Laurent(Rational(1));
    return r;
}

AnElement AnElement::scalar(int n, const Laurent& c) { return AnElement(n, c); }

void AnElement::add_term(const AnMono& m, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Laurent AnElement::coeff(const AnMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Laurent() : it->second;
}

AnElement AnElement::operator+(const AnElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AnElement: mixed strand counts");
    AnElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AnElement AnElement::operator-(const AnElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AnElement: mixed strand counts");
    AnElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

AnElement AnElement::operator-() const {
    AnElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

AnElement AnElement::operator*(const AnElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AnElement: mixed strand counts");
    AnElement r(n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            // delta_T1 * delta_T2 = q^{|T1 & T2|} delta_{T1 ^ T2}
            AnMono m;
            m.a = m1.a + m2.a;
            m.b = m1.b + m2.b + __builtin_popcount(m1.tset & m2.tset);
            m.tset = m1.tset ^ m2.tset;
            m.e = (m1.e + m2.e) & 1;
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

AnElement AnElement::operator*(const Laurent& c) const {
    AnElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

AnElement AnElement::operator*(const Rational& c) const { return *this * Laurent(c); }

int AnElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

AnElement AnElement::times_eps() const {
    AnElement r(n_);
    for (const auto& [m, c] : terms_) {
        AnMono m2 = m;
        m2.e ^= 1;
        r.terms_[m2] = c;
    }
    return r;
}

AnElement AnElement::flip_eps() const {
    AnElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = (m.e == 0) ? c : -c;
    return r;
}

AnElement AnElement::permute_indices(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permute_indices: bad permutation size");
    AnElement r(n_);
    for (const auto& [m, c] : terms_) {
        uint32_t t = 0;
        for (int i = 1; i <= n_; ++i)
            if (m.tset & (1u << (i - 1))) t |= 1u << (perm[i - 1] - 1);
        AnMono m2 = m;
        m2.tset = t;
        r.add_term(m2, c);
    }
    return r;
}

AnElement an_normalize(int n, const std::vector<RawTerm>& raw) {
    AnElement r(n);
    for (const RawTerm& t : raw) {
        if (static_cast<int>(t.delta_exps.size()) != n)
            throw std::invalid_argument("an_normalize: delta exponent list must have length n");
        AnMono m;
        m.a = t.alpha_exp;
        m.e = t.eps_exp & 1;
        for (int i = 0; i < n; ++i) {
            int d = t.delta_exps[i];
            if (d < 0) throw std::invalid_argument("an_normalize: negative delta exponent");
            m.b += d / 2;
            if (d % 2) m.tset |= 1u << i;
        }
        r.add_term(m, t.coeff);
    }
    return r;
}

Abar project_bar(const AnElement& x) {
    return sign_map(x, SignVector::all_plus(x.n()));
}

Abar sign_map(const AnElement& x, const SignVector& nu) {
    if (nu.n() != x.n()) throw std::invalid_argument("sign_map: size mismatch");
    Abar r;
    for (const auto& [m, c] : x.terms()) {
        int sign = 1;
        for (int i = 0; i < x.n(); ++i)
            if (m.tset & (1u << i)) sign *= nu.nu[i];
        int d = 2 * m.b + __builtin_popcount(m.tset);
        Eps coeff = (m.e == 0) ? Eps(c) : Eps(Laurent(), c);
        if (sign < 0) coeff = -coeff;
        r.add_term({m.a, d}, coeff);
    }
    return r;
}

AnElement finger_move(const AnElement& x, int n_target) {
    int n = x.n();
    if (n_target < 1 || n_target % 2 == 0 || n_target > n || (n - n_target) % 2 != 0)
        throw std::invalid_argument("finger_move: need n = n' + 2f with both odd");
    int f = (n - n_target) / 2;
    AnElement r(n_target);
    for (const auto& [m, c] : x.terms()) {
        // Split the index set into the kept part and the merged tail.
        uint32_t kept = m.tset & ((n_target >= 32) ? ~0u : ((1u << n_target) - 1u));
        int plus = 0, minus = 0;
        for (int k = n_target + 1; k <= n; ++k) {
            if (m.tset & (1u << (k - 1))) {
                if (k <= n_target + f) ++plus;
                else ++minus;
            }
        }
        // Each merged point contributes ±delta_{n'}; collapse the power.
        int tail = plus + minus;
        int sign = (minus % 2 == 0) ? 1 : -1;
        AnMono base{m.a, m.b, kept, m.e};
        AnElement term(n_target);
        term.add_term(base, sign < 0 ? -c : c);
        if (tail > 0) {
            AnElement dn = AnElement::delta(n_target, n_target);
            for (int i = 0; i < tail; ++i) term = term * dn;
        }
        r += term;
    }
    return r;
}

AnElement graded_part(const AnElement& x, int d) {
    AnElement r(x.n());
    for (const auto& [m, c] : x.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

std::string AnElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.a > 0) { os << "*alpha"; if (m.a > 1) os << "^" << m.a; }
        if (m.b > 0) { os << "*q"; if (m.b > 1) os << "^" << m.b; }
        for (int i = 1; i <= n_; ++i)
            if (m.tset & (1u << (i - 1))) os << "*d" << i;
        if (m.e) os << "*eps";
    }
    return os.str();
}

}  // namespace znalg
