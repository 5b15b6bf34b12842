#include "znalg/abar.hpp"

#include <sstream>

namespace znalg {

void Poly2::add_term(const M2& m, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.a + m2.a, m1.d + m2.d}, c1 * c2);
    return r;
}

int Poly2::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Abar Abar::alpha() { return mono(1, 0, Eps(1L)); }
Abar Abar::delta() { return mono(0, 1, Eps(1L)); }
Abar Abar::eps() { return Abar(Eps::eps()); }

Abar Abar::mono(int a, int d, const Eps& c) {
    Abar r;
    if (!c.is_zero()) r.terms_[{a, d}] = c;
    return r;
}

Eps Abar::coeff(int a, int d) const {
    auto it = terms_.find({a, d});
    return it == terms_.end() ? Eps() : it->second;
}

void Abar::add_term(const M2& m, const Eps& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Abar Abar::operator+(const Abar& o) const {
    Abar r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Abar Abar::operator-(const Abar& o) const {
    Abar r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Abar Abar::operator-() const {
    Abar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Abar Abar::operator*(const Abar& o) const {
    Abar r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.a + m2.a, m1.d + m2.d}, c1 * c2);
    return r;
}

Abar Abar::operator*(const Eps& c) const {
    Abar r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Abar Abar::operator*(const Rational& c) const {
    Abar r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

int Abar::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Abar Abar::graded_part(int d) const {
    Abar r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_[m] = c;
    return r;
}

Abar Abar::truncate_degree(int d) const {
    Abar r;
    for (const auto& [m, c] : terms_)
        if (m.degree() <= d) r.terms_[m] = c;
    return r;
}

Poly2 Abar::at_eps(int sign) const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.add_term(m, c.at_eps(sign));
    return r;
}

Abar Abar::from_eps_pair(const Poly2& plus, const Poly2& minus) {
    Abar r;
    Rational half(1, 2);
    for (const auto& [m, c] : plus.terms()) {
        r.add_term(m, Eps(c * half, c * half));
    }
    for (const auto& [m, c] : minus.terms()) {
        r.add_term(m, Eps(c * half, -(c * half)));
    }
    return r;
}

Abar Abar::scale_alpha(long l) const {
    Abar r;
    for (const auto& [m, c] : terms_) {
        Rational f(1);
        for (int i = 0; i < m.a; ++i) f *= l;
        r.add_term(m, c * f);
    }
    return r;
}

Abar Abar::flip_delta() const {
    Abar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = (m.d % 2 == 0) ? c : -c;
    return r;
}

Abar Abar::flip_eps() const {
    Abar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = Eps(c.even, -c.odd);
    return r;
}

Abar Abar::conj_tau_eps() const {
    Abar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj_tau_eps();
    return r;
}

Eps Abar::eval_ad(const Rational& a0, const Rational& d0) const {
    Eps acc;
    for (const auto& [m, c] : terms_) {
        Rational f(1);
        for (int i = 0; i < m.a; ++i) f *= a0;
        for (int i = 0; i < m.d; ++i) f *= d0;
        acc += c * f;
    }
    return acc;
}

std::string Abar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.a > 0) { os << "*alpha"; if (m.a > 1) os << "^" << m.a; }
        if (m.d > 0) { os << "*delta"; if (m.d > 1) os << "^" << m.d; }
    }
    return os.str();
}

namespace {

// Laplace expansion down the rows, memoized on the set of still-unused columns.
Poly2 det_rec(const std::vector<std::vector<Poly2>>& m, uint32_t cols, int row,
              std::map<uint32_t, Poly2>& memo) {
    if (cols == 0) return Poly2(Laurent(Rational(1)));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Poly2 acc;
    int pos = 0;
    uint32_t rest = cols;
    while (rest) {
        int j = __builtin_ctz(rest);
        rest &= rest - 1;
        if (!m[row][j].is_zero()) {
            Poly2 sub = det_rec(m, cols & ~(1u << j), row + 1, memo);
            Poly2 contrib = m[row][j] * sub;
            if (pos % 2 == 0) acc = acc + contrib;
            else acc = acc - contrib;
        }
        ++pos;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

Poly2 det_poly2(const std::vector<std::vector<Poly2>>& m) {
    size_t k = m.size();
    if (k == 0) return Poly2(Laurent(Rational(1)));
    if (k > 30 || m[0].size() != k) throw std::invalid_argument("det_poly2: bad matrix");
    std::map<uint32_t, Poly2> memo;
    return det_rec(m, (1u << k) - 1, 0, memo);
}

Abar det_abar(const std::vector<std::vector<Abar>>& m) {
    size_t k = m.size();
    std::vector<std::vector<Poly2>> plus(k), minus(k);
    for (size_t i = 0; i < k; ++i) {
        for (const auto& x : m[i]) {
            plus[i].push_back(x.at_eps(+1));
            minus[i].push_back(x.at_eps(-1));
        }
    }
    return Abar::from_eps_pair(det_poly2(plus), det_poly2(minus));
}

}  // namespace znalg
