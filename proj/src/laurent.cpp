#include "znalg/laurent.hpp"

#include <sstream>

namespace znalg {

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero");
    return terms_.rbegin()->first;
}

void Laurent::add_term(int exp, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::operator*(const Rational& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Rational Laurent::eval(const Rational& t0) const {
    if (t0 == 0) throw std::domain_error("Laurent evaluation at tau=0");
    // Horner on the ordinary polynomial tau^{-min} * this, then shift back.
    if (terms_.empty()) return Rational(0);
    int lo = min_exp(), hi = max_exp();
    Rational acc(0);
    for (int e = hi; e >= lo; --e) {
        acc *= t0;
        acc += coeff(e);
    }
    if (lo != 0) {
        Rational shift(1);
        Rational base = lo > 0 ? t0 : Rational(1) / t0;
        for (int i = 0; i < std::abs(lo); ++i) shift *= base;
        acc *= shift;
    }
    return acc;
}

Laurent Laurent::flip_tau() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 == 0) ? c : -c;
    return r;
}

std::optional<Laurent> Laurent::divided_by(const Laurent& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent();
    if (d.is_monomial()) {
        const auto& [de, dc] = *d.terms_.begin();
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_[e - de] = c / dc;
        return r;
    }
    // Long division of the shifted ordinary polynomials.
    Laurent rem(*this);
    Laurent quot;
    int dheads = d.max_exp();
    Rational dlead = d.coeff(dheads);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= d.max_exp() - d.min_exp()) {
        int e = rem.max_exp() - dheads;
        Rational c = rem.coeff(rem.max_exp()) / dlead;
        Laurent t(c, e);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.max_exp() >= e + dheads) return std::nullopt;  // no progress
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

Laurent laurent_divexact(const Laurent& num, const Laurent& den) {
    auto q = num.divided_by(den);
    if (!q) throw std::logic_error("inexact Laurent division");
    return *q;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1 && e != 0);
        if (!unit_coeff) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
        }
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << "tau";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace znalg
