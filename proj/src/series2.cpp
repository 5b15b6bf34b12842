#include "znalg/series2.hpp"

#include <sstream>

namespace znalg {

Series2 Series2::var_x(int order) {
    Series2 s(order);
    if (order >= 1) s.terms_[{1, 0}] = 1;
    return s;
}

Series2 Series2::var_y(int order) {
    Series2 s(order);
    if (order >= 1) s.terms_[{0, 1}] = 1;
    return s;
}

Rational Series2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Series2::add_term(int i, int j, const Rational& c) {
    if (c == 0 || i + j > order_) return;
    auto [it, fresh] = terms_.emplace(std::make_pair(i, j), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series2 Series2::operator+(const Series2& o) const {
    Series2 r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

Series2 Series2::operator-(const Series2& o) const {
    Series2 r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

Series2 Series2::operator-() const {
    Series2 r(order_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Series2 Series2::operator*(const Series2& o) const {
    Series2 r(order_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            int i = k1.first + k2.first, j = k1.second + k2.second;
            if (i + j <= order_) r.add_term(i, j, c1 * c2);
        }
    return r;
}

Series2 Series2::operator*(const Rational& c) const {
    Series2 r(order_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

Series2 Series2::pow(int k) const {
    Series2 r(order_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

Series2 Series2::inverse() const {
    Rational c0 = coeff(0, 0);
    if (c0 == 0) throw std::domain_error("Series2::inverse: zero constant term");
    // g = (1/c0) sum_k (1 - f/c0)^k, truncated; (1 - f/c0) has valuation >= 1.
    Series2 u = Series2(order_, Rational(1)) - (*this) * (Rational(1) / c0);
    Series2 acc(order_, Rational(1));
    Series2 upow(order_, Rational(1));
    for (int k = 1; k <= order_; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        acc = acc + upow;
    }
    return acc * (Rational(1) / c0);
}

Series2 Series2::int_power(const Series2& base, int k) {
    if (k >= 0) return base.pow(k);
    return base.inverse().pow(-k);
}

int Series2::valuation() const {
    int v = -1;
    for (const auto& [k, c] : terms_) {
        int d = k.first + k.second;
        if (v < 0 || d < v) v = d;
    }
    return v;
}

Series2 Series2::homogeneous_part(int d) const {
    Series2 r(order_);
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == d) r.terms_[k] = c;
    return r;
}

std::string Series2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        if (k.first) os << "*x^" << k.first;
        if (k.second) os << "*y^" << k.second;
    }
    return os.str();
}

Series2 laurent_at_one_plus(const Laurent& p, int order) {
    Series2 acc(order);
    Series2 onep = Series2(order, Rational(1)) + Series2::var_y(order);
    for (const auto& [e, c] : p.terms())
        acc = acc + Series2::int_power(onep, e) * c;
    return acc;
}

}  // namespace znalg
