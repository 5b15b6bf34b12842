#include "znalg/eps.hpp"

namespace znalg {

Eps Eps::unit_inverse() const {
    bool even_mono = !even.is_zero() && even.is_monomial() && odd.is_zero();
    bool odd_mono = !odd.is_zero() && odd.is_monomial() && even.is_zero();
    if (!even_mono && !odd_mono) throw std::logic_error("Eps::unit_inverse: not a monomial unit");
    const Laurent& u = even_mono ? even : odd;
    auto [e, c] = *u.terms().begin();
    Laurent inv(Rational(1) / c, -e);
    // eps is its own inverse, so (c tau^k eps)^{-1} = c^{-1} tau^{-k} eps.
    return even_mono ? Eps(inv) : Eps(Laurent(), inv);
}

std::string Eps::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (!even.is_zero()) s += even.str();
    if (!odd.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "eps*(" + odd.str() + ")";
    }
    return s;
}

}  // namespace znalg
