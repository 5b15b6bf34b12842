#pragma once

#include "znalg/laurent.hpp"

namespace znalg {

/// Element of R = Q[tau^±1][eps]/(eps^2-1), stored as even + eps*odd.
/// Not an integral domain: (1+eps)(1-eps) = 0.
struct Eps {
    Laurent even;
    Laurent odd;

    Eps() = default;
    Eps(const Laurent& e) : even(e) {}
    Eps(const Laurent& e, const Laurent& o) : even(e), odd(o) {}
    Eps(const Rational& c) : even(c) {}
    Eps(long c) : even(c) {}

    static Eps eps() { return Eps(Laurent(), Laurent(Rational(1))); }
    static Eps eps_tau(int exp, const Rational& c = Rational(1)) {
        return Eps(Laurent(), Laurent(c, exp));
    }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    Eps operator+(const Eps& o) const { return {even + o.even, odd + o.odd}; }
    Eps operator-(const Eps& o) const { return {even - o.even, odd - o.odd}; }
    Eps operator-() const { return {-even, -odd}; }
    Eps& operator+=(const Eps& o) { even += o.even; odd += o.odd; return *this; }
    Eps& operator-=(const Eps& o) { even -= o.even; odd -= o.odd; return *this; }

    // (a+b eps)(c+d eps) = (ac+bd) + (ad+bc) eps
    Eps operator*(const Eps& o) const {
        return {even * o.even + odd * o.odd, even * o.odd + odd * o.even};
    }
    Eps& operator*=(const Eps& o) { *this = *this * o; return *this; }
    Eps operator*(const Rational& c) const { return {even * c, odd * c}; }

    bool operator==(const Eps& o) const { return even == o.even && odd == o.odd; }
    bool operator!=(const Eps& o) const { return !(*this == o); }

    /// Specialize eps to +1 or -1.
    Laurent at_eps(int sign) const {
        return sign >= 0 ? even + odd : even - odd;
    }

    /// The involution tau -> -tau, eps -> -eps.
    Eps conj_tau_eps() const { return {even.flip_tau(), -(odd.flip_tau())}; }

    /// Inverse of a unit of the form c*tau^k or c*tau^k*eps; throws otherwise.
    Eps unit_inverse() const;

    std::string str() const;
};

inline Eps operator*(const Rational& c, const Eps& x) { return x * c; }

}  // namespace znalg
