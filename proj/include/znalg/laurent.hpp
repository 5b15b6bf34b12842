#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace znalg {

using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

/// mpq_class(num, den) does not reduce to lowest terms; this does.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Laurent polynomial in tau with exact rational coefficients.
/// Stored as exponent -> coefficient with no zero coefficients kept,
/// so equality of maps is equality of ring elements.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) { if (c != 0) terms_[0] = c; }
    Laurent(long c) { if (c != 0) terms_[0] = Rational(c); }
    Laurent(const Rational& c, int exp) { if (c != 0) terms_[exp] = c; }

    static Laurent tau(int exp = 1) { return Laurent(Rational(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    /// Coefficient of tau^exp (zero if absent).
    Rational coeff(int exp) const;

    int min_exp() const;  // throws on zero
    int max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r(*this); r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r(*this); r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent operator*(const Rational& c) const;

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Exact evaluation at t0 != 0 (tau is a unit).
    Rational eval(const Rational& t0) const;

    /// tau -> -tau.
    Laurent flip_tau() const;

    /// Exact division; nullopt when the division is not exact.
    std::optional<Laurent> divided_by(const Laurent& d) const;

    /// True when the element is c*tau^k for a single term (a unit of the ring).
    bool is_monomial() const { return terms_.size() == 1; }

    std::string str() const;

    void add_term(int exp, const Rational& c);

private:
    std::map<int, Rational> terms_;
};

inline Laurent operator*(const Rational& c, const Laurent& p) { return p * c; }

Laurent laurent_divexact(const Laurent& num, const Laurent& den);

}  // namespace znalg
