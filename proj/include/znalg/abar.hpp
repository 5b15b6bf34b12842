#pragma once

#include "znalg/eps.hpp"

#include <map>
#include <string>
#include <vector>

namespace znalg {

/// Monomial alpha^a delta^d.
struct M2 {
    int a = 0;
    int d = 0;
    int degree() const { return a + d; }
    auto operator<=>(const M2&) const = default;
};

/// Bivariate polynomial in (alpha, delta) over the Laurent ring, used for the
/// eps-specialized halves of Abar elements.
class Poly2 {
public:
    Poly2() = default;
    Poly2(const Laurent& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<M2, Laurent>& terms() const { return terms_; }
    void add_term(const M2& m, const Laurent& c);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    int degree() const;  // -1 for zero

private:
    std::map<M2, Laurent> terms_;
};

/// Element of Abar = R[alpha, delta], R = Q[tau^±1][eps]/(eps^2-1).
class Abar {
public:
    Abar() = default;
    Abar(const Eps& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }
    Abar(const Rational& c) : Abar(Eps(c)) {}
    Abar(long c) : Abar(Eps(c)) {}

    static Abar alpha();
    static Abar delta();
    static Abar eps();
    static Abar scalar(const Eps& c) { return Abar(c); }
    static Abar mono(int a, int d, const Eps& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<M2, Eps>& terms() const { return terms_; }
    Eps coeff(int a, int d) const;
    void add_term(const M2& m, const Eps& c);

    Abar operator+(const Abar& o) const;
    Abar operator-(const Abar& o) const;
    Abar operator-() const;
    Abar operator*(const Abar& o) const;
    Abar operator*(const Eps& c) const;
    Abar operator*(const Rational& c) const;
    Abar& operator+=(const Abar& o) { *this = *this + o; return *this; }
    Abar& operator-=(const Abar& o) { *this = *this - o; return *this; }
    Abar& operator*=(const Abar& o) { *this = *this * o; return *this; }
    bool operator==(const Abar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Abar& o) const { return !(*this == o); }

    /// Max total degree in (alpha, delta); -1 for zero.
    int degree() const;

    /// Terms of total degree exactly d.
    Abar graded_part(int d) const;
    /// Terms of total degree <= d.
    Abar truncate_degree(int d) const;

    /// Specialize eps -> ±1.
    Poly2 at_eps(int sign) const;
    /// Reassemble from the two specializations.
    static Abar from_eps_pair(const Poly2& plus, const Poly2& minus);

    /// alpha -> l*alpha.
    Abar scale_alpha(long l) const;
    /// delta -> -delta.
    Abar flip_delta() const;
    /// eps -> -eps.
    Abar flip_eps() const;
    /// tau -> -tau, eps -> -eps.
    Abar conj_tau_eps() const;

    /// Exact evaluation at rational (alpha, delta); tau stays symbolic.
    Eps eval_ad(const Rational& a0, const Rational& d0) const;

    std::string str() const;

private:
    std::map<M2, Eps> terms_;
};

inline Abar operator*(const Rational& c, const Abar& x) { return x * c; }

/// Determinant of a square matrix with Poly2 entries, by column-subset
/// expansion (division free; zero entries prune the recursion).
Poly2 det_poly2(const std::vector<std::vector<Poly2>>& m);

/// Determinant over Abar via the eps = ±1 splitting of the coefficient ring.
Abar det_abar(const std::vector<std::vector<Abar>>& m);

}  // namespace znalg
