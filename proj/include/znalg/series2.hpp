#pragma once

#include "znalg/laurent.hpp"

#include <map>

namespace znalg {

/// Truncated power series in two variables (x, y) over Q, all terms of total
/// degree <= order kept.
class Series2 {
public:
    Series2() = default;
    explicit Series2(int order) : order_(order) {}
    Series2(int order, const Rational& c) : order_(order) {
        if (c != 0) terms_[{0, 0}] = c;
    }

    static Series2 var_x(int order);
    static Series2 var_y(int order);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j) const;
    void add_term(int i, int j, const Rational& c);

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    Series2 operator-() const;
    Series2 operator*(const Series2& o) const;
    Series2 operator*(const Rational& c) const;
    bool operator==(const Series2& o) const { return terms_ == o.terms_; }

    Series2 pow(int k) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    Series2 inverse() const;

    /// (1 + x-series)^k for possibly negative k; base constant term must be 1
    /// after scaling. Computed on the full series via inverse() when k < 0.
    static Series2 int_power(const Series2& base, int k);

    /// Lowest total degree with a nonzero term; -1 when zero.
    int valuation() const;
    /// Homogeneous part of total degree d.
    Series2 homogeneous_part(int d) const;

    std::string str() const;

private:
    int order_ = 0;
    std::map<std::pair<int, int>, Rational> terms_;
};

/// Expand a Laurent polynomial at tau = 1 + y as a truncated series.
Series2 laurent_at_one_plus(const Laurent& p, int order);

}  // namespace znalg
