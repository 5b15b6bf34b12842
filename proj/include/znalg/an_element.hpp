#pragma once

#include "znalg/abar.hpp"
#include "znalg/laurent.hpp"

#include <cstdint>
#include <vector>

namespace znalg {

/// Monomial of A_n = R[alpha, delta_1..delta_n, eps]/(eps^2-1, delta_i^2-delta_j^2):
/// alpha^a q^b (prod_{i in tset} delta_i) eps^e, where q is the common square
/// class delta_i^2. Filtration degree is a + 2b + |tset|.
struct AnMono {
    int a = 0;        // alpha exponent
    int b = 0;        // q exponent
    uint32_t tset = 0;  // subset of {1..n} as bits 0..n-1
    int e = 0;        // eps exponent, 0 or 1

    int degree() const { return a + 2 * b + __builtin_popcount(tset); }
    auto operator<=>(const AnMono&) const = default;
};

struct SignVector {
    std::vector<int> nu;  // entries ±1

    explicit SignVector(std::vector<int> v);
    static SignVector all_plus(int n);
    int n() const { return static_cast<int>(nu.size()); }
    int n_prime() const;  // sum of entries
};

/// Term of a free (unnormalized) presentation: coeff * alpha^a * prod delta_i^{d_i} * eps^e.
struct RawTerm {
    Laurent coeff;
    int alpha_exp = 0;
    std::vector<int> delta_exps;  // size n
    int eps_exp = 0;
};

class AnElement {
public:
    AnElement() : n_(1) {}
    explicit AnElement(int n);
    AnElement(int n, const Laurent& c);

    static AnElement alpha(int n);
    static AnElement q(int n);
    static AnElement delta(int n, int i);  // i in 1..n
    static AnElement eps(int n);
    static AnElement scalar(int n, const Laurent& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AnMono, Laurent>& terms() const { return terms_; }
    void add_term(const AnMono& m, const Laurent& c);
    Laurent coeff(const AnMono& m) const;

    AnElement operator+(const AnElement& o) const;
    AnElement operator-(const AnElement& o) const;
    AnElement operator-() const;
    AnElement operator*(const AnElement& o) const;
    AnElement operator*(const Laurent& c) const;
    AnElement operator*(const Rational& c) const;
    AnElement& operator+=(const AnElement& o) { *this = *this + o; return *this; }
    AnElement& operator-=(const AnElement& o) { *this = *this - o; return *this; }
    AnElement& operator*=(const AnElement& o) { *this = *this * o; return *this; }
    bool operator==(const AnElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const AnElement& o) const { return !(*this == o); }

    int degree() const;  // max filtration degree, -1 for zero

    /// Multiply by eps (e -> 1-e on every term).
    AnElement times_eps() const;

    /// eps -> -eps (negate the eps-odd terms).
    AnElement flip_eps() const;

    /// Apply a permutation sigma of {1..n} to the delta indices; perm[i-1] = sigma(i).
    AnElement permute_indices(const std::vector<int>& perm) const;

    std::string str() const;

private:
    int n_;
    std::map<AnMono, Laurent> terms_;
};

/// Normalize a formal polynomial: delta_i^{2k+r} -> q^k delta_i^r, eps^2 -> 1.
AnElement an_normalize(int n, const std::vector<RawTerm>& raw);

/// delta_i -> delta, q -> delta^2; ring homomorphism onto Abar.
Abar project_bar(const AnElement& x);

/// delta_i -> nu_i * delta; equals project_bar when nu is all plus.
Abar sign_map(const AnElement& x, const SignVector& nu);

/// Merge map A_n -> A_{n'} for n = n' + 2f: delta_k -> delta_k (k <= n'),
/// delta_k -> delta_{n'} (n' < k <= n'+f), delta_k -> -delta_{n'} (n'+f < k).
AnElement finger_move(const AnElement& x, int n_target);

/// Homogeneous part of filtration degree exactly d.
AnElement graded_part(const AnElement& x, int d);

}  // namespace znalg
